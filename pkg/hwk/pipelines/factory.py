from hwk.pipelines.common import load_meta
from hwk.pipelines.linear_pipeline import MODEL_LOSSES, LinearPipeline
from hwk.pipelines.neural_pipeline import NEURAL_MODELS, NeuralPipeline
from hwk.utils.errors import UnknownModel

pipeline_classes = dict(
    [(name, LinearPipeline) for name in sorted(MODEL_LOSSES)] + [(name, NeuralPipeline) for name in NEURAL_MODELS]
)

MODEL_NAMES = tuple(sorted(pipeline_classes))


def get_pipeline(model_name, settings):
    """
    Maps a model name to an unfitted pipeline.

    Args:
        model_name(str): one of linsvc, logreg, bigru, charcnn
        settings(dict): resolved configuration

    Returns:
        LinearPipeline|NeuralPipeline: the pipeline
    """
    if model_name not in pipeline_classes:
        raise UnknownModel("Unknown model {!r}, expected one of {}".format(model_name, ', '.join(MODEL_NAMES)))
    return pipeline_classes[model_name](model_name, settings)


def load_pipeline(directory):
    meta = load_meta(directory)
    if meta['model'] not in pipeline_classes:
        raise UnknownModel("Unknown model {!r} in {}".format(meta['model'], directory))
    return pipeline_classes[meta['model']].load(directory)
