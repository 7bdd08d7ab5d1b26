"""
Pieces shared by the linear and neural pipelines: task dimensions, label-set assembly and the pipeline
metadata file.
"""

import io
import os

import numpy as np
import yaml

from hwk.data_models import AG, HS, LABEL_DIMENSIONS, TR, CleanConfig, LabelSet, Tweet
from hwk.utils.errors import ConfigError, ModelFormatError

TASK_A = 'a'
TASK_B = 'b'
TASK_DIMENSIONS = {
    TASK_A: (HS,),
    TASK_B: LABEL_DIMENSIONS
}
META_FILE = 'pipeline.yaml'


def task_dimensions(task):
    if task not in TASK_DIMENSIONS:
        raise ConfigError("Unknown task {!r}, expected a or b".format(task))
    return TASK_DIMENSIONS[task]


def clean_config(settings):
    return CleanConfig(
        lowercase=settings['clean.lowercase'],
        strip_urls=settings['clean.strip_urls'],
        strip_punctuation=settings['clean.strip_punctuation'],
        keep_hashtag_body=settings['clean.keep_hashtag_body'],
        keep_mention_body=settings['clean.keep_mention_body'],
        collapse_repeats=settings['clean.collapse_repeats'],
        remove_stopwords=settings['clean.remove_stopwords']
    )


def combine_predictions(per_dimension, size):
    """
    Builds LabelSets from per-dimension predictions. Wherever HS is 0, TR and AG are forced to 0.

    Args:
        per_dimension(dict): dimension to predicted 0/1 labels
        size(int): number of tweets

    Returns:
        list: LabelSets
    """
    hs = per_dimension[HS]
    label_sets = []
    for i in range(size):
        hateful = int(hs[i])
        if TR in per_dimension:
            label_sets.append(LabelSet(
                hateful,
                int(per_dimension[TR][i]) if hateful else 0,
                int(per_dimension[AG][i]) if hateful else 0
            ))
        else:
            label_sets.append(LabelSet(hateful, None, None))
    return label_sets


def texts_to_tweets(texts, lang):
    return [Tweet(str(position), text, lang, None) for position, text in enumerate(texts)]


def positive_probabilities(probabilities):
    return np.asarray(probabilities)[:, 1]


def save_meta(directory, meta):
    with io.open(os.path.join(directory, META_FILE), 'w', encoding='utf-8') as f:
        yaml.safe_dump(dict(meta), f, default_flow_style=False, sort_keys=True, allow_unicode=True)


def load_meta(directory):
    path = os.path.join(directory, META_FILE)
    try:
        with io.open(path, 'r', encoding='utf-8') as f:
            meta = yaml.safe_load(f.read())
    except IOError:
        raise ModelFormatError("No trained pipeline found (missing {})".format(META_FILE), path=path)
    if not isinstance(meta, dict) or 'model' not in meta:
        raise ModelFormatError("Pipeline metadata lacks the model name", path=path)
    return meta
