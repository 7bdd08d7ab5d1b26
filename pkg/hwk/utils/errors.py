"""
Exceptions raised across the toolkit. Every error carries an optional file path and line so the batch
front-end can report where a problem came from.
"""


class HwkException(Exception):
    """
    Base for all toolkit errors.
    """
    def __init__(self, message, path=None, line=None):
        """
        Initialises the exception.

        Args:
            message(str): human readable description
            path(str): file the error refers to, if any
            line(int): 1-based line number within path, if any
        """
        super(HwkException, self).__init__(message)
        self.message = message
        self.path = path
        self.line = line

    def to_dict(self):
        """
        Returns:
            dict: machine readable form of the error
        """
        return {
            'error': type(self).__name__,
            'message': self.message,
            'path': self.path,
            'line': self.line
        }


class DatasetError(HwkException):
    """
    Problems with dataset files or dataset contents.
    """
    pass


class MissingColumn(DatasetError):
    """
    Raised when a required TSV column is absent from the header.
    """
    pass


class BadLabelValue(DatasetError):
    """
    Raised when a label is not 0/1, or TR/AG are set on a non-hateful tweet.
    """
    pass


class DuplicateId(DatasetError):
    """
    Raised when a tweet id occurs twice in one dataset.
    """
    pass


class EncodingError(DatasetError):
    """
    Raised when a dataset file is not valid UTF-8.
    """
    pass


class MalformedRow(DatasetError):
    """
    Raised for rows with the wrong number of fields, stray carriage returns or blank text.
    """
    pass


class UnlabeledDataset(DatasetError):
    """
    Raised when an operation needs gold labels the dataset does not have.
    """
    pass


class ClassTooSmall(DatasetError):
    """
    Raised when a class cannot populate every requested split or fold.
    """
    pass


class BadFractions(DatasetError):
    """
    Raised when split fractions are negative or do not sum to 1.
    """
    pass


class TextError(HwkException):
    """
    Problems in the text preparation stage.
    """
    pass


class UnsupportedLanguage(TextError):
    """
    Raised for language tags other than en/es.
    """
    pass


class MissingResource(TextError):
    """
    Raised when an optional language resource (e.g. a stop-word list) is not installed.
    """
    pass


class FeatureError(HwkException):
    """
    Problems fitting or applying feature extractors.
    """
    pass


class EmptyCorpus(FeatureError):
    pass


class EmptyVocabulary(FeatureError):
    """
    Raised when no n-gram reaches min_df.
    """
    pass


class DegenerateText(FeatureError):
    """
    Raised when readability is requested for text without words or sentences.
    """
    pass


class NotFitted(FeatureError):
    """
    Raised when a transform runs before its fit.
    """
    pass


class ModelError(HwkException):
    """
    Problems training, applying or reading linear models.
    """
    pass


class SingleClass(ModelError):
    pass


class DimensionMismatch(ModelError):
    pass


class AllZero(ModelError):
    """
    Raised when L1 selection keeps no feature at all. C is too small for the data.
    """
    pass


class VocabularyMismatch(ModelError):
    """
    Raised when a model is applied with a vocabulary other than the one it was trained on.
    """
    pass


class ModelFormatError(ModelError):
    """
    Raised when a serialized model or checkpoint cannot be parsed.
    """
    pass


class UnknownModel(ModelError):
    pass


class TensorError(HwkException):
    """
    Problems inside the autodiff engine.
    """
    pass


class ShapeMismatch(TensorError):
    pass


class NoTape(TensorError):
    """
    Raised when backward is called on a value that was not recorded, or whose tape was already used.
    """
    pass


class MetricError(HwkException):
    pass


class LengthMismatch(MetricError):
    pass


class IncompleteLabels(MetricError):
    """
    Raised when a multi-label metric receives a LabelSet without TR/AG.
    """
    pass


class ExplainError(HwkException):
    pass


class EmptyTokens(ExplainError):
    pass


class DegeneratePerturbations(ExplainError):
    """
    Raised in strict mode when every perturbed prediction is identical.
    """
    pass


class AnalysisError(HwkException):
    pass


class NoMatches(AnalysisError):
    """
    Raised when a pattern occurs in no tweet, so its label rate is undefined.
    """
    pass


class ConfigError(HwkException):
    """
    Raised for unknown keys, bad values or unreadable experiment configuration files.
    """
    pass
