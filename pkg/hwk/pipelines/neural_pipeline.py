"""
The BiGRU and character CNN classifiers wrapped for training, prediction and persistence.
"""

import logging
import os
from collections import OrderedDict

from hwk.autodiff.tensor import parameter
from hwk.corpus.splits import stratified_split
from hwk.data_models import HS
from hwk.neural import training
from hwk.neural.checkpoint import load_params, save_params
from hwk.neural.hyper import cnn_hyper, gru_hyper
from hwk.neural.quantizer import CharQuantizer
from hwk.neural.vocab import WordVocabulary, build_word_vocabulary
from hwk.pipelines.common import (
    clean_config,
    combine_predictions,
    load_meta,
    save_meta,
    task_dimensions,
    texts_to_tweets
)
from hwk.textprep.pipeline import preprocess_dataset
from hwk.utils.errors import UnknownModel

BIGRU = 'bigru'
CHARCNN = 'charcnn'
NEURAL_MODELS = (BIGRU, CHARCNN)
PARAMS_FILE = 'params_{}.txt'
WORDS_FILE = 'words.tsv'

# neural.* setting to hyperparameter field
HYPER_OVERRIDES = (
    ('neural.lr', 'lr'),
    ('neural.batch', 'batch'),
    ('neural.dropout', 'dropout')
)


def hyper_overrides(model_name, settings):
    overrides = dict((field, settings[key]) for key, field in HYPER_OVERRIDES if settings.get(key) is not None)
    if model_name == BIGRU:
        overrides['vocab_size'] = settings['neural.vocab_size']
    return overrides


def build_hyper(model_name, profile, overrides):
    if model_name == BIGRU:
        return gru_hyper(profile, **overrides)
    return cnn_hyper(profile, **overrides)


class NeuralPipeline(object):
    """
    One network per label dimension of the task, each trained with its own best-epoch selection.
    """
    kind = 'neural'

    def __init__(self, model_name, settings):
        """
        Args:
            model_name(str): bigru or charcnn
            settings(dict): resolved configuration
        """
        if model_name not in NEURAL_MODELS:
            raise UnknownModel("{!r} is not a neural model".format(model_name))
        self.model_name = model_name
        self.settings = dict(settings)
        self.task = self.settings['run.task']
        self.lang = self.settings['run.lang']
        self.profile = self.settings['neural.profile']
        self.overrides = hyper_overrides(model_name, self.settings)
        self.hyper = build_hyper(model_name, self.profile, self.overrides)
        self.vocabulary = None
        self.params = OrderedDict()
        self.histories = OrderedDict()
        self.best_epochs = OrderedDict()

    @property
    def dimensions(self):
        return task_dimensions(self.task)

    @property
    def network(self):
        if self.model_name == BIGRU:
            return training.GruNetwork(self.hyper)
        return training.CnnNetwork(self.hyper, CharQuantizer(max_len=self.hyper.max_len))

    def _token_lists(self, tweets):
        return [seq.tokens for seq in preprocess_dataset(tweets, clean_config(self.settings))]

    def encode(self, tweets):
        """
        Returns:
            np.ndarray: word ids (bigru) or backward character indices (charcnn), one row per tweet
        """
        tweets = list(tweets)
        if self.model_name == BIGRU:
            return self.vocabulary.encode_batch(self._token_lists(tweets), self.hyper.seq_len)
        return CharQuantizer(max_len=self.hyper.max_len).encode_batch([tweet.text for tweet in tweets])

    def _fit_vocabulary(self, train):
        self.vocabulary = build_word_vocabulary(self._token_lists(train), max_size=self.settings['neural.vocab_size'])
        # the embedding only needs rows for ids that can occur
        self.overrides['vocab_size'] = len(self.vocabulary)
        self.hyper = build_hyper(self.model_name, self.profile, self.overrides)
        logging.info("Word vocabulary: {} ids".format(len(self.vocabulary)))

    def fit(self, train, val=None, seed=0):
        """
        Trains one network per dimension. Without a validation split, neural.val_fraction of the training
        tweets is held out, stratified on HS.

        Args:
            train(Dataset): labeled training split
            val(Dataset): labeled validation split, optional
            seed(int): training seed

        Returns:
            NeuralPipeline: self
        """
        self.lang = train.lang
        if val is None or not len(val):
            fraction = self.settings['neural.val_fraction']
            train, val, _ = stratified_split(train, (1.0 - fraction, fraction, 0.0), HS, seed)

        if self.model_name == BIGRU:
            self._fit_vocabulary(train)

        network = self.network
        train_inputs, val_inputs = self.encode(train), self.encode(val)
        for dimension in self.dimensions:
            result = training.train_classifier(
                network, train_inputs, train.labels(dimension), val_inputs, val.labels(dimension),
                self.settings['neural.epochs'], seed
            )
            self.params[dimension] = result.params
            self.histories[dimension] = result.history
            self.best_epochs[dimension] = result.best_epoch

        return self

    def predict_proba(self, tweets, dimension=HS):
        return training.predict_proba(self.network, self.params[dimension], self.encode(tweets))

    def predict_texts(self, texts, dimension=HS):
        return self.predict_proba(texts_to_tweets(texts, self.lang), dimension)

    def predict_labels(self, ds):
        network, inputs = self.network, self.encode(ds)
        per_dimension = dict(
            (dimension, training.predict(network, params, inputs)) for dimension, params in self.params.items()
        )
        return combine_predictions(per_dimension, len(ds))

    def save(self, directory):
        for dimension, params in self.params.items():
            save_params(params, os.path.join(directory, PARAMS_FILE.format(dimension)),
                        {'best_epoch': self.best_epochs.get(dimension, 0), 'network': self.model_name})
        if self.vocabulary is not None:
            self.vocabulary.save(os.path.join(directory, WORDS_FILE))
        save_meta(directory, {
            'kind': self.kind,
            'model': self.model_name,
            'task': self.task,
            'lang': self.lang,
            'settings': self.settings,
            'overrides': self.overrides
        })

    @classmethod
    def load(cls, directory):
        meta = load_meta(directory)
        pipeline = cls(meta['model'], meta['settings'])
        pipeline.task, pipeline.lang = meta['task'], meta['lang']
        pipeline.overrides = dict(meta.get('overrides') or {})
        pipeline.hyper = build_hyper(pipeline.model_name, pipeline.profile, pipeline.overrides)
        if pipeline.model_name == BIGRU:
            pipeline.vocabulary = WordVocabulary.load(os.path.join(directory, WORDS_FILE))
        for dimension in pipeline.dimensions:
            arrays, params_meta = load_params(os.path.join(directory, PARAMS_FILE.format(dimension)))
            pipeline.params[dimension] = OrderedDict((name, parameter(value, name)) for name, value in arrays.items())
            pipeline.best_epochs[dimension] = int(params_meta.get('best_epoch', 0))
        return pipeline
