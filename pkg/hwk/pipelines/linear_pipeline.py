"""
TF-IDF plus dense features into one linear model per label dimension.
"""

import logging
import os
from collections import OrderedDict

from hwk.data_models import HS
from hwk.explain.linear_importance import dense_slot_importance, linear_importance
from hwk.features.assembler import FeatureAssembler
from hwk.features.sentiment import default_lexicon, load_lexicon
from hwk.linear import model as linear_model
from hwk.linear import sgd
from hwk.linear.model import HINGE, LOGISTIC, LinearModel
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

MODEL_LOSSES = {
    'linsvc': HINGE,
    'logreg': LOGISTIC
}
MODEL_FILE = 'model_{}.txt'


class LinearPipeline(object):
    """
    Preprocessing, feature assembly and a linear classifier per label dimension of the task.
    """
    kind = 'linear'

    def __init__(self, model_name, settings):
        """
        Initialises an unfitted pipeline.

        Args:
            model_name(str): linsvc (hinge loss) or logreg (logistic loss)
            settings(dict): resolved configuration
        """
        if model_name not in MODEL_LOSSES:
            raise UnknownModel("{!r} is not a linear model".format(model_name))
        self.model_name = model_name
        self.loss = MODEL_LOSSES[model_name]
        self.settings = dict(settings)
        self.task = self.settings['run.task']
        self.lang = self.settings['run.lang']
        self.assembler = None
        self.models = OrderedDict()

    @property
    def dimensions(self):
        return task_dimensions(self.task)

    def _lexicon(self, lang):
        if not self.settings['features.sentiment']:
            return None
        path = self.settings['features.lexicon']
        return load_lexicon(path) if path else default_lexicon(lang)

    def train_options(self):
        return dict(
            epochs=self.settings['linear.epochs'],
            lr=self.settings['linear.lr'],
            schedule=self.settings['linear.schedule'],
            batch_size=self.settings['linear.batch_size'],
            fit_intercept=self.settings['linear.fit_intercept']
        )

    def features(self, tweets):
        """
        Returns:
            scipy.sparse.csr_matrix: feature rows of the tweets
        """
        tweets = list(tweets)
        return self.assembler.transform(tweets, preprocess_dataset(tweets, clean_config(self.settings)))

    def _train_dimension(self, X, y, seed):
        options = self.train_options()
        checksum = self.assembler.vocabulary.checksum()
        model_options = dict(options, loss=self.loss, penalty=self.settings['linear.penalty'],
                             C=self.settings['linear.C'], seed=seed, vocabulary_checksum=checksum)
        if self.settings['linear.l1_select']:
            selected = sgd.l1_reduce(X, y, self.settings['linear.l1_C'], seed, **options)
            return sgd.train_reduced(X, y, selected, **model_options)
        return sgd.train(X, y, **model_options)

    def fit_features(self, train):
        """
        Fits the feature assembler on a training split.

        Returns:
            scipy.sparse.csr_matrix: feature rows of the training tweets
        """
        self.lang = train.lang
        tokens = preprocess_dataset(train, clean_config(self.settings))
        self.assembler = self._new_assembler(train.lang).fit(train, tokens)
        return self.assembler.transform(train, tokens)

    def _new_assembler(self, lang):
        return FeatureAssembler(
            n_range=(self.settings['features.n_min'], self.settings['features.n_max']),
            min_df=self.settings['features.min_df'],
            drop_slots=self.settings['features.drop_slots'],
            use_sentiment=self.settings['features.sentiment'],
            lexicon=self._lexicon(lang),
            neutral_weight=self.settings['features.sentiment_neutral_weight']
        )

    def fit_fold_assembler(self, train, train_idx):
        """
        Fits a fresh assembler on the training rows of one cross-validation fold. The pipeline's own
        assembler is left alone.

        Returns:
            FeatureAssembler: vocabulary, IDF and dense statistics of those rows only
        """
        fold_train = train.subset(train_idx, 'fold_train')
        return self._new_assembler(train.lang).fit(
            fold_train, preprocess_dataset(fold_train, clean_config(self.settings))
        )

    def fold_features(self, train, train_idx, test_idx):
        """
        Per-fold featurize for grid_search_cv.

        Args:
            train(Dataset): the split being cross-validated
            train_idx(np.ndarray): sorted positions the fold trains on
            test_idx(np.ndarray): sorted held-out positions

        Returns:
            (csr_matrix, csr_matrix): feature rows of the fold's training and held-out tweets
        """
        assembler = self.fit_fold_assembler(train, train_idx)
        config = clean_config(self.settings)
        rows = []
        for indices, name in ((train_idx, 'fold_train'), (test_idx, 'fold_test')):
            subset = train.subset(indices, name)
            rows.append(assembler.transform(subset, preprocess_dataset(subset, config)))
        return rows[0], rows[1]

    def fit(self, train, val=None, seed=0):
        """
        Fits features and models on the training split; hinge models are calibrated on val when given.

        Args:
            train(Dataset): labeled training split
            val(Dataset): labeled held-out split, optional
            seed(int): training seed

        Returns:
            LinearPipeline: self
        """
        X = self.fit_features(train)
        X_val = self.features(val) if val is not None and len(val) else None

        for dimension in self.dimensions:
            y = train.labels(dimension)
            fitted = self._train_dimension(X, y, seed)
            if self.loss == HINGE:
                if X_val is not None:
                    fitted = linear_model.calibrate(fitted, X_val, val.labels(dimension))
                else:
                    fitted = linear_model.calibrate(fitted, X, y)
            self.models[dimension] = fitted
            logging.info("Fitted {} for {}".format(self.model_name, dimension.upper()))

        return self

    def predict_labels(self, ds):
        """
        Returns:
            list: one LabelSet per tweet
        """
        X = self.features(ds)
        per_dimension = dict((d, linear_model.predict(m, X)) for d, m in self.models.items())
        return combine_predictions(per_dimension, len(ds))

    def predict_proba(self, tweets, dimension=HS):
        """
        Returns:
            np.ndarray: (n, 2) class probabilities of one label dimension
        """
        return linear_model.predict_proba(self.models[dimension], self.features(tweets)).reshape(-1, 2)

    def predict_texts(self, texts, dimension=HS):
        return self.predict_proba(texts_to_tweets(texts, self.lang), dimension)

    def importance(self, dimension=HS, top_k=None):
        """
        Returns:
            (list, list): ranked (n-gram, weight) pairs and (slot, weight) pairs
        """
        model = self.models.get(dimension)
        vocab = self.assembler.vocabulary if self.assembler else None
        return (linear_importance(model, vocab, top_k),
                dense_slot_importance(model, vocab, self.assembler.slot_names))

    def save(self, directory):
        self.assembler.save(directory)
        for dimension, fitted in self.models.items():
            fitted.save(os.path.join(directory, MODEL_FILE.format(dimension)))
        save_meta(directory, {
            'kind': self.kind,
            'model': self.model_name,
            'task': self.task,
            'lang': self.lang,
            'settings': self.settings
        })

    @classmethod
    def load(cls, directory):
        meta = load_meta(directory)
        pipeline = cls(meta['model'], meta['settings'])
        pipeline.task, pipeline.lang = meta['task'], meta['lang']
        pipeline.assembler = FeatureAssembler.load(directory)
        for dimension in pipeline.dimensions:
            fitted = LinearModel.load(os.path.join(directory, MODEL_FILE.format(dimension)))
            linear_model.check_vocabulary(fitted, pipeline.assembler.vocabulary)
            pipeline.models[dimension] = fitted
        return pipeline
