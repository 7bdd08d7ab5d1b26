"""
Local surrogate explanations: perturb a tweet by dropping tokens, query the classifier on the perturbed
texts, and fit a proximity-weighted ridge model on token presence.
"""

import json
import logging
from collections import namedtuple

import numpy as np
from sklearn.linear_model import Ridge
from sklearn.metrics import pairwise_distances

from hwk.utils.errors import DegeneratePerturbations, EmptyTokens, ExplainError

DEFAULT_SAMPLES = 500
DEFAULT_TOP_K = 10
RIDGE_ALPHA = 1e-3
KERNEL_SCALE = 0.75
KEEP_PROBABILITY = 0.5

Explanation = namedtuple('Explanation', [
    'tweet_id', 'predicted_class', 'probability', 'weights', 'score', 'intercept', 'degenerate'
])


def _words(tokens):
    words = getattr(tokens, 'words', None)
    return list(words if words is not None else getattr(tokens, 'tokens', tokens))


def apply_mask(words, mask):
    return u' '.join(word for word, keep in zip(words, mask) if keep)


def perturb(tokens, n_samples, seed):
    """
    Random token-removal samples; sample 0 keeps every token.

    Args:
        tokens(TokenSequence|list): tokens of the tweet, perturbed on their unstemmed words
        n_samples(int): number of samples, at least 1
        seed(int): mask generator seed

    Returns:
        list: (mask, text) pairs, mask bit 0 meaning the token was removed
    """
    words = _words(tokens)
    if not words:
        raise EmptyTokens("Cannot perturb a tweet without tokens")
    if n_samples < 1:
        raise ExplainError("n_samples must be at least 1, got {}".format(n_samples))

    rng = np.random.RandomState(seed)
    masks = rng.binomial(1, KEEP_PROBABILITY, size=(n_samples, len(words)))
    masks[0, :] = 1
    return [(mask, apply_mask(words, mask)) for mask in masks]


def kernel_weights(masks, kernel_width):
    """
    exp(-d^2 / width^2) with d the cosine distance between each mask and the all-ones mask.
    """
    distances = pairwise_distances(masks, np.ones((1, masks.shape[1])), metric='cosine').ravel()
    return np.exp(-distances ** 2 / kernel_width ** 2)


def lime_explain(predict_fn, tweet, n_samples=DEFAULT_SAMPLES, top_k=DEFAULT_TOP_K, kernel_width=None, seed=0,
                 tokens=None, class_index=None, alpha=RIDGE_ALPHA, strict=False):
    """
    Explains one prediction.

    Args:
        predict_fn(callable): list of texts to an (n, classes) probability array
        tweet(Tweet): the tweet
        n_samples(int): perturbation samples
        top_k(int): tokens to report
        kernel_width(float): proximity kernel width, 0.75 * sqrt(token count) when None
        seed(int): perturbation seed
        tokens(TokenSequence): its tokens, whitespace tokens of the text when None
        class_index(int): class to explain, the predicted class when None
        alpha(float): ridge regularization
        strict(bool): raise DegeneratePerturbations instead of returning an empty explanation

    Returns:
        Explanation: ranked (token, weight) pairs with the weighted R^2 of the surrogate
    """
    if tokens is None:
        tokens = tweet.text.split()
    samples = perturb(tokens, n_samples, seed)
    words = _words(tokens)
    masks = np.array([mask for mask, _ in samples], dtype=np.float64)

    probabilities = np.asarray(predict_fn([text for _, text in samples]), dtype=np.float64)
    if probabilities.ndim != 2 or probabilities.shape[0] != len(samples):
        raise ExplainError("predict_fn returned shape {} for {} texts".format(probabilities.shape, len(samples)))

    explained = int(np.argmax(probabilities[0])) if class_index is None else class_index
    target = probabilities[:, explained]
    probability = float(target[0])

    if np.ptp(target) == 0:
        if strict:
            raise DegeneratePerturbations("Every perturbed text got the same prediction")
        logging.warning("Predictions of tweet {} do not vary under perturbation".format(tweet.id))
        return Explanation(tweet.id, explained, probability, [], 0.0, probability, True)

    width = kernel_width if kernel_width is not None else KERNEL_SCALE * np.sqrt(len(words))
    weights = kernel_weights(masks, width)

    surrogate = Ridge(alpha=alpha)
    surrogate.fit(masks, target, sample_weight=weights)
    score = float(surrogate.score(masks, target, sample_weight=weights))

    coefficients = surrogate.coef_
    ranked = sorted(range(len(words)), key=lambda i: (-abs(coefficients[i]), i))[:top_k]

    return Explanation(
        tweet_id=tweet.id,
        predicted_class=explained,
        probability=probability,
        weights=[(words[i], float(coefficients[i])) for i in ranked],
        score=score,
        intercept=float(surrogate.intercept_),
        degenerate=False
    )


def explanation_report(explanation):
    """
    Returns:
        str: the explanation as indented JSON
    """
    return json.dumps({
        'tweet_id': explanation.tweet_id,
        'predicted_class': explanation.predicted_class,
        'probability': round(explanation.probability, 6),
        'score': round(explanation.score, 6),
        'intercept': round(explanation.intercept, 6),
        'degenerate': explanation.degenerate,
        'weights': [{'token': token, 'weight': round(weight, 6)} for token, weight in explanation.weights]
    }, indent=2, ensure_ascii=False)
