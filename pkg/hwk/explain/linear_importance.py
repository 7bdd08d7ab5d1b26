"""
Global importance of n-grams and dense slots read off a fitted linear model.
"""

from hwk.utils.errors import DimensionMismatch, NotFitted


def _weights(model, vocab):
    if model is None or vocab is None:
        raise NotFitted("Importance needs a fitted model and its vocabulary")
    weights = model.full_weights()
    if len(weights) < len(vocab):
        raise DimensionMismatch("Model has {} weights for {} n-grams".format(len(weights), len(vocab)))
    return weights


def linear_importance(model, vocab, top_k=None):
    """
    N-grams with a non-zero weight, by descending signed weight toward the positive (hateful) class.

    Args:
        model(LinearModel): fitted model whose first columns are the n-grams
        vocab(Vocabulary): the vocabulary the model was trained with
        top_k(int): longest list returned, None for all

    Returns:
        list: (ngram, weight) pairs
    """
    weights = _weights(model, vocab)
    ranked = sorted(
        ((term, float(weights[i])) for i, term in enumerate(vocab.terms) if weights[i] != 0),
        key=lambda pair: (-pair[1], pair[0])
    )
    return ranked if top_k is None else ranked[:top_k]


def dense_slot_importance(model, vocab, slot_names):
    """
    Weights of the engineered slots that follow the n-grams, by descending magnitude.

    Returns:
        list: (slot, weight) pairs
    """
    weights = _weights(model, vocab)
    dense = weights[len(vocab):]
    if len(dense) != len(slot_names):
        raise DimensionMismatch("Model has {} dense weights for {} slots".format(len(dense), len(slot_names)))
    return sorted(((name, float(w)) for name, w in zip(slot_names, dense)), key=lambda pair: (-abs(pair[1]), pair[0]))
