"""
Deterministic stratified splitting of datasets.
"""

import logging
from collections import OrderedDict

import numpy as np

from hwk.utils.errors import BadFractions, ClassTooSmall, UnlabeledDataset

SPLIT_NAMES = ('train', 'val', 'test')
FRACTION_TOLERANCE = 1e-9


def label_selector(dimension):
    """
    Builds a key function returning one gold label dimension of a tweet.

    Args:
        dimension(str): hs, tr or ag

    Returns:
        function: tweet -> label
    """
    def select(tweet):
        value = tweet.labels.get(dimension) if tweet.labels is not None else None
        if value is None:
            raise UnlabeledDataset("Tweet {} has no {} label to stratify on".format(tweet.id, dimension.upper()))
        return value

    return select


def _check_fractions(fractions):
    if len(fractions) != len(SPLIT_NAMES):
        raise BadFractions("Expected {} fractions, got {}".format(len(SPLIT_NAMES), len(fractions)))
    if any(f < 0 for f in fractions):
        raise BadFractions("Fractions must not be negative: {}".format(fractions))
    if fractions[0] <= 0:
        raise BadFractions("The train fraction must be positive: {}".format(fractions))
    if abs(sum(fractions) - 1.0) > FRACTION_TOLERANCE:
        raise BadFractions("Fractions must sum to 1, got {}".format(sum(fractions)))


def _apportion(size, fractions):
    """
    Splits a class of the given size by largest remainders, so every share is within one of size * fraction.
    """
    exact = [size * f for f in fractions]
    counts = [int(np.floor(e)) for e in exact]
    remainders = sorted(range(len(fractions)), key=lambda i: (-(exact[i] - counts[i]), i))
    for i in remainders[:size - sum(counts)]:
        counts[i] += 1
    return counts


def stratified_split(ds, fractions, key, seed):
    """
    Splits a dataset into train/val/test keeping per-class proportions. Each class is shuffled with a seeded
    generator and sliced contiguously; every output keeps the input's load order.

    Args:
        ds(Dataset): dataset to split
        fractions(tuple): train, val and test fractions summing to 1
        key(str|function): label dimension name or a tweet -> class function
        seed(int): shuffle seed

    Returns:
        (Dataset, Dataset, Dataset): train, val and test splits
    """
    _check_fractions(fractions)
    if not callable(key):
        key = label_selector(key)

    members = OrderedDict()
    for index, tweet in enumerate(ds):
        members.setdefault(key(tweet), []).append(index)

    rng = np.random.RandomState(seed)
    selected = [[] for _ in SPLIT_NAMES]

    for label in sorted(members):
        indices = np.array(members[label])
        rng.shuffle(indices)
        counts = _apportion(len(indices), fractions)

        for split, (fraction, count) in enumerate(zip(fractions, counts)):
            if fraction > 0 and count == 0:
                raise ClassTooSmall(
                    "Class {!r} has {} tweets, too few to populate the {} split".format(
                        label, len(indices), SPLIT_NAMES[split]
                    )
                )

        start = 0
        for split, count in enumerate(counts):
            selected[split].extend(int(i) for i in indices[start:start + count])
            start += count

    splits = tuple(ds.subset(indices, name) for indices, name in zip(selected, SPLIT_NAMES))
    logging.info("Split {} tweets into {}".format(len(ds), '/'.join(str(len(s)) for s in splits)))

    return splits
