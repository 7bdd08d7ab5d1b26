"""
Hyperparameters of the word-level BiGRU and the character-level CNN, with the named size profiles.
"""

from collections import namedtuple

from hwk.utils.errors import ConfigError, ShapeMismatch

FULL = 'full'
DESK = 'desk'
TINY = 'tiny'
PROFILES = (FULL, DESK, TINY)


class GruHyper(namedtuple('GruHyper', [
    'vocab_size', 'seq_len', 'embed_dim', 'hidden', 'dense', 'dropout', 'batch', 'classes', 'lr'
])):
    __slots__ = ()

    def __new__(cls, vocab_size=20000, seq_len=140, embed_dim=400, hidden=100, dense=(64, 32), dropout=0.2,
                batch=32, classes=2, lr=1e-3):
        hyper = super(GruHyper, cls).__new__(
            cls, int(vocab_size), int(seq_len), int(embed_dim), int(hidden), tuple(int(d) for d in dense),
            float(dropout), int(batch), int(classes), float(lr)
        )
        _check_positive(hyper, ('vocab_size', 'seq_len', 'embed_dim', 'hidden', 'batch', 'classes'))
        _check_common(hyper)
        if hyper.vocab_size < 2:
            raise ConfigError("vocab_size must cover the padding and unknown ids, got {}".format(vocab_size))
        return hyper


class CnnHyper(namedtuple('CnnHyper', [
    'alphabet_size', 'max_len', 'conv_layers', 'filters', 'kernel', 'pool', 'dense', 'dropout', 'batch',
    'classes', 'lr'
])):
    __slots__ = ()

    def __new__(cls, alphabet_size=70, max_len=140, conv_layers=3, filters=256, kernel=7, pool=3,
                dense=(512, 256), dropout=0.2, batch=32, classes=2, lr=1e-3):
        hyper = super(CnnHyper, cls).__new__(
            cls, int(alphabet_size), int(max_len), int(conv_layers), int(filters), int(kernel), int(pool),
            tuple(int(d) for d in dense), float(dropout), int(batch), int(classes), float(lr)
        )
        _check_positive(hyper, ('alphabet_size', 'max_len', 'conv_layers', 'filters', 'kernel', 'pool', 'batch',
                                'classes'))
        _check_common(hyper)
        length_trace(hyper)
        return hyper


def _check_positive(hyper, fields):
    for field in fields:
        if getattr(hyper, field) <= 0:
            raise ConfigError("{} must be positive, got {}".format(field, getattr(hyper, field)))


def _check_common(hyper):
    if not 0 <= hyper.dropout < 1:
        raise ConfigError("dropout must lie in [0, 1), got {}".format(hyper.dropout))
    if not hyper.dense or any(width <= 0 for width in hyper.dense):
        raise ConfigError("dense widths must be positive, got {}".format(hyper.dense))
    if hyper.lr <= 0:
        raise ConfigError("lr must be positive, got {}".format(hyper.lr))


def length_trace(hyper):
    """
    Sequence length after every convolution and every pooling.

    Args:
        hyper(CnnHyper): the configuration

    Returns:
        list: lengths, conv and pool alternating
    """
    lengths = []
    length = hyper.max_len
    for layer in range(hyper.conv_layers):
        length = length - hyper.kernel + 1
        if length <= 0:
            raise ShapeMismatch("Convolution {} leaves no positions for max_len {}".format(layer + 1, hyper.max_len))
        lengths.append(length)
        length = length // hyper.pool
        if length <= 0:
            raise ShapeMismatch("Pooling {} leaves no positions for max_len {}".format(layer + 1, hyper.max_len))
        lengths.append(length)
    return lengths


GRU_PROFILES = {
    FULL: dict(),
    DESK: dict(embed_dim=64, hidden=32),
    TINY: dict(seq_len=12, embed_dim=8, hidden=4, dense=(8, 8), dropout=0.0, lr=1e-2)
}

CNN_PROFILES = {
    FULL: dict(),
    DESK: dict(filters=32, dense=(128, 64)),
    TINY: dict(max_len=20, conv_layers=2, filters=4, kernel=3, pool=2, dense=(8, 8), dropout=0.0, lr=1e-2)
}


def gru_hyper(profile=DESK, **overrides):
    """
    Returns:
        GruHyper: the named profile with overrides applied
    """
    if profile not in GRU_PROFILES:
        raise ConfigError("Unknown profile {!r}, expected one of {}".format(profile, PROFILES))
    settings = dict(GRU_PROFILES[profile])
    settings.update(overrides)
    return GruHyper(**settings)


def cnn_hyper(profile=DESK, **overrides):
    """
    Returns:
        CnnHyper: the named profile with overrides applied
    """
    if profile not in CNN_PROFILES:
        raise ConfigError("Unknown profile {!r}, expected one of {}".format(profile, PROFILES))
    settings = dict(CNN_PROFILES[profile])
    settings.update(overrides)
    return CnnHyper(**settings)
