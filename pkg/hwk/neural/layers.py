"""
Parameter initialisers and the fully connected head shared by both networks.
"""

from collections import OrderedDict

import numpy as np

from hwk.autodiff import ops
from hwk.autodiff.tensor import parameter

HEAD_SCALE = 0.1


def glorot_uniform(rng, shape, fan_in, fan_out, scale=1.0):
    limit = scale * np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape)


def dense_params(rng, prefix, fan_in, fan_out, scale=1.0):
    return [
        (prefix + '_w', parameter(glorot_uniform(rng, (fan_in, fan_out), fan_in, fan_out, scale), prefix + '_w')),
        (prefix + '_b', parameter(np.zeros(fan_out), prefix + '_b'))
    ]


def head_params(rng, fan_in, widths, classes):
    """
    Parameters of relu dense layers of the given widths followed by the softmax layer. The softmax layer
    starts small so initial predictions are close to uniform.

    Returns:
        list: (name, Tensor) pairs
    """
    params = []
    for position, width in enumerate(widths):
        params.extend(dense_params(rng, 'dense{}'.format(position + 1), fan_in, width))
        fan_in = width
    params.extend(dense_params(rng, 'out', fan_in, classes, HEAD_SCALE))
    return params


def dense(x, params, prefix):
    return ops.add(ops.matmul(x, params[prefix + '_w']), params[prefix + '_b'])


def head(x, params, widths, dropout, train, rng):
    """
    relu dense layers, each followed by dropout, then softmax.

    Returns:
        Tensor: (n, classes) probabilities
    """
    for position in range(len(widths)):
        x = ops.relu(dense(x, params, 'dense{}'.format(position + 1)))
        x = ops.dropout(x, dropout, rng, train)
    return ops.softmax(dense(x, params, 'out'))


def zeroed(params):
    """
    Returns:
        OrderedDict: copies of params with every value set to 0
    """
    return OrderedDict((name, parameter(np.zeros_like(p.data), name)) for name, p in params.items())


def to_numpy(probabilities, single):
    data = probabilities.data
    return data[0] if single else data
