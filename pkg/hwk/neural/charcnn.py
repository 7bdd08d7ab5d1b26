"""
Character-level CNN: conv_layers blocks of (valid conv, relu, max pool) over the backward one-hot matrix,
flattened into relu dense layers with dropout and a softmax.
"""

from collections import OrderedDict

import numpy as np

from hwk.autodiff import ops
from hwk.autodiff.tensor import Tensor, parameter
from hwk.neural import layers
from hwk.neural.hyper import length_trace
from hwk.utils.errors import ShapeMismatch


def init_params(hyper, rng):
    """
    Returns:
        OrderedDict: parameter name to Tensor
    """
    params = []
    channels = hyper.alphabet_size
    for layer in range(1, hyper.conv_layers + 1):
        shape = (hyper.filters, channels, hyper.kernel)
        weights = layers.glorot_uniform(rng, shape, channels * hyper.kernel, hyper.filters * hyper.kernel)
        params.append(('conv{}_w'.format(layer), parameter(weights, 'conv{}_w'.format(layer))))
        params.append(('conv{}_b'.format(layer), parameter(np.zeros(hyper.filters), 'conv{}_b'.format(layer))))
        channels = hyper.filters
    flat = hyper.filters * length_trace(hyper)[-1]
    params.extend(layers.head_params(rng, flat, hyper.dense, hyper.classes))
    return OrderedDict(params)


def charcnn_graph(hyper, params, matrices, train=False, rng=None):
    """
    Builds the network on a batch.

    Args:
        hyper(CnnHyper): sizes
        params(OrderedDict): parameters
        matrices(np.ndarray): (n, alphabet size, max_len) one-hot input
        train(bool): apply dropout
        rng(np.random.RandomState): dropout masks

    Returns:
        Tensor: (n, classes) probabilities
    """
    matrices = np.asarray(matrices, dtype=np.float64)
    if matrices.ndim != 3 or matrices.shape[1:] != (hyper.alphabet_size, hyper.max_len):
        raise ShapeMismatch("Expected (n, {}, {}) input, got {}".format(
            hyper.alphabet_size, hyper.max_len, matrices.shape
        ))

    x = Tensor(matrices)
    for layer in range(1, hyper.conv_layers + 1):
        x = ops.conv1d(x, params['conv{}_w'.format(layer)], params['conv{}_b'.format(layer)])
        x = ops.maxpool1d(ops.relu(x), hyper.pool)

    return layers.head(ops.flatten(x), params, hyper.dense, hyper.dropout, train, rng)


def charcnn_forward(hyper, params, quantized):
    """
    Class probabilities for one quantized matrix, shape (classes,), or a batch, shape (n, classes).
    """
    quantized = np.asarray(quantized, dtype=np.float64)
    single = quantized.ndim == 2
    probabilities = charcnn_graph(hyper, params, quantized[None] if single else quantized)
    return layers.to_numpy(probabilities, single)
