"""
Differentiable primitives. Each op computes its forward value with numpy and, when a tape is active and an
input needs a gradient, records a backward rule mapping the output gradient to one gradient per input.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.special import expit

from hwk.autodiff.tensor import Tensor, active_tape, as_tensor
from hwk.utils.errors import ShapeMismatch

PROBABILITY_FLOOR = 1e-12


def _result(data, inputs, backward):
    requires_grad = any(t.requires_grad for t in inputs)
    out = Tensor(data, requires_grad=requires_grad)
    tape = active_tape()
    if tape is not None and requires_grad:
        tape.record(inputs, out, backward)
    return out


def _unbroadcast(grad, shape):
    """
    Sums a broadcast gradient back down to the operand's shape.
    """
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


def _check_broadcast(a, b, name):
    try:
        return np.broadcast_shapes(a.shape, b.shape)
    except ValueError:
        raise ShapeMismatch("{}: shapes {} and {} do not broadcast".format(name, a.shape, b.shape))


def add(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _check_broadcast(a, b, 'add')
    return _result(a.data + b.data, (a, b), lambda g: (_unbroadcast(g, a.shape), _unbroadcast(g, b.shape)))


def sub(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _check_broadcast(a, b, 'sub')
    return _result(a.data - b.data, (a, b), lambda g: (_unbroadcast(g, a.shape), _unbroadcast(-g, b.shape)))


def mul(a, b):
    a, b = as_tensor(a), as_tensor(b)
    _check_broadcast(a, b, 'mul')
    return _result(
        a.data * b.data, (a, b),
        lambda g: (_unbroadcast(g * b.data, a.shape), _unbroadcast(g * a.data, b.shape))
    )


def matmul(a, b):
    """
    Matrix product of a (n, k) and b (k, m) tensor.
    """
    a, b = as_tensor(a), as_tensor(b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeMismatch("matmul: cannot multiply {} by {}".format(a.shape, b.shape))
    return _result(a.data.dot(b.data), (a, b), lambda g: (g.dot(b.data.T), a.data.T.dot(g)))


def relu(x):
    mask = x.data > 0
    return _result(x.data * mask, (x,), lambda g: (g * mask,))


def tanh(x):
    y = np.tanh(x.data)
    return _result(y, (x,), lambda g: (g * (1.0 - y * y),))


def sigmoid(x):
    y = expit(x.data)
    return _result(y, (x,), lambda g: (g * y * (1.0 - y),))


def softmax(x):
    """
    Softmax over the last axis.
    """
    shifted = x.data - x.data.max(axis=-1, keepdims=True)
    exp = np.exp(shifted)
    y = exp / exp.sum(axis=-1, keepdims=True)
    return _result(y, (x,), lambda g: (y * (g - (g * y).sum(axis=-1, keepdims=True)),))


def cross_entropy(probabilities, targets):
    """
    Mean over rows of -sum(target * log(probability)). Probabilities are floored at 1e-12.

    Args:
        probabilities(Tensor): (n, k) rows of class probabilities
        targets(np.ndarray|Tensor): (n, k) one-hot rows

    Returns:
        Tensor: scalar loss
    """
    targets = targets.data if isinstance(targets, Tensor) else np.asarray(targets, dtype=np.float64)
    if probabilities.shape != targets.shape:
        raise ShapeMismatch("cross_entropy: probabilities {} vs targets {}".format(
            probabilities.shape, targets.shape
        ))
    rows = probabilities.shape[0] if probabilities.ndim > 1 else 1
    clipped = np.maximum(probabilities.data, PROBABILITY_FLOOR)
    value = -(targets * np.log(clipped)).sum() / rows
    return _result(np.array(value), (probabilities,), lambda g: (-g * targets / clipped / rows,))


def conv1d(x, weights, bias=None):
    """
    Valid, stride-1 convolution.

    Args:
        x(Tensor): (n, channels, length)
        weights(Tensor): (filters, channels, kernel)
        bias(Tensor): (filters,) or None

    Returns:
        Tensor: (n, filters, length - kernel + 1)
    """
    if x.ndim != 3 or weights.ndim != 3 or x.shape[1] != weights.shape[1]:
        raise ShapeMismatch("conv1d: input {} does not match weights {}".format(x.shape, weights.shape))
    kernel = weights.shape[2]
    if kernel > x.shape[2]:
        raise ShapeMismatch("conv1d: kernel {} is longer than the input ({})".format(kernel, x.shape[2]))
    if bias is not None and bias.shape != (weights.shape[0],):
        raise ShapeMismatch("conv1d: bias {} does not match {} filters".format(bias.shape, weights.shape[0]))

    windows = sliding_window_view(x.data, kernel, axis=2)
    out = np.einsum('nctk,fck->nft', windows, weights.data)
    if bias is not None:
        out = out + bias.data[None, :, None]
    out_length = out.shape[2]

    def backward(g):
        grad_x = np.zeros_like(x.data)
        for k in range(kernel):
            grad_x[:, :, k:k + out_length] += np.einsum('nft,fc->nct', g, weights.data[:, :, k])
        grad_w = np.einsum('nft,nctk->fck', g, windows)
        grad_b = g.sum(axis=(0, 2)) if bias is not None else None
        return grad_x, grad_w, grad_b

    inputs = (x, weights) if bias is None else (x, weights, bias)
    return _result(out, inputs, backward)


def maxpool1d(x, width):
    """
    Non-overlapping max pooling over the last axis; a trailing remainder shorter than width is dropped.

    Args:
        x(Tensor): (n, channels, length)
        width(int): pool width

    Returns:
        Tensor: (n, channels, length // width)
    """
    if x.ndim != 3:
        raise ShapeMismatch("maxpool1d expects (n, channels, length), got {}".format(x.shape))
    n, channels, length = x.shape
    out_length = length // width
    if out_length == 0:
        raise ShapeMismatch("maxpool1d: width {} exceeds length {}".format(width, length))

    blocks = x.data[:, :, :out_length * width].reshape(n, channels, out_length, width)
    winners = np.argmax(blocks, axis=3)[..., None]
    out = np.take_along_axis(blocks, winners, axis=3)[..., 0]

    def backward(g):
        grad_blocks = np.zeros_like(blocks)
        np.put_along_axis(grad_blocks, winners, g[..., None], axis=3)
        grad_x = np.zeros_like(x.data)
        grad_x[:, :, :out_length * width] = grad_blocks.reshape(n, channels, out_length * width)
        return (grad_x,)

    return _result(out, (x,), backward)


def embedding_lookup(table, ids):
    """
    Rows of table for integer ids of any shape; the output has shape ids.shape + (dim,).
    """
    ids = np.asarray(ids, dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= table.shape[0]):
        raise ShapeMismatch("embedding_lookup: ids outside [0, {})".format(table.shape[0]))

    def backward(g):
        grad = np.zeros_like(table.data)
        np.add.at(grad, ids, g)
        return (grad,)

    return _result(table.data[ids], (table,), backward)


def concat(tensors, axis=-1):
    tensors = [as_tensor(t) for t in tensors]
    try:
        out = np.concatenate([t.data for t in tensors], axis=axis)
    except ValueError as e:
        raise ShapeMismatch("concat: {}".format(e))
    bounds = np.cumsum([t.shape[axis] for t in tensors])[:-1]
    return _result(out, tuple(tensors), lambda g: tuple(np.split(g, bounds, axis=axis)))


def reshape(x, shape):
    original = x.shape
    try:
        out = x.data.reshape(shape)
    except ValueError as e:
        raise ShapeMismatch("reshape: {}".format(e))
    return _result(out, (x,), lambda g: (g.reshape(original),))


def flatten(x):
    """
    Keeps the first axis and flattens the rest.
    """
    return reshape(x, (x.shape[0], -1))


def time_step(x, t):
    """
    Slice x[:, t, :] of a (n, steps, dim) tensor.
    """
    if x.ndim != 3 or not -x.shape[1] <= t < x.shape[1]:
        raise ShapeMismatch("time_step {} out of range for shape {}".format(t, x.shape))

    def backward(g):
        grad = np.zeros_like(x.data)
        grad[:, t, :] = g
        return (grad,)

    return _result(x.data[:, t, :], (x,), backward)


def reduce_sum(x):
    return _result(np.array(x.data.sum()), (x,), lambda g: (np.ones_like(x.data) * g,))


def _rng(seed):
    return seed if isinstance(seed, np.random.RandomState) else np.random.RandomState(seed)


def _masked(x, mask):
    return _result(x.data * mask, (x,), lambda g: (g * mask,))


def dropout(x, rate, seed, train=True):
    """
    Inverted dropout: kept units are scaled by 1 / (1 - rate), so the expectation is unchanged. Identity
    when train is off or rate is 0.

    Args:
        x(Tensor): input
        rate(float): drop probability in [0, 1)
        seed(int|np.random.RandomState): mask generator
        train(bool): training mode
    """
    if not train or rate == 0:
        return x
    if not 0 <= rate < 1:
        raise ShapeMismatch("dropout rate must lie in [0, 1), got {}".format(rate))
    mask = _rng(seed).binomial(1, 1.0 - rate, size=x.shape) / (1.0 - rate)
    return _masked(x, mask)


def spatial_dropout(x, rate, seed, train=True):
    """
    Drops whole channels of a (n, steps, dim) tensor: one mask value per (example, channel), shared by every
    step.
    """
    if not train or rate == 0:
        return x
    if x.ndim != 3:
        raise ShapeMismatch("spatial_dropout expects (n, steps, dim), got {}".format(x.shape))
    if not 0 <= rate < 1:
        raise ShapeMismatch("dropout rate must lie in [0, 1), got {}".format(rate))
    mask = _rng(seed).binomial(1, 1.0 - rate, size=(x.shape[0], 1, x.shape[2])) / (1.0 - rate)
    return _masked(x, mask)
