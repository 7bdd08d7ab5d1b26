"""
Central finite-difference check of tape gradients.
"""

from collections import namedtuple

import numpy as np

from hwk.autodiff.tensor import backward, recording

DEFAULT_STEP = 1e-5
DEFAULT_TOLERANCE = 1e-4
ABSOLUTE_TOLERANCE = 1e-8

GradcheckResult = namedtuple('GradcheckResult', ['max_error', 'passed', 'worst_parameter'])


def relative_error(analytic, numeric):
    """
    |a - n| / (|a| + |n|), elementwise. Pairs within 1e-8 of each other count as exact, so gradients that are
    both near zero are judged by absolute error only.
    """
    difference = np.abs(analytic - numeric)
    error = np.zeros_like(difference)
    inexact = difference > ABSOLUTE_TOLERANCE
    error[inexact] = difference[inexact] / (np.abs(analytic) + np.abs(numeric))[inexact]
    return error


def numerical_gradient(loss_fn, tensor, step=DEFAULT_STEP):
    """
    Args:
        loss_fn(callable): no-argument function returning a scalar Tensor
        tensor(Tensor): parameter to perturb in place
        step(float): finite difference step

    Returns:
        np.ndarray: central difference estimate of d loss / d tensor
    """
    grad = np.zeros_like(tensor.data)
    flat = tensor.data.reshape(-1)
    for i in range(flat.size):
        original = flat[i]
        flat[i] = original + step
        upper = loss_fn().item()
        flat[i] = original - step
        lower = loss_fn().item()
        flat[i] = original
        grad.reshape(-1)[i] = (upper - lower) / (2.0 * step)
    return grad


def gradcheck(loss_fn, params, step=DEFAULT_STEP, tolerance=DEFAULT_TOLERANCE):
    """
    Compares the tape gradients of loss_fn with central differences.

    Args:
        loss_fn(callable): no-argument function building a scalar loss from params
        params(list): Tensors that require gradients
        step(float): finite difference step
        tolerance(float): largest accepted relative error

    Returns:
        GradcheckResult: the worst relative error, whether it passed and which parameter produced it
    """
    for param in params:
        param.zero_grad()
    with recording():
        loss = loss_fn()
    backward(loss)

    worst, worst_name = 0.0, None
    for position, param in enumerate(params):
        analytic = param.grad if param.grad is not None else np.zeros_like(param.data)
        numeric = numerical_gradient(loss_fn, param, step)
        error = float(relative_error(analytic, numeric).max()) if param.size else 0.0
        if error > worst:
            worst, worst_name = error, param.name or str(position)

    return GradcheckResult(worst, worst <= tolerance, worst_name)
