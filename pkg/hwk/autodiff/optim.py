"""
Functional Adam.
"""

from collections import namedtuple

import numpy as np

from hwk.utils.errors import ShapeMismatch

BETA1 = 0.9
BETA2 = 0.999
EPSILON = 1e-8
LEARNING_RATE = 1e-3

AdamState = namedtuple('AdamState', ['m', 'v', 't'])


def init_adam(params):
    return AdamState([np.zeros_like(p) for p in params], [np.zeros_like(p) for p in params], 0)


def adam_step(params, grads, state=None, beta1=BETA1, beta2=BETA2, eps=EPSILON, lr=LEARNING_RATE):
    """
    One bias-corrected Adam update. Inputs are left untouched.

    Args:
        params(list): parameter arrays
        grads(list): gradient arrays, same shapes; None counts as a zero gradient
        state(AdamState): moments from the previous step, None for a fresh start
        beta1(float): first moment decay
        beta2(float): second moment decay
        eps(float): denominator offset
        lr(float): learning rate

    Returns:
        (list, AdamState): updated parameters and state
    """
    params = [np.asarray(p, dtype=np.float64) for p in params]
    if len(grads) != len(params):
        raise ShapeMismatch("{} gradients for {} parameters".format(len(grads), len(params)))
    if state is None:
        state = init_adam(params)

    t = state.t + 1
    new_params, new_m, new_v = [], [], []
    for p, g, m, v in zip(params, grads, state.m, state.v):
        g = np.zeros_like(p) if g is None else np.asarray(g, dtype=np.float64)
        if g.shape != p.shape or m.shape != p.shape:
            raise ShapeMismatch("Gradient shape {} does not match parameter shape {}".format(g.shape, p.shape))
        m = beta1 * m + (1.0 - beta1) * g
        v = beta2 * v + (1.0 - beta2) * g * g
        m_hat = m / (1.0 - beta1 ** t)
        v_hat = v / (1.0 - beta2 ** t)
        new_params.append(p - lr * m_hat / (np.sqrt(v_hat) + eps))
        new_m.append(m)
        new_v.append(v)

    return new_params, AdamState(new_m, new_v, t)
