"""
Word-level bidirectional GRU classifier: embedding, spatial dropout, one GRU per direction over the
non-padding steps, the concatenated final states through two relu dense layers, softmax.
"""

from collections import OrderedDict

import numpy as np

from hwk.autodiff import ops
from hwk.autodiff.tensor import Tensor, parameter
from hwk.neural import layers
from hwk.neural.vocab import PAD_ID
from hwk.utils.errors import ShapeMismatch

DIRECTIONS = ('fwd', 'bwd')
GATES = ('z', 'r', 'n')
EMBEDDING_RANGE = 0.05


def init_params(hyper, rng):
    """
    Args:
        hyper(GruHyper): sizes
        rng(np.random.RandomState): initialiser

    Returns:
        OrderedDict: parameter name to Tensor
    """
    params = [('embedding', parameter(
        rng.uniform(-EMBEDDING_RANGE, EMBEDDING_RANGE, size=(hyper.vocab_size, hyper.embed_dim)), 'embedding'
    ))]
    for direction in DIRECTIONS:
        for gate in GATES:
            prefix = '{}_{}'.format(direction, gate)
            params.append((prefix + '_W', parameter(layers.glorot_uniform(
                rng, (hyper.embed_dim, hyper.hidden), hyper.embed_dim, hyper.hidden), prefix + '_W')))
            params.append((prefix + '_U', parameter(layers.glorot_uniform(
                rng, (hyper.hidden, hyper.hidden), hyper.hidden, hyper.hidden), prefix + '_U')))
            params.append((prefix + '_b', parameter(np.zeros(hyper.hidden), prefix + '_b')))
    params.extend(layers.head_params(rng, 2 * hyper.hidden, hyper.dense, hyper.classes))
    return OrderedDict(params)


def gru_cell(x, h, mask, params, direction):
    """
    One GRU step: z = sigmoid(xWz + hUz + bz), r = sigmoid(xWr + hUr + br), n = tanh(xWn + (r*h)Un + bn),
    h' = (1 - z) * n + z * h. Rows whose mask is 0 keep h.
    """
    def affine(gate, state):
        prefix = '{}_{}'.format(direction, gate)
        return ops.add(ops.add(ops.matmul(x, params[prefix + '_W']), ops.matmul(state, params[prefix + '_U'])),
                       params[prefix + '_b'])

    z = ops.sigmoid(affine('z', h))
    r = ops.sigmoid(affine('r', h))
    n = ops.tanh(affine('n', ops.mul(r, h)))
    candidate = ops.add(ops.mul(ops.sub(1.0, z), n), ops.mul(z, h))
    keep = Tensor(mask[:, None])
    return ops.add(ops.mul(keep, candidate), ops.mul(Tensor(1.0 - mask[:, None]), h))


def _check_ids(hyper, ids):
    if ids.ndim != 2:
        raise ShapeMismatch("Token ids must be (n, steps), got {}".format(ids.shape))
    if ids.shape[1] > hyper.seq_len:
        raise ShapeMismatch("Sequence of {} ids exceeds seq_len {}".format(ids.shape[1], hyper.seq_len))
    if ids.size and (ids.min() < 0 or ids.max() >= hyper.vocab_size):
        raise ShapeMismatch("Token ids must lie in [0, {})".format(hyper.vocab_size))


def bigru_graph(hyper, params, ids, train=False, rng=None):
    """
    Builds the network on a batch.

    Args:
        hyper(GruHyper): sizes
        params(OrderedDict): parameters
        ids(np.ndarray): (n, steps) pre-padded token ids
        train(bool): apply dropout
        rng(np.random.RandomState): dropout masks

    Returns:
        Tensor: (n, classes) probabilities
    """
    ids = np.asarray(ids, dtype=np.int64)
    _check_ids(hyper, ids)
    n, steps = ids.shape
    mask = (ids != PAD_ID).astype(np.float64)

    embedded = ops.spatial_dropout(ops.embedding_lookup(params['embedding'], ids), hyper.dropout, rng, train)

    finals = []
    for direction, order in zip(DIRECTIONS, (range(steps), reversed(range(steps)))):
        h = Tensor(np.zeros((n, hyper.hidden)))
        for t in order:
            h = gru_cell(ops.time_step(embedded, t), h, mask[:, t], params, direction)
        finals.append(h)

    return layers.head(ops.concat(finals, axis=1), params, hyper.dense, hyper.dropout, train, rng)


def bigru_forward(hyper, params, token_ids):
    """
    Class probabilities for one id sequence, shape (classes,), or for a batch, shape (n, classes).
    """
    ids = np.asarray(token_ids, dtype=np.int64)
    single = ids.ndim == 1
    probabilities = bigru_graph(hyper, params, ids[None, :] if single else ids)
    return layers.to_numpy(probabilities, single)
