"""
Dense 64-bit tensors and the tape that records operations on them for reverse-mode differentiation.

Operations only record while a tape is active in the current thread (see `recording`); outside of it they
compute plain forward values, which is what inference uses.
"""

import threading
from collections import namedtuple
from contextlib import contextmanager

import numpy as np

from hwk.utils.errors import NoTape, ShapeMismatch

Record = namedtuple('Record', ['inputs', 'output', 'backward'])

_state = threading.local()


class Tensor(object):
    """
    A float64 array with an optional gradient.
    """
    def __init__(self, data, requires_grad=False, name=None):
        self.data = np.array(data, dtype=np.float64)
        self.requires_grad = requires_grad
        self.grad = None
        self.name = name
        self.tape = None

    @property
    def shape(self):
        return self.data.shape

    @property
    def ndim(self):
        return self.data.ndim

    @property
    def size(self):
        return self.data.size

    def zero_grad(self):
        self.grad = None

    def item(self):
        if self.data.size != 1:
            raise ShapeMismatch("item() needs a single element, tensor has shape {}".format(self.shape))
        return float(self.data.reshape(-1)[0])

    def numpy(self):
        return self.data.copy()

    def __repr__(self):
        return "Tensor(shape={}, requires_grad={}{})".format(
            self.shape, self.requires_grad, ", name={!r}".format(self.name) if self.name else ''
        )

    def __add__(self, other):
        from hwk.autodiff import ops
        return ops.add(self, as_tensor(other))

    def __radd__(self, other):
        from hwk.autodiff import ops
        return ops.add(as_tensor(other), self)

    def __sub__(self, other):
        from hwk.autodiff import ops
        return ops.sub(self, as_tensor(other))

    def __rsub__(self, other):
        from hwk.autodiff import ops
        return ops.sub(as_tensor(other), self)

    def __mul__(self, other):
        from hwk.autodiff import ops
        return ops.mul(self, as_tensor(other))

    def __rmul__(self, other):
        from hwk.autodiff import ops
        return ops.mul(as_tensor(other), self)

    def __matmul__(self, other):
        from hwk.autodiff import ops
        return ops.matmul(self, as_tensor(other))


def as_tensor(value):
    return value if isinstance(value, Tensor) else Tensor(value)


def parameter(data, name=None):
    return Tensor(data, requires_grad=True, name=name)


class Tape(object):
    """
    Operation records in execution order, which is a topological order of the graph. A tape supports a
    single backward pass.
    """
    def __init__(self):
        self.records = []
        self.consumed = False

    def __len__(self):
        return len(self.records)

    def record(self, inputs, output, backward):
        if self.consumed:
            raise NoTape("The tape was already used for a backward pass")
        output.tape = self
        self.records.append(Record(tuple(inputs), output, backward))

    def backward(self, loss):
        """
        Propagates d loss / d x to every tensor on the tape and stores it on the tensors that require
        gradients.

        Args:
            loss(Tensor): scalar output recorded on this tape
        """
        if self.consumed:
            raise NoTape("The tape was already used for a backward pass")
        if loss.size != 1:
            raise ShapeMismatch("backward() needs a scalar loss, got shape {}".format(loss.shape))
        self.consumed = True

        grads = {id(loss): np.ones_like(loss.data)}
        leaves = {}
        for record in reversed(self.records):
            upstream = grads.pop(id(record.output), None)
            if upstream is None:
                continue
            input_grads = record.backward(upstream)
            for tensor, grad in zip(record.inputs, input_grads):
                if grad is None or not tensor.requires_grad:
                    continue
                key = id(tensor)
                grads[key] = grads[key] + grad if key in grads else grad
                if tensor.tape is not self:
                    leaves[key] = tensor

        for key, tensor in leaves.items():
            grad = grads.get(key)
            if grad is None:
                continue
            tensor.grad = grad if tensor.grad is None else tensor.grad + grad


def active_tape():
    return getattr(_state, 'tape', None)


@contextmanager
def recording():
    """
    Activates a fresh tape for the current thread.

    Yields:
        Tape: the active tape
    """
    previous = active_tape()
    tape = Tape()
    _state.tape = tape
    try:
        yield tape
    finally:
        _state.tape = previous


def backward(loss):
    """
    Runs the backward pass of the tape that produced loss.
    """
    if loss.tape is None:
        raise NoTape("The loss was not computed under an active tape")
    loss.tape.backward(loss)
