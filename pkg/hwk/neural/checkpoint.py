"""
Parameter checkpoints: a versioned text file of shape-tagged arrays.

    hwk-params<TAB>1
    meta<TAB><key><TAB><value>          (any number)
    array<TAB><name><TAB><d1,d2,...><TAB><count>
    <value>                             (count lines, row-major, repr floats)
"""

import io
from collections import OrderedDict

import numpy as np

from hwk.utils.errors import ModelFormatError

FORMAT_NAME = 'hwk-params'
FORMAT_VERSION = 1


def save_params(params, path, meta=None):
    """
    Args:
        params(OrderedDict): name to Tensor or array
        path(str): output file
        meta(dict): string metadata stored with the arrays
    """
    lines = [u'{}\t{}'.format(FORMAT_NAME, FORMAT_VERSION)]
    for key in sorted(meta or {}):
        lines.append(u'meta\t{}\t{}'.format(key, meta[key]))
    for name, value in params.items():
        data = np.asarray(getattr(value, 'data', value), dtype=np.float64)
        lines.append(u'array\t{}\t{}\t{}'.format(name, u','.join(str(d) for d in data.shape), data.size))
        lines.extend(repr(float(v)) for v in data.reshape(-1))
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(u'\n'.join(lines) + u'\n')


def load_params(path):
    """
    Returns:
        (OrderedDict, dict): name to array, and the metadata
    """
    with io.open(path, 'r', encoding='utf-8') as f:
        lines = f.read().splitlines()

    if not lines or lines[0] != u'{}\t{}'.format(FORMAT_NAME, FORMAT_VERSION):
        raise ModelFormatError("Not a parameter checkpoint", path=path, line=1)

    params, meta = OrderedDict(), {}
    position = 1
    try:
        while position < len(lines):
            fields = lines[position].split(u'\t')
            if fields[0] == u'meta':
                meta[fields[1]] = fields[2]
                position += 1
                continue
            if fields[0] != u'array':
                raise ModelFormatError("Unexpected record {!r}".format(fields[0]), path=path, line=position + 1)
            name, shape, count = fields[1], fields[2], int(fields[3])
            dims = tuple(int(d) for d in shape.split(u',') if d)
            values = [float(v) for v in lines[position + 1:position + 1 + count]]
            if len(values) != count or int(np.prod(dims)) != count:
                raise ModelFormatError("Array {} is truncated".format(name), path=path, line=position + 1)
            params[name] = np.array(values).reshape(dims)
            position += 1 + count
    except (IndexError, ValueError) as e:
        raise ModelFormatError("Malformed checkpoint ({})".format(e), path=path, line=position + 1)

    return params, meta
