"""
Binary network format (little-endian):

    b"DYNO"                     magic
    u32                         format version
    u8                          activation tag
    f64                         omega
    u32                         number of layers L
    L times:
        u32 rows, u32 cols
        rows * cols f64         weights, row-major
        rows f64                biases
    n0 times:
        f64 shift, f64 scale    input normalisation
"""
import struct

import numpy as np

from .activations import TAGS
from .network import Network
from ..errors import DeserializationError

MAGIC = b"DYNO"
VERSION = 1

_HEADER = struct.Struct("<4sIBdI")
_SHAPE = struct.Struct("<II")


def save(net):
    """
    Returns the network as bytes
    """
    parts = [_HEADER.pack(MAGIC, VERSION, net.activation.tag, net.activation.omega, net.depth)]
    for W, b in zip(net.weights, net.biases):
        parts.append(_SHAPE.pack(*W.shape))
        parts.append(np.ascontiguousarray(W, dtype = "<f8").tobytes())
        parts.append(np.ascontiguousarray(b, dtype = "<f8").tobytes())
    norm = np.column_stack([net.shift, net.scale])
    parts.append(np.ascontiguousarray(norm, dtype = "<f8").tobytes())
    return b"".join(parts)


class _Reader():

    def __init__(self, data):
        self.data = data
        self.pos = 0

    def take(self, n):
        if self.pos + n > len(self.data):
            raise DeserializationError(
                f'truncated network data: needed {n} bytes at offset {self.pos}, '
                f'{len(self.data) - self.pos} left'
            )
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def unpack(self, fmt):
        return fmt.unpack(self.take(fmt.size))

    def floats(self, count):
        return np.frombuffer(self.take(8 * count), dtype = "<f8").astype(float)


def load(data):
    """
    Rebuilds a network from bytes written by save
    """
    reader = _Reader(bytes(data))

    magic, version, tag, omega, n_layers = reader.unpack(_HEADER)
    if magic != MAGIC:
        raise DeserializationError(f'bad magic {magic!r}')
    if version != VERSION:
        raise DeserializationError(f'unsupported format version {version}')
    if tag not in TAGS:
        raise DeserializationError(f'unknown activation tag {tag}')
    if n_layers < 1:
        raise DeserializationError('a network needs at least one layer')

    weights, biases = [], []
    for l in range(n_layers):
        rows, cols = reader.unpack(_SHAPE)
        if rows == 0 or cols == 0:
            raise DeserializationError(f'layer {l + 1} has an empty weight matrix')
        if l > 0 and cols != weights[-1].shape[0]:
            raise DeserializationError(
                f'layer {l + 1} expects {cols} inputs but layer {l} has {weights[-1].shape[0]} outputs'
            )
        weights.append(reader.floats(rows * cols).reshape(rows, cols))
        biases.append(reader.floats(rows))

    n0 = weights[0].shape[1]
    norm = reader.floats(2 * n0).reshape(n0, 2)

    if reader.pos != len(reader.data):
        raise DeserializationError(f'{len(reader.data) - reader.pos} trailing bytes after network data')

    try:
        activation = TAGS[tag](omega)
        return Network(weights, biases, activation, norm[:, 0], norm[:, 1])
    except ValueError as err:
        raise DeserializationError(str(err)) from err


def save_file(path, net):
    with open(path, "wb") as f:
        f.write(save(net))


def load_file(path):
    with open(path, "rb") as f:
        return load(f.read())
