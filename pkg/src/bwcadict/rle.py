"""Pair-triggered run-length coding.

A run of two equal bytes is always followed by a count byte giving how many
further copies follow (0..255). Longer runs are split into several such
chunks; a single leftover byte is emitted bare.
"""

from itertools import groupby

from .errors import CorruptStreamError

MAX_EXTRA = 255


def rle_encode(data: bytes) -> bytes:
    out = bytearray()
    for byte, group in groupby(data):
        k = sum(1 for _ in group)
        while k:
            if k == 1:
                out.append(byte)
                break
            extra = min(k - 2, MAX_EXTRA)
            out += bytes((byte, byte, extra))
            k -= 2 + extra
    return bytes(out)


def rle_decode(data: bytes) -> bytes:
    out = bytearray()
    n = len(data)
    i = 0
    while i < n:
        byte = data[i]
        if i + 1 < n and data[i + 1] == byte:
            if i + 2 >= n:
                raise CorruptStreamError(f"run at offset {i} has no count byte")
            out += bytes((byte,)) * (2 + data[i + 2])
            i += 3
        else:
            out.append(byte)
            i += 1
    return bytes(out)
