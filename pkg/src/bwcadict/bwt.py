"""Burrows-Wheeler transform over small blocks.

Blocks are at most a few hundred bytes, so the forward transform simply sorts
all rotations. Inversion walks the LF mapping.
"""

from dataclasses import dataclass

from .errors import InvalidInputError

DEFAULT_BLOCK_SIZE = 100


@dataclass(frozen=True)
class BwtBlock:
    """Last column of the sorted rotation matrix plus the row of the original."""

    data: bytes
    primary_index: int


def bwt_forward(block: bytes, block_size: int | None = DEFAULT_BLOCK_SIZE) -> BwtBlock:
    """Transform one block.

    Rotations are compared as unsigned bytes. Python's sort is stable, so among
    identical rotations the original one (offset 0) always sorts first.
    """
    block = bytes(block)
    n = len(block)
    if n == 0:
        raise InvalidInputError("cannot transform an empty block")
    if block_size is not None and n > block_size:
        raise InvalidInputError(f"block of {n} bytes exceeds block size {block_size}")

    doubled = block + block
    order = sorted(range(n), key=lambda i: doubled[i:i + n])
    last = bytes(block[i - 1] for i in order)  # block[-1] wraps for i == 0
    return BwtBlock(last, order.index(0))


def bwt_inverse(b: BwtBlock) -> bytes:
    last = b.data
    n = len(last)
    if not 0 <= b.primary_index < n:
        raise InvalidInputError(
            f"primary index {b.primary_index} out of range for block of {n} bytes")

    # Stable ranking of equal symbols: the k-th occurrence of c in the last
    # column is the k-th occurrence of c in the first column.
    lf = sorted(range(n), key=last.__getitem__)
    out = bytearray(n)
    row = b.primary_index
    for k in range(n):
        row = lf[row]
        out[k] = last[row]
    return bytes(out)
