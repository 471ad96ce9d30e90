"""Static canonical Huffman coding of byte streams.

Payload layout: 256 code-length bytes indexed by symbol, the decoded symbol
count as 8 bytes little-endian, then the bitstream packed MSB-first and
zero-padded to a byte boundary.
"""

import heapq
import struct
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .errors import CorruptStreamError, InvalidInputError

HEADER_SIZE = 256 + 8
TABLE_BITS = 16
_COUNT = struct.Struct("<Q")


@dataclass(frozen=True)
class HuffmanCodeTable:
    """Code lengths for all 256 byte values (0 means the symbol is absent)."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        if len(self.lengths) != 256:
            raise InvalidInputError("a code table needs exactly 256 lengths")

    @property
    def symbols(self) -> list[int]:
        """Present symbols in canonical order: by length, then by value."""
        return sorted((s for s in range(256) if self.lengths[s]),
                      key=lambda s: (self.lengths[s], s))

    def kraft_sum(self) -> Fraction:
        return sum((Fraction(1, 2 ** n) for n in self.lengths if n), Fraction(0))

    def codes(self) -> dict[int, tuple[int, int]]:
        """Map each present symbol to ``(code, length)``."""
        codes = {}
        code = 0
        prev_len = 0
        for s in self.symbols:
            n = self.lengths[s]
            code <<= n - prev_len
            codes[s] = (code, n)
            code += 1
            prev_len = n
        return codes


def huffman_build(freqs: Mapping[int, int]) -> HuffmanCodeTable:
    """Optimal code lengths for ``freqs``.

    The two lightest subtrees are merged first; equal weights are broken by
    the smallest symbol each subtree contains, so builds are deterministic.
    A lone symbol gets a 1-bit code.
    """
    present = sorted(s for s, c in freqs.items() if c > 0)
    if not present:
        raise InvalidInputError("frequency table has no symbol with a positive count")
    if any(not 0 <= s < 256 for s in present):
        raise InvalidInputError("symbols must be byte values")

    lengths = [0] * 256
    if len(present) == 1:
        lengths[present[0]] = 1
        return HuffmanCodeTable(tuple(lengths))

    heap = [(freqs[s], s, [s]) for s in present]
    heapq.heapify(heap)
    while len(heap) > 1:
        w1, m1, leaves1 = heapq.heappop(heap)
        w2, m2, leaves2 = heapq.heappop(heap)
        for s in leaves1:
            lengths[s] += 1
        for s in leaves2:
            lengths[s] += 1
        heapq.heappush(heap, (w1 + w2, min(m1, m2), leaves1 + leaves2))
    return HuffmanCodeTable(tuple(lengths))


def huffman_encode(data: bytes) -> bytes:
    data = bytes(data)
    if not data:
        return bytes(256) + _COUNT.pack(0)

    table = huffman_build(Counter(data))
    bit_strings = {s: format(code, f"0{n}b") for s, (code, n) in table.codes().items()}
    bits = "".join(map(bit_strings.__getitem__, data))
    pad = -len(bits) % 8
    nbytes = (len(bits) + pad) // 8
    packed = int(bits + "0" * pad, 2).to_bytes(nbytes, "big")
    return bytes(table.lengths) + _COUNT.pack(len(data)) + packed


def read_header(payload: bytes) -> tuple[HuffmanCodeTable, int]:
    """Parse and validate the code-length header of an entropy payload."""
    if len(payload) < HEADER_SIZE:
        raise CorruptStreamError(
            f"entropy payload of {len(payload)} bytes is shorter than its header")
    table = HuffmanCodeTable(tuple(payload[:256]))
    (count,) = _COUNT.unpack_from(payload, 256)
    if table.kraft_sum() > 1:
        raise CorruptStreamError("code lengths violate the Kraft inequality")
    if count and not any(table.lengths):
        raise CorruptStreamError("non-empty stream declared with an empty code table")
    return table, count


def huffman_decode(payload: bytes) -> bytes:
    table, count = read_header(payload)
    if count == 0:
        return b""

    # Canonical decoding: for each length, codes form a contiguous range that
    # starts at first[n] and indexes into the canonically ordered symbols.
    symbols = table.symbols
    max_len = max(table.lengths)
    per_len = [0] * (max_len + 1)
    for s in symbols:
        per_len[table.lengths[s]] += 1
    first = [0] * (max_len + 1)
    offset = [0] * (max_len + 1)
    code = idx = 0
    for n in range(1, max_len + 1):
        code <<= 1
        first[n] = code
        offset[n] = idx
        code += per_len[n]
        idx += per_len[n]

    stream = payload[HEADER_SIZE:]
    total_bits = len(stream) * 8
    bits = bin(int.from_bytes(stream, "big"))[2:].zfill(total_bits) if stream else ""
    if max_len <= TABLE_BITS:
        return _decode_with_table(table, bits, count, max_len)

    out = bytearray()
    pos = 0
    for _ in range(count):
        code = 0
        n = 0
        while True:
            if pos >= total_bits:
                raise CorruptStreamError(
                    f"bitstream exhausted after {len(out)} of {count} symbols")
            code = (code << 1) | (bits[pos] == "1")
            pos += 1
            n += 1
            rel = code - first[n]
            if rel < per_len[n]:
                out.append(symbols[offset[n] + rel])
                break
            if n == max_len:
                raise CorruptStreamError(f"invalid code at bit {pos}")
    return bytes(out)


def _decode_with_table(table: HuffmanCodeTable, bits: str, count: int, width: int) -> bytes:
    # Every width-bit window maps to the symbol whose code prefixes it.
    lookup = [None] * (1 << width)
    for s, (code, n) in table.codes().items():
        lo = code << (width - n)
        span = 1 << (width - n)
        lookup[lo:lo + span] = [(s, n)] * span

    total_bits = len(bits)
    bits += "0" * width
    out = bytearray(count)
    pos = 0
    for i in range(count):
        entry = lookup[int(bits[pos:pos + width], 2)]
        if entry is None:
            raise CorruptStreamError(f"invalid code at bit {pos}")
        out[i], n = entry
        pos += n
        if pos > total_bits:
            raise CorruptStreamError(f"bitstream exhausted after {i} of {count} symbols")
    return bytes(out)
