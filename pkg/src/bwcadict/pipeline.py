"""The four block-sorting pipelines and their container format.

The dictionary stage, when present, runs over the whole input. The result is
cut into ``block_size`` chunks, each chunk runs through BWT and the
MTF/RLE chain on its own, and the concatenated block payloads are Huffman
coded once.

Container layout, all integers little-endian::

    magic "BWCA" | version u8 | pipeline id u8 | block size u16
    | dictionary fingerprint u64 (dictionary pipelines only)
    | transformed length u64 | block count u32
    | block count x (primary index u16, payload length u32)
    | entropy payload
"""

import struct
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from pathlib import Path

from . import huffman
from .bwt import DEFAULT_BLOCK_SIZE, BwtBlock, bwt_forward, bwt_inverse
from .dictionary import Dictionary, UnknownWordLog, dict_decode, dict_encode
from .errors import (ConfigurationError, CorruptStreamError, FormatError,
                     InvalidInputError, WrongDictionaryError)
from .mtf import mtf_decode, mtf_encode
from .rle import rle_decode, rle_encode

MAGIC = b"BWCA"
VERSION = 1
MAX_BLOCK_SIZE = 0xFFFF

_HEAD = struct.Struct("<4sBBH")
_FINGERPRINT = struct.Struct("<Q")
_COUNTS = struct.Struct("<QI")
_RECORD = struct.Struct("<HI")


class Stage(Enum):
    DICT = "dictionary"
    BWT = "bwt"
    MTF = "mtf"
    RLE = "rle"
    HUF = "huffman"


class Method(IntEnum):
    BWCA = 1
    PROPOSED = 2
    DICT_BWCA = 3
    DICT_PROPOSED = 4

    @property
    def uses_dictionary(self) -> bool:
        return self >= Method.DICT_BWCA

    @property
    def cli_name(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def from_name(cls, name: str) -> "Method":
        try:
            return cls[name.upper().replace("-", "_")]
        except KeyError:
            raise ValueError(f"unknown method {name!r}") from None


_BLOCK_CHAINS = {
    Method.BWCA: (Stage.MTF, Stage.RLE),
    Method.PROPOSED: (Stage.RLE, Stage.MTF, Stage.RLE),
    Method.DICT_BWCA: (Stage.MTF, Stage.RLE),
    Method.DICT_PROPOSED: (Stage.RLE, Stage.MTF, Stage.RLE),
}
_ENCODERS = {Stage.MTF: mtf_encode, Stage.RLE: rle_encode}
_DECODERS = {Stage.MTF: mtf_decode, Stage.RLE: rle_decode}


@dataclass(frozen=True)
class PipelineSpec:
    method: Method = Method.BWCA
    block_size: int = DEFAULT_BLOCK_SIZE

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if not 1 <= self.block_size <= MAX_BLOCK_SIZE:
            raise InvalidInputError(f"block size must be in 1..{MAX_BLOCK_SIZE}")

    @property
    def block_chain(self) -> tuple[Stage, ...]:
        """Stages applied to each block after BWT, before entropy coding."""
        return _BLOCK_CHAINS[self.method]

    @property
    def stages(self) -> tuple[Stage, ...]:
        head = (Stage.DICT,) if self.method.uses_dictionary else ()
        return head + (Stage.BWT,) + self.block_chain + (Stage.HUF,)


@dataclass(frozen=True)
class BlockRecord:
    primary_index: int
    payload_length: int


@dataclass(frozen=True)
class Container:
    method: Method
    block_size: int
    fingerprint: int | None
    stream_length: int
    blocks: tuple[BlockRecord, ...]
    payload: bytes
    # Words the dictionary stage did not know; never serialized.
    unknown_words: UnknownWordLog | None = field(default=None, compare=False, repr=False)
    # Entropy-decoded block payloads, filled in by parse() while validating.
    decoded: bytes | None = field(default=None, compare=False, repr=False)

    @property
    def spec(self) -> PipelineSpec:
        return PipelineSpec(self.method, self.block_size)


def _check_dictionary(spec: PipelineSpec, d: Dictionary | None):
    if spec.method.uses_dictionary and d is None:
        raise ConfigurationError(f"{spec.method.cli_name} needs a dictionary")
    if not spec.method.uses_dictionary and d is not None:
        raise ConfigurationError(f"{spec.method.cli_name} does not take a dictionary")


def encode_block(block: bytes, spec: PipelineSpec) -> tuple[int, bytes]:
    """Run one block through BWT and the block chain; return (primary index, payload)."""
    b = bwt_forward(block, spec.block_size)
    data = b.data
    for stage in spec.block_chain:
        data = _ENCODERS[stage](data)
    return b.primary_index, data


def decode_block(primary_index: int, payload: bytes, spec: PipelineSpec) -> bytes:
    data = payload
    for stage in reversed(spec.block_chain):
        data = _DECODERS[stage](data)
    return bwt_inverse(BwtBlock(data, primary_index))


def split_blocks(data: bytes, block_size: int) -> list[bytes]:
    return [data[i:i + block_size] for i in range(0, len(data), block_size)]


def compress(data: bytes, spec: PipelineSpec, dictionary: Dictionary | None = None,
             dump_dir: str | Path | None = None) -> Container:
    """Compress ``data``; with ``dump_dir`` the stage outputs of the first block are written there."""
    _check_dictionary(spec, dictionary)
    data = bytes(data)
    unknown = None
    fingerprint = None
    if spec.method.uses_dictionary:
        data, unknown = dict_encode(data, dictionary)
        fingerprint = dictionary.fingerprint

    records = []
    payloads = []
    for block in split_blocks(data, spec.block_size):
        primary, payload = encode_block(block, spec)
        records.append(BlockRecord(primary, len(payload)))
        payloads.append(payload)
    entropy = huffman.huffman_encode(b"".join(payloads))

    if dump_dir is not None:
        _dump_stages(Path(dump_dir), spec, data, entropy)
    return Container(spec.method, spec.block_size, fingerprint, len(data),
                     tuple(records), entropy, unknown)


def decompress(c: Container, dictionary: Dictionary | None = None) -> bytes:
    spec = c.spec
    _check_dictionary(spec, dictionary)
    if spec.method.uses_dictionary and dictionary.fingerprint != c.fingerprint:
        raise WrongDictionaryError(
            f"container expects dictionary {c.fingerprint:016x}, "
            f"got {dictionary.fingerprint:016x}")

    joined = c.decoded if c.decoded is not None else huffman.huffman_decode(c.payload)
    if len(joined) != sum(r.payload_length for r in c.blocks):
        raise CorruptStreamError("block payload lengths do not match the entropy stream")
    out = bytearray()
    pos = 0
    for i, rec in enumerate(c.blocks):
        payload = joined[pos:pos + rec.payload_length]
        pos += rec.payload_length
        block = decode_block(rec.primary_index, payload, spec)
        expected = min(spec.block_size, c.stream_length - i * spec.block_size)
        if len(block) != expected:
            raise CorruptStreamError(
                f"block {i} decoded to {len(block)} bytes, expected {expected}")
        out += block
    if len(out) != c.stream_length:
        raise CorruptStreamError("decoded length does not match the header")

    if spec.method.uses_dictionary:
        return dict_decode(bytes(out), dictionary)
    return bytes(out)


def serialize(c: Container) -> bytes:
    parts = [_HEAD.pack(MAGIC, VERSION, int(c.method), c.block_size)]
    if c.method.uses_dictionary:
        parts.append(_FINGERPRINT.pack(c.fingerprint))
    parts.append(_COUNTS.pack(c.stream_length, len(c.blocks)))
    parts.extend(_RECORD.pack(r.primary_index, r.payload_length) for r in c.blocks)
    parts.append(c.payload)
    return b"".join(parts)


def parse(data: bytes) -> Container:
    data = bytes(data)
    if len(data) < _HEAD.size or data[:4] != MAGIC:
        raise FormatError("not a BWCA container")
    magic, version, method_id, block_size = _HEAD.unpack_from(data, 0)
    if version != VERSION:
        raise FormatError(f"unsupported container version {version}")
    try:
        method = Method(method_id)
    except ValueError:
        raise FormatError(f"unknown pipeline id {method_id}") from None
    if block_size == 0:
        raise FormatError("block size is zero")
    pos = _HEAD.size

    fingerprint = None
    if method.uses_dictionary:
        _need(data, pos, _FINGERPRINT.size, "dictionary fingerprint")
        (fingerprint,) = _FINGERPRINT.unpack_from(data, pos)
        pos += _FINGERPRINT.size

    _need(data, pos, _COUNTS.size, "stream counts")
    stream_length, nblocks = _COUNTS.unpack_from(data, pos)
    pos += _COUNTS.size
    if nblocks != -(-stream_length // block_size):
        raise FormatError(
            f"{nblocks} blocks cannot hold {stream_length} bytes at block size {block_size}")

    _need(data, pos, nblocks * _RECORD.size, "block records")
    blocks = []
    for i in range(nblocks):
        primary, length = _RECORD.unpack_from(data, pos)
        pos += _RECORD.size
        original = min(block_size, stream_length - i * block_size)
        if primary >= original:
            raise FormatError(f"block {i}: primary index {primary} out of range")
        blocks.append(BlockRecord(primary, length))

    payload = data[pos:]
    _need(payload, 0, huffman.HEADER_SIZE, "entropy header")
    (count,) = struct.unpack_from("<Q", payload, 256)
    if count != sum(b.payload_length for b in blocks):
        raise FormatError("block payload lengths overrun the entropy stream")
    try:
        decoded = huffman.huffman_decode(payload)
    except CorruptStreamError as e:
        raise FormatError(f"entropy payload is damaged or shorter than declared: {e}") from e
    return Container(method, block_size, fingerprint, stream_length, tuple(blocks), payload,
                     decoded=decoded)


def _need(data: bytes, pos: int, size: int, what: str):
    if len(data) < pos + size:
        raise FormatError(f"container truncated in {what}")


DUMP_NAMES = {
    Stage.DICT: "DICTIONARY.txt",
    Stage.BWT: "BWT.txt",
    Stage.MTF: "MTF.txt",
    Stage.RLE: "RLE.txt",
    Stage.HUF: "HUFFMAN.txt",
}


def _dump_stages(out_dir: Path, spec: PipelineSpec, transformed: bytes, entropy: bytes):
    out_dir.mkdir(parents=True, exist_ok=True)
    if spec.method.uses_dictionary:
        (out_dir / DUMP_NAMES[Stage.DICT]).write_bytes(transformed)
    if transformed:
        block = transformed[:spec.block_size]
        data = bwt_forward(block, spec.block_size).data
        (out_dir / DUMP_NAMES[Stage.BWT]).write_bytes(data)
        # A repeated stage keeps the output of its last occurrence.
        for stage in spec.block_chain:
            data = _ENCODERS[stage](data)
            (out_dir / DUMP_NAMES[stage]).write_bytes(data)
    (out_dir / DUMP_NAMES[Stage.HUF]).write_bytes(entropy)


def compress_bytes(data: bytes, spec: PipelineSpec, dictionary: Dictionary | None = None) -> bytes:
    return serialize(compress(data, spec, dictionary))


def decompress_bytes(data: bytes, dictionary: Dictionary | None = None) -> bytes:
    return decompress(parse(data), dictionary)
