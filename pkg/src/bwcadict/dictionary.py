"""Word dictionary preprocessing.

Frequent words of four or more letters are replaced by short letter
codewords; every other letter run is written as ``*`` followed by the word.
Literal ``*`` and ``\\`` bytes outside words are backslash-escaped, which makes
the transform exactly reversible for arbitrary input bytes.
"""

import re
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import NamedTuple

from .errors import CorruptStreamError, FormatError

DEFAULT_CAPACITY = 5000
MIN_CODED_LENGTH = 4
DIGITS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
MAGIC = "BWCADICT"
FORMAT_VERSION = 1

LITERAL = ord("*")
ESCAPE = ord("\\")

_TOKEN_RE = re.compile(rb"[A-Za-z]+|[^A-Za-z]+")
_LETTER_RUN = re.compile(rb"[A-Za-z]+")
_PLAIN_RUN = re.compile(rb"[^A-Za-z*\\]+")
_WORD_LINE = re.compile(r"[A-Za-z]+")
_LETTERS = frozenset(DIGITS.encode("ascii"))


class TokenKind(Enum):
    WORD = "word"
    SEPARATOR = "separator"


class Token(NamedTuple):
    kind: TokenKind
    text: bytes


def tokenize(text: bytes) -> list[Token]:
    """Split into maximal runs of ASCII letters and of everything else."""
    return list(iter_tokens(text))


def iter_tokens(text: bytes) -> Iterator[Token]:
    for m in _TOKEN_RE.finditer(text):
        chunk = m.group()
        kind = TokenKind.WORD if chunk[0] in _LETTERS else TokenKind.SEPARATOR
        yield Token(kind, chunk)


def codeword_for_index(i: int) -> str:
    """Bijective base-52 enumeration: a..z, A..Z, aa, ab, ..., ZZ, aaa, ...

    Shorter codewords come first, and within one length the most significant
    digit leads.
    """
    if i < 0:
        raise ValueError("codeword index must be non-negative")
    length = 1
    span = len(DIGITS)
    while i >= span:
        i -= span
        length += 1
        span *= len(DIGITS)
    digits = []
    for _ in range(length):
        i, d = divmod(i, len(DIGITS))
        digits.append(DIGITS[d])
    return "".join(reversed(digits))


def fnv1a_64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h ^= byte
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def _order_key(entry: tuple[str, int]):
    word, freq = entry
    return (-len(word), -freq, word.encode("ascii"))


@dataclass(frozen=True)
class Dictionary:
    """Ordered word list with codewords for the entries of four letters or more.

    ``entries`` must already be in canonical order (longest first, then most
    frequent, then bytewise); use :func:`build_dictionary` to construct one
    from text.
    """

    entries: tuple[tuple[str, int], ...] = ()
    codewords: dict[str, str] = field(init=False, repr=False, compare=False)
    words_by_codeword: dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        codewords = {}
        index = 0
        for word, _ in self.entries:
            if len(word) >= MIN_CODED_LENGTH:
                codewords[word] = codeword_for_index(index)
                index += 1
        object.__setattr__(self, "codewords", codewords)
        object.__setattr__(self, "words_by_codeword", {c: w for w, c in codewords.items()})

    def __len__(self):
        return len(self.entries)

    def __contains__(self, word):
        return word in self.frequencies

    @property
    def words(self) -> list[str]:
        return [w for w, _ in self.entries]

    @cached_property
    def frequencies(self) -> dict[str, int]:
        return dict(self.entries)

    @cached_property
    def fingerprint(self) -> int:
        return fnv1a_64(save_dictionary(self))


@dataclass
class UnknownWordLog:
    """Words met during encoding that the dictionary does not contain."""

    counts: Counter = field(default_factory=Counter)

    def add(self, word: str, n: int = 1):
        self.counts[word] += n

    @property
    def entries(self) -> list[tuple[str, int]]:
        return list(self.counts.items())

    def __len__(self):
        return len(self.counts)

    def __bool__(self):
        return bool(self.counts)


def _from_counts(counts: Mapping[str, int], capacity: int) -> Dictionary:
    if capacity < 1:
        raise ValueError("dictionary capacity must be at least 1")
    ranked = sorted(counts.items(), key=lambda e: (-e[1], e[0].encode("ascii")))
    kept = [e for e in ranked[:capacity] if e[1] > 0]
    return Dictionary(tuple(sorted(kept, key=_order_key)))


def count_words(corpora: Iterable[bytes]) -> Counter:
    counts = Counter()
    for text in corpora:
        counts.update(t.text.decode("ascii") for t in iter_tokens(text)
                      if t.kind is TokenKind.WORD)
    return counts


def build_dictionary(corpora: Iterable[bytes], capacity: int = DEFAULT_CAPACITY) -> Dictionary:
    """Keep the ``capacity`` most frequent words across ``corpora``."""
    return _from_counts(count_words(corpora), capacity)


def update_dictionary(d: Dictionary, log: UnknownWordLog,
                      capacity: int = DEFAULT_CAPACITY) -> Dictionary:
    """Merge logged unknown words into ``d`` and reselect the top entries."""
    counts = Counter(d.frequencies)
    counts.update(log.counts)
    return _from_counts(counts, capacity)


def dict_encode(text: bytes, d: Dictionary) -> tuple[bytes, UnknownWordLog]:
    out = bytearray()
    log = UnknownWordLog()
    codewords = d.codewords
    known = d.frequencies
    for kind, chunk in iter_tokens(text):
        if kind is TokenKind.WORD:
            word = chunk.decode("ascii")
            code = codewords.get(word)
            if code is not None:
                out += code.encode("ascii")
            else:
                out.append(LITERAL)
                out += chunk
                if word not in known:
                    log.add(word)
        else:
            if LITERAL in chunk or ESCAPE in chunk:
                chunk = chunk.replace(b"\\", b"\\\\").replace(b"*", b"\\*")
            out += chunk
    return bytes(out), log


def dict_decode(transformed: bytes, d: Dictionary) -> bytes:
    out = bytearray()
    words = d.words_by_codeword
    n = len(transformed)
    i = 0
    while i < n:
        b = transformed[i]
        if b == ESCAPE:
            if i + 1 >= n:
                raise CorruptStreamError("dangling escape byte at end of stream")
            if transformed[i + 1] not in (LITERAL, ESCAPE):
                raise CorruptStreamError(f"invalid escape sequence at offset {i}")
            out.append(transformed[i + 1])
            i += 2
        elif b == LITERAL:
            m = _LETTER_RUN.match(transformed, i + 1)
            if m is None:
                raise CorruptStreamError(f"literal marker at offset {i} not followed by a word")
            out += m.group()
            i = m.end()
        elif b in _LETTERS:
            m = _LETTER_RUN.match(transformed, i)
            word = words.get(m.group().decode("ascii"))
            if word is None:
                raise CorruptStreamError(f"unknown codeword {m.group()!r} at offset {i}")
            out += word.encode("ascii")
            i = m.end()
        else:
            m = _PLAIN_RUN.match(transformed, i)
            out += m.group()
            i = m.end()
    return bytes(out)


def save_dictionary(d: Dictionary) -> bytes:
    """Serialize to the text format: a header line, then ``word<TAB>frequency`` lines."""
    lines = [f"{MAGIC} {FORMAT_VERSION} {len(d.entries)}"]
    lines += [f"{word}\t{freq}" for word, freq in d.entries]
    return ("\n".join(lines) + "\n").encode("ascii")


def load_dictionary(data: bytes) -> Dictionary:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as e:
        raise FormatError("dictionary file is not ASCII") from e
    if not text.endswith("\n"):
        raise FormatError("dictionary file must end with a newline")
    lines = text[:-1].split("\n")
    header = lines[0].split(" ")
    if len(header) != 3 or header[0] != MAGIC or header[1] != str(FORMAT_VERSION):
        raise FormatError(f"bad dictionary header {lines[0]!r}")
    try:
        count = int(header[2])
    except ValueError:
        raise FormatError(f"bad entry count {header[2]!r}") from None
    body = lines[1:]
    if len(body) != count:
        raise FormatError(f"header declares {count} entries, file has {len(body)}")

    entries = []
    for lineno, line in enumerate(body, start=2):
        word, sep, freq = line.partition("\t")
        if not sep or not _WORD_LINE.fullmatch(word) or not freq.isdigit() or int(freq) < 1:
            raise FormatError(f"line {lineno}: malformed entry {line!r}")
        entries.append((word, int(freq)))
    if len({w for w, _ in entries}) != len(entries):
        raise FormatError("duplicate word in dictionary")
    if entries != sorted(entries, key=_order_key):
        raise FormatError("dictionary entries are not in canonical order")
    return Dictionary(tuple(entries))


def save_unknown_log(log: UnknownWordLog) -> bytes:
    return "".join(f"{w}\t{c}\n" for w, c in log.entries).encode("ascii")


def load_unknown_log(data: bytes) -> UnknownWordLog:
    log = UnknownWordLog()
    for lineno, line in enumerate(data.decode("ascii").splitlines(), start=1):
        word, sep, count = line.partition("\t")
        if not sep or not _WORD_LINE.fullmatch(word) or not count.isdigit() or int(count) < 1:
            raise FormatError(f"line {lineno}: malformed log entry {line!r}")
        log.add(word, int(count))
    return log

