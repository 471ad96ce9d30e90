"""Corpus benchmark: compressed sizes, compression ratios and CSV reports."""

import csv
import io
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal, localcontext
from pathlib import Path

from .dictionary import Dictionary
from .errors import InvalidInputError, VerificationError
from .pipeline import Method, PipelineSpec, compress, decompress, parse, serialize

_CENT = Decimal("0.01")


def exact_ratio(original: int, compressed: int) -> Decimal:
    """Percentage saved, unrounded: (original - compressed) / original * 100."""
    if original < 1:
        raise InvalidInputError("original size must be at least one byte")
    with localcontext() as ctx:
        ctx.prec = 60
        return Decimal(original - compressed) * 100 / Decimal(original)


def compression_ratio(original: int, compressed: int) -> float:
    """Percentage saved, rounded half-up to two decimals.

    >>> compression_ratio(18000, 5916)
    67.13
    """
    return float(exact_ratio(original, compressed).quantize(_CENT, rounding=ROUND_HALF_UP))


@dataclass
class CorpusRun:
    """Sizes measured for every (file, method) pair.

    Ratios and averages are always derived from the sizes.
    """

    methods: list[Method]
    files: list[str] = field(default_factory=list)
    original: dict[str, int] = field(default_factory=dict)
    compressed: dict[tuple[str, Method], int] = field(default_factory=dict)

    def add(self, name: str, original: int, compressed: dict[Method, int]):
        if name in self.original:
            raise ValueError(f"duplicate file name {name!r}")
        self.files.append(name)
        self.original[name] = original
        for m in self.methods:
            self.compressed[name, m] = compressed[m]

    def ratio(self, name: str, method: Method) -> float:
        return compression_ratio(self.original[name], self.compressed[name, method])

    def average_original(self) -> float:
        return _mean(self.original[f] for f in self.files)

    def average_compressed(self, method: Method) -> float:
        return _mean(self.compressed[f, method] for f in self.files)

    def average_ratio(self, method: Method) -> float:
        return _mean(self.ratio(f, method) for f in self.files)


def _mean(values: Iterable[float]) -> float:
    values = list(values)
    if not values:
        raise ValueError("mean of an empty column")
    return sum(values) / len(values)


def measure(data: bytes, method: Method, dictionary: Dictionary | None = None,
            block_size: int | None = None, name: str = "<input>") -> int:
    """Compressed container size in bytes, after checking the roundtrip."""
    spec = PipelineSpec(method) if block_size is None else PipelineSpec(method, block_size)
    d = dictionary if method.uses_dictionary else None
    blob = serialize(compress(data, spec, d))
    try:
        restored = decompress(parse(blob), d)
    except Exception as e:
        raise VerificationError(f"{name}: {method.cli_name} failed to decompress: {e}") from e
    if restored != data:
        raise VerificationError(f"{name}: {method.cli_name} did not roundtrip")
    return len(blob)


def run_corpus(files: Sequence[str | Path], methods: Sequence[Method],
               dictionary: Dictionary | None = None,
               block_size: int | None = None) -> CorpusRun:
    """Compress every file with every method, verifying each roundtrip."""
    run = CorpusRun(list(methods))
    for path in files:
        path = Path(path)
        data = path.read_bytes()
        sizes = {m: measure(data, m, dictionary, block_size, name=path.name) for m in methods}
        run.add(path.name, len(data), sizes)
    return run


def _label(m: Method) -> str:
    return m.cli_name


def _write(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_report(run: CorpusRun) -> str:
    """Main table: one row per file plus an ``Avg`` row."""
    header = (["File", "OriginalSize"]
              + [f"CompressedSize[{_label(m)}]" for m in run.methods]
              + [f"CR[{_label(m)}]" for m in run.methods])
    rows = [header]
    for f in run.files:
        rows.append([f, run.original[f]]
                    + [run.compressed[f, m] for m in run.methods]
                    + [f"{run.ratio(f, m):.2f}" for m in run.methods])
    if run.files:
        rows.append(["Avg", f"{run.average_original():.1f}"]
                    + [f"{run.average_compressed(m):.1f}" for m in run.methods]
                    + [f"{run.average_ratio(m):.2f}" for m in run.methods])
    return _write(rows)


def figure_series(run: CorpusRun) -> dict[str, str]:
    """Data series for plotting, keyed by a short series name."""
    avg_sizes = [["Series", "AverageSize"]]
    compressed = [["File"] + [_label(m) for m in run.methods]]
    ratios = [["File"] + [_label(m) for m in run.methods]]
    avg_ratios = [["Method", "AverageCR"]]
    if run.files:
        avg_sizes.append(["original", f"{run.average_original():.1f}"])
        avg_sizes += [[_label(m), f"{run.average_compressed(m):.1f}"] for m in run.methods]
        avg_ratios += [[_label(m), f"{run.average_ratio(m):.2f}"] for m in run.methods]
    for f in run.files:
        compressed.append([f] + [run.compressed[f, m] for m in run.methods])
        ratios.append([f] + [f"{run.ratio(f, m):.2f}" for m in run.methods])
    return {
        "avg_sizes": _write(avg_sizes),
        "compressed_sizes": _write(compressed),
        "ratios": _write(ratios),
        "avg_ratios": _write(avg_ratios),
    }


def write_report(run: CorpusRun, path: str | Path) -> list[Path]:
    """Write the main CSV to ``path`` and each series next to it."""
    path = Path(path)
    path.write_text(render_report(run), newline="")
    written = [path]
    for key, text in figure_series(run).items():
        p = path.with_name(f"{path.stem}.{key}.csv")
        p.write_text(text, newline="")
        written.append(p)
    return written
