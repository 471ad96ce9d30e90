"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 verification
failure.
"""

import argparse
import sys
from pathlib import Path

from . import bench, pipeline
from .bwt import DEFAULT_BLOCK_SIZE
from .dictionary import (DEFAULT_CAPACITY, build_dictionary, load_dictionary,
                         load_unknown_log, save_dictionary, save_unknown_log,
                         update_dictionary)
from .errors import (CompressionError, ConfigurationError, InvalidInputError,
                     VerificationError)
from .pipeline import Method, PipelineSpec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3

METHOD_NAMES = [m.cli_name for m in Method]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _method_list(text):
    try:
        return [Method.from_name(s.strip()) for s in text.split(",") if s.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = _Parser(prog="bwcadict", formatter_class=fmt,
                     description="Compress text with block-sorting pipelines.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build-dict", help="build a word dictionary from corpus files",
                       formatter_class=fmt)
    p.add_argument("corpus", nargs="+", type=Path)
    p.add_argument("-o", "--output", required=True, type=Path)
    p.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY, help="maximum entries")

    p = sub.add_parser("compress", help="compress a file", formatter_class=fmt)
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", required=True, type=Path)
    p.add_argument("--method", choices=METHOD_NAMES, default="bwca", help="pipeline")
    p.add_argument("--dict", type=Path, help="dictionary file, for the dict-* methods")
    p.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE, help="BWT block size")
    p.add_argument("--dump-stages", action="store_true",
                   help="write per-stage outputs of the first block next to the output")
    p.add_argument("--unknown-log", type=Path,
                   help="write words missing from the dictionary to this file")

    p = sub.add_parser("decompress", help="decompress a file", formatter_class=fmt)
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", required=True, type=Path)
    p.add_argument("--dict", type=Path)

    p = sub.add_parser("bench", help="measure compression ratios over a directory",
                       formatter_class=fmt)
    p.add_argument("directory", type=Path)
    p.add_argument("--methods", type=_method_list, default=[Method.BWCA],
                   help="comma-separated list of " + ", ".join(METHOD_NAMES))
    p.add_argument("--dict", type=Path)
    p.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE, help="BWT block size")
    p.add_argument("-o", "--output", required=True, type=Path, help="report CSV path")

    p = sub.add_parser("verify", help="check that a file roundtrips", formatter_class=fmt)
    p.add_argument("input", type=Path)
    p.add_argument("--method", choices=METHOD_NAMES, default="bwca", help="pipeline")
    p.add_argument("--dict", type=Path, help="dictionary file, for the dict-* methods")
    p.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE, help="BWT block size")

    p = sub.add_parser("update-dict", help="merge an unknown-word log into a dictionary",
                       formatter_class=fmt)
    p.add_argument("dictionary", type=Path)
    p.add_argument("unknown_log", type=Path)
    p.add_argument("-o", "--output", required=True, type=Path)
    p.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY, help="maximum entries")
    return parser


def _load_dict(path):
    return None if path is None else load_dictionary(path.read_bytes())


def _spec(args) -> PipelineSpec:
    method = Method.from_name(args.method)
    if method.uses_dictionary and args.dict is None:
        raise UsageError(f"--method {args.method} requires --dict")
    if not method.uses_dictionary and args.dict is not None:
        raise UsageError(f"--method {args.method} does not take --dict")
    try:
        return PipelineSpec(method, args.block_size)
    except InvalidInputError as e:
        raise UsageError(str(e)) from None


def cmd_build_dict(args):
    if args.capacity < 1:
        raise UsageError("--capacity must be at least 1")
    d = build_dictionary((p.read_bytes() for p in args.corpus), args.capacity)
    args.output.write_bytes(save_dictionary(d))


def cmd_compress(args):
    spec = _spec(args)
    d = _load_dict(args.dict)
    data = args.input.read_bytes()
    dump_dir = args.output.parent if args.dump_stages else None
    c = pipeline.compress(data, spec, d, dump_dir=dump_dir)
    blob = pipeline.serialize(c)
    try:
        ok = pipeline.decompress(pipeline.parse(blob), d) == data
    except CompressionError as e:
        raise VerificationError(f"{args.input}: {e}") from e
    if not ok:
        raise VerificationError(f"{args.input}: container does not roundtrip")
    args.output.write_bytes(blob)
    if args.unknown_log is not None:
        args.unknown_log.write_bytes(save_unknown_log(c.unknown_words) if c.unknown_words else b"")


def cmd_decompress(args):
    d = _load_dict(args.dict)
    c = pipeline.parse(args.input.read_bytes())
    if c.method.uses_dictionary and d is None:
        raise UsageError(f"{args.input} was compressed with a dictionary; pass --dict")
    args.output.write_bytes(pipeline.decompress(c, d))


def cmd_bench(args):
    if not args.methods:
        raise UsageError("--methods is empty")
    if any(m.uses_dictionary for m in args.methods) and args.dict is None:
        raise UsageError("dictionary methods require --dict")
    d = _load_dict(args.dict)
    files = sorted(p for p in args.directory.iterdir() if p.is_file())
    run = bench.run_corpus(files, args.methods, d, args.block_size)
    bench.write_report(run, args.output)


def cmd_verify(args):
    spec = _spec(args)
    d = _load_dict(args.dict)
    data = args.input.read_bytes()
    try:
        blob = pipeline.serialize(pipeline.compress(data, spec, d))
        restored = pipeline.decompress(pipeline.parse(blob), d)
    except CompressionError as e:
        raise VerificationError(f"{args.input}: {e}") from e
    if restored != data:
        raise VerificationError(f"{args.input}: {spec.method.cli_name} does not roundtrip")
    print(f"{args.input}: ok ({len(data)} -> {len(blob)} bytes)")


def cmd_update_dict(args):
    d = load_dictionary(args.dictionary.read_bytes())
    log = load_unknown_log(args.unknown_log.read_bytes())
    args.output.write_bytes(save_dictionary(update_dictionary(d, log, args.capacity)))


COMMANDS = {
    "build-dict": cmd_build_dict,
    "compress": cmd_compress,
    "decompress": cmd_decompress,
    "bench": cmd_bench,
    "verify": cmd_verify,
    "update-dict": cmd_update_dict,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        COMMANDS[args.command](args)
    except (UsageError, ConfigurationError) as e:
        parser.print_usage(sys.stderr)
        print(f"bwcadict: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as e:
        print(f"bwcadict: verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (OSError, CompressionError, UnicodeDecodeError) as e:
        print(f"bwcadict: error: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
