"""Exit criteria. Each test is tagged with its criterion number; a PASS/FAIL
line per criterion is printed in the pytest terminal summary."""

import random
import time
from pathlib import Path

import pytest

from bwcadict import (BwtBlock, Method, PipelineSpec, build_dictionary, bwt_forward,
                      bwt_inverse, codeword_for_index, compress, compression_ratio,
                      decompress, dict_encode, huffman_build, load_dictionary, mtf_decode,
                      mtf_encode, parse, rle_decode, rle_encode, serialize)
from bwcadict.bench import exact_ratio, run_corpus
from oracles import all_strings, naive_bwt, optimal_length_sets
from published_sizes import AVERAGES, ROWS

DATA = Path(__file__).parent.parent / "data"
CORPUS = sorted((DATA / "corpus").glob("*.txt"))
DICT_SOURCES = sorted((DATA / "dict_sources").glob("*.txt"))


@pytest.fixture(scope="module")
def sample_dictionary():
    return build_dictionary(p.read_bytes() for p in DICT_SOURCES)


def random_input(rng: random.Random, vocabulary: list[bytes]) -> bytes:
    n = rng.randint(0, 5000)
    kind = rng.random()
    if kind < 0.4:
        parts = []
        size = 0
        while size < n:
            r = rng.random()
            if r < 0.7:
                part = rng.choice(vocabulary)
            elif r < 0.85:
                part = rng.choice([b" ", b", ", b".\n", b"\r\n", b" * ", b"\\", b"--", b"'"])
            else:
                part = bytes(rng.choice(b"abcdefghijklmnopqrstuvwxyzABCXYZ")
                             for _ in range(rng.randint(1, 12)))
            parts.append(part)
            size += len(part)
        return b"".join(parts)[:n]
    if kind < 0.7:
        return rng.randbytes(n)
    # low-entropy binary: long runs of a few byte values
    out = bytearray()
    while len(out) < n:
        out += bytes([rng.choice(b"\x00\x01\xfe\xff*a")]) * rng.randint(1, 400)
    return bytes(out[:n])


@pytest.mark.acceptance(1, "lossless roundtrip: 1000 random inputs x 4 pipelines, < 2 min")
def test_lossless_contract(sample_dictionary):
    rng = random.Random(20240601)
    vocabulary = [w.encode() for w in sample_dictionary.words[:2000]]
    inputs = [random_input(rng, vocabulary) for _ in range(1000)]
    assert {len(x) for x in inputs} <= set(range(5001))

    start = time.perf_counter()
    mismatches = []
    for i, data in enumerate(inputs):
        for method in Method:
            d = sample_dictionary if method.uses_dictionary else None
            blob = serialize(compress(data, PipelineSpec(method), d))
            if decompress(parse(blob), d) != data:
                mismatches.append((i, method.cli_name))
    elapsed = time.perf_counter() - start
    print(f"criterion 1: {len(inputs) * 4} roundtrips in {elapsed:.1f}s")
    assert mismatches == []
    assert elapsed < 120


@pytest.mark.acceptance(2, "BWT matches rotation-sort oracle on all 9840 {a,b,c} strings")
def test_bwt_oracle_equivalence():
    count = 0
    for s in all_strings(b"abc", 8, min_len=1):
        last, primary = naive_bwt(s)
        b = bwt_forward(s)
        assert b == BwtBlock(last, primary), s
        assert bwt_inverse(b) == s, s
        count += 1
    assert count == 9840


@pytest.mark.acceptance(3, "published ratio table and averages reproduce from its stated sizes")
def test_table_arithmetic():
    cr_a, cr_b = [], []
    for name, (orig, comp_a, comp_b, pub_a, pub_b) in ROWS.items():
        for comp, pub, col in ((comp_a, pub_a, cr_a), (comp_b, pub_b, cr_b)):
            assert abs(float(exact_ratio(orig, comp)) - pub) <= 0.005, name
            assert compression_ratio(orig, comp) == pub, name
            col.append(compression_ratio(orig, comp))
    assert len(cr_a) + len(cr_b) == 20

    avg_orig, avg_a, avg_b, avg_cr_a, avg_cr_b = AVERAGES
    mean = lambda xs: sum(xs) / len(xs)
    assert abs(mean(cr_a) - avg_cr_a) <= 0.05
    assert abs(mean(cr_b) - avg_cr_b) <= 0.05
    assert abs(mean([r[0] for r in ROWS.values()]) - avg_orig) <= 0.05
    assert abs(mean([r[1] for r in ROWS.values()]) - avg_a) <= 0.05
    assert abs(mean([r[2] for r in ROWS.values()]) - avg_b) <= 0.05


@pytest.mark.acceptance(4, "codeword enumeration anchors")
def test_codeword_anchors():
    expected = {0: "a", 25: "z", 26: "A", 51: "Z", 52: "aa", 2755: "ZZ", 2756: "aaa"}
    assert {i: codeword_for_index(i) for i in expected} == expected


@pytest.mark.acceptance(5, "capacity-5000 dictionary: codewords <= 3 letters, coded words shrink")
@pytest.mark.parametrize("source", ["dict_sources", "corpus"])
def test_precompression(source):
    files = DICT_SOURCES if source == "dict_sources" else CORPUS
    d = build_dictionary((p.read_bytes() for p in files), capacity=5000)
    assert len(d) <= 5000
    assert d.codewords
    for word, code in d.codewords.items():
        assert len(code) <= 3
        encoded, _ = dict_encode(word.encode(), d)
        assert encoded == code.encode()
        assert len(encoded) < len(word)


@pytest.mark.acceptance(6, "public-domain corpus: avg CR dict-bwca > bwca, all four positive")
def test_directional_claim():
    assert len(CORPUS) >= 10
    assert all(p.stat().st_size >= 4096 for p in CORPUS)
    d = load_dictionary((DATA / "english5000.dic").read_bytes())
    assert d == build_dictionary(p.read_bytes() for p in DICT_SOURCES)
    run = run_corpus(CORPUS, list(Method), d)
    averages = {m: run.average_ratio(m) for m in Method}
    print("criterion 6: " + ", ".join(f"{m.cli_name}={v:.2f}%" for m, v in averages.items()))
    assert averages[Method.DICT_BWCA] > averages[Method.BWCA]
    assert all(v > 0 for v in averages.values())


@pytest.mark.acceptance(7, "Huffman: Kraft equality, prefix-free, monotone, optimal for <= 4 symbols")
def test_entropy_coder_soundness():
    rng = random.Random(7)
    small = 0
    for _ in range(1000):
        k = rng.choice([1, 2, 3, 4, rng.randint(1, 256)])
        symbols = rng.sample(range(256), k)
        hi = rng.choice([3, 100, 10**6])
        freqs = {s: rng.randint(1, hi) for s in symbols}
        t = huffman_build(freqs)

        if k >= 2:
            assert t.kraft_sum() == 1
        words = sorted(format(c, f"0{n}b") for c, n in t.codes().values())
        # in sorted order a prefix would sit directly before a word it prefixes
        assert all(not b.startswith(a) for a, b in zip(words, words[1:]))
        for x in symbols:
            for y in symbols:
                if freqs[x] > freqs[y]:
                    assert t.lengths[x] <= t.lengths[y]

        if k <= 4:
            small += 1
            cost, optima = optimal_length_sets(freqs)
            got = tuple(t.lengths[s] for s in sorted(freqs))
            assert got in optima
            assert sum(freqs[s] * t.lengths[s] for s in freqs) == cost
    assert small > 100


@pytest.mark.acceptance(8, "MTF and RLE identity: exhaustive length <= 6 on 4 symbols + 1000 random 1 KB")
def test_stage_roundtrips():
    strings = list(all_strings(b"\x00\x01ab", 6, min_len=1))
    assert len(strings) == 5460
    for s in strings + [b""]:
        assert mtf_decode(mtf_encode(s)) == s
        assert rle_decode(rle_encode(s)) == s

    rng = random.Random(8)
    for i in range(1000):
        if i % 2:
            data = rng.randbytes(1024)
        else:
            data = bytes(rng.choice(b"\x00\x00\x00ab") for _ in range(1024))
        assert mtf_decode(mtf_encode(data)) == data
        assert rle_decode(rle_encode(data)) == data
