import pytest
from hypothesis import given
from hypothesis import strategies as st

from bwcadict import mtf_decode, mtf_encode
from oracles import naive_mtf


@pytest.mark.parametrize("plain, coded", [
    (bytes([97, 97, 97]), bytes([97, 0, 0])),
    (b"", b""),
    (bytes([0, 0, 1]), bytes([0, 0, 1])),
])
def test_examples(plain, coded):
    assert mtf_encode(plain) == coded
    assert mtf_decode(coded) == plain


def test_all_byte_values_once():
    data = bytes(range(255, -1, -1))
    assert list(mtf_encode(data)) == naive_mtf(data)
    assert mtf_encode(data) == bytes([255] * 256)


@given(st.binary(max_size=2000))
def test_matches_oracle(data):
    assert list(mtf_encode(data)) == naive_mtf(data)


@given(st.binary(max_size=2000))
def test_roundtrip(data):
    coded = mtf_encode(data)
    assert len(coded) == len(data)
    assert mtf_decode(coded) == data


@given(st.integers(0, 255), st.integers(1, 500))
def test_run_becomes_zeroes(byte, n):
    assert mtf_encode(bytes([byte]) * n) == bytes([byte]) + bytes(n - 1)
