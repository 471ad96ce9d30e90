import pytest
from hypothesis import given
from hypothesis import strategies as st

from bwcadict import BwtBlock, InvalidInputError, bwt_forward, bwt_inverse
from oracles import all_strings, naive_bwt


@pytest.mark.parametrize("text, last, primary", [
    (b"banana", b"nnbaaa", 3),
    (b"a", b"a", 0),
    (b"aaaa", b"aaaa", 0),
])
def test_forward_examples(text, last, primary):
    assert bwt_forward(text) == BwtBlock(last, primary)


@pytest.mark.parametrize("last, primary, text", [
    (b"nnbaaa", 3, b"banana"),
    (b"a", 0, b"a"),
    (b"aaaa", 0, b"aaaa"),
])
def test_inverse_examples(last, primary, text):
    assert bwt_inverse(BwtBlock(last, primary)) == text


def test_empty_block_rejected():
    with pytest.raises(InvalidInputError):
        bwt_forward(b"")


def test_oversized_block_rejected():
    with pytest.raises(InvalidInputError):
        bwt_forward(b"x" * 101)
    assert bwt_forward(b"x" * 101, block_size=None).data == b"x" * 101


@pytest.mark.parametrize("primary", [-1, 6, 100])
def test_inverse_rejects_bad_primary(primary):
    with pytest.raises(InvalidInputError):
        bwt_inverse(BwtBlock(b"nnbaaa", primary))


def test_matches_oracle_on_short_binary_strings():
    for s in all_strings(b"\x00\x01\xff", 6, min_len=1):
        assert bwt_forward(s) == BwtBlock(*naive_bwt(s))


def test_periodic_block_inverts_from_any_equal_rotation():
    # rows 0 and 1 both hold the rotation "abab"
    b = bwt_forward(b"abab")
    assert b == BwtBlock(b"bbaa", 0)
    assert bwt_inverse(BwtBlock(b.data, 1)) == b"abab"


@given(st.binary(min_size=1, max_size=100))
def test_roundtrip(block):
    b = bwt_forward(block)
    assert len(b.data) == len(block)
    assert sorted(b.data) == sorted(block)
    assert 0 <= b.primary_index < len(block)
    assert bwt_inverse(b) == block
