# %% [markdown]
# # The four block stages, one at a time
#
# Each stage is a plain bytes-to-bytes function. Here we push a short block
# through BWT, move-to-front, run-length coding and Huffman coding, then undo
# everything.

# %%
from bwcadict import (bwt_forward, bwt_inverse, huffman_build, huffman_decode, huffman_encode,
                      mtf_decode, mtf_encode, rle_decode, rle_encode)

block = b"banana"
b = bwt_forward(block)
print("BWT:", b.data, "primary index", b.primary_index)
print("inverse:", bwt_inverse(b))

# %% [markdown]
# BWT groups equal contexts, so the output tends to contain runs. MTF turns
# runs into zeroes:

# %%
text = b"she sells sea shells by the sea shore, " * 2
last = bwt_forward(text, block_size=None).data
print(last)
ranks = mtf_encode(last)
print(list(ranks))
assert mtf_decode(ranks) == last

# %% [markdown]
# Run-length coding: a pair of equal bytes is followed by a count of extra
# copies.

# %%
runs = rle_encode(ranks)
print(f"{len(ranks)} -> {len(runs)} bytes:", list(runs))
assert rle_decode(runs) == ranks

# %% [markdown]
# Finally a static canonical Huffman code over the result. The payload starts
# with 256 code lengths and the symbol count.

# %%
from collections import Counter

table = huffman_build(Counter(runs))
for sym, (code, n) in sorted(table.codes().items(), key=lambda kv: kv[1][1]):
    print(f"{sym:3d} x{Counter(runs)[sym]:2d}  {code:0{n}b}")
payload = huffman_encode(runs)
print("payload bytes:", len(payload), "(264 of them header)")
assert huffman_decode(payload) == runs
