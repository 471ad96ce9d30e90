# %% [markdown]
# # Comparing the four pipelines
#
# * bwca: BWT, MTF, RLE, Huffman
# * proposed: BWT, RLE, MTF, RLE, Huffman
# * dict-bwca / dict-proposed: the same, after the dictionary stage

# %%
from pathlib import Path

from bwcadict import Method, PipelineSpec, compress, compression_ratio, decompress, parse, serialize
from bwcadict.dictionary import load_dictionary

DATA = Path(__file__).resolve().parent.parent / "data"
text = (DATA / "corpus" / "alice_ch07.txt").read_bytes()
d = load_dictionary((DATA / "english5000.dic").read_bytes())

for method in Method:
    spec = PipelineSpec(method)
    dictionary = d if method.uses_dictionary else None
    container = compress(text, spec, dictionary)
    blob = serialize(container)
    assert decompress(parse(blob), dictionary) == text
    print(f"{method.cli_name:14s} {len(text):6d} -> {len(blob):6d}  "
          f"CR {compression_ratio(len(text), len(blob)):6.2f}%  "
          f"{len(container.blocks)} blocks")

# %% [markdown]
# Block size matters: every block costs a 6-byte record and resets the
# move-to-front state. Larger blocks give BWT more context.

# %%
for block_size in (50, 100, 1000, 10000):
    blob = serialize(compress(text, PipelineSpec(Method.BWCA, block_size)))
    print(block_size, compression_ratio(len(text), len(blob)))
