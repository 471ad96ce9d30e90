# %% [markdown]
# # Dictionary preprocessing
#
# Words of four letters or more that appear in the dictionary become short
# letter codewords. Everything else that is a word gets a `*` prefix so the
# decoder can tell it apart from a codeword.

# %%
from pathlib import Path

from bwcadict import (build_dictionary, codeword_for_index, dict_decode, dict_encode,
                      save_dictionary, update_dictionary)

DATA = Path(__file__).resolve().parent.parent / "data"

print([codeword_for_index(i) for i in (0, 1, 25, 26, 51, 52, 53, 2755, 2756)])

# %%
sources = sorted((DATA / "dict_sources").glob("*.txt"))
d = build_dictionary(p.read_bytes() for p in sources)
print(len(d), "entries,", len(d.codewords), "with codewords")
print("longest entries:", d.words[:5])
print("fingerprint: %016x" % d.fingerprint)

# %%
sentence = b"Alice was beginning to get very tired of sitting by her sister on the bank"
coded, unknown = dict_encode(sentence, d)
print(coded)
print(f"{len(sentence)} -> {len(coded)} bytes before any compression")
print("not in dictionary:", unknown.entries)
assert dict_decode(coded, d) == sentence

# %% [markdown]
# Unknown words can be folded back into the dictionary. At full capacity a
# word seen once cannot displace anything, so make room first. Updating
# changes the fingerprint: containers written with the old dictionary need the
# old file to decompress.

# %%
print("Alice" in update_dictionary(d, unknown))
d2 = update_dictionary(d, unknown, capacity=len(d) + len(unknown))
print("Alice" in d2, d2.codewords.get("Alice"), "%016x" % d2.fingerprint)
print(save_dictionary(d2)[:60])
