# %% [markdown]
# # Benchmark reports
#
# First the arithmetic check: feeding published original and compressed sizes
# through the ratio formula. Then a real run over the bundled public-domain
# corpus, written as CSV files ready for plotting.

# %%
import tempfile
from pathlib import Path

from bwcadict import CorpusRun, Method, render_report, run_corpus
from bwcadict.bench import write_report
from bwcadict.dictionary import load_dictionary

published = {  # original, dict+bwca, dict+proposed
    "File1": (289, 144, 200), "File2": (626, 249, 256), "File3": (1193, 548, 495),
    "File4": (3341, 1638, 1678), "File5": (4609, 2613, 2625), "File6": (12420, 5353, 5408),
    "File7": (18000, 5916, 6128), "File8": (25808, 11180, 15535),
    "File9": (34908, 18771, 16254), "File10": (53329, 25391, 25952),
}
run = CorpusRun([Method.DICT_BWCA, Method.DICT_PROPOSED])
for name, (orig, a, b) in published.items():
    run.add(name, orig, {Method.DICT_BWCA: a, Method.DICT_PROPOSED: b})
print(render_report(run))
print(run.average_ratio(Method.DICT_BWCA), run.average_ratio(Method.DICT_PROPOSED))

# %%
DATA = Path(__file__).resolve().parent.parent / "data"
files = sorted((DATA / "corpus").glob("*.txt"))
d = load_dictionary((DATA / "english5000.dic").read_bytes())
run = run_corpus(files, list(Method), d)
print(render_report(run))

out = Path(tempfile.mkdtemp()) / "report.csv"
for path in write_report(run, out):
    print(path)
