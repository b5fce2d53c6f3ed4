# %% [markdown]
# # The test battery
#
# Chi-square uniformity, pair scatter, adjacent repetitions and LZ78
# phrase counting, on the raw sequence and on the permutation.

# %%
import json
from pathlib import Path

from tsf import KeyMatrix, analyze, generate_sequence, permutation_from_sequence
from tsf.formats import dumps_pairs, scatter_svg

key = KeyMatrix.from_rows([[1, 5, -6, 1], [2, 1, 3, 2], [3, -2, -3, 3], [4, 2, 4, 4]])
r = generate_sequence(key)
perm = permutation_from_sequence(r)

# %%
for name, seq in [("sequence", list(r)), ("permutation", list(perm.order))]:
    report = analyze(seq, 81).to_dict()
    report.pop("pair_points")
    print(name, json.dumps(report, indent=1))

# %% [markdown]
# With 81 symbols and 81 samples, every bin expects one hit, far below
# the usual five; the report flags it.

# %%
print(analyze(list(r), 81).small_expected_counts)

# %% [markdown]
# Non-overlapping pairs (r[0], r[1]), (r[2], r[3]), ... as a scatter.

# %%
report = analyze(list(r), 81)
out = Path("pairs")
out.with_suffix(".csv").write_text(dumps_pairs(report.pair_points))
out.with_suffix(".svg").write_text(scatter_svg(report.pair_points, 80))
print("wrote", out.with_suffix(".svg"), len(report.pair_points), "points")
