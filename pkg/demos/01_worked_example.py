# %% [markdown]
# # From index to subkey value
#
# Walk the 3x3 key through every stage of the transform and look at
# the intermediate tables.

# %%
import numpy as np

from tsf import KeyMatrix, generate_sequence, row_transform, sign, to_balanced_digits
from tsf.sequence import balanced_matrix, product_matrix, sign_matrix

key = KeyMatrix.from_rows([[2, 5, -6], [3, 1, 3], [4, -2, -3]])
key.entries

# %% [markdown]
# One index by hand: 16 is 121 in base 3, which becomes (0, 1, 0) after
# the shift.  Each output component is the dot product with one key row.

# %%
t = to_balanced_digits(16, 3)
prod = row_transform(t, key)
digits = [sign(x) + 1 for x in prod]
print(t, prod, digits, "->", digits[0] * 9 + digits[1] * 3 + digits[2])

# %% [markdown]
# All 27 indices at once.  Columns: balanced digits | product | sign.

# %%
table = np.hstack([balanced_matrix(3), product_matrix(key), sign_matrix(key)])
for n, row in enumerate(table):
    print(f"{n:2d}  " + " ".join(f"{v:4d}" for v in row))

# %% [markdown]
# Reading the shifted signs as base-3 numbers gives the subkey sequence.

# %%
r = generate_sequence(key)
print(list(r))
print("distinct values:", r.distinct_values(), " fixed points:", r.fixed_points())

# %% [markdown]
# Complement symmetry: the balanced digits of 26 - n are the negation of
# those of n, so the signs flip and r[26 - n] = 26 - r[n].

# %%
print(all(r[26 - n] == 26 - r[n] for n in range(27)))
