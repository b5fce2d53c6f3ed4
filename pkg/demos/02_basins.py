# %% [markdown]
# # Basins and the permutation subkey
#
# The sequence r is a function on [0, 27).  Grouping indices that are
# linked by n -> r[n] gives the basins; listing them back to back is a
# permutation.

# %%
from tsf import KeyMatrix, basin_of, generate_sequence, invert, permutation_from_sequence, preimages

r = generate_sequence(KeyMatrix.from_rows([[2, 5, -6], [3, 1, 3], [4, -2, -3]]))

# %% [markdown]
# Indices that map to 0, and the breadth-first basin grown from 0.

# %%
print("preimages of 0:", preimages(r, 0))
visited = set()
print("basin of 0:", basin_of(r, 0, visited))

# %%
perm = permutation_from_sequence(r)
for b in perm.basins:
    print(len(b), b)
print("order:", perm.order)

# %% [markdown]
# Larger keys give larger permutations; the inverse undoes it.

# %%
key4 = KeyMatrix.from_rows([[1, 5, -6, 1], [2, 1, 3, 2], [3, -2, -3, 3], [4, 2, 4, 4]])
perm4 = permutation_from_sequence(generate_sequence(key4))
q = invert(perm4)
print(len(perm4.basins), "basins over", len(perm4), "indices")
print(all(q[x] == i for i, x in enumerate(perm4.order)))
