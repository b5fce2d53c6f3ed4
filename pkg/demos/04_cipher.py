# %% [markdown]
# # Encrypting with the permutation subkey
#
# Symbol p at position i becomes P[(p + i) mod 27].

# %%
from tsf import KeyMatrix, decode_text, decrypt, encode_text, encrypt, generate_sequence, permutation_from_sequence
from tsf import random_key

subkey = permutation_from_sequence(generate_sequence(KeyMatrix.from_rows([[2, 5, -6], [3, 1, 3], [4, -2, -3]])))

plain = encode_text("ATTACK AT DAWN")
cipher = encrypt(plain, subkey)
print(plain.symbols)
print(cipher.symbols, repr(decode_text(cipher)))
print(repr(decode_text(decrypt(cipher, subkey))))

# %% [markdown]
# Repeated plaintext letters do not repeat in the ciphertext.

# %%
print(decode_text(encrypt(encode_text("A" * 27), subkey)))

# %% [markdown]
# A reproducible key from a seed, then the same round trip.

# %%
key = random_key(seed=2024, digits=3)
print(key.entries)
sk = permutation_from_sequence(generate_sequence(key))
print(decode_text(decrypt(encrypt(plain, sk), sk)))
