"""
Sending a secret word as a list of fractions
============================================

Sender and receiver share a braiding matrix and a merging diagram. The
sender scales a decoy for every word of a window by the inverse braiding
scalar of that word against a hidden merged word. The receiver undoes it,
and exactly one decoy comes back as 1.
"""

from fractions import Fraction

from qdesign import cipher, fixtures

# The three-word example, small enough to follow by hand.
key = fixtures.load_key("window3")
print("hidden word:", key.word)
cg = cipher.encode(key, 1, multipliers=[None, 5, Fraction(7, 2)])
print("sent:", [str(c) for c in cg.coefficients])
print("unmasked:", [str(d) for d in cipher.unmask(key, cg)])
print("decoded index:", cipher.decode(key, cg))

# A full-size key over twenty words with a ten-word window.
words = fixtures.load_vocabulary("words")
key = cipher.keygen(20, 10, seed=2024)
s = cipher.word_index(key, words, "harbor")
cg = cipher.encode(key, s, seed=7)
print(cipher.serialize_cryptogram(cg).splitlines()[3][:60], "...")
print("received:", cipher.plaintext(key, words, cipher.decode(key, cg)))
