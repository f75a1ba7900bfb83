"""
Codes, circularity and the Dyck code
====================================

Unique decipherability with a double factorization as witness, circularity
with a conjugate pair, and constants of truncated Dyck codes.
"""
from codedshifts.codes import FiniteCode, dyck_code, is_circular, is_code, is_very_thin, star_min_automaton
from codedshifts.sync import find_constant

print(is_code(FiniteCode(["a", "ab", "ba"])))
print(is_circular(FiniteCode(["ab", "a"])))
print(is_circular(FiniteCode(["bab", "abba"])))
print(is_very_thin(FiniteCode(["a", "bb"])))

# a run of openers as deep as the truncation fixes the state
for depth in (2, 3):
    d = star_min_automaton(dyck_code(depth))
    print("depth", depth, ":", d.n_states, "states, constant", find_constant(d, 8))
