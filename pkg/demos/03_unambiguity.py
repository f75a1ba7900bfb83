"""
Unambiguity, strong and relative
================================

Finite-path unambiguity, unambiguity on bi-infinite paths, and unambiguity
restricted to a sofic shift of paths, on the even shift automaton.
"""
from codedshifts.catalog import even_sft_cover, even_shift
from codedshifts.unambiguity import edge_shift, is_strongly_unambiguous, is_unambiguous, unambiguous_on_sofic

a = even_shift()
print("unambiguous:", is_unambiguous(a))

# two bi-infinite paths read ...bbbb... shifted by one edge
s = is_strongly_unambiguous(a)
print("strong:", s.value, s.witness.kind, s.witness.word, s.witness.paths)

# on the shift of all paths the ambiguity comes back
v = unambiguous_on_sofic(a, edge_shift(a))
print("relative to all paths:", v.value, v.witness.word)
print("  rows:", v.witness.paths)

# on the SFT where every b-block is exactly bb and lies between a's, a is unambiguous
print("relative to the cover:", unambiguous_on_sofic(a, even_sft_cover()))
