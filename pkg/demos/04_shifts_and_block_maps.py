"""
Sofic shifts and a factor map
=============================

The golden mean shift without aa maps onto the even shift by the 2-block map
ab, ba -> a and bb -> b.
"""
from codedshifts.catalog import golden_mean_no_aa
from codedshifts.codes import FiniteCode
from codedshifts.shifts import apply_block_map, is_irreducible, parse_block_map, same_shift, sft_from_forbidden

f = parse_block_map("ab -> a\nba -> a\nbb -> b\n")
y = apply_block_map(golden_mean_no_aa(), f)
print("image states:", y.presentation.names)
print("image = flower of {b, aa}:", same_shift(y, FiniteCode(["b", "aa"]).flower))
print("irreducible:", bool(is_irreducible(y)))

# the same domain given by its forbidden word
x = sft_from_forbidden({"aa"}, "ab")
print("SFT = golden mean without aa:", same_shift(x, golden_mean_no_aa()))
print("words of length 4:", sorted(x.language(4)))
