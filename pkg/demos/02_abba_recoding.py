"""
Recoding {ab, ba}
=================

Both aa and bb are constants of the minimal automaton of {ab, ba}*.  The
default search keeps bb; passing the other constant gives another code.
"""
from codedshifts.automata import format_automaton
from codedshifts.codes import FiniteCode, is_circular, is_prefix_code, star_min_automaton
from codedshifts.sync import recode_unambiguous, shortest_constants

c = FiniteCode(["ab", "ba"])
d = star_min_automaton(c)
print("shortest constants:", [k.word for k in shortest_constants(d)])

r = recode_unambiguous(c)
print("constant", r.constant.word, "sink", r.constant.sink)
print("product states:", r.product.names)
print("anchor:", r.anchor_name)
print("C' =", r.code)

# the first-return automaton, anchor as state 0 of the component
print(format_automaton(r.first_return_automaton))

# C' is a circular prefix code; the original is not circular
print("C' prefix:", bool(is_prefix_code(r.code)), "C' circular:", bool(is_circular(r.code)))
print("C circular:", is_circular(c))

other = recode_unambiguous(c, constant="aa")
print("with aa: C' =", other.code)
