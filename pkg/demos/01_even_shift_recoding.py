"""
Recoding the even shift
=======================

The code {a, bb} codes the even shift, but the flower automaton reads a
bi-infinite run of b's in two ways.  A constant of the minimal automaton of
C* gives a new code C' whose flower is unambiguous on bi-infinite paths.
"""
from codedshifts import regex as rx
from codedshifts.codes import FiniteCode, is_circular, star_min_automaton
from codedshifts.sync import find_constant, recode_unambiguous
from codedshifts.unambiguity import is_strongly_unambiguous

c = FiniteCode(["a", "bb"])

# the flower automaton: unambiguous on finite words, not on bi-infinite ones
flower = c.flower
print("strongly unambiguous flower:", bool(is_strongly_unambiguous(flower)))
print("witness:", is_strongly_unambiguous(flower).witness.word)
print("circular:", is_circular(c))

# a constant merges every state of the minimal automaton of C*
d = star_min_automaton(c)
print("constant:", find_constant(d))

# first returns to the state entered after the constant
r = recode_unambiguous(c)
print("C' =", r.code)
print("same as (bb)*a:", rx.same_language(r.code, rx.parse_regex("(bb)*a")))
print("first words:", rx.shortest_words(r.code, 4))
