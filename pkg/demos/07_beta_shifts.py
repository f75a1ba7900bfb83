"""
Beta-shifts
===========

The generating sequence of a beta-shift folds into a finite automaton when it
is eventually periodic.  Admissible words are those whose suffixes never
exceed the sequence.
"""
from codedshifts.automata import to_dot
from codedshifts.countable import BetaSpec, beta_admissible, beta_automaton

golden = BetaSpec.from_expansion((1, 1))
print("golden ratio:", golden)
print(to_dot(beta_automaton(golden)))
print("0110 admissible:", beta_admissible("0110", golden))
print("0101 admissible:", beta_admissible("0101", golden))

# a preperiodic sequence 2 1 1 1 ...
spec = BetaSpec((2,), (1,))
a = beta_automaton(spec)
print(a.n_states, "states;", sorted(w for w in ("21", "22", "12", "211") if beta_admissible(w, spec)))
