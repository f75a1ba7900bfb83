"""
Countable unambiguous presentations
===================================

A seed cut out of a finite strongly connected automaton lays words along the
integers.  Two constructions follow: a reversible one, and one that is also
strongly unambiguous.  Both are infinite, so only windows around the
basepoint are built and checked.
"""
from codedshifts.catalog import even_shift, golden_mean
from codedshifts.countable import check_window, construction, fiebig_seed, schedule, window

for base in (even_shift(), golden_mean()):
    seed = fiebig_seed(base)
    print("seed: u =", seed.u, " v =", seed.v, " w =", seed.w or "~")
    print("schedule:", schedule(seed, 3))
    for mode in ("reversible", "strong"):
        la = construction(seed, mode)
        for radius in (10, 100):
            w = window(la, radius)
            rep = check_window(w, base)
            print(f"  {mode:10s} radius {radius:3d}: {w.automaton.n_states:4d} states,",
                  f"deterministic={rep.deterministic} codeterministic={rep.codeterministic}",
                  f"pair cycles={rep.pair_cycles} foreign={len(rep.foreign)}")
