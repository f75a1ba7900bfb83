"""
Morphisms and their bouquets
============================

Each morphism gives a bouquet automaton with one cycle per letter.  Strong
unambiguity of the bouquet decides circularity; relative unambiguity on an
over-approximation of the shift gives a bounded recognizability check.
"""
from codedshifts.morphisms import (
    bouquet,
    fibonacci,
    incidence_matrix,
    is_circular_morphism,
    is_primitive,
    period_doubling,
    recognizability_bounded,
    thue_morse,
)

for m in (fibonacci(), thue_morse(), period_doubling()):
    print(m)
    print("  bouquet states:", bouquet(m).vertices)
    print("  incidence:", incidence_matrix(m).tolist(), "primitive:", is_primitive(m))
    print("  circular:", is_circular_morphism(m))
    for k in (2, 3):
        print(f"  window {k}:", recognizability_bounded(m, k).status)
