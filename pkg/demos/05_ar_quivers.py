"""
Materialising Auslander-Reiten quivers and emitting DOT
=======================================================

The ungraded AR quiver of a class is a finite tube (ZA_m modulo the
translation period); the graded one is an infinite strip of which we
materialise a window.  DOT output renders irreducible maps solid and
translation pairs dashed, like the usual hand-drawn figures.
"""

from gpstable import analyze, emit, full_ungraded_ar_quiver, graded_ar_window, ungraded_ar_quiver
from gpstable.fixtures import lambda_star, nakayama

an = analyze(lambda_star())

for dec in an.decompositions:
    tq = ungraded_ar_quiver(an, dec)
    print(f"class {dec.anchored_cycle}: {len(tq.vertices)} vertices,",
          f"{len(tq.arrows)} arrows, identification {tq.identification}")

full = full_ungraded_ar_quiver(an)
print("\nunion:", len(full.vertices), "vertices")
print(emit(full, "dot").splitlines()[0], "... (DOT output, render with graphviz)")

# A graded window around shift zero; boundary vertices are flagged.
dec = an.decompositions[1]
window = graded_ar_window(an, dec, -2, 2)
flagged = sum(v.incomplete for v in window.vertices)
print(f"\ngraded window [-2, 2] of class {dec.anchored_cycle}:",
      f"{len(window.vertices)} vertices ({flagged} incomplete at the boundary)")

# Nakayama tubes are the textbook picture.
nak = analyze(nakayama(2, 2))
tube = full_ungraded_ar_quiver(nak)
print("\nN(2,2) tube:", len(tube.vertices), "vertices")
print(emit(tube, "dot"))
