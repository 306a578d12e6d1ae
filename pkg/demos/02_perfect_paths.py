"""
Perfect paths, annihilator sets and underlying cycles
=====================================================

A pair (p, q) is perfect when q is the unique minimal right annihilator of
p and p the unique minimal left annihilator of q.  Chasing successors
around until they close up yields the perfect paths; each closed sequence
winds around a primitive cycle of the quiver.
"""

from gpstable import (
    analyze,
    detect_overlap,
    is_perfect_pair,
    left_annihilators,
    right_annihilators,
)
from gpstable.fixtures import a2, lambda_star, loop

alg = lambda_star()
an = analyze(alg)
q = alg.quiver

# Annihilator sets first.  No relation mentions the bridge arrow, so its
# right annihilator set is empty and it generates a projective module.
a12 = q.path(["a1", "a2"])
print("R(a1.a2) =", [str(x) for x in right_annihilators(alg, a12)])
print("R(b2)   =", right_annihilators(alg, q.path(["b2"])))
print("L(a3)   =", [str(x) for x in left_annihilators(alg, q.path(["a3"]))])

# The perfect paths organise into minimal closed successor sequences.
print("\nperfect paths:", len(an.perfect.paths))
for seq in an.perfect.sequences:
    print("  cycle:", " -> ".join(map(str, seq)), "-> ...")

# Membership in a perfect pair is weaker than being a perfect path: this
# pair satisfies all three conditions, yet neither member closes up.
p, r = q.path(["a1"]), q.path(["a2", "a3", "a1", "a2", "a3", "a1", "a2"])
print("\n(a1, ...) perfect pair?", is_perfect_pair(alg, p, r))
print("a1 a perfect path?", p in an.perfect.successor)

# Each sequence's product is a power of a primitive cycle; the two
# three-cycle sequences share one class, the wild 45-cycle the other.
for cls in an.classes:
    print(f"class {cls.cycle}: {len(cls.members)} perfect paths")

# Overlaps witness non-trivial stable maps and always stay inside a class.
ov = detect_overlap(alg, q.path(["a1", "a2", "a3", "a1", "a2"]), q.path(["a3", "a1", "a2"]))
print("\noverlap:", ov.kind, "=", ov.left, "*", ov.middle, "*", ov.right)

# With no relations at all there is nothing perfect: the algebra is CM-free.
print("\nA2 CM-free?", analyze(a2()).perfect.cm_free)
print("loop x^4=0 perfect paths:", [str(p) for p in analyze(loop(3)).perfect.paths])
