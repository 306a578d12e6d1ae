"""Frozen edge sets for the fixture algebra's stable AR quiver.

Vertices are written as underlying paths rather than bracket labels so the
comparison does not depend on the rotation anchor of the cycle.
"""

THREE_CYCLE_ARROWS = {
    ("a1.a2.a3.a1.a2.a3", "a1.a2.a3.a1.a2"),
    ("a1.a2.a3.a1.a2", "a1.a2.a3"),
    ("a1.a2.a3.a1.a2", "a3.a1.a2.a3.a1.a2"),
    ("a1.a2.a3", "a1.a2"),
    ("a1.a2.a3", "a3.a1.a2.a3"),
    ("a1.a2", "a3.a1.a2"),
    ("a3.a1.a2.a3.a1.a2", "a3.a1.a2.a3"),
    ("a3.a1.a2.a3", "a3.a1.a2"),
    ("a3.a1.a2.a3", "a1.a2.a3.a1.a2.a3"),
    ("a3.a1.a2", "a3"),
    ("a3.a1.a2", "a1.a2.a3.a1.a2"),
    ("a3", "a1.a2.a3"),
}

THREE_CYCLE_TAU = {
    ("a1.a2.a3.a1.a2.a3", "a3.a1.a2.a3.a1.a2"),
    ("a3.a1.a2.a3.a1.a2", "a1.a2.a3.a1.a2.a3"),
    ("a1.a2.a3.a1.a2", "a3.a1.a2.a3"),
    ("a3.a1.a2.a3", "a1.a2.a3.a1.a2"),
    ("a1.a2.a3", "a3.a1.a2"),
    ("a3.a1.a2", "a1.a2.a3"),
    ("a1.a2", "a3"),
    ("a3", "a1.a2"),
}

TWO_CYCLE_ARROWS = {
    ("a4.a5.a4.a5.a4.a5", "a4.a5.a4.a5"),
    ("a4.a5.a4.a5", "a4.a5"),
    ("a4.a5.a4.a5", "a4.a5.a4.a5.a4.a5"),
    ("a4.a5", "a4.a5.a4.a5"),
}
