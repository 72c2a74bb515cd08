"""Curves w(c_i) in the punctured disk, compared through their twists."""

from __future__ import annotations

from braidhoms import named
from braidhoms.curves import (
    CurveSpec,
    curves_disjoint,
    enumerate_curves,
    parse_curve,
    rotation_intersection_report,
)


def main():
    c1, c3 = parse_curve("C5: 1 |"), parse_curve("C5: 3 |")
    print(c1, "vs", c3, "->", curves_disjoint(c1, c3).value)
    moved = CurveSpec(5, 1, named("alpha1", 5))
    print(c1, "vs its rotation ->", curves_disjoint(c1, moved).value)

    # no curve is disjoint from its image under a rotation (short conjugators only)
    curves = enumerate_curves(5, 2)
    for k in (1, 2):
        rep = rotation_intersection_report(5, k, curves)
        print(f"k={k}: {len(rep.rows)} checks, {len(rep.counterexamples)} counterexamples")


if __name__ == "__main__":
    main()
