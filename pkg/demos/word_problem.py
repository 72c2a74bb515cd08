"""Deciding equality of braids two ways: handle reduction and curve coordinates."""

from __future__ import annotations

import random

from braidhoms import BraidWord, is_trivial, named, words_equal
from braidhoms.laminations import apply_word, lamination_says_trivial, standard_curve_coords
from braidhoms.suites import random_trivial_word


def main():
    a1, a2 = named("alpha1", 5), named("alpha2", 5)
    print("alpha1 =", a1, " alpha2 =", a2)
    print("alpha1^5 == alpha2^4:", words_equal(a1 ** 5, a2 ** 4))

    # the commutator of two squares is a pure braid with zero exponent sum, yet nontrivial
    w = BraidWord(3, (1, 1, 2, 2, -1, -1, -2, -2))
    print(w, "trivial?", is_trivial(w))

    # a long word that is trivial by construction
    rng = random.Random(1)
    t = random_trivial_word(6, 40, rng)
    print(f"random relator product of length {len(t)}: handle={is_trivial(t)} lamination={lamination_says_trivial(t)}")

    # the rotation alpha1 moves round curves one click: apply its inverse to c1
    c1 = standard_curve_coords(5, 1)
    print("c1            ", c1)
    print("c1 . alpha1^-1", apply_word(c1, a1.inverse()))


if __name__ == "__main__":
    main()
