"""Splitting cabled braids and normalizing a disguised cabling map."""

from __future__ import annotations

from braidhoms import BraidWord
from braidhoms.cabling import CableStructure, SemidirectElement, cable_twist, classify_cabling, decompose, embed_F
from braidhoms.homs import StandardKind, compose_hom, standard_hom, transvect


def main():
    cs = CableStructure.parse("P: 2 2 2")
    e = SemidirectElement(BraidWord(3, (1, -2)), (BraidWord(2, (1, 1)), BraidWord(2), BraidWord(2, (-1,))))
    w = embed_F(e, cs)
    print("embedded:", w)
    back = decompose(w, cs)
    print("exterior:", back.exterior, " interiors:", [str(f) for f in back.interiors])

    # hide a 2-twist cabling behind a cable twist and a conjugation
    h = standard_hom(StandardKind.of("cabling", 2), 4)
    h = transvect(h, cable_twist(8) ** 3)
    h = compose_hom(standard_hom(StandardKind.of("inner", conjugator=BraidWord(8, (3, 3, -5))), 8), h)
    c = classify_cabling(h)
    print(c.to_text())


if __name__ == "__main__":
    main()
