"""Standard maps B_5 -> B_10, transvections and fingerprints."""

from __future__ import annotations

from braidhoms import BraidWord, named
from braidhoms.homs import StandardKind, apply_hom, fingerprint, match_standard, standard_hom, transvect, verify_hom


def main():
    kinds = ["trivial", "inclusion", "diagonal", "flip"] + [StandardKind.of("cabling", k) for k in (-1, 0, 1)]
    for kind in kinds:
        h = standard_hom(kind, 5)
        fp = fingerprint(h)
        print(f"{str(kind):16s} verified={verify_hom(h)} cyclic={fp.cyclic_image} "
              f"flag={fp.sign_bipartition_flag}")

    inc = standard_hom("inclusion", 5)
    print("inclusion(alpha1) =", apply_hom(inc, named("alpha1", 5)))

    # twisting by a central element changes the map but not its class
    h = transvect(standard_hom(StandardKind.of("cabling", 1), 5), BraidWord(10, (1, 3, 5, 7, 9)))
    print("transvected cabling sigma_1 ->", h.image(1))
    print("recognized as", match_standard(h))


if __name__ == "__main__":
    main()
