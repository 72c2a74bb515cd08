"""Divisibility screens and maps from braid groups onto small symmetric groups."""

from __future__ import annotations

from braidhoms.screens import corollary_range_check, special_constraint, sym_hom_enumerate


def main():
    for m in (5, 6, 10, 16):
        print(f"n=5 m={m}: n(n-1) | m(m-1) is {special_constraint(5, m)}")

    # composite n lets m(m-1) pick up the factors of n and n-1 from different places
    for n in range(5, 51):
        for m in range(n + 1, 2 * n + 1):
            if not corollary_range_check(n, m):
                print(f"  divisible in range: n={n} m={m}  ({m * (m - 1)} = {m * (m - 1) // (n * (n - 1))} * {n * (n - 1)})")

    for n, k in ((5, 4), (3, 3)):
        print(sym_hom_enumerate(n, k).to_text())


if __name__ == "__main__":
    main()
