"""Dynnikov coordinates of integral laminations on the n-punctured disk.

A lamination on ``D_n`` (punctures 1..n on a horizontal line) is stored as
two integer vectors ``a``, ``b`` of length n - 2, one entry per interior
puncture 2..n-1.  Generators act by piecewise-linear (max-plus) rules; words
act left to right, so ``apply_word(L, u * v) == apply_word(apply_word(L, u), v)``.

With this convention the curve whose half-twist is ``w s_i w^-1`` has the
coordinates ``apply_word(round_curve(i), w.inverse())``.

Coordinates are Python ints, so the additive updates never overflow.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .braid import BraidWord

__all__ = [
    "LaminationCoords",
    "standard_curve_coords",
    "apply_word",
    "default_family",
    "mod_center_equal",
    "moves_family",
    "lamination_says_trivial",
    "random_lamination",
    "parse_lamination",
    "format_lamination",
]


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


@dataclass(frozen=True)
class LaminationCoords:
    strands: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 3:
            raise ValueError("laminations need at least 3 punctures")
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != self.strands - 2 or len(self.b) != self.strands - 2:
            raise ValueError(f"coordinate vectors must have length {self.strands - 2}")

    def is_empty(self) -> bool:
        return not any(self.a) and not any(self.b)

    def __str__(self) -> str:
        return format_lamination(self)


def standard_curve_coords(n: int, i: int) -> LaminationCoords:
    """Round curve around punctures i and i+1 (the curve of the half-twist s_i)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"curve index {i} out of range for {n} punctures")
    b = [0] * (n - 2)
    # b_k is half the difference of the vertical crossings on either side of
    # puncture k+1; the round curve only crosses the vertical line between i, i+1.
    if i <= n - 2:
        b[i - 1] += 1
    if i >= 2:
        b[i - 2] -= 1
    return LaminationCoords(n, (0,) * (n - 2), tuple(b))


def _left_end(a: int, b: int) -> tuple[int, int]:
    return b + _neg(a - _pos(b)), _pos(b) - a


def _right_end(a: int, b: int) -> tuple[int, int]:
    return b + _pos(a - _neg(b)), _neg(b) - a


def _act(a: list[int], b: list[int], i: int, e: int) -> None:
    """In-place action of s_i^e (e = +-1) on the coordinate lists."""
    n = len(a) + 2
    if i == 1 or i == n - 1:
        k = 0 if i == 1 else n - 3
        rule = _left_end if i == 1 else _right_end
        if e > 0:
            a[k], b[k] = rule(a[k], b[k])
        else:
            # s_i^-1 is s_i conjugated by the reflection a -> -a
            x, y = rule(-a[k], b[k])
            a[k], b[k] = -x, y
        return
    k = i - 2
    x1, y1, x2, y2 = a[k], b[k], a[k + 1], b[k + 1]
    if e > 0:
        c = x1 - _neg(y1) - x2 + _pos(y2)
        a[k] = x1 + _pos(y1) + _pos(_pos(y2) - c)
        b[k] = y2 - _pos(c)
        a[k + 1] = x2 + _neg(y2) + _neg(_neg(y1) + c)
        b[k + 1] = y1 + _pos(c)
    else:
        d = x1 + _neg(y1) - x2 - _pos(y2)
        a[k] = x1 - _pos(y1) - _pos(_pos(y2) + d)
        b[k] = y2 + _neg(d)
        a[k + 1] = x2 - _neg(y2) - _neg(_neg(y1) - d)
        b[k + 1] = y1 - _neg(d)


def apply_word(lam: LaminationCoords, w: BraidWord) -> LaminationCoords:
    if lam.strands != w.strands:
        raise ValueError(f"strand mismatch: lamination on {lam.strands}, word in B_{w.strands}")
    a, b = list(lam.a), list(lam.b)
    for x in w.letters:
        _act(a, b, abs(x), 1 if x > 0 else -1)
    return LaminationCoords(lam.strands, tuple(a), tuple(b))


@lru_cache(maxsize=None)
def default_family(n: int) -> tuple[LaminationCoords, ...]:
    """Round curves and their images under all words of length <= 2, deduplicated."""
    rounds = [standard_curve_coords(n, i) for i in range(1, n)]
    letters = [x for i in range(1, n) for x in (i, -i)]
    words = [()] + [(x,) for x in letters] + [
        (x, y) for x, y in itertools.product(letters, repeat=2) if x != -y
    ]
    seen: dict[tuple, LaminationCoords] = {}
    for lam in rounds:
        for word in words:
            img = apply_word(lam, BraidWord(n, word))
            seen.setdefault((img.a, img.b), img)
    return tuple(seen.values())


def moves_family(w: BraidWord, family: Iterable[LaminationCoords] | None = None) -> bool:
    """True when ``w`` moves some lamination of the family (certifies w != 1 mod center)."""
    family = default_family(w.strands) if family is None else family
    return any(apply_word(lam, w) != lam for lam in family)


def mod_center_equal(u: BraidWord, v: BraidWord,
                     family: Sequence[LaminationCoords] | None = None) -> bool:
    """Do ``u`` and ``v`` act identically on every lamination of ``family``?

    ``False`` proves u != v modulo the center; ``True`` is evidence relative to
    the family only.
    """
    if u.strands != v.strands:
        raise ValueError("strand mismatch")
    if u.strands < 3:
        return True
    family = default_family(u.strands) if family is None else family
    if not family:
        raise ValueError("empty lamination family")
    return all(apply_word(lam, u) == apply_word(lam, v) for lam in family)


def lamination_says_trivial(w: BraidWord, family: Sequence[LaminationCoords] | None = None) -> bool:
    """Triviality verdict of the lamination backend: zero exponent sum and no family member moved."""
    if w.exponent_sum() != 0:
        return False
    if w.strands < 3:
        return True
    return not moves_family(w, family)


def random_lamination(n: int, rng: random.Random, bound: int = 5) -> LaminationCoords:
    while True:
        a = tuple(rng.randint(-bound, bound) for _ in range(n - 2))
        b = tuple(rng.randint(-bound, bound) for _ in range(n - 2))
        if any(a) or any(b):
            return LaminationCoords(n, a, b)


_LAM = re.compile(r"^\s*L(\d+):([^|]*)\|(.*)$")


def parse_lamination(text: str) -> LaminationCoords:
    """Parse ``"L5: 0 0 0 | 1 0 0"``."""
    m = _LAM.match(text)
    if not m:
        raise ValueError(f"not a lamination: {text!r}")
    n = int(m.group(1))
    return LaminationCoords(n, tuple(int(t) for t in m.group(2).split()),
                            tuple(int(t) for t in m.group(3).split()))


def format_lamination(lam: LaminationCoords) -> str:
    return f"L{lam.strands}: {' '.join(map(str, lam.a))} | {' '.join(map(str, lam.b))}"
