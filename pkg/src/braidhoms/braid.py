"""Braid words, permutations and the word problem.

Letters are nonzero integers: ``j`` is sigma_j and ``-j`` its inverse.  Words
are read left to right, so the permutation of ``s1 s2`` first applies the
transposition of strands 1, 2 and then that of 2, 3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Iterable, Sequence

from .handle import DEFAULT_FUEL, UndecidedError, _free_reduce, handle_reduce

__all__ = [
    "BraidWord",
    "Permutation",
    "Named",
    "Subgroup",
    "UndecidedError",
    "DEFAULT_FUEL",
    "sigma",
    "named",
    "membership",
    "gorin_lin_generators",
    "is_trivial",
    "words_equal",
    "commutes",
    "parse_word",
    "format_word",
    "forget_strands",
    "linking_numbers",
]


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..size}; ``images[k - 1]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(k)) for k in range(1, self.size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for k in range(1, self.size + 1):
            if k in seen:
                continue
            cyc = [k]
            seen.add(k)
            j = self(k)
            while j != k:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order, fixed points included."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return lcm(*self.cycle_type()) if self.size else 1


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_1 .. sigma_{strands-1}.

    The constructor keeps the letters literally; products, inverses and powers
    are freely reduced.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strands must be >= 1")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} invalid in B_{self.strands}")

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def _check(self, other: BraidWord):
        if not isinstance(other, BraidWord):
            raise TypeError(f"expected BraidWord, got {type(other).__name__}")
        if other.strands != self.strands:
            raise ValueError(f"strand mismatch: B_{self.strands} vs B_{other.strands}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        self._check(other)
        return BraidWord(self.strands, tuple(_free_reduce(self.letters + other.letters)))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, tuple(_free_reduce(base.letters * abs(k))))

    def conjugate(self, by: BraidWord) -> BraidWord:
        """``by * self * by^-1``."""
        return by * self * by.inverse()

    def reduced(self) -> BraidWord:
        return BraidWord(self.strands, tuple(_free_reduce(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self) -> Permutation:
        """Strand starting at position k ends at position ``perm(k)``."""
        pos = list(range(self.strands + 1))  # pos[strand] = current position
        at = list(range(self.strands + 1))   # at[position] = strand
        for x in self.letters:
            i = abs(x)
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
        return Permutation(tuple(pos[1:]))

    def shifted(self, offset: int, strands: int) -> BraidWord:
        """Same letters moved ``offset`` places to the right inside ``B_strands``."""
        return BraidWord(strands, tuple(x + offset if x > 0 else x - offset for x in self.letters))

    def __str__(self) -> str:
        return format_word(self)


def sigma(n: int, i: int, e: int = 1) -> BraidWord:
    return BraidWord(n, (i,) * e if e >= 0 else (-i,) * -e)


class Named(Enum):
    Alpha1 = "alpha1"
    Alpha2 = "alpha2"
    CenterZ = "z"
    GarsideDelta4 = "delta4"
    Sigma0of4 = "sigma0"


def named(tag: Named | str, n: int) -> BraidWord:
    """Literal defining word of a named element (``z`` as ``alpha1^n``)."""
    tag = Named(tag) if not isinstance(tag, Named) else tag
    if tag in (Named.GarsideDelta4, Named.Sigma0of4):
        if n != 4:
            raise ValueError(f"{tag.name} lives in B_4, not B_{n}")
        if tag is Named.GarsideDelta4:
            return BraidWord(4, (1, 2, 3, 1, 2, 1))
        a1 = named(Named.Alpha1, 4)
        return BraidWord(4, a1.letters + (3,) + a1.inverse().letters)
    if n < 2:
        raise ValueError(f"{tag.name} needs at least 2 strands")
    if tag is Named.Alpha1:
        return BraidWord(n, tuple(range(1, n)))
    if tag is Named.Alpha2:
        return BraidWord(n, (1,) + tuple(range(1, n)))
    return BraidWord(n, tuple(range(1, n)) * n)


class Subgroup(Enum):
    Even = "even"
    Pure = "pure"
    Derived = "derived"


def membership(w: BraidWord, which: Subgroup | str) -> bool:
    which = Subgroup(which) if not isinstance(which, Subgroup) else which
    if which is Subgroup.Even:
        return w.exponent_sum() % 2 == 0
    if which is Subgroup.Derived:
        return w.exponent_sum() == 0
    return w.permutation().is_identity()


def gorin_lin_generators(n: int) -> list[BraidWord]:
    """The words s_i s_1^-1 (2 <= i <= n-1), which generate the commutator subgroup."""
    if n < 3:
        raise ValueError("need n >= 3")
    return [BraidWord(n, (i, -1)) for i in range(2, n)]


def is_trivial(w: BraidWord, fuel: int = DEFAULT_FUEL) -> bool:
    """Decide ``w == 1`` by handle reduction; raises UndecidedError when out of fuel."""
    if w.strands <= 2:
        return w.exponent_sum() == 0
    return not handle_reduce(w.letters, w.strands, fuel)


def words_equal(u: BraidWord, v: BraidWord, fuel: int = DEFAULT_FUEL) -> bool:
    return is_trivial(u * v.inverse(), fuel)


def commutes(u: BraidWord, v: BraidWord, fuel: int = DEFAULT_FUEL) -> bool:
    return is_trivial(u * v * u.inverse() * v.inverse(), fuel)


def forget_strands(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Delete every strand whose starting position is not in ``keep``.

    Deleting strands is well defined on braids, so the result only depends on
    the braid represented by ``w``.
    """
    keep = set(keep)
    n = w.strands
    at = list(range(n + 1))
    kept = [False] + [k in keep for k in range(1, n + 1)]
    out = []
    for x in w.letters:
        i = abs(x)
        a, b = at[i], at[i + 1]
        if kept[a] and kept[b]:
            rank = sum(1 for p in range(1, i + 1) if kept[at[p]])
            out.append(rank if x > 0 else -rank)
        at[i], at[i + 1] = b, a
    return BraidWord(max(len(keep), 1), tuple(_free_reduce(out)))


def linking_numbers(w: BraidWord) -> dict[tuple[int, int], int]:
    """Pairwise linking numbers of a pure braid, keyed by starting strands ``(a, b)``, ``a < b``.

    Only nonzero entries are returned.
    """
    if not w.permutation().is_identity():
        raise ValueError("linking numbers need a pure braid")
    n = w.strands
    at = list(range(n + 1))
    crossings: dict[tuple[int, int], int] = {}
    for x in w.letters:
        i = abs(x)
        a, b = at[i], at[i + 1]
        key = (a, b) if a < b else (b, a)
        crossings[key] = crossings.get(key, 0) + (1 if x > 0 else -1)
        at[i], at[i + 1] = b, a
    return {k: v // 2 for k, v in sorted(crossings.items()) if v}


_HEADER = re.compile(r"^\s*B(\d+):(.*)$")


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"B4: 1 2 -3"``; without a header ``strands`` must be supplied."""
    m = _HEADER.match(text)
    body = text
    if m:
        n = int(m.group(1))
        if strands is not None and strands != n:
            raise ValueError(f"header says B{n}, expected B{strands}")
        strands, body = n, m.group(2)
    if strands is None:
        raise ValueError("missing 'Bn:' header")
    letters = [int(tok) for tok in body.split()]
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    body = " ".join(str(x) for x in w.letters)
    return f"B{w.strands}: {body}".rstrip()


def word_from(n: int, letters: Sequence[int]) -> BraidWord:
    return BraidWord(n, tuple(letters))
