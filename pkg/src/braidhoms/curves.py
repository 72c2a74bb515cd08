"""Curves surrounding two punctures, twists, and disjointness via twist commutation.

A curve is stored as ``w(c_i)``: the image of the round curve ``c_i`` under a
braid ``w``.  Its half-twist is ``w s_i w^-1``.  Two Dehn twists commute exactly
when their curves have zero geometric intersection, so disjointness reduces to
the word problem.
"""

from __future__ import annotations

import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .braid import DEFAULT_FUEL, BraidWord, UndecidedError, commutes, named, parse_word, words_equal
from .laminations import LaminationCoords, apply_word, standard_curve_coords

__all__ = [
    "CurveSpec",
    "Multicurve",
    "Verdict",
    "half_twist_word",
    "dehn_twist_word",
    "curves_equal",
    "curves_disjoint",
    "enumerate_curves",
    "rotation_intersection_report",
    "rotation_multicurve_report",
    "RotationReport",
    "MulticurveReport",
    "parse_curve",
    "format_curve",
]


@dataclass(frozen=True)
class CurveSpec:
    strands: int
    base: int
    conjugator: BraidWord

    def __post_init__(self):
        if not 1 <= self.base <= self.strands - 1:
            raise ValueError(f"base {self.base} out of range for B_{self.strands}")
        if self.conjugator.strands != self.strands:
            raise ValueError("conjugator lives in the wrong braid group")

    @classmethod
    def standard(cls, n: int, i: int) -> CurveSpec:
        return cls(n, i, BraidWord.identity(n))

    def image(self, g: BraidWord) -> CurveSpec:
        """The curve ``g(self)``."""
        return CurveSpec(self.strands, self.base, g * self.conjugator)

    def coords(self) -> LaminationCoords:
        return apply_word(standard_curve_coords(self.strands, self.base), self.conjugator.inverse())

    def __str__(self) -> str:
        return format_curve(self)


def half_twist_word(c: CurveSpec) -> BraidWord:
    w = c.conjugator
    return w * BraidWord(c.strands, (c.base,)) * w.inverse()


def dehn_twist_word(c: CurveSpec) -> BraidWord:
    w = c.conjugator
    return w * BraidWord(c.strands, (c.base, c.base)) * w.inverse()


class Verdict(Enum):
    Equal = "equal"
    Disjoint = "disjoint"
    Intersecting = "intersecting"

    @property
    def zero_intersection(self) -> bool:
        return self is not Verdict.Intersecting


def _same_group(c: CurveSpec, d: CurveSpec):
    if c.strands != d.strands:
        raise ValueError(f"curves in D_{c.strands} and D_{d.strands}")


def curves_equal(c: CurveSpec, d: CurveSpec, fuel: int = DEFAULT_FUEL) -> bool:
    _same_group(c, d)
    return words_equal(half_twist_word(c), half_twist_word(d), fuel)


def curves_disjoint(c: CurveSpec, d: CurveSpec, fuel: int = DEFAULT_FUEL) -> Verdict:
    if curves_equal(c, d, fuel):
        return Verdict.Equal
    if commutes(dehn_twist_word(c), dehn_twist_word(d), fuel):
        return Verdict.Disjoint
    return Verdict.Intersecting


@dataclass
class Multicurve:
    """Pairwise disjoint curves; equal duplicates are dropped on construction."""

    components: list[CurveSpec]

    def __post_init__(self):
        kept: list[CurveSpec] = []
        for c in self.components:
            verdicts = [curves_disjoint(c, d) for d in kept]
            if Verdict.Intersecting in verdicts:
                raise ValueError(f"{c} meets another component")
            if Verdict.Equal not in verdicts:
                kept.append(c)
        self.components = kept

    def image(self, g: BraidWord) -> Multicurve:
        return Multicurve([c.image(g) for c in self.components])

    def __len__(self) -> int:
        return len(self.components)


def _reduced_words(n: int, max_len: int) -> Iterable[tuple[int, ...]]:
    letters = [x for i in range(1, n) for x in (i, -i)]
    frontier: list[tuple[int, ...]] = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        yield from nxt
        frontier = nxt


def enumerate_curves(n: int, max_len: int, dedupe: bool = True) -> list[CurveSpec]:
    """All curves ``w(c_i)`` with reduced ``|w| <= max_len``, shortest conjugators first.

    With ``dedupe`` only the first representative of each isotopy class is
    kept, keyed by lamination coordinates (a complete invariant of curves).
    """
    out = []
    seen = set()
    for w in _reduced_words(n, max_len):
        word = BraidWord(n, w)
        for i in range(1, n):
            c = CurveSpec(n, i, word)
            if dedupe:
                key = c.coords()
                if key in seen:
                    continue
                seen.add(key)
            out.append(c)
    return out


def _rotation(n: int, k: int) -> BraidWord:
    if k not in (1, 2):
        raise ValueError("rotation index must be 1 or 2")
    return named("alpha1" if k == 1 else "alpha2", n)


@dataclass
class RotationReport:
    """One row per (curve, epsilon): does c meet alpha_k^epsilon(c)?"""

    n: int
    k: int
    rows: list[dict] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[dict]:
        return [r for r in self.rows if r["verdict"] in (Verdict.Equal.value, Verdict.Disjoint.value)]

    @property
    def undecided(self) -> list[dict]:
        return [r for r in self.rows if r["verdict"] == "undecided"]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "curves": len(self.rows) // 2,
            "rows": self.rows,
            "counterexamples": len(self.counterexamples),
        }

    def to_text(self) -> str:
        lines = [f"rotation alpha_{self.k} in B_{self.n}: {len(self.rows)} checks"]
        for r in self.counterexamples:
            lines.append(f"  COUNTEREXAMPLE {r['curve']} eps={r['epsilon']}: {r['verdict']}")
        if not self.counterexamples:
            lines.append("  no counterexample found")
        return "\n".join(lines)


def _rotation_rows(args: tuple[int, int, Sequence[CurveSpec], int]) -> list[dict]:
    n, k, curves, fuel = args
    rot = _rotation(n, k)
    rows = []
    for c in curves:
        for eps in (1, -1):
            try:
                verdict = curves_disjoint(c, c.image(rot ** eps), fuel).value
            except UndecidedError:
                verdict = "undecided"
            rows.append({"curve": format_curve(c), "epsilon": eps, "verdict": verdict})
    return rows


def rotation_intersection_report(n: int, k: int, curves: Sequence[CurveSpec],
                                 fuel: int = DEFAULT_FUEL, workers: int = 1) -> RotationReport:
    """Check that every curve meets its image under alpha_k and alpha_k^-1.

    With ``workers > 1`` the curves are split into chunks checked in separate
    processes; rows keep the input order.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    _rotation(n, k)
    report = RotationReport(n, k)
    curves = list(curves)
    if workers > 1 and len(curves) > 1:
        size = -(-len(curves) // (4 * workers))
        chunks = [(n, k, curves[i:i + size], fuel) for i in range(0, len(curves), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for rows in pool.map(_rotation_rows, chunks):
                report.rows.extend(rows)
    else:
        report.rows = _rotation_rows((n, k, curves, fuel))
    return report


class Hypothesis(Enum):
    Alpha1Range = "alpha1"
    Alpha2Range = "alpha2"


def _hypothesis_powers(n: int, hyp: Hypothesis) -> tuple[BraidWord, range]:
    if hyp is Hypothesis.Alpha1Range:
        if n < 5:
            raise ValueError("alpha_1 hypothesis needs n >= 5")
        return named("alpha1", n), range(2, n - 1)
    if n < 6:
        raise ValueError("alpha_2 hypothesis needs n >= 6")
    return named("alpha2", n), range(2, n - 2)


@dataclass
class MulticurveReport:
    n: int
    hypothesis: str
    rows: list[dict] = field(default_factory=list)
    satisfying: list[str] = field(default_factory=list)
    satisfying_count: int = 0
    disjoint_pairs: list[tuple[str, str]] = field(default_factory=list)
    counterexamples: list[tuple[str, str]] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        # every satisfying curve is a w(c_i), so it surrounds exactly two punctures
        return True

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "hypothesis": self.hypothesis,
            "rows": self.rows,
            "satisfying": self.satisfying,
            "satisfying_count": self.satisfying_count,
            "disjoint_satisfying_pairs": [list(p) for p in self.disjoint_pairs],
            "counterexamples": [list(p) for p in self.counterexamples],
            "consistent": self.consistent,
        }

    def to_text(self) -> str:
        lines = [
            f"multicurve hypothesis {self.hypothesis} in B_{self.n}:",
            f"  {self.satisfying_count} single curves satisfy it, {len(self.satisfying)} up to isotopy",
            f"  {len(self.disjoint_pairs)} disjoint pairs of such curves",
            f"  {len(self.counterexamples)} two-component multicurves satisfying it",
        ]
        lines.append("  no counterexample found" if not self.counterexamples else "  COUNTEREXAMPLES:")
        for p in self.counterexamples:
            lines.append(f"    {p[0]} + {p[1]}")
        return "\n".join(lines)


def rotation_multicurve_report(n: int, hypothesis: Hypothesis | str, curves: Sequence[CurveSpec],
                               fuel: int = DEFAULT_FUEL) -> MulticurveReport:
    """Search the family for multicurves that stay disjoint from their rotated images.

    A single curve satisfies the hypothesis when it has zero intersection with
    ``rot^i(c)`` for every power in range.  A two-component multicurve
    ``{c, d}`` satisfies it when additionally ``c`` misses every ``rot^i(d)``
    and ``d`` misses every ``rot^i(c)``; such a pair is a counterexample.
    Pairs are formed from one representative per isotopy class.
    """
    hyp = Hypothesis(hypothesis) if not isinstance(hypothesis, Hypothesis) else hypothesis
    rot, powers = _hypothesis_powers(n, hyp)
    rot_pows = {i: rot ** i for i in powers}
    report = MulticurveReport(n, hyp.value)
    good: list[CurveSpec] = []
    for c in curves:
        ok = True
        for i in powers:
            v = curves_disjoint(c, c.image(rot_pows[i]), fuel)
            report.rows.append({"curve": format_curve(c), "power": i, "verdict": v.value})
            ok = ok and v.zero_intersection
        if ok:
            report.satisfying_count += 1
            # one representative per isotopy class
            if not any(curves_equal(c, g, fuel) for g in good):
                good.append(c)
                report.satisfying.append(format_curve(c))
    for c, d in itertools.combinations(good, 2):
        if curves_disjoint(c, d, fuel) is not Verdict.Disjoint:
            continue
        pair = (format_curve(c), format_curve(d))
        report.disjoint_pairs.append(pair)
        if all(curves_disjoint(c, d.image(rot_pows[i]), fuel).zero_intersection
               and curves_disjoint(d, c.image(rot_pows[i]), fuel).zero_intersection
               for i in powers):
            report.counterexamples.append(pair)
    return report


_CURVE = re.compile(r"^\s*C(\d+):\s*(-?\d+)\s*\|(.*)$")


def parse_curve(text: str) -> CurveSpec:
    """Parse ``"C5: 1 | 4 3"`` (base index, then conjugator letters)."""
    m = _CURVE.match(text)
    if not m:
        raise ValueError(f"not a curve: {text!r}")
    n = int(m.group(1))
    return CurveSpec(n, int(m.group(2)), parse_word(m.group(3), n))


def format_curve(c: CurveSpec) -> str:
    return f"C{c.strands}: {c.base} | {' '.join(map(str, c.conjugator.letters))}".rstrip()
