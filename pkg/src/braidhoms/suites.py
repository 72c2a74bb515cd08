"""Named reproduction suites, one per acceptance criterion.

Every suite returns a :class:`SuiteResult`; ``failures`` is the number of
counterexamples or failed checks and ``undecided`` the number of word-problem
queries that ran out of fuel.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .braid import DEFAULT_FUEL, BraidWord, UndecidedError, commutes, is_trivial, named, words_equal
from .cabling import (
    CableStructure,
    SemidirectElement,
    cable_twist,
    classify_cabling,
    decompose,
    embed_F,
    exterior_part,
    interior_part,
)
from .curves import enumerate_curves, rotation_intersection_report, rotation_multicurve_report
from .homs import (
    Homomorphism,
    StandardKind,
    centralizer_generators,
    compose_hom,
    fingerprint,
    standard_hom,
    transvect,
    verify_hom,
)
from .laminations import lamination_says_trivial
from .screens import corollary_range_check, special_constraint, sym_hom_enumerate

__all__ = ["SuiteResult", "SUITES", "run_suite", "random_word", "random_trivial_word"]


@dataclass
class SuiteResult:
    name: str
    criterion: int
    failures: int = 0
    undecided: int = 0
    seconds: float = 0.0
    details: dict = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.undecided == 0

    @property
    def exit_code(self) -> int:
        if self.failures:
            return 1
        return 2 if self.undecided else 0

    def to_json(self) -> dict:
        # seconds are left out so reports are reproducible byte for byte
        return {
            "criterion": self.criterion,
            "details": self.details,
            "failures": self.failures,
            "name": self.name,
            "passed": self.passed,
            "problems": self.problems,
            "undecided": self.undecided,
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"[{status}] {self.criterion:2d} {self.name}: {self.failures} failures, "
                 f"{self.undecided} undecided ({self.seconds:.1f}s)"]
        for k in sorted(self.details):
            lines.append(f"    {k}: {self.details[k]}")
        for p in self.problems[:20]:
            lines.append(f"    ! {p}")
        return "\n".join(lines)


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randrange(1, n) for _ in range(length)))


def _relators(n: int) -> list[BraidWord]:
    out = []
    for i in range(1, n):
        for j in range(i + 1, n):
            if j == i + 1:
                out.append(BraidWord(n, (i, j, i, -j, -i, -j)))
            else:
                out.append(BraidWord(n, (i, j, -i, -j)))
    return out


def random_trivial_word(n: int, max_len: int, rng: random.Random) -> BraidWord:
    """Product of conjugated relators, kept within ``max_len`` letters before free reduction."""
    rels = _relators(n)
    letters: list[int] = []
    while True:
        r = rng.choice(rels)
        if rng.random() < 0.5:
            r = r.inverse()
        room = max_len - len(letters) - len(r)
        if room < 0:
            break
        u = random_word(n, rng.randint(0, room // 2), rng) if n > 1 else BraidWord(n)
        letters += list(u.letters) + list(r.letters) + list(u.inverse().letters)
        if rng.random() < 0.4:
            break
    return BraidWord(n, tuple(letters))


def _standard_kinds(n: int) -> list[StandardKind]:
    kinds = [StandardKind.of(k) for k in ("trivial", "inclusion", "diagonal", "flip", "inversion")]
    kinds += [StandardKind.of("inner", conjugator=named("alpha1", n))]
    kinds += [StandardKind.of("cabling", k) for k in range(-3, 4)]
    return kinds


def suite_relations(fuel: int = DEFAULT_FUEL, **_) -> SuiteResult:
    res = SuiteResult("relations", 1)
    maps: list[tuple[str, Homomorphism]] = []
    for n in (3, 4, 5, 6):
        maps += [(f"{sk} n={n}", standard_hom(sk, n)) for sk in _standard_kinds(n)]
    maps.append(("exceptional", standard_hom("exceptional", 4)))
    for label, h in maps:
        try:
            if not verify_hom(h, fuel):
                res.failures += 1
                res.problems.append(label)
        except UndecidedError:
            res.undecided += 1
            res.problems.append(f"{label} undecided")
    res.details["maps"] = len(maps)
    return res


def suite_word_problem(fuel: int = DEFAULT_FUEL, seed: int = 20240601, samples: int = 1000, **_) -> SuiteResult:
    """Handle reduction against the lamination backend on random words (half of them trivial by construction)."""
    res = SuiteResult("word-problem", 2)
    rng = random.Random(seed)
    trivial_count = 0
    for n in range(3, 8):
        for s in range(samples):
            if s % 2:
                w = random_trivial_word(n, 40, rng)
            else:
                w = random_word(n, rng.randint(0, 40), rng)
            try:
                a = is_trivial(w, fuel)
            except UndecidedError:
                res.undecided += 1
                continue
            trivial_count += a
            if a != lamination_says_trivial(w):
                res.failures += 1
                res.problems.append(f"conflict on {w}")
    res.details["words"] = 5 * samples
    res.details["trivial"] = trivial_count
    return res


def suite_central(fuel: int = DEFAULT_FUEL, **_) -> SuiteResult:
    res = SuiteResult("central", 3)
    for n in range(3, 8):
        a1, a2, z = named("alpha1", n), named("alpha2", n), named("z", n)
        if not words_equal(a1 ** n, a2 ** (n - 1), fuel):
            res.failures += 1
            res.problems.append(f"alpha1^{n} != alpha2^{n - 1}")
        for i in range(1, n):
            if not commutes(z, BraidWord(n, (i,)), fuel):
                res.failures += 1
                res.problems.append(f"z does not commute with sigma_{i} in B_{n}")
    return res


def suite_rotation(fuel: int = DEFAULT_FUEL, n: int | None = None, max_conj: int = 4, workers: int = 1, **_) -> SuiteResult:
    """Every curve meets its image under alpha_k^+-1 (k = 1, 2), over all conjugators up to ``max_conj``."""
    res = SuiteResult("prop31", 4)
    for nn in ((n,) if n else (5, 6)):
        curves = enumerate_curves(nn, max_conj, dedupe=False)
        for k in (1, 2):
            rep = rotation_intersection_report(nn, k, curves, fuel, workers)
            res.failures += len(rep.counterexamples)
            res.undecided += len(rep.undecided)
            res.problems += [f"n={nn} k={k} {r['curve']} eps={r['epsilon']}: {r['verdict']}"
                             for r in rep.counterexamples]
            res.details[f"checks n={nn} k={k}"] = len(rep.rows)
    return res


def suite_multicurve(fuel: int = DEFAULT_FUEL, n: int | None = None, max_conj: int = 4, **_) -> SuiteResult:
    res = SuiteResult("prop32", 5)
    nn = n or 5
    try:
        rep = rotation_multicurve_report(nn, "alpha1", enumerate_curves(nn, max_conj, dedupe=False), fuel)
    except UndecidedError:
        res.undecided += 1
        return res
    res.failures = len(rep.counterexamples)
    res.problems = [f"{a} + {b}" for a, b in rep.counterexamples]
    res.details["satisfying curves"] = rep.satisfying_count
    res.details["satisfying classes"] = len(rep.satisfying)
    res.details["disjoint pairs"] = len(rep.disjoint_pairs)
    return res


def suite_round_trip(fuel: int = DEFAULT_FUEL, seed: int = 61, samples: int = 500, **_) -> SuiteResult:
    """Decompose o embed is the identity on random elements; generator level via the word problem."""
    res = SuiteResult("lemma61", 6)
    rng = random.Random(seed)
    k = 5
    cs = CableStructure.pairs(k)
    for _ in range(samples):
        ext = random_word(k, rng.randint(0, 12), rng).reduced()
        ints = tuple(BraidWord(2, (1,)) ** rng.randint(-4, 4) for _ in range(k))
        e = SemidirectElement(ext, ints)
        back = decompose(embed_F(e, cs), cs)
        if back != e:
            res.failures += 1
            res.problems.append(f"round trip lost {ext} / {[f.exponent_sum() for f in ints]}")
    one = BraidWord.identity(2)
    gens = [SemidirectElement(BraidWord(k, (i,)), (one,) * k) for i in range(1, k)]
    gens += [SemidirectElement(BraidWord.identity(k), tuple(BraidWord(2, (1,)) if c == j else one
                                                           for c in range(k))) for j in range(k)]
    for e in gens:
        w = embed_F(e, cs)
        ok = words_equal(exterior_part(w, cs), e.exterior, fuel) and all(
            words_equal(interior_part(w, j, cs), e.interiors[j - 1], fuel) for j in range(1, k + 1))
        if not ok:
            res.failures += 1
            res.problems.append(f"generator {e}")
    res.details["samples"] = samples
    res.details["generators"] = len(gens)
    return res


def suite_classifier(fuel: int = DEFAULT_FUEL, seed: int = 91, **_) -> SuiteResult:
    res = SuiteResult("classifier", 7)
    rng = random.Random(seed)
    cases = 0
    for n in (3, 4, 5):
        m = 2 * n
        for k in range(-3, 4):
            h0 = standard_hom(StandardKind.of("cabling", k), n)
            variants = [("standard", h0)]
            for s in range(-2, 3):
                variants.append((f"tau^{s}", transvect(h0, cable_twist(m) ** s, fuel)))
                variants.append((f"z^{s}", transvect(h0, named("z", m) ** s, fuel)))
            for t in range(20):
                # cable-respecting: a word in the cable half-twists s1, s3, ...
                w = BraidWord(m, tuple(rng.choice((1, -1)) * rng.randrange(1, m, 2)
                                       for _ in range(rng.randint(1, 10))))
                inner = standard_hom(StandardKind.of("inner", conjugator=w), m)
                variants.append((f"inner {w}", compose_hom(inner, h0)))
            for label, h in variants:
                cases += 1
                try:
                    c = classify_cabling(h, fuel)
                    ok = c.k_canonical == k and c.certified and c.check_invariants()
                except UndecidedError:
                    res.undecided += 1
                    continue
                except ValueError as exc:
                    ok = False
                    label += f" ({exc})"
                if not ok:
                    res.failures += 1
                    res.problems.append(f"n={n} k={k} {label}")
    res.details["cases"] = cases
    return res


def suite_b4(fuel: int = DEFAULT_FUEL, **_) -> SuiteResult:
    res = SuiteResult("b4", 8)
    delta, s0 = named("delta4", 4), named("sigma0", 4)
    checks = {
        "delta s1 delta^-1 = s3": words_equal(BraidWord(4, (1,)).conjugate(delta), BraidWord(4, (3,)), fuel),
        "delta s2 delta^-1 = s2": words_equal(BraidWord(4, (2,)).conjugate(delta), BraidWord(4, (2,)), fuel),
        "delta, sigma0 do not commute": not commutes(delta, s0, fuel),
    }
    for label, ok in checks.items():
        if not ok:
            res.failures += 1
            res.problems.append(label)
    res.details["checks"] = len(checks)
    return res


def suite_screen(n_max: int = 50, **_) -> SuiteResult:
    res = SuiteResult("screen", 9)
    for n in range(5, n_max + 1):
        for m in range(n + 1, 2 * n + 1):
            if not corollary_range_check(n, m):
                res.failures += 1
                res.problems.append(f"n(n-1) divides m(m-1) at (n, m) = ({n}, {m})")
    table = 0
    for n in range(1, n_max + 1):
        for m in range(1, 2 * n_max + 1):
            table += 1
            expect = n == 1 or Fraction(m * (m - 1), n * (n - 1)).denominator == 1
            if special_constraint(n, m) != expect:
                res.failures += 1
                res.problems.append(f"special_constraint({n}, {m}) disagrees with exact arithmetic")
    res.details["table entries"] = table
    return res


def suite_lin(workers: int = 1, **_) -> SuiteResult:
    res = SuiteResult("lin", 10)
    for k in (1, 2, 3, 4):
        rep = sym_hom_enumerate(5, k, workers=workers)
        res.details[f"B_5 -> S_{k} solutions"] = rep.solutions
        if not rep.all_cyclic:
            res.failures += 1
            res.problems.append(f"non-cyclic map B_5 -> S_{k}")
    boundary = sym_hom_enumerate(3, 3, workers=workers)
    artin = ((1, 0, 2), (0, 2, 1))
    res.details["B_3 -> S_3 non-cyclic"] = len(boundary.noncyclic)
    if artin not in boundary.noncyclic:
        res.failures += 1
        res.problems.append("permutation representation of B_3 missing from the non-cyclic list")
    return res


FINGERPRINT_MAPS = ("trivial", "inclusion", "diagonal", "flip", -2, -1, 0, 1, 2)


def _fingerprint_kinds() -> list[StandardKind]:
    return [StandardKind.of("cabling", x) if isinstance(x, int) else StandardKind.of(x)
            for x in FINGERPRINT_MAPS]


def suite_fingerprints(fuel: int = DEFAULT_FUEL, seed: int = 10, moves: int = 20, **_) -> SuiteResult:
    """Pairwise distinct fingerprints at n = 5, each stable under sampled equivalence moves."""
    res = SuiteResult("fingerprints", 11)
    rng = random.Random(seed)
    n, m = 5, 10
    inversion = standard_hom("inversion", m)
    prints = []
    for sk in _fingerprint_kinds():
        h = standard_hom(sk, n)
        base = fingerprint(h, fuel)
        prints.append((str(sk), base))
        cents = centralizer_generators(sk, n)
        for t in range(moves):
            move = t % 3
            if move == 0:
                g = transvect(h, rng.choice(cents) ** rng.choice((-2, -1, 1, 2)), fuel)
            elif move == 1:
                w = random_word(m, 8, rng)
                g = compose_hom(standard_hom(StandardKind.of("inner", conjugator=w), m), h)
            else:
                g = compose_hom(inversion, h)
            if not fingerprint(g, fuel).matches(base):
                res.failures += 1
                res.problems.append(f"{sk}: move {('transvection', 'inner', 'inversion')[move]} changed it")
    for i in range(len(prints)):
        for j in range(i + 1, len(prints)):
            if prints[i][1].matches(prints[j][1]):
                res.failures += 1
                res.problems.append(f"{prints[i][0]} and {prints[j][0]} share a fingerprint")
    res.details["maps"] = len(prints)
    res.details["hashes"] = {name: fp.graph_hash() for name, fp in prints}
    return res


def suite_centralizers(fuel: int = DEFAULT_FUEL, **_) -> SuiteResult:
    res = SuiteResult("centralizers", 12)
    n = 5
    kinds = [StandardKind.of(x) for x in ("trivial", "inclusion", "diagonal", "flip")]
    kinds += [StandardKind.of("cabling", k) for k in range(-3, 4)]
    checks = 0
    for sk in kinds:
        h = standard_hom(sk, n)
        for c in centralizer_generators(sk, n):
            for i, img in enumerate(h.images, 1):
                checks += 1
                if not commutes(c, img, fuel):
                    res.failures += 1
                    res.problems.append(f"{sk}: {c} vs sigma_{i}")
    res.details["checks"] = checks
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "relations": suite_relations,
    "word-problem": suite_word_problem,
    "central": suite_central,
    "prop31": suite_rotation,
    "prop32": suite_multicurve,
    "lemma61": suite_round_trip,
    "classifier": suite_classifier,
    "b4": suite_b4,
    "screen": suite_screen,
    "lin": suite_lin,
    "fingerprints": suite_fingerprints,
    "centralizers": suite_centralizers,
}


def run_suite(name: str, **options) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    res = SUITES[name](**options)
    res.seconds = time.perf_counter() - start
    return res
