"""Arithmetic screens on (n, m) and exhaustive maps from braid groups to symmetric groups."""

from __future__ import annotations

import itertools
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial

__all__ = [
    "special_constraint",
    "corollary_range_check",
    "screen_table",
    "SymReport",
    "sym_hom_enumerate",
    "generates_cyclic",
]

Perm = tuple[int, ...]  # images of 0..k-1


def special_constraint(n: int, m: int) -> bool:
    """Necessary condition for a non-cyclic special map ``B_n -> B_m``: n(n-1) divides m(m-1)."""
    if n < 1 or m < 1:
        raise ValueError("n, m must be >= 1")
    return (m * (m - 1)) % (n * (n - 1)) == 0 if n > 1 else True


def corollary_range_check(n: int, m: int) -> bool:
    """For ``n >= 5`` and ``2 <= m <= 2n``, ``m != n``: does the divisibility condition fail?

    ``m = 1`` is excluded since ``m(m-1) = 0`` is divisible by everything
    (and ``B_1`` is trivial anyway).
    """
    if n < 5 or m == n or not 2 <= m <= 2 * n:
        raise ValueError(f"({n}, {m}) outside the range n >= 5, 2 <= m <= 2n, m != n")
    return not special_constraint(n, m)


def screen_table(n_min: int, n_max: int, m_max: int | None = None) -> list[tuple[int, int, bool]]:
    """Rows ``(n, m, special_constraint(n, m))`` for ``n_min <= n <= n_max``, ``1 <= m <= m_max`` (default 2n)."""
    rows = []
    for n in range(n_min, n_max + 1):
        for m in range(1, (m_max if m_max is not None else 2 * n) + 1):
            rows.append((n, m, special_constraint(n, m)))
    return rows


def _compose(p: Perm, q: Perm) -> Perm:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def _braid(p: Perm, q: Perm) -> bool:
    return _compose(_compose(p, q), p) == _compose(_compose(q, p), q)


def _commute(p: Perm, q: Perm) -> bool:
    return _compose(p, q) == _compose(q, p)


def _order(p: Perm) -> int:
    ident = tuple(range(len(p)))
    q, r = p, 1
    while q != ident:
        q, r = _compose(q, p), r + 1
    return r


def generates_cyclic(perms: tuple[Perm, ...]) -> bool:
    """Is the subgroup generated by ``perms`` cyclic?"""
    k = len(perms[0])
    ident = tuple(range(k))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in perms:
                h = _compose(g, s)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    size = len(group)
    return any(_order(g) == size for g in group)


def _extend(prefix: list[Perm], slots: int, elems: list[Perm], out: list[tuple[Perm, ...]]):
    if len(prefix) == slots:
        out.append(tuple(prefix))
        return
    last = len(prefix)
    for x in elems:
        if prefix and not _braid(prefix[-1], x):
            continue
        if not all(_commute(prefix[j], x) for j in range(last - 1)):
            continue
        prefix.append(x)
        _extend(prefix, slots, elems, out)
        prefix.pop()


def _solutions_from(args: tuple[int, int, Perm]) -> list[tuple[Perm, ...]]:
    n, k, first = args
    out: list[tuple[Perm, ...]] = []
    _extend([first], n - 1, list(itertools.permutations(range(k))), out)
    return out


@dataclass
class SymReport:
    n: int
    k: int
    solutions: int = 0
    noncyclic: list[tuple[Perm, ...]] = field(default_factory=list)

    @property
    def all_cyclic(self) -> bool:
        return not self.noncyclic

    def to_json(self) -> dict:
        return {
            "all_cyclic": self.all_cyclic,
            "k": self.k,
            "n": self.n,
            "noncyclic": [[[x + 1 for x in p] for p in t] for t in self.noncyclic],
            "noncyclic_count": len(self.noncyclic),
            "solutions": self.solutions,
        }

    def to_text(self) -> str:
        lines = [
            f"maps B_{self.n} -> S_{self.k}: {self.solutions} relation-satisfying tuples",
            f"  non-cyclic images: {len(self.noncyclic)}",
        ]
        for t in self.noncyclic[:5]:
            lines.append("    " + "  ".join("(" + " ".join(str(x + 1) for x in p) + ")" for p in t))
        return "\n".join(lines)


def sym_hom_enumerate(n: int, k: int, workers: int = 1, max_tuples: int = 10 ** 10) -> SymReport:
    """Every tuple ``(x_1..x_{n-1})`` in ``S_k`` satisfying the braid relations, with a cyclicity check.

    The search space is split by the choice of ``x_1`` across ``workers``
    processes; results are merged in input order so the report is
    independent of the worker count.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    space = factorial(k) ** (n - 1)
    if space > max_tuples:
        raise ValueError(f"(k!)^(n-1) = {space} exceeds the size guard {max_tuples}")
    if space > 10 ** 7:
        warnings.warn(f"enumerating up to {space} tuples", stacklevel=2)
    jobs = [(n, k, p) for p in itertools.permutations(range(k))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_solutions_from, jobs))
    else:
        parts = [_solutions_from(j) for j in jobs]
    report = SymReport(n, k)
    for part in parts:
        for t in part:
            report.solutions += 1
            if not generates_cyclic(t):
                report.noncyclic.append(t)
    return report
