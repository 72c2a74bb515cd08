"""Homomorphisms between braid groups given by generator images."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import networkx as nx

from .braid import (
    DEFAULT_FUEL,
    BraidWord,
    UndecidedError,
    commutes,
    is_trivial,
    linking_numbers,
    named,
    words_equal,
)

__all__ = [
    "Homomorphism",
    "Kind",
    "StandardKind",
    "RelationError",
    "standard_hom",
    "verify_hom",
    "relation_failures",
    "apply_hom",
    "transvect",
    "compose_hom",
    "centralizer_generators",
    "Fingerprint",
    "fingerprint",
    "match_standard",
    "WITNESSES",
    "witness_words",
    "hom_to_json",
    "hom_from_json",
]


class RelationError(ValueError):
    """A relation or precheck failed; ``where`` names the offending generator(s)."""

    def __init__(self, message: str, where: tuple[int, ...]):
        super().__init__(message)
        self.where = where


@dataclass(frozen=True)
class Homomorphism:
    source_strands: int
    target_strands: int
    images: tuple[BraidWord, ...]

    def __post_init__(self):
        if self.source_strands < 2:
            raise ValueError("source must have at least 2 strands")
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source_strands - 1:
            raise ValueError(f"need {self.source_strands - 1} generator images")
        for w in self.images:
            if w.strands != self.target_strands:
                raise ValueError(f"image {w} is not in B_{self.target_strands}")

    def image(self, i: int) -> BraidWord:
        """Image of sigma_i (1-based)."""
        return self.images[i - 1]

    def __call__(self, w: BraidWord) -> BraidWord:
        return apply_hom(self, w)


class Kind(Enum):
    Trivial = "trivial"
    Inclusion = "inclusion"
    Diagonal = "diagonal"
    FlipDiagonal = "flip"
    KTwistCabling = "cabling"
    ExceptionalB4B3 = "exceptional"
    Inversion = "inversion"
    Inner = "inner"


@dataclass(frozen=True)
class StandardKind:
    kind: Kind
    k: int = 0
    conjugator: BraidWord | None = None

    @classmethod
    def of(cls, kind: Kind | str, k: int = 0, conjugator: BraidWord | None = None) -> StandardKind:
        return cls(Kind(kind) if not isinstance(kind, Kind) else kind, k, conjugator)

    def __str__(self) -> str:
        if self.kind is Kind.KTwistCabling:
            return f"cabling(k={self.k})"
        return self.kind.value


def standard_hom(kind: StandardKind | Kind | str, n: int, target: int | None = None) -> Homomorphism:
    """Literal generator images of a standard map out of ``B_n``.

    ``target`` defaults to ``2n`` for the maps into ``B_2n`` and to ``n`` for
    automorphisms.  Trivial and Inclusion accept any ``target >= n`` (Trivial
    any target at all).
    """
    sk = kind if isinstance(kind, StandardKind) else StandardKind.of(kind)
    kd = sk.kind
    if kd is Kind.ExceptionalB4B3:
        if n != 4 or target not in (None, 3):
            raise ValueError("the exceptional map goes from B_4 to B_3")
        return Homomorphism(4, 3, (BraidWord(3, (1,)), BraidWord(3, (2,)), BraidWord(3, (1,))))
    if kd in (Kind.Inversion, Kind.Inner):
        if target not in (None, n):
            raise ValueError("automorphisms need target == source")
        if kd is Kind.Inversion:
            return Homomorphism(n, n, tuple(BraidWord(n, (-i,)) for i in range(1, n)))
        w = sk.conjugator if sk.conjugator is not None else BraidWord.identity(n)
        if w.strands != n:
            raise ValueError("inner conjugator lives in the wrong braid group")
        return Homomorphism(n, n, tuple(BraidWord(n, (i,)).conjugate(w) for i in range(1, n)))
    m = 2 * n if target is None else target
    if kd is Kind.Trivial:
        return Homomorphism(n, m, tuple(BraidWord.identity(m) for _ in range(1, n)))
    if kd is Kind.Inclusion:
        if m < n:
            raise ValueError("inclusion needs target >= source")
        return Homomorphism(n, m, tuple(BraidWord(m, (i,)) for i in range(1, n)))
    if m != 2 * n:
        raise ValueError(f"{kd.value} maps B_{n} into B_{2 * n}")
    if kd is Kind.Diagonal:
        return Homomorphism(n, m, tuple(BraidWord(m, (i, n + i)) for i in range(1, n)))
    if kd is Kind.FlipDiagonal:
        return Homomorphism(n, m, tuple(BraidWord(m, (i, -(n + i))) for i in range(1, n)))
    k = sk.k
    images = []
    for i in range(1, n):
        twist = (2 * i - 1,) * k if k >= 0 else (-(2 * i - 1),) * -k
        images.append(BraidWord(m, twist + (2 * i, 2 * i + 1, 2 * i - 1, 2 * i)))
    return Homomorphism(n, m, tuple(images))


def relation_failures(h: Homomorphism, fuel: int = DEFAULT_FUEL) -> list[tuple[int, int]]:
    """Pairs (i, j) of generators whose braid or commutation relation fails on the images."""
    bad = []
    n = h.source_strands
    for i in range(1, n):
        for j in range(i + 1, n):
            a, b = h.image(i), h.image(j)
            if j == i + 1:
                ok = words_equal(a * b * a, b * a * b, fuel)
            else:
                ok = commutes(a, b, fuel)
            if not ok:
                bad.append((i, j))
    return bad


def verify_hom(h: Homomorphism, fuel: int = DEFAULT_FUEL) -> bool:
    """Do the images satisfy every defining relation of ``B_source``?

    UndecidedError propagates with the failing pair attached as ``where``.
    """
    n = h.source_strands
    for i in range(1, n):
        for j in range(i + 1, n):
            a, b = h.image(i), h.image(j)
            try:
                if j == i + 1:
                    ok = words_equal(a * b * a, b * a * b, fuel)
                else:
                    ok = commutes(a, b, fuel)
            except UndecidedError as exc:
                exc.where = (i, j)
                raise
            if not ok:
                return False
    return True


def apply_hom(h: Homomorphism, w: BraidWord) -> BraidWord:
    if w.strands != h.source_strands:
        raise ValueError(f"word in B_{w.strands}, map defined on B_{h.source_strands}")
    inv = [img.inverse() for img in h.images]
    out = BraidWord.identity(h.target_strands)
    for x in w.letters:
        out = out * (h.images[x - 1] if x > 0 else inv[-x - 1])
    return out


def transvect(h: Homomorphism, t: BraidWord, fuel: int = DEFAULT_FUEL) -> Homomorphism:
    """The transvection ``g -> h(g) t^L(g)`` by an element centralizing the image."""
    if t.strands != h.target_strands:
        raise ValueError("transvecting element lives in the wrong braid group")
    for i, img in enumerate(h.images, 1):
        if not commutes(t, img, fuel):
            raise RelationError(f"{t} does not commute with the image of sigma_{i}", (i,))
    return Homomorphism(h.source_strands, h.target_strands, tuple(img * t for img in h.images))


def compose_hom(outer: Homomorphism, inner: Homomorphism) -> Homomorphism:
    """``outer o inner``."""
    if inner.target_strands != outer.source_strands:
        raise ValueError("inner target does not match outer source")
    return Homomorphism(inner.source_strands, outer.target_strands,
                        tuple(apply_hom(outer, img) for img in inner.images))


def _full_twist(m: int, first: int, count: int) -> BraidWord:
    """Full twist of ``count`` consecutive strands starting at ``first`` inside ``B_m``."""
    if count < 2:
        return BraidWord.identity(m)
    return named("z", count).shifted(first - 1, m)


def centralizer_generators(kind: StandardKind | Kind | str, n: int) -> list[BraidWord]:
    """Generators of the centralizer of the image of a standard map ``B_n -> B_2n``."""
    sk = kind if isinstance(kind, StandardKind) else StandardKind.of(kind)
    m = 2 * n
    kd = sk.kind
    if kd is Kind.Trivial:
        return [BraidWord(m, (i,)) for i in range(1, m)]
    if kd is Kind.Inclusion:
        # braids supported outside the first n punctures: the last n strands
        # together with the twist about the disk holding the first n
        outside = [BraidWord(m, (i,)) for i in range(n + 1, m)]
        # strand n+1 running once around the whole block of the first n
        loop = BraidWord(m, tuple(range(n, 0, -1)) + tuple(range(1, n + 1)))
        return outside + [_full_twist(m, 1, n), loop]
    if kd is Kind.Diagonal:
        # swapping the two n-strand blocks as parallel cables
        swap = BraidWord(m, tuple(j for r in range(n) for j in range(n - r, 2 * n - r)))
        return [_full_twist(m, 1, n), _full_twist(m, n + 1, n), swap]
    if kd is Kind.FlipDiagonal:
        return [_full_twist(m, 1, n), _full_twist(m, n + 1, n), named("z", m)]
    if kd is Kind.KTwistCabling:
        return [named("z", m), BraidWord(m, tuple(range(1, m, 2)))]
    raise ValueError(f"no centralizer catalog for {kd.value}")


# Witness words live in the kernel of the exponent sum, so every transvection
# leaves their images unchanged.
WITNESSES: tuple[tuple[str, tuple[int, ...]], ...] = (
    ("s1 s2^-1", (1, -2)),
    ("s1 s3^-1", (1, -3)),
    ("(s1 s3^-1)^2", (1, -3, 1, -3)),
    ("(s2 s4^-1)^2", (2, -4, 2, -4)),
    ("a1 s1 a1^-1 s2^-1", ()),
)


def witness_words(n: int) -> list[tuple[str, BraidWord]]:
    """Witnesses that make sense in ``B_n`` (those using sigma_j with j >= n are dropped)."""
    out = []
    for name, letters in WITNESSES:
        if name.startswith("a1"):
            if n < 3:
                continue
            a1 = named("alpha1", n)
            w = BraidWord(n, a1.letters + (1,) + a1.inverse().letters + (-2,))
        elif max(abs(x) for x in letters) >= n:
            continue
        else:
            w = BraidWord(n, letters)
        out.append((name, w))
    return out


@dataclass
class Fingerprint:
    """Data of a homomorphism that survives transvection and, up to relabeling, automorphisms.

    ``witness_data`` holds, per witness, whether the image is trivial, the
    cycle type of its permutation and the sorted linking numbers of its
    smallest pure power.  ``linking_graph`` joins strands with a nonzero
    linking number in some of those powers; each edge carries the vector of
    linking numbers over all witnesses.
    ``sign_bipartition_flag`` says the linked strands split into exactly two
    blocks whose signed linking patterns are mirror images but not copies of
    each other (a positive copy of the source next to a negative one).
    """

    cyclic_image: bool
    witness_data: list[tuple[str, bool, tuple[int, ...], tuple[int, ...]]]
    sign_bipartition_flag: bool
    linking_graph: nx.Graph = field(repr=False)

    def negated(self) -> Fingerprint:
        data = [(name, triv, ct, tuple(sorted(-x for x in lk)))
                for name, triv, ct, lk in self.witness_data]
        return Fingerprint(self.cyclic_image, data, self.sign_bipartition_flag,
                           _negate_graph(self.linking_graph))

    def _same(self, other: Fingerprint) -> bool:
        return (
            self.cyclic_image == other.cyclic_image
            and self.witness_data == other.witness_data
            and self.sign_bipartition_flag == other.sign_bipartition_flag
            and nx.is_isomorphic(self.linking_graph, other.linking_graph,
                                 edge_match=lambda e1, e2: e1["link"] == e2["link"])
        )

    def matches(self, other: Fingerprint, allow_mirror: bool = True) -> bool:
        """Equality up to strand relabeling and, optionally, a global sign flip."""
        return self._same(other) or (allow_mirror and self._same(other.negated()))

    def graph_hash(self) -> str:
        g = nx.Graph()
        g.add_nodes_from(self.linking_graph.nodes)
        for u, v, d in self.linking_graph.edges(data=True):
            g.add_edge(u, v, link=",".join(map(str, d["link"])))
        return nx.weisfeiler_lehman_graph_hash(g, edge_attr="link")

    def to_json(self) -> dict:
        return {
            "cyclic_image": self.cyclic_image,
            "sign_bipartition_flag": self.sign_bipartition_flag,
            "witnesses": [
                {"witness": name, "identity_image": triv, "cycle_type": list(ct),
                 "linking": list(lk)}
                for name, triv, ct, lk in self.witness_data
            ],
            "linking_graph_hash": self.graph_hash(),
        }


def _negate_graph(g: nx.Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.nodes)
    for u, v, d in g.edges(data=True):
        out.add_edge(u, v, link=tuple(-x for x in d["link"]))
    return out


def _mirror_blocks(g: nx.Graph) -> bool:
    comps = [c for c in nx.connected_components(g) if len(c) > 1]
    if len(comps) != 2:
        return False
    a, b = (g.subgraph(c).copy() for c in comps)

    def iso(x, y):
        return nx.is_isomorphic(x, y, edge_match=lambda e1, e2: e1["link"] == e2["link"])

    return iso(a, _negate_graph(b)) and not iso(a, b)


def fingerprint(h: Homomorphism, fuel: int = DEFAULT_FUEL, verified: bool = False) -> Fingerprint:
    if not verified and not verify_hom(h, fuel):
        raise ValueError("fingerprint needs a verified homomorphism")
    n = h.source_strands
    cyclic = n == 2 or all(words_equal(h.images[0], img, fuel) for img in h.images[1:])
    data = []
    pure_links: list[dict[tuple[int, int], int]] = []
    for name, w in witness_words(n):
        img = apply_hom(h, w)
        triv = is_trivial(img, fuel)
        perm = img.permutation()
        # the smallest pure power keeps linking data for non-pure images
        lk = linking_numbers(img ** perm.order())
        pure_links.append(lk)
        data.append((name, triv, perm.cycle_type(), tuple(sorted(lk.values()))))
    g = nx.Graph()
    for idx, lk in enumerate(pure_links):
        for pair in lk:
            if not g.has_edge(*pair):
                g.add_edge(*pair, link=[0] * len(pure_links))
            g.edges[pair]["link"][idx] = lk[pair]
    for u, v in g.edges:
        g.edges[u, v]["link"] = tuple(g.edges[u, v]["link"])
    return Fingerprint(cyclic, data, _mirror_blocks(g), g)


def match_standard(h: Homomorphism, ks: Sequence[int] = range(-3, 4),
                   fuel: int = DEFAULT_FUEL) -> list[str]:
    """Standard maps ``B_n -> B_2n`` whose fingerprint matches that of ``h``.

    A match is evidence of equivalence, an empty list is "no match" (not a
    proof of inequivalence to every standard map).
    """
    n = h.source_strands
    if h.target_strands != 2 * n:
        raise ValueError("standard catalog covers maps B_n -> B_2n")
    fp = fingerprint(h, fuel)
    catalog = [StandardKind.of(x) for x in ("trivial", "inclusion", "diagonal", "flip")]
    catalog += [StandardKind.of("cabling", k) for k in ks]
    return [str(sk) for sk in catalog if fingerprint(standard_hom(sk, n), fuel, verified=True).matches(fp)]


def hom_to_json(h: Homomorphism) -> str:
    """Stable JSON encoding: sorted keys, integers only."""
    return json.dumps(
        {
            "images": [list(w.letters) for w in h.images],
            "source_strands": h.source_strands,
            "target_strands": h.target_strands,
        },
        sort_keys=True,
    )


def hom_from_json(text: str | dict) -> Homomorphism:
    obj = json.loads(text) if isinstance(text, str) else text
    m = int(obj["target_strands"])
    return Homomorphism(int(obj["source_strands"]), m,
                        tuple(BraidWord(m, tuple(int(x) for x in img)) for img in obj["images"]))
