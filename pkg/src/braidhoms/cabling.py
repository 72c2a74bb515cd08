"""Cables, the interior/exterior splitting of multicurve stabilizers, and cabling normalization.

Strands are grouped into consecutive cables ``[1..p1], [p1+1..p1+p2], ...``.
An element of the stabilizer of the cable curves is written ``iota(f) beta(e)``:
interior braids ``f_j`` inside each cable followed by an exterior braid ``e``
whose strands have been replaced by parallel cables.

Interior and exterior components are read off a word by deleting strands,
which is well defined on braids.  Cable twists of size-2 cables are plain
integers (``B_2`` is infinite cyclic).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .braid import DEFAULT_FUEL, BraidWord, forget_strands, named, words_equal
from .homs import Homomorphism, StandardKind, apply_hom, standard_hom, transvect, verify_hom

__all__ = [
    "CableStructure",
    "SemidirectElement",
    "CablingError",
    "iota",
    "beta",
    "embed_F",
    "interior_part",
    "exterior_part",
    "decompose",
    "interior_writhe",
    "crossed_vector",
    "CrossedVector",
    "cable_twist",
    "CablingClassification",
    "classify_cabling",
]


class CablingError(ValueError):
    """Input is not in cabling position, or is not a section of the exterior projection."""


@dataclass(frozen=True)
class CableStructure:
    pattern: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pattern", tuple(int(p) for p in self.pattern))
        if not self.pattern or any(p < 1 for p in self.pattern):
            raise ValueError("cable sizes must be >= 1")

    @classmethod
    def pairs(cls, k: int) -> CableStructure:
        return cls((2,) * k)

    @classmethod
    def parse(cls, text: str) -> CableStructure:
        """Parse ``"P: 2 2 2"``."""
        m = re.match(r"^\s*P:(.*)$", text)
        if not m:
            raise ValueError(f"not a cable pattern: {text!r}")
        return cls(tuple(int(t) for t in m.group(1).split()))

    def __str__(self) -> str:
        return "P: " + " ".join(map(str, self.pattern))

    @property
    def count(self) -> int:
        return len(self.pattern)

    @property
    def total(self) -> int:
        return sum(self.pattern)

    def offset(self, j: int) -> int:
        """Number of strands before cable ``j`` (1-based)."""
        return sum(self.pattern[: j - 1])

    def strands_of(self, j: int) -> range:
        o = self.offset(j)
        return range(o + 1, o + self.pattern[j - 1] + 1)

    def block_permutation(self, w: BraidWord) -> tuple[int, ...] | None:
        """Where each cable ends up under ``w``, or None if the partition is not preserved."""
        perm = w.permutation()
        owner = {s: j for j in range(1, self.count + 1) for s in self.strands_of(j)}
        out = []
        for j in range(1, self.count + 1):
            targets = {owner[perm(s)] for s in self.strands_of(j)}
            if len(targets) != 1:
                return None
            t = targets.pop()
            if self.pattern[t - 1] != self.pattern[j - 1]:
                return None
            out.append(t)
        return tuple(out)


@dataclass(frozen=True)
class SemidirectElement:
    exterior: BraidWord
    interiors: tuple[BraidWord, ...]

    def __post_init__(self):
        object.__setattr__(self, "interiors", tuple(self.interiors))
        if len(self.interiors) != self.exterior.strands:
            raise ValueError("one interior braid per exterior strand")

    def check(self, cs: CableStructure):
        if cs.count != self.exterior.strands:
            raise ValueError("exterior strand count differs from cable count")
        for j, f in enumerate(self.interiors, 1):
            if f.strands != cs.pattern[j - 1]:
                raise ValueError(f"interior {j} has {f.strands} strands, cable has {cs.pattern[j - 1]}")
        perm = self.exterior.permutation()
        for j in range(1, cs.count + 1):
            if cs.pattern[perm(j) - 1] != cs.pattern[j - 1]:
                raise ValueError("exterior braid permutes cables of different sizes")


def iota(j: int, f: BraidWord, cs: CableStructure) -> BraidWord:
    if not 1 <= j <= cs.count:
        raise ValueError(f"no cable {j}")
    if f.strands != cs.pattern[j - 1]:
        raise ValueError(f"cable {j} has {cs.pattern[j - 1]} strands, braid has {f.strands}")
    return f.shifted(cs.offset(j), cs.total)


def beta(w: BraidWord, cs: CableStructure) -> BraidWord:
    """Replace every strand of ``w`` by its cable, with no crossings inside cables."""
    if w.strands != cs.count:
        raise ValueError("exterior braid must have one strand per cable")
    sizes = list(cs.pattern)  # sizes[pos - 1]: size of the cable currently at pos
    out: list[int] = []
    for x in w.letters:
        i = abs(x)
        p, q = sizes[i - 1], sizes[i]
        if p != q:
            raise ValueError("beta only moves cables of equal size past each other")
        start = sum(sizes[: i - 1])  # strands left of the two cables
        # cable at i (size p) crosses the cable at i+1: strand-by-strand grid
        letters = []
        for r in range(p):
            for c in range(q):
                letters.append(start + p - r + c)
        if x < 0:
            letters = [-y for y in reversed(letters)]
        out.extend(letters)
        sizes[i - 1], sizes[i] = q, p
    return BraidWord(cs.total, tuple(out)).reduced()


def embed_F(e: SemidirectElement, cs: CableStructure) -> BraidWord:
    e.check(cs)
    out = BraidWord.identity(cs.total)
    for j, f in enumerate(e.interiors, 1):
        out = out * iota(j, f, cs)
    return out * beta(e.exterior, cs)


def interior_part(w: BraidWord, j: int, cs: CableStructure) -> BraidWord:
    """Braid traced by the strands starting in cable ``j`` (the j-th interior component)."""
    if cs.block_permutation(w) is None:
        raise CablingError("word does not preserve the cable partition")
    return forget_strands(w, cs.strands_of(j))


def exterior_part(w: BraidWord, cs: CableStructure) -> BraidWord:
    """Collapse every cable to one strand (keep the first strand of each cable)."""
    if cs.block_permutation(w) is None:
        raise CablingError("word does not preserve the cable partition")
    return forget_strands(w, [cs.offset(j) + 1 for j in range(1, cs.count + 1)])


def decompose(w: BraidWord, cs: CableStructure) -> SemidirectElement:
    return SemidirectElement(exterior_part(w, cs),
                             tuple(interior_part(w, j, cs) for j in range(1, cs.count + 1)))


def interior_writhe(w: BraidWord, j: int, cs: CableStructure) -> int:
    """Signed crossings between the two strands starting in cable ``j``."""
    if cs.pattern[j - 1] != 2:
        raise CablingError(f"cable {j} has size {cs.pattern[j - 1]}, writhe needs size 2")
    perm = w.permutation()
    owner = {s: c for c in range(1, cs.count + 1) for s in cs.strands_of(c)}
    if len({owner[perm(s)] for s in cs.strands_of(j)}) != 1:
        raise CablingError(f"cable {j} is split by the word")
    return forget_strands(w, cs.strands_of(j)).exponent_sum()


def cable_twist(m: int) -> BraidWord:
    """Product of the half-twists of all size-2 cables of ``B_m``: s1 s3 ... s_{m-1}."""
    return BraidWord(m, tuple(range(1, m, 2)))


def _pairs_for(h: Homomorphism) -> CableStructure:
    if h.target_strands != 2 * h.source_strands:
        raise CablingError("cabling maps go from B_n to B_2n")
    return CableStructure.pairs(h.source_strands)


def _check_cabling_position(h: Homomorphism, cs: CableStructure):
    n = h.source_strands
    for i, img in enumerate(h.images, 1):
        blocks = cs.block_permutation(img)
        want = tuple(i + 1 if j == i else i if j == i + 1 else j for j in range(1, n + 1))
        if blocks != want:
            raise CablingError(f"image of sigma_{i} does not swap cables {i}, {i + 1}")


@dataclass(frozen=True)
class CrossedVector:
    """One twist count per size-2 cable: an element of ``A = Z^n``."""

    entries: tuple[int, ...]

    def acted_on_by(self, g: BraidWord) -> CrossedVector:
        """Module action of an exterior braid: entry ``j`` becomes ``v[perm_g(j)]``."""
        if g.strands != len(self.entries):
            raise ValueError("exterior braid must have one strand per entry")
        perm = g.permutation()
        return CrossedVector(tuple(self.entries[perm(j) - 1] for j in range(1, len(self.entries) + 1)))

    def __len__(self) -> int:
        return len(self.entries)


def crossed_vector(h: Homomorphism, g: BraidWord) -> CrossedVector:
    """Per-cable twist of ``h(g) beta(g)^-1`` for a cabling section ``h``."""
    cs = _pairs_for(h)
    _check_cabling_position(h, cs)
    d = apply_hom(h, g) * beta(g, cs).inverse()
    if cs.block_permutation(d) != tuple(range(1, cs.count + 1)):
        raise CablingError("h(g) beta(g)^-1 moves cables: h is not a section")
    return CrossedVector(tuple(interior_writhe(d, j, cs) for j in range(1, cs.count + 1)))


@dataclass
class CablingClassification:
    n: int
    k_canonical: int
    x: int
    y: int
    interior_matrix: list[list[int]]
    conjugator_exponents: list[int]
    transvection_exponent: int
    center_exponent: int = 0
    certified: bool = False
    notes: list[str] = field(default_factory=list)

    def check_invariants(self) -> bool:
        K, m, half = self.interior_matrix, self.conjugator_exponents, self.x // 2
        return (
            self.y - self.x == self.k_canonical
            and self.x % 2 == 0
            and all(m[i + 1] - m[i] + K[i][i + 1] - half == 0 for i in range(self.n - 1))
        )

    def to_json(self) -> dict:
        return {
            "center_exponent": self.center_exponent,
            "certified": self.certified,
            "conjugator_exponents": self.conjugator_exponents,
            "interior_matrix": self.interior_matrix,
            "k_canonical": self.k_canonical,
            "n": self.n,
            "transvection_exponent": self.transvection_exponent,
            "x": self.x,
            "y": self.y,
        }

    def to_text(self) -> str:
        lines = [
            f"k_canonical: {self.k_canonical}",
            f"x: {self.x}",
            f"y: {self.y}",
            "interior_matrix:",
        ]
        lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in self.interior_matrix]
        lines.append("m: " + " ".join(map(str, self.conjugator_exponents)))
        lines.append(f"transvection_exponent: {self.transvection_exponent}")
        lines.append(f"center_exponent: {self.center_exponent}")
        lines.append(f"certified: {str(self.certified).lower()}")
        return "\n".join(lines)


def classify_cabling(h: Homomorphism, fuel: int = DEFAULT_FUEL) -> CablingClassification:
    """Normalize a map in standard cabling position to a k-twist cabling.

    Row ``i`` of the interior matrix is the cable-twist vector of the image of
    sigma_i (after removing any central twist).  With x the common off-block
    value of the crossed vectors of sigma_j^2 and y the on-block value, the
    twist ``(s1 s3 ... s_{2n-1})^(-x/2)`` followed by conjugation with
    ``s1^m1 s3^m2 ...`` turns the map into the (y - x)-twist cabling.
    """
    n = h.source_strands
    cs = _pairs_for(h)
    if not verify_hom(h, fuel):
        raise CablingError("images do not satisfy the braid relations")
    _check_cabling_position(h, cs)
    m2 = 2 * n
    notes = []

    # strip a central twist from the exterior: Pi_e(h(s_i)) must be s_i z^s
    ext = [exterior_part(img, cs) for img in h.images]
    shifts = set()
    for e in ext:
        q, r = divmod(e.exponent_sum() - 1, n * (n - 1))
        if r:
            raise CablingError("exterior component is not a generator times a central element")
        shifts.add(q)
    if len(shifts) != 1:
        raise CablingError("exterior components carry different central twists")
    s = shifts.pop()
    z_n = named("z", n)
    for i, e in enumerate(ext, 1):
        if not words_equal(e, BraidWord(n, (i,)) * z_n ** s, fuel):
            raise CablingError(f"exterior of sigma_{i} is not sigma_{i} up to the center")
    rho = h
    if s:
        rho = transvect(rho, named("z", m2) ** -s, fuel)
        notes.append(f"removed z^{s}")

    K = []
    for i, img in enumerate(rho.images, 1):
        d = img * beta(BraidWord(n, (i,)), cs).inverse()
        if cs.block_permutation(d) != tuple(range(1, n + 1)):
            raise CablingError(f"image of sigma_{i} is not a section value")
        K.append([interior_writhe(d, j, cs) for j in range(1, n + 1)])

    # d(s_j^2) = K_j + swap_j(K_j): off-block entries 2K[j][l], on-block K[j][j] + K[j][j+1]
    xs, ys = set(), set()
    for j in range(n - 1):
        ys.add(K[j][j] + K[j][j + 1])
        for col in range(n):
            if col not in (j, j + 1):
                xs.add(2 * K[j][col])
    if len(ys) != 1 or len(xs) > 1:
        raise CablingError("crossed vectors are not of the form (x,..,x,y,y,x,..,x)")
    y = ys.pop()
    if xs:
        x = xs.pop()
    else:
        x = 0
        notes.append("n = 2: x is free, fixed to 0 (k only determined up to even shifts)")
    if x % 2:
        raise CablingError(f"odd off-block twist x = {x}: not a section")
    half = x // 2

    m = [0]
    for i in range(n - 1):
        m.append(m[i] - K[i][i + 1] + half)

    k = y - x
    out = CablingClassification(n, k, x, y, K, m, -half, s, notes=notes)

    tau = cable_twist(m2)
    normal = transvect(rho, tau ** -half, fuel) if half else rho
    conj = BraidWord.identity(m2)
    for j, mj in enumerate(m, 1):
        conj = conj * BraidWord(m2, (2 * j - 1,)) ** mj
    target = standard_hom(StandardKind.of("cabling", k), n)
    out.certified = all(words_equal(img.conjugate(conj), want, fuel)
                        for img, want in zip(normal.images, target.images))
    return out


def classification_json(c: CablingClassification) -> str:
    return json.dumps(c.to_json(), sort_keys=True)
