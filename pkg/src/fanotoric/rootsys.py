"""Root systems of semisimple Lie algebras in exact rational arithmetic.

Coordinate conventions used throughout the package:

* An element h of the real Cartan subspace is stored by its evaluations
  against the simple roots, coords = (alpha_1(h), ..., alpha_r(h)).
* A functional on the Cartan subspace is stored by its coefficients over
  the simple-root basis; roots are the integer instances.
* Compact-torus elements W are represented by their real avatar h with
  W = -i h, so the chamber pairing i alpha(W) equals alpha(h) and every
  downstream computation stays rational.
* The Killing form restricted to the Cartan subspace is
  B(h, h') = sum over all roots beta of beta(h) beta(h'); in evaluation
  coordinates its Gram matrix is the integer matrix
  sum_beta c(beta) c(beta)^T over root coefficient vectors.  This is the
  genuine Killing normalization, not a rescaled invariant form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .errors import InputError

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "F": 4, "G": 2}


@dataclass(frozen=True, order=True)
class SimpleType:
    """An admissible simple Dynkin type, e.g. SimpleType('D', 10)."""

    letter: str
    rank: int

    def __post_init__(self) -> None:
        if self.letter not in "ABCDEFG":
            raise InputError(f"unknown Dynkin letter {self.letter!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InputError(f"rank must be a positive integer, got {self.rank!r}")
        if self.letter == "E":
            if self.rank not in (6, 7, 8):
                raise InputError(f"E{self.rank} is not admissible")
        elif self.letter in ("F", "G"):
            if self.rank != _MIN_RANK[self.letter]:
                raise InputError(f"{self.letter}{self.rank} is not admissible")
        elif self.rank < _MIN_RANK[self.letter]:
            raise InputError(
                f"{self.letter}{self.rank} is not admissible "
                f"(min rank {_MIN_RANK[self.letter]})"
            )

    @property
    def root_count(self) -> int:
        r = self.rank
        if self.letter == "A":
            return r * (r + 1)
        if self.letter in ("B", "C"):
            return 2 * r * r
        if self.letter == "D":
            return 2 * r * (r - 1)
        if self.letter == "G":
            return 12
        if self.letter == "F":
            return 48
        return {6: 72, 7: 126, 8: 240}[r]

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Cartan matrix with entries a[i][j] = <alpha_i, alpha_j^check>."""
        r = self.rank
        a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

        def link(i: int, j: int) -> None:
            a[i][j] = -1
            a[j][i] = -1

        if self.letter in ("A", "B", "C", "F"):
            for i in range(r - 1):
                link(i, i + 1)
            if self.letter == "B":
                a[r - 2][r - 1] = -2
            elif self.letter == "C":
                a[r - 1][r - 2] = -2
            elif self.letter == "F":
                a[1][2] = -2
        elif self.letter == "D":
            for i in range(r - 2):
                link(i, i + 1)
            link(r - 3, r - 1)
        elif self.letter == "G":
            a[0][1] = -1
            a[1][0] = -3
        else:  # E6, E7, E8
            edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
            if r >= 7:
                edges.append((5, 6))
            if r == 8:
                edges.append((6, 7))
            for i, j in edges:
                link(i, j)
        return tuple(tuple(row) for row in a)


def diagram_automorphisms(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Generators of the nontrivial diagram symmetries of a simple type.

    Each generator is a node permutation p with image p[i]; types without
    outer symmetries yield an empty tuple.
    """
    r = t.rank
    gens: list[tuple[int, ...]] = []
    if t.letter == "A" and r >= 2:
        gens.append(tuple(reversed(range(r))))
    elif t.letter == "D":
        swap = list(range(r))
        swap[r - 2], swap[r - 1] = swap[r - 1], swap[r - 2]
        gens.append(tuple(swap))
        if r == 4:
            tri = list(range(4))
            tri[0], tri[2] = tri[2], tri[0]
            gens.append(tuple(tri))
    elif t.letter == "E" and r == 6:
        gens.append((5, 1, 4, 3, 2, 0))
    return tuple(gens)


@dataclass(frozen=True)
class VectorH:
    """Element of the real Cartan subspace, in simple-root evaluations."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "VectorH":
        return cls((Fraction(0),) * rank)

    @classmethod
    def unit(cls, rank: int, index: int) -> "VectorH":
        return cls(tuple(Fraction(1 if i == index else 0) for i in range(rank)))

    def __add__(self, other: "VectorH") -> "VectorH":
        if len(self.coords) != len(other.coords):
            raise InputError("rank mismatch")
        return VectorH(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k: Fraction | int) -> "VectorH":
        k = Fraction(k)
        return VectorH(tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class FunctionalH:
    """Functional on the Cartan subspace, in simple-root coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_root(cls, root: Root) -> "FunctionalH":
        return cls(tuple(Fraction(c) for c in root))


@dataclass(frozen=True)
class RootSystem:
    """A semisimple root datum with its Killing Gram matrix.

    roots are coefficient vectors over the concatenated simple-root basis,
    sorted lexicographically; positive[i] flags the positive half.
    """

    components: tuple[SimpleType, ...]
    roots: tuple[Root, ...]
    positive: tuple[bool, ...]
    gram: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(t.rank for t in self.components)

    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r, p in zip(self.roots, self.positive) if p)

    def killing_form(self, h1: VectorH, h2: VectorH) -> Fraction:
        if len(h1.coords) != self.rank or len(h2.coords) != self.rank:
            raise InputError("rank mismatch")
        total = Fraction(0)
        for gi, x in zip(self.gram, h1.coords):
            if x:
                total += x * sum(
                    (g * y for g, y in zip(gi, h2.coords) if y), Fraction(0)
                )
        return total


def _component_roots(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """All roots of one component by reflection closure from the base."""
    r = len(cartan)
    cols = [tuple(cartan[i][j] for i in range(r)) for j in range(r)]
    simple = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    found: set[Root] = set(simple)
    frontier: list[Root] = list(simple)
    while frontier:
        nxt: list[Root] = []
        for root in frontier:
            for j in range(r):
                pairing = sum(c * a for c, a in zip(root, cols[j]) if c)
                if pairing == 0:
                    continue
                image = list(root)
                image[j] -= pairing
                image_t = tuple(image)
                if image_t not in found:
                    found.add(image_t)
                    nxt.append(image_t)
        frontier = nxt
    return sorted(found)


def build_root_system(spec: Iterable[SimpleType]) -> RootSystem:
    """Construct the root system of an ordered list of simple types."""
    types = tuple(spec)
    if not types:
        raise InputError("component list is empty")
    total = sum(t.rank for t in types)
    all_roots: list[Root] = []
    offset = 0
    for t in types:
        comp = _component_roots(t.cartan_matrix())
        if len(comp) != t.root_count:
            raise AssertionError(
                f"{t.letter}{t.rank}: generated {len(comp)} roots, "
                f"expected {t.root_count}"
            )
        pad_left = (0,) * offset
        pad_right = (0,) * (total - offset - t.rank)
        all_roots.extend(pad_left + c + pad_right for c in comp)
        offset += t.rank
    all_roots.sort()
    positive = tuple(all(c >= 0 for c in root) for root in all_roots)
    gram = [[0] * total for _ in range(total)]
    for root in all_roots:
        support = [(i, c) for i, c in enumerate(root) if c]
        for i, ci in support:
            for j, cj in support:
                gram[i][j] += ci * cj
    return RootSystem(
        components=types,
        roots=tuple(all_roots),
        positive=positive,
        gram=tuple(tuple(row) for row in gram),
    )


def killing_dual(rs: RootSystem, functional: FunctionalH) -> VectorH:
    """The unique h with B(h, .) = functional, solved exactly."""
    if len(functional.coeffs) != rs.rank:
        raise InputError("rank mismatch")
    return VectorH(_linalg.solve_square(rs.gram, functional.coeffs))


def evaluate(functional: FunctionalH, h: VectorH) -> Fraction:
    """Pairing of a functional with a Cartan element in these coordinates."""
    if len(functional.coeffs) != len(h.coords):
        raise InputError("rank mismatch")
    return sum(
        (c * x for c, x in zip(functional.coeffs, h.coords)), Fraction(0)
    )
