"""
The planar page F_k and curves on it.

F_k is a disk with 2k+1 inner holes labelled 0..2k and outer boundary
labelled 2k+1.  Odd labels sit on the top row, even labels (other than 0) on
the bottom row, and 0 at the top left.  The fundamental group of the page,
based on the outer boundary, is free on loops x_0..x_{2k} around the inner
holes, ordered so that x_0 x_1 ... x_{2k} is the outer boundary.

A curve is recorded by the inner holes it encloses together with a based
word whose conjugacy class is the free homotopy class of the curve.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any, Iterable, Sequence

from .words import FreeWord, exponent_sums


@dataclasses.dataclass(frozen=True)
class Page:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    @property
    def holes(self) -> int:
        """Number of inner holes."""
        return 2 * self.k + 1

    @property
    def outer(self) -> int:
        return 2 * self.k + 1

    @property
    def labels(self) -> range:
        return range(2 * self.k + 2)

    @property
    def rank(self) -> int:
        """Rank of the free fundamental group of the page."""
        return 2 * self.k + 1


@dataclasses.dataclass(frozen=True)
class CurveClass:
    """
    A simple closed curve on the page.

    ``holes`` is the sorted tuple of enclosed inner holes.  ``word`` must have
    exponent sum +1 on each enclosed hole and 0 elsewhere.  ``action``
    optionally caches the twist automorphism as ``(images, inverse images)``;
    it is filled in when a curve is produced by a Hurwitz move and is ignored
    by equality, hashing and serialization.
    """

    holes: tuple[int, ...]
    word: FreeWord
    outer_parallel: bool = False
    action: Any = dataclasses.field(default=None, compare=False, repr=False)

    def __post_init__(self):
        holes = tuple(sorted(set(self.holes)))
        if len(holes) != len(self.holes):
            raise ValueError(f"repeated hole in {self.holes}")
        object.__setattr__(self, "holes", holes)
        if not holes:
            raise ValueError("a curve must enclose at least one hole")
        if holes[0] < 0:
            raise ValueError(f"negative hole label in {holes}")
        if not isinstance(self.word, FreeWord):
            object.__setattr__(self, "word", FreeWord.of(self.word))
        rank = max(holes[-1], max((abs(a) for a in self.word.letters), default=0) - 1) + 1
        sums = exponent_sums(self.word.letters, rank)
        expected = tuple(1 if i in holes else 0 for i in range(rank))
        if sums != expected:
            raise ValueError(
                f"word {self.word} has exponent sums {sums}, expected the indicator of {holes}")

    @classmethod
    def standard(cls, holes: Iterable[int], outer_parallel: bool = False) -> CurveClass:
        """Curve whose word is the product of the enclosed generators in increasing order."""
        holes = tuple(sorted(set(holes)))
        return cls(holes, FreeWord(tuple(i + 1 for i in holes)), outer_parallel)

    @property
    def hole_set(self) -> frozenset[int]:
        return frozenset(self.holes)

    def is_inner_parallel(self) -> bool:
        return len(self.holes) == 1

    def to_dict(self) -> dict:
        data = {"holes": list(self.holes), "word": self.word.symbols()}
        if self.outer_parallel:
            data["outer_parallel"] = True
        return data

    @classmethod
    def from_dict(cls, data: dict) -> CurveClass:
        try:
            holes = [int(h) for h in data["holes"]]
            word = data.get("word")
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed curve record {data!r}") from exc
        outer = bool(data.get("outer_parallel", False))
        if word is None:
            return cls.standard(holes, outer)
        if isinstance(word, str):
            return cls(tuple(holes), FreeWord.parse(word), outer)
        return cls(tuple(holes), FreeWord.from_symbols(word), outer)


@dataclasses.dataclass(frozen=True)
class Factorization:
    """
    A product of positive Dehn twists, in functional order.

    ``curves[0]`` is the leftmost factor, so ``curves[-1]`` is applied first.
    """

    page: Page
    curves: tuple[CurveClass, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        n = self.page.holes
        for curve in self.curves:
            if curve.holes[-1] >= n:
                raise ValueError(f"curve encloses hole {curve.holes[-1]} but F_{self.page.k} "
                                 f"has inner holes 0..{n - 1}")
            if max((abs(a) for a in curve.word.letters), default=0) > n:
                raise ValueError(f"word {curve.word} uses a generator outside x0..x{n - 1}")
            if curve.outer_parallel and len(curve.holes) != n:
                raise ValueError("an outer-parallel curve must enclose every inner hole")

    @property
    def k(self) -> int:
        return self.page.k

    def __len__(self) -> int:
        return len(self.curves)

    def __add__(self, other: Factorization) -> Factorization:
        if other.page != self.page:
            raise ValueError("factorizations live on different pages")
        return Factorization(self.page, self.curves + other.curves)

    def hole_sets(self) -> list[tuple[int, ...]]:
        return [c.holes for c in self.curves]

    def to_dict(self) -> dict:
        return {"k": self.page.k, "curves": [c.to_dict() for c in self.curves]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> Factorization:
        if not isinstance(data, dict) or "k" not in data:
            raise ValueError("factorization JSON needs a 'k' field")
        curves = data.get("curves", [])
        if not isinstance(curves, list):
            raise ValueError("'curves' must be a list")
        return cls(Page(data["k"]), tuple(CurveClass.from_dict(c) for c in curves))

    @classmethod
    def from_json(cls, text: str) -> Factorization:
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_hole_sets(cls, k: int, hole_sets: Sequence[Iterable[int]]) -> Factorization:
        """Factorization with the standard word on every curve."""
        page = Page(k)
        curves = []
        for holes in hole_sets:
            holes = tuple(sorted(set(holes)))
            curves.append(CurveClass.standard(holes, outer_parallel=len(holes) == page.holes))
        return cls(page, tuple(curves))


def _check_k(k) -> Page:
    return Page(k)


def canonical_hole_sets(k: int) -> list[tuple[int, ...]]:
    """Hole sets of V_0, V_1, ..., V_k, V_{k+1}."""
    _check_k(k)
    v0 = (0,) + tuple(range(1, 2 * k, 2))
    middle = [(2 * h - 1, 2 * h) for h in range(1, k + 1)]
    last = (0,) + tuple(range(2, 2 * k + 1, 2))
    return [v0, *middle, last]


def canonical_monodromy(k: int) -> Factorization:
    """
    The monodromy D(V_0) D(V_1) ... D(V_{k+1}) of the planar open book on F_k.

    Each curve carries the product of its enclosed generators in increasing
    order; for k = 1 these words satisfy the lantern relation with the four
    boundary twists.
    """
    page = _check_k(k)
    return Factorization(page, tuple(CurveClass.standard(h) for h in canonical_hole_sets(k)))


def boundary_parallel_curve(page: Page, label: int) -> CurveClass:
    """The curve parallel to boundary component ``label`` (2k+1 is the outer one)."""
    if not isinstance(label, int) or not 0 <= label <= page.outer:
        raise ValueError(f"label must lie in 0..{page.outer}, got {label!r}")
    if label == page.outer:
        return CurveClass.standard(range(page.holes), outer_parallel=True)
    return CurveClass.standard((label,))


def boundary_factorization(page: Page) -> Factorization:
    """D(c_0) D(c_1) ... D(c_{2k+1}): one twist about every boundary component."""
    return Factorization(page, tuple(boundary_parallel_curve(page, j) for j in page.labels))
