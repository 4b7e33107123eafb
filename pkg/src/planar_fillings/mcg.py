"""
Mapping classes of the holed disk F_k, compared through their action on the
free fundamental group together with a framing vector.

The action of a mapping class fixing the boundary pointwise on pi_1(F_k)
(based on the outer boundary) loses exactly the twists about the inner
boundary components.  Those are recovered by the framing vector, whose
i-th coordinate is the degree of the map obtained by capping off every
inner hole except hole i; for a product of twists it counts the curves
enclosing hole i.  The pair (automorphism, framing) is treated as a complete
invariant of mapping classes rel boundary.

Twist along a curve enclosing the consecutive holes a..b with word
w = x_a ... x_b: x_i -> w x_i w^-1 for a <= i <= b, other generators fixed.
Twists along other curves are obtained by transporting this formula with
half-twist braids, since D(beta(C)) = beta D(C) beta^-1.
"""

from __future__ import annotations

import dataclasses
import functools
import heapq
import json
from typing import Sequence

from .page import CurveClass, Factorization, Page
from .words import (
    DEFAULT_MAX_LENGTH,
    FreeWord,
    Images,
    Letters,
    compose_images,
    cyclic_reduce,
    identity_images,
    invert_letters,
    reduce_letters,
    substitute,
)


@dataclasses.dataclass(frozen=True)
class MappingClassRep:
    k: int
    images: tuple[FreeWord, ...]
    framing: tuple[int, ...]

    def __post_init__(self):
        n = 2 * self.k + 1
        object.__setattr__(self, "images", tuple(
            w if isinstance(w, FreeWord) else FreeWord.of(w) for w in self.images))
        object.__setattr__(self, "framing", tuple(int(f) for f in self.framing))
        if len(self.images) != n or len(self.framing) != n:
            raise ValueError(f"need {n} generator images and framing entries for k={self.k}")

    @classmethod
    def identity(cls, k: int) -> MappingClassRep:
        n = Page(k).rank
        return cls(k, tuple(FreeWord((i + 1,)) for i in range(n)), (0,) * n)

    @property
    def rank(self) -> int:
        return 2 * self.k + 1

    def letter_images(self) -> Images:
        return tuple(w.letters for w in self.images)

    def __call__(self, word: FreeWord) -> FreeWord:
        return FreeWord(substitute(self.letter_images(), word.letters))

    def fixes_boundary(self) -> bool:
        """True when the outer boundary loop x_0 x_1 ... x_2k is fixed."""
        boundary = tuple(range(1, self.rank + 1))
        return substitute(self.letter_images(), boundary) == boundary

    def to_dict(self) -> dict:
        return {"k": self.k,
                "images": [str(w) for w in self.images],
                "framing": list(self.framing)}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> MappingClassRep:
        return cls(int(data["k"]), tuple(FreeWord.parse(s) for s in data["images"]),
                   tuple(data["framing"]))


def _half_twist(rank: int, j: int, inverse: bool = False) -> Images:
    # Exchanges holes j and j+1 while fixing x_j x_{j+1}.
    images = list(identity_images(rank))
    a, b = j + 1, j + 2
    if inverse:
        images[j] = (b,)
        images[j + 1] = (-b, a, b)
    else:
        images[j] = (a, b, -a)
        images[j + 1] = (a,)
    return tuple(images)


def _interval_twist(rank: int, start: int, length: int) -> tuple[Images, Images]:
    w = tuple(range(start + 1, start + length + 1))
    w_inv = invert_letters(w)
    forward = list(identity_images(rank))
    backward = list(identity_images(rank))
    for j in range(start, start + length):
        forward[j] = reduce_letters(w + (j + 1,) + w_inv)
        backward[j] = reduce_letters(w_inv + (j + 1,) + w)
    return tuple(forward), tuple(backward)


def _is_standard(letters: Letters) -> bool:
    # Positive, each generator once, cyclically increasing.
    if not letters or min(letters) < 0 or len(set(letters)) != len(letters):
        return False
    descents = sum(1 for a, b in zip(letters, letters[1:] + letters[:1]) if a > b)
    return descents <= 1


def _standard_twist(rank: int, holes: Sequence[int]) -> tuple[Images, Images]:
    """Twist pair for the curve with word x_{i1} ... x_{ir}, i1 < ... < ir."""
    holes = sorted(holes)
    start, r = holes[0], len(holes)
    forward, backward = _interval_twist(rank, start, r)
    # Slide holes to the right, last one first; each step relabels one letter.
    beta, beta_inv = identity_images(rank), identity_images(rank)
    positions = list(range(start, start + r))
    for m in range(r - 1, -1, -1):
        p = positions[m]
        while p < holes[m]:
            beta = compose_images(_half_twist(rank, p, inverse=True), beta)
            beta_inv = compose_images(beta_inv, _half_twist(rank, p))
            p += 1
        positions[m] = p
    forward = compose_images(beta, compose_images(forward, beta_inv))
    backward = compose_images(beta, compose_images(backward, beta_inv))
    return forward, backward


class CurveRecognitionError(ValueError):
    """The word could not be identified as a simple closed curve."""


def _simplify(letters: Letters, rank: int,
              max_nodes: int = 200_000) -> tuple[Letters, Images, Images]:
    """
    Find a braid gamma with gamma(word) conjugate to a standard word.

    Best-first search over half-twist moves, ordered by cyclic word length.
    Returns (standard word, gamma, gamma^-1).
    """
    moves = [(_half_twist(rank, j, inv), _half_twist(rank, j, not inv))
             for j in range(rank - 1) for inv in (False, True)]
    start = cyclic_reduce(letters)
    # parent[word] = (previous word, move index); rotations share one key.
    parent: dict[Letters, tuple[Letters, int] | None] = {_rotation_key(start): None}
    heap = [(len(start), 0, start)]
    counter = 0
    goal = None
    while heap:
        _, _, word = heapq.heappop(heap)
        if _is_standard(word):
            goal = word
            break
        for index, (move, _) in enumerate(moves):
            cand = cyclic_reduce(substitute(move, word))
            key = _rotation_key(cand)
            if key in parent:
                continue
            parent[key] = (word, index)
            counter += 1
            if counter > max_nodes:
                raise CurveRecognitionError(
                    f"cannot simplify {FreeWord(letters)} to a standard curve")
            heapq.heappush(heap, (len(cand), counter, cand))
    if goal is None:
        raise CurveRecognitionError(f"cannot simplify {FreeWord(letters)} to a standard curve")
    path = []
    node = goal
    while parent[_rotation_key(node)] is not None:
        node, index = parent[_rotation_key(node)]
        path.append(index)
    gamma, gamma_inv = identity_images(rank), identity_images(rank)
    for index in reversed(path):
        move, move_inv = moves[index]
        gamma = compose_images(move, gamma)
        gamma_inv = compose_images(gamma_inv, move_inv)
    return goal, gamma, gamma_inv


def _rotation_key(word: Letters) -> Letters:
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


@functools.lru_cache(maxsize=4096)
def _twist_pair_from_word(letters: Letters, rank: int) -> tuple[Images, Images]:
    core = cyclic_reduce(letters)
    if _is_standard(core):
        return _standard_twist(rank, [a - 1 for a in core])
    std, gamma, gamma_inv = _simplify(core, rank)
    forward, backward = _standard_twist(rank, [a - 1 for a in std])
    forward = compose_images(gamma_inv, compose_images(forward, gamma))
    backward = compose_images(gamma_inv, compose_images(backward, gamma))
    return forward, backward


def twist_action(curve: CurveClass, rank: int) -> tuple[Images, Images]:
    """Images of the twist along ``curve`` and of its inverse."""
    if curve.action is not None:
        return curve.action
    return _twist_pair_from_word(curve.word.letters, rank)


def _indicator(holes: Sequence[int], rank: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if i in holes else 0 for i in range(rank))


def twist(curve: CurveClass, k: int) -> MappingClassRep:
    """The positive Dehn twist along ``curve`` on F_k."""
    rank = Page(k).rank
    if curve.holes[-1] >= rank:
        raise ValueError(f"curve encloses holes outside F_{k}")
    forward, _ = twist_action(curve, rank)
    return MappingClassRep(k, tuple(FreeWord(w) for w in forward), _indicator(curve.holes, rank))


def inverse_twist(curve: CurveClass, k: int) -> MappingClassRep:
    """The negative Dehn twist along ``curve``; its framing is negative."""
    rank = Page(k).rank
    _, backward = twist_action(curve, rank)
    return MappingClassRep(k, tuple(FreeWord(w) for w in backward),
                           _indicator(curve.holes, rank, -1))


def compose(a: MappingClassRep, b: MappingClassRep,
            max_length: int = DEFAULT_MAX_LENGTH) -> MappingClassRep:
    """``a o b``: apply ``b`` first."""
    if a.k != b.k:
        raise ValueError(f"cannot compose mapping classes on F_{a.k} and F_{b.k}")
    images = compose_images(a.letter_images(), b.letter_images(), max_length)
    return MappingClassRep(a.k, tuple(FreeWord(w) for w in images),
                           tuple(x + y for x, y in zip(a.framing, b.framing)))


def realize(f: Factorization, max_length: int = DEFAULT_MAX_LENGTH) -> MappingClassRep:
    result = MappingClassRep.identity(f.k)
    for curve in f.curves:
        result = compose(result, twist(curve, f.k), max_length)
    return result


def equal(a: MappingClassRep, b: MappingClassRep) -> bool:
    if a.k != b.k:
        raise ValueError(f"cannot compare mapping classes on F_{a.k} and F_{b.k}")
    return a.images == b.images and a.framing == b.framing


def _conjugated_curve(curve: CurveClass, conj: Images, conj_inv: Images, rank: int,
                      max_length: int) -> CurveClass:
    # The curve conj(curve); conj must be a pure braid so holes are unchanged.
    forward, backward = twist_action(curve, rank)
    action = (compose_images(conj, compose_images(forward, conj_inv, max_length), max_length),
              compose_images(conj, compose_images(backward, conj_inv, max_length), max_length))
    word = FreeWord(substitute(conj, curve.word.letters, max_length))
    return CurveClass(curve.holes, word, curve.outer_parallel, action=action)


def hurwitz_move(f: Factorization, i: int, inverse: bool = False,
                 max_length: int = DEFAULT_MAX_LENGTH) -> Factorization:
    """
    Elementary transformation at positions (i, i+1).

    The pair (a, b) becomes (b, D(b)^-1(a)); with ``inverse=True`` it becomes
    (D(a)(b), a).  The product of the factorization is unchanged.
    """
    if not isinstance(i, int) or not 0 <= i < len(f.curves) - 1:
        raise ValueError(f"Hurwitz index must lie in 0..{len(f.curves) - 2}, got {i!r}")
    rank = f.page.rank
    a, b = f.curves[i], f.curves[i + 1]
    if inverse:
        fwd, bwd = twist_action(a, rank)
        pair = (_conjugated_curve(b, fwd, bwd, rank, max_length), a)
    else:
        fwd, bwd = twist_action(b, rank)
        pair = (b, _conjugated_curve(a, bwd, fwd, rank, max_length))
    curves = f.curves[:i] + pair + f.curves[i + 2:]
    return Factorization(f.page, curves)
