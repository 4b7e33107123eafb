"""
Multiplicities of a factorization: M[j] counts the curves enclosing hole j and
J[i][j] counts the curves enclosing both holes i and j.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Iterable

from .page import Factorization, Page


@dataclasses.dataclass(frozen=True)
class InvariantTable:
    """
    Multiplicity vector ``M`` and joint-multiplicity matrix ``J`` over the
    inner holes 0..2k.  ``J`` is stored densely with a zero diagonal.
    """

    k: int
    M: tuple[int, ...]
    J: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = Page(self.k).holes
        M = tuple(int(x) for x in self.M)
        J = tuple(tuple(int(x) for x in row) for row in self.J)
        if len(M) != n or len(J) != n or any(len(row) != n for row in J):
            raise ValueError(f"invariant table for k={self.k} must be indexed by 0..{n - 1}")
        for i in range(n):
            if M[i] < 0:
                raise ValueError(f"negative multiplicity M[{i}]")
            if J[i][i] != 0:
                raise ValueError("diagonal of J must be zero")
            for j in range(n):
                if J[i][j] != J[j][i]:
                    raise ValueError(f"J is not symmetric at ({i}, {j})")
                if J[i][j] < 0 or J[i][j] > min(M[i], M[j]):
                    raise ValueError(f"J[{i}][{j}]={J[i][j]} out of range")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "J", J)

    @property
    def size(self) -> int:
        return len(self.M)

    def to_dict(self) -> dict:
        return {"k": self.k, "M": list(self.M), "J": [list(row) for row in self.J]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> InvariantTable:
        try:
            return cls(int(data["k"]), tuple(data["M"]), tuple(tuple(r) for r in data["J"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed invariant table: {exc}") from exc

    def format_text(self) -> str:
        """Aligned text: the M row, then the J matrix with '.' on the diagonal."""
        n = self.size
        width = max(2, len(str(n - 1)), *(len(str(x)) for x in self.M)) + 1
        header = " " * 4 + "".join(f"{j:>{width}}" for j in range(n))
        lines = [f"k = {self.k}", header, "M:  " + "".join(f"{x:>{width}}" for x in self.M), "J:"]
        for i, row in enumerate(self.J):
            cells = "".join(f"{'.' if i == j else x:>{width}}" for j, x in enumerate(row))
            lines.append(f"{i:>3} {cells}")
        return "\n".join(lines)


def table_from_subsets(k: int, subsets: Iterable[Iterable[int]]) -> InvariantTable:
    n = Page(k).holes
    M = [0] * n
    J = [[0] * n for _ in range(n)]
    for subset in subsets:
        holes = sorted(set(subset))
        for a, i in enumerate(holes):
            M[i] += 1
            for j in holes[a + 1:]:
                J[i][j] += 1
                J[j][i] += 1
    return InvariantTable(k, tuple(M), tuple(tuple(r) for r in J))


def invariant_table(f: Factorization) -> InvariantTable:
    # Outer-parallel curves already list every inner hole.
    return table_from_subsets(f.k, f.hole_sets())


def reference_table(k: int) -> InvariantTable:
    """The multiplicities of the monodromy of the open book on F_k, from closed-form rules."""
    n = Page(k).holes
    M = [2] * n
    J = [[0] * n for _ in range(n)]

    def put(i, j, value):
        J[i][j] = J[j][i] = value

    odd = range(1, 2 * k, 2)
    even = range(2, 2 * k + 1, 2)
    for j in range(1, n):
        put(0, j, 1)
    for h in odd:
        for l in even:
            put(h, l, 1 if l == h + 1 else 0)
    for h1 in odd:
        for h2 in odd:
            if h1 != h2:
                put(h1, h2, 1)
    for l1 in even:
        for l2 in even:
            if l1 != l2:
                put(l1, l2, 1)
    return InvariantTable(k, tuple(M), tuple(tuple(r) for r in J))
