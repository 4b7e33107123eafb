"""
Exhaustive search for curve configurations with prescribed multiplicities.

A configuration is the multiset of hole sets of a factorization.  The search
fills curve slots one at a time: it always branches on the lowest hole that
still needs incidences, over the candidate hole sets containing that hole,
and discards a branch as soon as some multiplicity would be exceeded or can
no longer be met.
"""

from __future__ import annotations

import dataclasses
import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .homology import AbelianGroup, fibration_homology, open_book_boundary_homology
from .invariants import InvariantTable, reference_table, table_from_subsets
from .mcg import equal, realize
from .page import Factorization, Page, canonical_hole_sets, canonical_monodromy

DEFAULT_NODE_LIMIT = 10**8

REALIZED = "realized"
UNKNOWN = "constraint-consistent, realizability unknown"


class ResourceLimitError(RuntimeError):
    """The search visited more branch nodes than its configured limit."""


class ClassificationError(AssertionError):
    """A classification result contradicts the expected uniqueness."""


def _canonical(subsets: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(set(s))) for s in subsets), key=lambda s: (len(s), s)))


@dataclasses.dataclass(frozen=True)
class Configuration:
    k: int
    subsets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = Page(self.k).holes
        subsets = _canonical(self.subsets)
        for s in subsets:
            if not s:
                raise ValueError("configurations contain nonempty hole sets only")
            if s[0] < 0 or s[-1] >= n:
                raise ValueError(f"hole set {s} is not inside 0..{n - 1}")
        object.__setattr__(self, "subsets", subsets)

    @classmethod
    def of(cls, f: Factorization) -> Configuration:
        return cls(f.k, tuple(f.hole_sets()))

    def hole_sets(self) -> list[tuple[int, ...]]:
        return list(self.subsets)

    def table(self) -> InvariantTable:
        return table_from_subsets(self.k, self.subsets)

    def has_boundary_parallel(self) -> bool:
        n = Page(self.k).holes
        return any(len(s) in (1, n) for s in self.subsets)

    def to_factorization(self) -> Factorization:
        return Factorization.from_hole_sets(self.k, self.subsets)

    def sort_key(self):
        return (len(self.subsets), self.subsets)

    def to_list(self) -> list[list[int]]:
        return [list(s) for s in self.subsets]

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.subsets) + "}"


def check_configuration(c: Configuration, target: InvariantTable) -> bool:
    if c.k != target.k:
        raise ValueError(f"configuration on F_{c.k} checked against a table for k={target.k}")
    return c.table() == target


def _validate_target(target) -> InvariantTable:
    if not isinstance(target, InvariantTable):
        raise ValueError("target must be an InvariantTable")
    return target


def _candidates(target: InvariantTable) -> list[tuple[int, ...]]:
    """Hole sets compatible with the table, in (size descending, lex) order."""
    n = target.size
    found = []
    for mask in range(1, 1 << n):
        s = tuple(i for i in range(n) if mask >> i & 1)
        if all(target.M[i] > 0 for i in s) and \
                all(target.J[i][j] > 0 for i, j in itertools.combinations(s, 2)):
            found.append(s)
    found.sort(key=lambda s: (-len(s), s))
    return found


class _Search:
    def __init__(self, target: InvariantTable, node_limit: int):
        self.target = target
        self.n = target.size
        self.node_limit = node_limit
        self.nodes = 0
        cands = _candidates(target)
        self.by_pivot = [[s for s in cands if j in s] for j in range(self.n)]
        self.m_res = list(target.M)
        self.j_res = [list(r) for r in target.J]
        self.chosen: list[tuple[int, ...]] = []
        self.results: list[tuple[tuple[int, ...], ...]] = []

    def _fits(self, s) -> bool:
        m, jr = self.m_res, self.j_res
        if any(m[i] == 0 for i in s):
            return False
        return all(jr[i][j] > 0 for i, j in itertools.combinations(s, 2))

    def _apply(self, s, sign):
        m, jr = self.m_res, self.j_res
        for i in s:
            m[i] -= sign
        for i, j in itertools.combinations(s, 2):
            jr[i][j] -= sign
            jr[j][i] -= sign

    def _consistent(self, s) -> bool:
        # A pair can only be served by curves that still fit both of its holes.
        m, jr = self.m_res, self.j_res
        for i in s:
            mi, row = m[i], jr[i]
            for j in range(self.n):
                if row[j] > mi or row[j] > m[j]:
                    return False
        return True

    def _pivot(self) -> int | None:
        return next((j for j in range(self.n) if self.m_res[j] > 0), None)

    def run(self, pivot: int | None = None, start: int = 0, only: int | None = None):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise ResourceLimitError(f"search exceeded the node limit of {self.node_limit}")
        current = self._pivot()
        if current is None:
            self.results.append(_canonical(self.chosen))
            return
        if current != pivot:
            start = 0
        options = self.by_pivot[current]
        indices = range(start, len(options)) if only is None else (only,)
        for idx in indices:
            s = options[idx]
            if not self._fits(s):
                continue
            self._apply(s, 1)
            if self._consistent(s):
                self.chosen.append(s)
                self.run(current, idx)
                self.chosen.pop()
            self._apply(s, -1)


def _run_branch(args):
    target, node_limit, branch = args
    search = _Search(target, node_limit)
    search.run(only=branch)
    return search.results, search.nodes


def search_configurations(target: InvariantTable, node_limit: int = DEFAULT_NODE_LIMIT,
                          workers: int = 1) -> tuple[list[Configuration], int]:
    """Like ``enumerate_configurations`` but also returns the number of nodes visited."""
    target = _validate_target(target)
    probe = _Search(target, node_limit)
    if workers <= 1 or probe._pivot() is None:
        probe.run()
        raw, nodes = probe.results, probe.nodes
    else:
        branches = range(len(probe.by_pivot[probe._pivot()]))
        raw, nodes = [], 1
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for results, count in pool.map(_run_branch,
                                           [(target, node_limit, b) for b in branches]):
                raw.extend(results)
                # Each branch recount includes the shared root.
                nodes += count - 1
        if nodes > node_limit:
            raise ResourceLimitError(f"search exceeded the node limit of {node_limit}")
    configs = sorted({Configuration(target.k, r) for r in raw}, key=Configuration.sort_key)
    return configs, nodes


def enumerate_configurations(target: InvariantTable, node_limit: int = DEFAULT_NODE_LIMIT,
                             workers: int = 1) -> list[Configuration]:
    """Every configuration whose multiplicity table equals ``target``, in a fixed order."""
    return search_configurations(target, node_limit, workers)[0]


@dataclasses.dataclass(frozen=True)
class ConfigurationReport:
    configuration: Configuration
    canonical: bool
    h1: AbelianGroup
    h2: AbelianGroup
    boundary_h1: AbelianGroup
    realizability: str
    witness: Factorization | None = None

    def to_dict(self) -> dict:
        data = {
            "subsets": self.configuration.to_list(),
            "canonical": self.canonical,
            "realizability": self.realizability,
            "homology": {"H1": self.h1.to_dict(), "H2": self.h2.to_dict()},
            "boundary_H1": self.boundary_h1.to_dict(),
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


@dataclasses.dataclass(frozen=True)
class ClassificationReport:
    k: int
    target: InvariantTable
    configurations: tuple[ConfigurationReport, ...]
    nodes: int

    @property
    def count(self) -> int:
        return len(self.configurations)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "count": self.count,
            "nodes": self.nodes,
            "unique": self.count == 1,
            "target": self.target.to_dict(),
            "configurations": [c.to_dict() for c in self.configurations],
        }

    def format_text(self) -> str:
        lines = [f"k = {self.k}: {self.count} configuration(s), {self.nodes} search nodes"]
        for i, c in enumerate(self.configurations, 1):
            tag = " [canonical]" if c.canonical else ""
            lines.append(f"  {i}. {c.configuration}{tag}")
            lines.append(f"     H1 = {c.h1}, H2 = {c.h2}, boundary H1 = {c.boundary_h1}")
            lines.append(f"     {c.realizability}")
        return "\n".join(lines)


def _find_witness(config: Configuration, reference, limit: int) -> Factorization | None:
    """Search orderings of standard-word curves for a factorization equal to ``reference``."""
    for count, order in enumerate(itertools.permutations(config.subsets)):
        if count >= limit:
            return None
        candidate = Factorization.from_hole_sets(config.k, order)
        if equal(realize(candidate), reference):
            return candidate
    return None


def classify(k: int, node_limit: int = DEFAULT_NODE_LIMIT, workers: int = 1,
             witness_limit: int = 720) -> ClassificationReport:
    """
    Enumerate the configurations compatible with the multiplicities of the
    canonical monodromy on F_k and attach homology and realizability data.

    Non-canonical configurations are reported as realized only when some
    ordering of standard-word curves reproduces the monodromy exactly;
    otherwise their realizability is left open.  For k >= 3 anything other
    than a unique configuration raises ``ClassificationError``.
    """
    target = reference_table(k)
    configs, nodes = search_configurations(target, node_limit, workers)
    canonical = Configuration(k, tuple(canonical_hole_sets(k)))
    reference = realize(canonical_monodromy(k))
    reports = []
    for config in configs:
        h1, h2 = fibration_homology(config)
        is_canonical = config == canonical
        witness = None
        if is_canonical:
            status = REALIZED
        else:
            witness = _find_witness(config, reference, witness_limit)
            status = REALIZED if witness is not None else UNKNOWN
        reports.append(ConfigurationReport(config, is_canonical, h1, h2,
                                           open_book_boundary_homology(config), status, witness))
    if k >= 3 and (len(configs) != 1 or not reports[0].canonical):
        raise ClassificationError(
            f"expected the canonical configuration alone for k={k}, found {len(configs)}")
    return ClassificationReport(k, target, tuple(reports), nodes)
