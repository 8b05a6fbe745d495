"""Omega-extended naturals and exact linear Diophantine systems over the naturals.

Markings of coverability-style analyses take values in N u {omega}, where
omega absorbs addition and subtraction of any natural.  The Diophantine
solver returns the complete antichain of minimal solutions of A x = b over
N together with the Hilbert basis of A x = 0, found by Contejean-Devie
style breadth-first search with domination pruning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceededError, StructureError


class _Omega:
    """The absorbing top element: omega + k = omega - k = omega."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is OMEGA

    def __gt__(self, other):
        return other is not OMEGA

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "w"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

#: A value in N u {omega}.
OmegaNat = int | _Omega


def is_omega(v: OmegaNat) -> bool:
    return v is OMEGA


def leq_omega(u: OmegaNat, v: OmegaNat) -> bool:
    """The partial order used on omega-markings: u = v, or v is omega."""
    return v is OMEGA or u == v


@dataclass(frozen=True)
class DiophSystem:
    """A x = b over variables ranging in N; entries are exact integers."""

    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise StructureError("matrix and right-hand side disagree on row count")
        widths = {len(row) for row in self.matrix}
        if len(widths) > 1:
            raise StructureError("matrix rows have inconsistent width")

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]], rhs: Iterable[int]) -> "DiophSystem":
        return cls(tuple(tuple(r) for r in rows), tuple(rhs))

    @property
    def num_vars(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0


@dataclass(frozen=True)
class SolutionDescription:
    """Minimal particular solutions of A x = b plus the Hilbert basis of A x = 0.

    Both sets are antichains under componentwise <=; the full solution set is
    the union over minimal particular solutions p of p + N-combinations of
    the basis.
    """

    particular: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def solvable(self) -> bool:
        return bool(self.particular)


def _apply(matrix, vec):
    return tuple(sum(a * x for a, x in zip(row, vec)) for row in matrix)


def _dominates(u, v):
    """u >= v componentwise."""
    return all(a >= b for a, b in zip(u, v))


def _minimal(vectors):
    out = []
    for v in sorted(vectors, key=lambda v: (sum(v), v)):
        if not any(_dominates(v, m) for m in out):
            out.append(v)
    return out


def _hilbert_basis(matrix, num_vars, max_nodes):
    """All minimal nonzero solutions of matrix . x = 0 over N (Contejean-Devie)."""
    if num_vars == 0:
        return []
    columns = [_apply(matrix, tuple(int(i == j) for j in range(num_vars)))
               for i in range(num_vars)]
    zero = tuple(0 for _ in matrix)
    basis: list[tuple[int, ...]] = []
    frontier = [tuple(int(i == j) for j in range(num_vars)) for i in range(num_vars)]
    seen = set(frontier)
    nodes = 0
    while frontier:
        frontier.sort(key=lambda v: (sum(v), v))
        next_frontier = []
        for t in frontier:
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceededError("Diophantine solver nodes", max_nodes=max_nodes)
            value = _apply(matrix, t)
            if value == zero:
                if not any(_dominates(t, b) for b in basis):
                    basis.append(t)
                continue
            for i in range(num_vars):
                # Contejean-Devie: only grow against the defect direction.
                if sum(v * c for v, c in zip(value, columns[i])) >= 0:
                    continue
                grown = tuple(x + int(j == i) for j, x in enumerate(t))
                if grown in seen:
                    continue
                if any(_dominates(grown, b) for b in basis):
                    continue
                seen.add(grown)
                next_frontier.append(grown)
        frontier = next_frontier
    return _minimal(basis)


def solve_nat(sys: DiophSystem, max_nodes: int = 200_000) -> SolutionDescription:
    """Solve A x = b over N.

    Homogenizes with a fresh variable multiplying -b, computes the Hilbert
    basis of the extended system, and reads off minimal particular solutions
    (extra variable 1) and the homogeneous basis (extra variable 0).
    """
    n = sys.num_vars
    if not any(sys.rhs):
        basis = _hilbert_basis(sys.matrix, n, max_nodes)
        return SolutionDescription((tuple(0 for _ in range(n)),), tuple(basis))
    extended = tuple(row + (-b,) for row, b in zip(sys.matrix, sys.rhs))
    if not sys.matrix:
        extended = ()
    full = _hilbert_basis(extended, n + 1, max_nodes)
    particular = [v[:n] for v in full if v[n] == 1]
    basis = [v[:n] for v in full if v[n] == 0]
    return SolutionDescription(tuple(_minimal(particular)), tuple(_minimal(basis)))


def variable_unbounded(sol: SolutionDescription, i: int) -> bool:
    """Whether variable i takes arbitrarily large values over the solution set."""
    if not sol.solvable:
        raise StructureError("system is unsolvable; no variable is constrained")
    return any(b[i] > 0 for b in sol.basis)


def variable_max(sol: SolutionDescription, i: int) -> int:
    """The maximum of variable i over all solutions; requires it to be bounded."""
    if variable_unbounded(sol, i):
        raise StructureError(f"variable {i} is unbounded")
    return max(p[i] for p in sol.particular)
