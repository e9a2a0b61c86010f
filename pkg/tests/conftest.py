"""Shared fixtures: the full diagram database and an exact linear-algebra
oracle used to cross-check the combinatorial rank computations."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ahrank.rootsys import LieType, iota
from ahrank.satake import RealFormSpec, SatakeDiagram, real_forms, satake_of


def canonical_types(rank_bound: int) -> list[LieType]:
    types = [LieType("A", r) for r in range(1, rank_bound + 1)]
    types += [LieType("B", r) for r in range(2, rank_bound + 1)]
    types += [LieType("C", r) for r in range(3, rank_bound + 1)]
    types += [LieType("D", r) for r in range(4, rank_bound + 1)]
    types += [
        LieType(letter, r)
        for letter, r in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))
        if r <= rank_bound
    ]
    return types


def database_specs(rank_bound: int = 9, complex_rank_bound: int = 4) -> list[RealFormSpec]:
    """Every real form of every canonical simple type up to the rank bound,
    plus complex algebras viewed as real up to the component rank bound."""
    specs: list[RealFormSpec] = []
    for t in canonical_types(rank_bound):
        specs.extend(real_forms(t))
    for t in canonical_types(complex_rank_bound):
        specs.append(RealFormSpec(f"complex_{t.letter}", (t.rank,)))
    return specs


@pytest.fixture(scope="session")
def database() -> list[tuple[RealFormSpec, SatakeDiagram]]:
    return [(spec, satake_of(spec)) for spec in database_specs()]


# ---------------------------------------------------------------------------
# exact rational rank oracle

def solution_dimension(n_vars: int, equations: list[list[int]]) -> int:
    """Dimension of the solution space of a homogeneous system over Q,
    by Gaussian elimination with Fractions."""
    rows = [[Fraction(c) for c in eq] for eq in equations]
    rank = 0
    for col in range(n_vars):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [c / lead for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return n_vars - rank


def matching_equations(d: SatakeDiagram) -> list[list[int]]:
    """Linear constraints cutting out the matching subspace: black weights
    vanish, arrow-paired weights agree."""
    n = d.node_count
    equations = []
    for i in sorted(d.black):
        row = [0] * n
        row[i - 1] = 1
        equations.append(row)
    for i, j in sorted(d.arrows):
        row = [0] * n
        row[i - 1] = 1
        row[j - 1] = -1
        equations.append(row)
    return equations


def antipodal_equations(d: SatakeDiagram) -> list[list[int]]:
    """Matching constraints plus invariance under the longest-element
    involution, built from the closed form independently of the union-find
    implementation."""
    n_component = d.lie_type.rank
    sigma = iota(d.lie_type)
    equations = matching_equations(d)
    total = d.node_count
    for component in range(d.components):
        offset = component * n_component
        for i in range(1, n_component + 1):
            j = sigma(i)
            if j > i:
                row = [0] * total
                row[offset + i - 1] = 1
                row[offset + j - 1] = -1
                equations.append(row)
    return equations
