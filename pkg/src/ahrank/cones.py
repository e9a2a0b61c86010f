"""Convex-cone combinatorics on Satake diagrams.

Weighted Dynkin diagrams with nonnegative weights parametrize the closed
Weyl chamber.  A weight vector "matches" a Satake diagram when black nodes
carry weight 0 and arrow-paired nodes carry equal weights; the matching
vectors form a simplicial cone whose dimension is the real rank.  Closing
the node classes further under the longest-element involution cuts out the
subcone fixed by it; the number of surviving free classes is the
a-hyperbolic rank, and the 0/1 indicator vectors of those classes are the
extreme rays of that subcone.

For semisimple and reductive algebras both ranks add over simple factors;
a split abelian center adds to the real rank only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import iota
from .satake import RealFormSpec, SatakeDiagram, real_rank, satake_of

Weight = int | Fraction


class _UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, element: int) -> int:
        if self.parent[element] == element:
            return element
        self.parent[element] = self.find(self.parent[element])
        return self.parent[element]

    def unite(self, first: int, second: int) -> bool:
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
            self.parent[rep_second] = rep_first
        elif self.rank[rep_first] > self.rank[rep_second]:
            self.parent[rep_second] = rep_first
        else:
            self.parent[rep_first] = rep_second
        return True


@dataclass(frozen=True)
class NodePartition:
    """Partition of diagram nodes; a class is forced to weight zero exactly
    when it contains a black node.  Classes are sorted by least node."""

    classes: tuple[tuple[int, ...], ...]
    forced: tuple[bool, ...]

    def free_classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c, f in zip(self.classes, self.forced) if not f)

    def forced_zero(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c, f in zip(self.classes, self.forced) if f)

    @property
    def free_count(self) -> int:
        return len(self.free_classes())


def _partition(d: SatakeDiagram, extra_pairs) -> NodePartition:
    count = d.node_count
    uf = _UnionFind(count)
    for i, j in d.arrows:
        uf.unite(i - 1, j - 1)
    for i, j in extra_pairs:
        uf.unite(i - 1, j - 1)
    groups: dict[int, list[int]] = {}
    for node in d.nodes():
        groups.setdefault(uf.find(node - 1), []).append(node)
    classes = sorted((tuple(sorted(nodes)) for nodes in groups.values()), key=min)
    forced = tuple(any(node in d.black for node in cls) for cls in classes)
    return NodePartition(tuple(classes), forced)


def matching_classes(d: SatakeDiagram) -> NodePartition:
    """Arrow-orbit classes; the free ones index a basis of the matching cone,
    so the free count equals the real rank."""
    return _partition(d, ())


def _iota_pairs(d: SatakeDiagram) -> list[tuple[int, int]]:
    sigma = iota(d.lie_type)
    n = d.lie_type.rank
    pairs = []
    for component in range(d.components):
        offset = component * n
        for i in range(1, n + 1):
            j = sigma(i)
            if j > i:
                pairs.append((offset + i, offset + j))
    return pairs


def antipodal_classes(d: SatakeDiagram) -> NodePartition:
    """Classes generated jointly by the arrows and the longest-element
    involution (applied per component on doubled diagrams)."""
    return _partition(d, _iota_pairs(d))


def a_hyperbolic_rank(d: SatakeDiagram) -> int:
    """Dimension of the involution-fixed subcone: free antipodal classes."""
    return antipodal_classes(d).free_count


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """Nonnegative weights on diagram nodes, in node order."""

    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise ValueError(f"weights must be nonnegative: {self.weights}")


def matches(w: WeightedDynkinDiagram, d: SatakeDiagram) -> bool:
    """Black nodes weigh 0 and arrow-paired nodes weigh the same."""
    if len(w.weights) != d.node_count:
        return False
    if any(w.weights[i - 1] != 0 for i in d.black):
        return False
    return all(w.weights[i - 1] == w.weights[j - 1] for i, j in d.arrows)


def iota_fixed(w: WeightedDynkinDiagram, d: SatakeDiagram) -> bool:
    """Invariance under the longest-element involution, per component."""
    if len(w.weights) != d.node_count:
        return False
    return all(w.weights[i - 1] == w.weights[j - 1] for i, j in _iota_pairs(d))


def b_plus_generators(d: SatakeDiagram) -> tuple[WeightedDynkinDiagram, ...]:
    """Extreme rays of the involution-fixed cone, one 0/1 indicator diagram
    per free antipodal class, ordered by least node index."""
    generators = []
    for cls in antipodal_classes(d).free_classes():
        members = set(cls)
        weights = tuple(1 if node in members else 0 for node in d.nodes())
        generators.append(WeightedDynkinDiagram(weights))
    return tuple(generators)


@dataclass(frozen=True)
class RankProfile:
    """The pair (real rank, a-hyperbolic rank) of a reductive algebra."""

    real_rank: int
    a_hyperbolic_rank: int

    def __post_init__(self) -> None:
        if not 0 <= self.a_hyperbolic_rank <= self.real_rank:
            raise ValueError(
                f"need 0 <= a-hyperbolic rank <= real rank, got {self!r}"
            )

    def __add__(self, other: "RankProfile") -> "RankProfile":
        return RankProfile(
            self.real_rank + other.real_rank,
            self.a_hyperbolic_rank + other.a_hyperbolic_rank,
        )


@dataclass(frozen=True)
class ReductiveAlgebra:
    """A reductive real Lie algebra: simple factors plus abelian center,
    the center split into compact and split dimensions.  Factors are kept
    sorted so equal algebras compare equal."""

    simple_factors: tuple[RealFormSpec, ...] = ()
    compact_center_dim: int = 0
    split_center_dim: int = 0

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.simple_factors, key=lambda s: (s.family, s.params)))
        object.__setattr__(self, "simple_factors", ordered)
        if self.compact_center_dim < 0 or self.split_center_dim < 0:
            raise ValueError("center dimensions must be nonnegative")
        if not self.simple_factors and not (self.compact_center_dim or self.split_center_dim):
            raise ValueError("empty factor list requires a positive center dimension")


def factor_profile(spec: RealFormSpec) -> RankProfile:
    d = satake_of(spec)
    return RankProfile(real_rank(d), a_hyperbolic_rank(d))


def rank_profile(alg: ReductiveAlgebra) -> RankProfile:
    """Both ranks add over simple factors; a split center adds to the real
    rank, a compact center to neither."""
    real = alg.split_center_dim
    ahyp = 0
    for spec in alg.simple_factors:
        profile = factor_profile(spec)
        real += profile.real_rank
        ahyp += profile.a_hyperbolic_rank
    return RankProfile(real, ahyp)
