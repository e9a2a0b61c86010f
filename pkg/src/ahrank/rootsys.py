"""Root systems of the simple complex Lie algebras, in exact integer arithmetic.

Everything here is combinatorial: Cartan matrices, root sets generated by
simple reflections, small-rank Weyl group enumeration, and the diagram
involution induced by the longest Weyl element.

Node numbering
--------------
Classical types and F4/G2 follow the Bourbaki convention::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) -2-> n        (node n short)
    C_n   1 - 2 - ... - (n-1) <-2- n        (node n long)
    D_n   1 - 2 - ... - (n-2) < {n-1, n}    (fork)
    F_4   1 - 2 -2-> 3 - 4                  (1, 2 long; 3, 4 short)
    G_2   1 <-3- 2                          (1 short, 2 long)

The E series is numbered chain-first: nodes 1..n-1 form the long chain and
the branch node n hangs off node 3::

    E_n   1 - 2 - 3 - 4 - ... - (n-1)
                  |
                  n

Weight and root vectors are serialized in this node order throughout the
package.

Roots are stored as integer coordinate vectors in the simple-root basis; a
vector is a root precisely when its coordinates all share one sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

SERIES = "ABCDEFG"

#: positive_roots() enumerates root systems up to this rank.
ROOT_ENUMERATION_BOUND = 8

#: longest_element_negation() enumerates Weyl groups up to this rank
#: (largest supported group: W(B5), order 3840).
WEYL_ENUMERATION_BOUND = 5


class UnsupportedRankError(ValueError):
    """An enumeration was requested beyond its supported rank."""


@dataclass(frozen=True, order=True)
class LieType:
    """A simple complex type: series letter A-G plus rank.

    D2 and D3 are accepted (they coincide with A1 x A1 and A3) so that the
    so(p, q) family can be built uniformly; ``is_canonical`` is False for
    them and for B1, C1, C2.
    """

    letter: str
    rank: int

    def __post_init__(self) -> None:
        if self.letter not in SERIES:
            raise ValueError(f"unknown series {self.letter!r}; expected one of {SERIES}")
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.letter == "D" and self.rank < 2:
            raise ValueError("type D requires rank >= 2")
        if self.letter == "E" and self.rank not in (6, 7, 8):
            raise ValueError("type E requires rank in {6, 7, 8}")
        if self.letter == "F" and self.rank != 4:
            raise ValueError("type F requires rank 4")
        if self.letter == "G" and self.rank != 2:
            raise ValueError("type G requires rank 2")

    @property
    def is_canonical(self) -> bool:
        """True when the rank lies in the non-redundant range (A >= 1,
        B >= 2, C >= 3, D >= 4); lower ranks duplicate earlier families."""
        minimum = {"A": 1, "B": 2, "C": 3, "D": 4}.get(self.letter)
        return minimum is None or self.rank >= minimum

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"


def _edges(t: LieType) -> tuple[tuple[int, int, int, int], ...]:
    """Diagram bonds as (i, j, a_ij, a_ji) with a_ij = <alpha_i, alpha_j^v>."""
    n = t.rank

    def chain(i: int) -> tuple[int, int, int, int]:
        return (i, i + 1, -1, -1)

    if t.letter == "A":
        return tuple(chain(i) for i in range(1, n))
    if t.letter == "B":
        if n == 1:
            return ()
        return tuple(chain(i) for i in range(1, n - 1)) + ((n - 1, n, -2, -1),)
    if t.letter == "C":
        if n == 1:
            return ()
        return tuple(chain(i) for i in range(1, n - 1)) + ((n - 1, n, -1, -2),)
    if t.letter == "D":
        if n == 2:
            return ()
        return tuple(chain(i) for i in range(1, n - 2)) + (
            (n - 2, n - 1, -1, -1),
            (n - 2, n, -1, -1),
        )
    if t.letter == "E":
        return tuple(chain(i) for i in range(1, n - 1)) + ((3, n, -1, -1),)
    if t.letter == "F":
        return ((1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1))
    return ((1, 2, -1, -3),)  # G2


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with a_ij = <alpha_i, alpha_j^v>, in the node order above."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(t):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji
    return tuple(tuple(row) for row in a)


def _reflect(cartan: tuple[tuple[int, ...], ...], v: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Image of v under the simple reflection s_i, in simple-root coordinates."""
    pairing = sum(c * cartan[j][i - 1] for j, c in enumerate(v))
    out = list(v)
    out[i - 1] -= pairing
    return tuple(out)


@lru_cache(maxsize=None)
def _root_set(t: LieType) -> frozenset[tuple[int, ...]]:
    """All roots: reflection closure of the simple roots."""
    cartan = cartan_matrix(t)
    n = t.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for v in frontier:
            for i in range(1, n + 1):
                w = _reflect(cartan, v, i)
                if w not in roots:
                    roots.add(w)
                    fresh.append(w)
        frontier = fresh
    return frozenset(roots)


def positive_roots(t: LieType) -> frozenset[tuple[int, ...]]:
    """All positive roots (nonnegative coordinates), by reflection closure."""
    if t.rank > ROOT_ENUMERATION_BOUND:
        raise UnsupportedRankError(
            f"positive_roots supports rank <= {ROOT_ENUMERATION_BOUND}, got {t}"
        )
    return frozenset(v for v in _root_set(t) if all(c >= 0 for c in v))


@dataclass(frozen=True)
class NodePermutation:
    """Permutation of diagram nodes, stored as 1-based images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    def __call__(self, node: int) -> int:
        return self.images[node - 1]

    @property
    def is_identity(self) -> bool:
        return all(image == i + 1 for i, image in enumerate(self.images))

    def compose(self, other: "NodePermutation") -> "NodePermutation":
        return NodePermutation(tuple(self(other(i)) for i in range(1, len(self.images) + 1)))


def is_cartan_automorphism(t: LieType, perm: NodePermutation) -> bool:
    """Whether the node permutation preserves the Cartan matrix of t."""
    cartan = cartan_matrix(t)
    n = t.rank
    return all(
        cartan[perm(i) - 1][perm(j) - 1] == cartan[i - 1][j - 1]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def _weyl_elements(t: LieType) -> frozenset[tuple[tuple[int, ...], ...]]:
    """The full Weyl group, each element stored by its simple-root images."""
    if t.rank > WEYL_ENUMERATION_BOUND:
        raise UnsupportedRankError(
            f"Weyl enumeration supports rank <= {WEYL_ENUMERATION_BOUND}, got {t}"
        )
    cartan = cartan_matrix(t)
    n = t.rank
    identity = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    elements = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for w in frontier:
            for i in range(1, n + 1):
                nxt = tuple(_reflect(cartan, img, i) for img in w)
                if nxt not in elements:
                    elements.add(nxt)
                    fresh.append(nxt)
        frontier = fresh
    return frozenset(elements)


def weyl_order(t: LieType) -> int:
    """Order of the Weyl group, by explicit enumeration (rank <= 5)."""
    return len(_weyl_elements(t))


def longest_element_negation(t: LieType) -> NodePermutation:
    """Node permutation induced by X -> -(w0 X), found by brute force.

    Enumerates the Weyl group as the closure of the simple reflections and
    locates the unique element sending every positive root to a negative
    one; negating its action permutes the simple roots.
    """
    longest = [
        w
        for w in _weyl_elements(t)
        if all(all(c <= 0 for c in img) for img in w)
    ]
    assert len(longest) == 1, "the longest element must be unique"
    images = []
    for img in longest[0]:
        negated = tuple(-c for c in img)
        assert sum(negated) == 1 and all(c in (0, 1) for c in negated), (
            "-w0 must permute the simple roots"
        )
        images.append(negated.index(1) + 1)
    return NodePermutation(tuple(images))


def iota(t: LieType) -> NodePermutation:
    """Closed form of the involution induced by negating the longest Weyl
    element.

    Nontrivial exactly for A_n (chain reversal), D_n with n odd (fork
    swap), and E6 (chain reversal fixing the branch node); the identity for
    every other type.
    """
    n = t.rank
    if t.letter == "A":
        return NodePermutation(tuple(n + 1 - i for i in range(1, n + 1)))
    if t.letter == "D" and n % 2 == 1:
        images = list(range(1, n + 1))
        images[n - 2], images[n - 1] = n, n - 1
        return NodePermutation(tuple(images))
    if t.letter == "E" and n == 6:
        return NodePermutation((5, 4, 3, 2, 1, 6))
    return NodePermutation(tuple(range(1, n + 1)))
