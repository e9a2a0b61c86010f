"""Satake diagrams for the real forms of the simple complex Lie algebras.

A Satake diagram is a Dynkin diagram with a subset of nodes painted black
and an involutive pairing ("arrows") on some of the white nodes: black
nodes are the simple roots vanishing on a maximal split abelian subspace,
arrows join white nodes exchanged by the conjugation involution.  A real
semisimple Lie algebra is determined up to isomorphism by its diagram, and
its real rank is the number of white-node orbits under the arrows.

The database is generated programmatically per family, following the
Onishchik-Vinberg classification tables: split and signature families for
the classical types, so*, the exceptional forms, all-black compact
diagrams, and doubled diagrams for complex algebras regarded as real.

Families and parameter conventions
----------------------------------
==============   ==========================   =========================
family           parameters                   algebra
==============   ==========================   =========================
sl_R             (n,), n >= 2                 sl(n, R)
su_star          (2n,), 2n >= 4               su*(2n) = sl(n, H)
su_pq            (p, q), p, q >= 1            su(p, q)
so_pq            (p, q), p, q >= 1, p+q >= 3  so(p, q)
sp_R             (n,), n >= 1                 sp(n, R)
sp_pq            (p, q), p, q >= 1            sp(p, q)
so_star          (2n,), 2n >= 4               so*(2n)
e6_I .. e6_IV    ()                           real forms of E6
e7_V .. e7_VII   ()                           real forms of E7
e8_VIII, e8_IX   ()                           real forms of E8
f4_I, f4_II      ()                           real forms of F4
g2_split         ()                           split G2
compact_X        (rank,)                      compact form of X_rank
complex_X        (rank,)                      X_rank(C) viewed as real
==============   ==========================   =========================

Doubled diagrams number the second copy after the first: nodes 1..n and
n+1..2n, with arrows (i, n+i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootsys import LieType, cartan_matrix

EXCEPTIONAL_FAMILIES = (
    "e6_I", "e6_II", "e6_III", "e6_IV",
    "e7_V", "e7_VI", "e7_VII",
    "e8_VIII", "e8_IX",
    "f4_I", "f4_II",
    "g2_split",
)


class InvalidRealFormError(ValueError):
    """Parameters outside a real-form family's domain."""


@dataclass(frozen=True)
class RealFormSpec:
    """Symbolic name of a real form: family label plus integer parameters."""

    family: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({','.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class SatakeDiagram:
    """Dynkin diagram with black nodes and a white-node arrow involution.

    ``components`` is 2 for the doubled diagram of a complex algebra viewed
    as real (both components of type ``lie_type``), 1 otherwise.  Arrows
    are stored as sorted node pairs.
    """

    lie_type: LieType
    black: frozenset[int] = frozenset()
    arrows: frozenset[tuple[int, int]] = frozenset()
    components: int = 1

    @property
    def node_count(self) -> int:
        return self.lie_type.rank * self.components

    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    def white_nodes(self) -> frozenset[int]:
        return frozenset(self.nodes()) - self.black

    def arrow_image(self, node: int) -> int:
        """Image of a node under the arrow involution (fixed if unmatched)."""
        for i, j in self.arrows:
            if node == i:
                return j
            if node == j:
                return i
        return node


def _sorted_pairs(pairs) -> frozenset[tuple[int, int]]:
    return frozenset((min(i, j), max(i, j)) for i, j in pairs)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidRealFormError(message)


# ---------------------------------------------------------------------------
# family constructors

def _sl_R(n: int) -> SatakeDiagram:
    _require(n >= 2, f"sl(n,R) requires n >= 2, got n={n}")
    return SatakeDiagram(LieType("A", n - 1))


def _su_star(m: int) -> SatakeDiagram:
    _require(m >= 4 and m % 2 == 0, f"su*(2n) requires an even argument >= 4, got {m}")
    return SatakeDiagram(LieType("A", m - 1), black=frozenset(range(1, m, 2)))


def _su_pq(p: int, q: int) -> SatakeDiagram:
    _require(p >= 1 and q >= 1, f"su(p,q) requires p, q >= 1, got ({p},{q})")
    n = p + q
    low = min(p, q)
    arrows = _sorted_pairs((i, n - i) for i in range(1, low + 1) if i < n - i)
    black = frozenset(range(low + 1, n - low))
    return SatakeDiagram(LieType("A", n - 1), black=black, arrows=arrows)


def _so_pq(p: int, q: int) -> SatakeDiagram:
    _require(p >= 1 and q >= 1, f"so(p,q) requires p, q >= 1, got ({p},{q})")
    total = p + q
    _require(total >= 3, f"so(p,q) requires p + q >= 3, got {total}")
    low = min(p, q)
    if total % 2:
        m = total // 2
        return SatakeDiagram(LieType("B", m), black=frozenset(range(low + 1, m + 1)))
    m = total // 2
    if low == m:
        return SatakeDiagram(LieType("D", m))
    if low == m - 1:
        return SatakeDiagram(LieType("D", m), arrows=_sorted_pairs([(m - 1, m)]))
    return SatakeDiagram(LieType("D", m), black=frozenset(range(low + 1, m + 1)))


def _sp_R(n: int) -> SatakeDiagram:
    _require(n >= 1, f"sp(n,R) requires n >= 1, got n={n}")
    return SatakeDiagram(LieType("C", n))


def _sp_pq(p: int, q: int) -> SatakeDiagram:
    _require(p >= 1 and q >= 1, f"sp(p,q) requires p, q >= 1, got ({p},{q})")
    n = p + q
    low = min(p, q)
    black = frozenset(range(1, 2 * low, 2)) | frozenset(range(2 * low + 1, n + 1))
    return SatakeDiagram(LieType("C", n), black=black)


def _so_star(m: int) -> SatakeDiagram:
    _require(m >= 4 and m % 2 == 0, f"so*(2n) requires an even argument >= 4, got {m}")
    n = m // 2
    if n % 2 == 0:
        return SatakeDiagram(LieType("D", n), black=frozenset(range(1, n + 1, 2)))
    return SatakeDiagram(
        LieType("D", n),
        black=frozenset(range(1, n - 1, 2)),
        arrows=_sorted_pairs([(n - 1, n)]),
    )


# Exceptional diagrams: (type, black nodes, arrow pairs) in chain-first
# numbering (E-series branch node carries the highest index).
_EXCEPTIONAL = {
    "e6_I": ("E", 6, (), ()),
    "e6_II": ("E", 6, (), ((1, 5), (2, 4))),
    "e6_III": ("E", 6, (2, 3, 4), ((1, 5),)),
    "e6_IV": ("E", 6, (2, 3, 4, 6), ()),
    "e7_V": ("E", 7, (), ()),
    "e7_VI": ("E", 7, (4, 6, 7), ()),
    "e7_VII": ("E", 7, (2, 3, 4, 7), ()),
    "e8_VIII": ("E", 8, (), ()),
    "e8_IX": ("E", 8, (2, 3, 4, 8), ()),
    "f4_I": ("F", 4, (), ()),
    "f4_II": ("F", 4, (1, 2, 3), ()),
    "g2_split": ("G", 2, (), ()),
}


def complex_as_real(t: LieType) -> SatakeDiagram:
    """Doubled diagram of a complex simple algebra viewed as real: two white
    copies of t with arrows joining node i of the first copy to node i of
    the second."""
    n = t.rank
    return SatakeDiagram(
        t,
        arrows=_sorted_pairs((i, n + i) for i in range(1, n + 1)),
        components=2,
    )


def _compact(letter: str, rank: int) -> SatakeDiagram:
    t = LieType(letter, rank)
    return SatakeDiagram(t, black=frozenset(range(1, rank + 1)))


def satake_of(spec: RealFormSpec) -> SatakeDiagram:
    """Satake diagram of a real form, built from its family constructor."""
    family, params = spec.family, spec.params
    if family in _EXCEPTIONAL:
        _require(params == (), f"{family} takes no parameters, got {params}")
        letter, rank, black, arrows = _EXCEPTIONAL[family]
        return SatakeDiagram(
            LieType(letter, rank), black=frozenset(black), arrows=_sorted_pairs(arrows)
        )
    one_param = {"sl_R": _sl_R, "su_star": _su_star, "sp_R": _sp_R, "so_star": _so_star}
    two_param = {"su_pq": _su_pq, "so_pq": _so_pq, "sp_pq": _sp_pq}
    if family in one_param:
        _require(len(params) == 1, f"{family} takes one parameter, got {params}")
        return one_param[family](params[0])
    if family in two_param:
        _require(len(params) == 2, f"{family} takes two parameters, got {params}")
        return two_param[family](params[0], params[1])
    if family.startswith("compact_") or family.startswith("complex_"):
        kind, _, letter = family.partition("_")
        _require(len(params) == 1, f"{family} takes one parameter (the rank), got {params}")
        try:
            t = LieType(letter, params[0])
        except ValueError as exc:
            raise InvalidRealFormError(str(exc)) from exc
        return _compact(letter, params[0]) if kind == "compact" else complex_as_real(t)
    raise InvalidRealFormError(f"unknown real-form family {family!r}")


# ---------------------------------------------------------------------------
# validation

def _full_cartan(d: SatakeDiagram) -> tuple[tuple[int, ...], ...]:
    base = cartan_matrix(d.lie_type)
    if d.components == 1:
        return base
    n = d.lie_type.rank
    size = 2 * n
    full = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            full[i][j] = base[i][j]
            full[n + i][n + j] = base[i][j]
    return tuple(tuple(row) for row in full)


def _extends_to_automorphism(d: SatakeDiagram) -> bool:
    """Whether the arrow involution (identity on unmatched whites) extends to
    a Cartan-matrix automorphism of the whole diagram by some permutation of
    the black nodes."""
    cartan = _full_cartan(d)
    fixed: dict[int, int] = {i: i for i in d.white_nodes()}
    for i, j in d.arrows:
        fixed[i] = j
        fixed[j] = i
    blacks = sorted(d.black)
    nodes = list(d.nodes())
    for image in itertools.permutations(blacks):
        perm = dict(fixed)
        perm.update(zip(blacks, image))
        if all(
            cartan[perm[i] - 1][perm[j] - 1] == cartan[i - 1][j - 1]
            for i in nodes
            for j in nodes
        ):
            return True
    return False


def validate(d: SatakeDiagram) -> list[str]:
    """Check the diagram invariants; returns a list of violations (empty = ok)."""
    problems = []
    nodes = set(d.nodes())
    if not set(d.black) <= nodes:
        problems.append("black node out of range")
    endpoints: set[int] = set()
    structural_ok = True
    for i, j in d.arrows:
        if i == j or i not in nodes or j not in nodes:
            problems.append("arrow endpoints invalid")
            structural_ok = False
            continue
        if i in endpoints or j in endpoints:
            problems.append("arrow support is not a perfect matching")
            structural_ok = False
        endpoints.update((i, j))
        if i in d.black or j in d.black:
            problems.append("arrow endpoint is black")
            structural_ok = False
    if d.components not in (1, 2):
        problems.append("components must be 1 or 2")
        structural_ok = False
    if structural_ok and not problems and not _extends_to_automorphism(d):
        problems.append("arrow not an automorphism")
    return problems


def real_rank(d: SatakeDiagram) -> int:
    """Number of white-node orbits under the arrow involution."""
    return len(d.white_nodes()) - len(d.arrows)


# ---------------------------------------------------------------------------
# enumeration and export

def real_forms(t: LieType) -> tuple[RealFormSpec, ...]:
    """All real forms of a simple complex type, one spec per isomorphism
    class in the standard presentation (compact form included)."""
    n = t.rank
    forms: list[RealFormSpec] = []
    if t.letter == "A":
        total = n + 1
        forms.append(RealFormSpec("sl_R", (total,)))
        if total % 2 == 0 and total >= 4:
            forms.append(RealFormSpec("su_star", (total,)))
        forms.extend(RealFormSpec("su_pq", (p, total - p)) for p in range(1, total // 2 + 1))
        forms.append(RealFormSpec("compact_A", (n,)))
    elif t.letter == "B":
        total = 2 * n + 1
        forms.extend(RealFormSpec("so_pq", (p, total - p)) for p in range(1, n + 1))
        forms.append(RealFormSpec("compact_B", (n,)))
    elif t.letter == "C":
        forms.append(RealFormSpec("sp_R", (n,)))
        forms.extend(RealFormSpec("sp_pq", (p, n - p)) for p in range(1, n // 2 + 1))
        forms.append(RealFormSpec("compact_C", (n,)))
    elif t.letter == "D":
        total = 2 * n
        forms.extend(RealFormSpec("so_pq", (p, total - p)) for p in range(1, n + 1))
        forms.append(RealFormSpec("so_star", (total,)))
        forms.append(RealFormSpec("compact_D", (n,)))
    elif t.letter == "E":
        numerals = {6: ("I", "II", "III", "IV"), 7: ("V", "VI", "VII"), 8: ("VIII", "IX")}
        forms.extend(RealFormSpec(f"e{n}_{numeral}") for numeral in numerals[n])
        forms.append(RealFormSpec("compact_E", (n,)))
    elif t.letter == "F":
        forms.extend((RealFormSpec("f4_I"), RealFormSpec("f4_II"), RealFormSpec("compact_F", (4,))))
    else:
        forms.extend((RealFormSpec("g2_split"), RealFormSpec("compact_G", (2,))))
    return tuple(forms)


def export(d: SatakeDiagram) -> dict:
    """Structured-text form of a diagram; deterministic across runs."""
    return {
        "type": d.lie_type.letter,
        "rank": d.lie_type.rank,
        "components": d.components,
        "black": sorted(d.black),
        "arrows": sorted([i, j] for i, j in d.arrows),
        "numbering": "bourbaki",
    }


# ---------------------------------------------------------------------------
# ASCII rendering

def _chain_layout(t: LieType) -> tuple[list[int], tuple[int, int] | None]:
    """Chain node order plus optional (attach position in chain, branch node)."""
    n = t.rank
    if t.letter == "D" and n >= 3:
        return list(range(1, n)), (n - 2, n)
    if t.letter == "E":
        return list(range(1, n)), (3, n)
    return list(range(1, n + 1)), None


def _bond(cartan, i: int, j: int) -> str:
    aij = cartan[i - 1][j - 1]
    aji = cartan[j - 1][i - 1]
    if aij == 0:
        return "    "
    if aij == -1 and aji == -1:
        return "----"
    if aij < -1:
        return f"-{-aij}->"
    return f"<-{-aji}-"


def _component_lines(d: SatakeDiagram, offset: int) -> list[str]:
    t = d.lie_type
    cartan = cartan_matrix(t)
    chain, branch = _chain_layout(t)

    def marker(node: int) -> str:
        return "*" if offset + node in d.black else "o"

    row = marker(chain[0])
    for prev, cur in zip(chain, chain[1:]):
        row += _bond(cartan, prev, cur) + marker(cur)
    labels = ""
    for pos, node in enumerate(chain):
        column = 5 * pos
        text = str(offset + node)
        labels += " " * (column - len(labels)) + text
    lines = [row, labels]
    if branch is not None:
        attach, node = branch
        column = 5 * (chain.index(attach))
        lines.append(" " * column + "|")
        lines.append(" " * column + marker(node) + " " + str(offset + node))
    return lines


def ascii_diagram(d: SatakeDiagram) -> str:
    """Plain-text picture: white nodes 'o', black nodes '*', bond labels
    '-k->' pointing from long roots to short ones, arrows listed below."""
    lines: list[str] = []
    n = d.lie_type.rank
    for component in range(d.components):
        if d.components > 1:
            lines.append(f"component {component + 1}:")
        lines.extend(_component_lines(d, component * n))
    arrows = sorted(d.arrows)
    lines.append(
        "arrows: " + (", ".join(f"{i}<->{j}" for i, j in arrows) if arrows else "none")
    )
    black = sorted(d.black)
    lines.append("black:  " + (" ".join(str(i) for i in black) if black else "none"))
    return "\n".join(lines)
