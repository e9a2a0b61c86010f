"""Decision engine for discontinuous actions on reductive homogeneous spaces.

Given only the rank profiles of g and h (no embedding data), three
conditions are tested in order:

  (A) equal real ranks            -> no infinite discontinuous subgroup
                                     acts properly (Calabi-Markus);
  (B) equal a-hyperbolic ranks    -> no non-virtually-abelian discrete
                                     subgroup acts properly;
  (C) a-hyp rank of g exceeds the
      real rank of h              -> a non-virtually-abelian discrete
                                     subgroup acting properly exists.

If none fires the answer is genuinely undetermined at this level: both
outcomes occur among such pairs.  The engine never verifies that h embeds
into g; it only rejects pairs whose ranks already contradict h being a
closed reductive subgroup.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cones import RankProfile


class Verdict(enum.Enum):
    NO_INFINITE_DISCONTINUOUS = "NoInfiniteDiscontinuous"
    NO_NON_VIRTUALLY_ABELIAN = "NoNonVirtuallyAbelian"
    ADMITS_NON_VIRTUALLY_ABELIAN = "AdmitsNonVirtuallyAbelian"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class TraceStep:
    """One comparison evaluated by the engine."""

    condition: str
    lhs: int
    op: str
    rhs: int
    holds: bool

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "lhs": self.lhs,
            "op": self.op,
            "rhs": self.rhs,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    trace: tuple[TraceStep, ...]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "trace": [step.to_dict() for step in self.trace],
        }


class NotASubgroupPairError(ValueError):
    """h dominates g in some rank, so h cannot be a closed reductive
    subgroup of g."""


def decide(g: RankProfile, h: RankProfile) -> Decision:
    """Evaluate conditions (A), (B), (C) in order; the first that holds
    fixes the verdict, and every evaluated comparison is recorded."""
    if h.real_rank > g.real_rank:
        raise NotASubgroupPairError(
            f"real rank of h ({h.real_rank}) exceeds real rank of g "
            f"({g.real_rank}); closed reductive subgroups never exceed the "
            "ambient real rank"
        )
    if h.a_hyperbolic_rank > g.a_hyperbolic_rank:
        raise NotASubgroupPairError(
            f"a-hyperbolic rank of h ({h.a_hyperbolic_rank}) exceeds "
            f"a-hyperbolic rank of g ({g.a_hyperbolic_rank}); closed "
            "reductive subgroups never exceed the ambient a-hyperbolic rank"
        )
    trace = []
    step_a = TraceStep("A", g.real_rank, "==", h.real_rank, g.real_rank == h.real_rank)
    trace.append(step_a)
    if step_a.holds:
        return Decision(Verdict.NO_INFINITE_DISCONTINUOUS, tuple(trace))
    step_b = TraceStep(
        "B",
        g.a_hyperbolic_rank,
        "==",
        h.a_hyperbolic_rank,
        g.a_hyperbolic_rank == h.a_hyperbolic_rank,
    )
    trace.append(step_b)
    if step_b.holds:
        return Decision(Verdict.NO_NON_VIRTUALLY_ABELIAN, tuple(trace))
    step_c = TraceStep(
        "C", g.a_hyperbolic_rank, ">", h.real_rank, g.a_hyperbolic_rank > h.real_rank
    )
    trace.append(step_c)
    if step_c.holds:
        return Decision(Verdict.ADMITS_NON_VIRTUALLY_ABELIAN, tuple(trace))
    return Decision(Verdict.UNDETERMINED, tuple(trace))


@dataclass(frozen=True)
class Obstruction:
    """Result of the embedding filter: which rank dominations fail."""

    obstructed: bool
    witnesses: tuple[str, ...]

    @property
    def witness(self) -> str | None:
        """First failing inequality, or None when unobstructed."""
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self) -> dict:
        return {"obstructed": self.obstructed, "witnesses": list(self.witnesses)}


def embed_obstruction(g: RankProfile, h: RankProfile) -> Obstruction:
    """h can sit inside g as a closed reductive subgroup only if neither of
    its ranks exceeds the corresponding rank of g; returns the failing
    inequalities."""
    witnesses = []
    if h.a_hyperbolic_rank > g.a_hyperbolic_rank:
        witnesses.append("a_hyperbolic_rank")
    if h.real_rank > g.real_rank:
        witnesses.append("real_rank")
    return Obstruction(bool(witnesses), tuple(witnesses))
