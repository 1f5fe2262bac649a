"""Sign-flip maps between assignments and trace-based equivalence checks."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable

from .aggressive import AggressiveComposite, eval_composition
from .classifier import algorithm2
from .formula import Formula
from .truth import GeneralizedAssignment, eval_alg1


def _horizon(*gas: GeneralizedAssignment) -> tuple[int, int]:
    """Index past every prefix, and a common period of the tails."""
    start = max(len(g.prefix) for g in gas)
    period = lcm(*(len(g.tail) for g in gas))
    return start, period


def _pointwise(fn, *gas: GeneralizedAssignment) -> GeneralizedAssignment:
    start, period = _horizon(*gas)
    signs = [fn(*(g.sign(i) for g in gas)) for i in range(1, start + period + 1)]
    return GeneralizedAssignment(tuple(signs[:start]), tuple(signs[start:]))


@dataclass(frozen=True)
class PiMap:
    """Per-variable keep/flip pattern; ``keep.sign(i)`` False means x_i is negated.

    Flipping polarities preserves clause widths, normalness and every
    occurrence count, and applying the same map twice is the identity.
    """

    keep: GeneralizedAssignment = GeneralizedAssignment((), (True,))

    @classmethod
    def flipping(cls, variables: Iterable[int]) -> "PiMap":
        variables = set(variables)
        top = max(variables, default=0)
        return cls(GeneralizedAssignment(tuple(i not in variables for i in range(1, top + 1)), (True,)))

    def flips(self, i: int) -> bool:
        return not self.keep.sign(i)

    def is_identity(self) -> bool:
        return self.keep == IDENTITY.keep

    def flipped(self, upto: int) -> list[int]:
        return [i for i in range(1, upto + 1) if self.flips(i)]

    def compose(self, other: "PiMap") -> "PiMap":
        return PiMap(_pointwise(lambda p, q: p == q, self.keep, other.keep))

    def toggle(self, i: int) -> "PiMap":
        """The same map with variable ``i`` additionally flipped (or unflipped)."""
        return PiMap(self.keep.with_sign(i, not self.keep.sign(i)))

    def apply_to_assignment(self, a: GeneralizedAssignment) -> GeneralizedAssignment:
        return _pointwise(lambda keep, s: s if keep else not s, self.keep, a)

    def first_difference(self, other: "PiMap") -> int | None:
        if self == other:
            return None
        start, period = _horizon(self.keep, other.keep)
        for i in range(1, start + period + 1):
            if self.keep.sign(i) != other.keep.sign(i):
                return i
        raise AssertionError("distinct canonical maps must differ within one period")

    def __str__(self):
        return f"pi keep={self.keep.to_text()}"


IDENTITY = PiMap()


def derive_pi(a: GeneralizedAssignment, b: GeneralizedAssignment) -> PiMap:
    """The unique map carrying ``a`` onto ``b``: flip x_i where their signs differ."""
    return PiMap(_pointwise(lambda x, y: x == y, a, b))


def apply_pi(p: PiMap, f: Formula) -> Formula:
    clauses = tuple(tuple(-l if p.flips(abs(l)) else l for l in c) for c in f.clauses)
    return Formula(clauses, f.num_vars)


def check_equivalent_ta1(
    a: GeneralizedAssignment,
    b: GeneralizedAssignment,
    sample: Iterable[Formula],
    n: int | None = None,
    pi: PiMap | None = None,
) -> tuple[PiMap, bool]:
    """Compare the traces of ``a`` on f with those of ``b`` on pi(f).

    Both the evaluation trace and the occurrence-check trace are compared on
    every sample formula. ``pi`` defaults to ``derive_pi(a, b)``.
    """
    if pi is None:
        pi = derive_pi(a, b)
    for f in sample:
        g = apply_pi(pi, f)
        if eval_alg1(a, f, n)[1] != eval_alg1(b, g, n)[1]:
            return pi, False
        if algorithm2(f, a, n)[1] != algorithm2(g, b, n)[1]:
            return pi, False
    return pi, True


def check_equivalent_composite(c1: AggressiveComposite, c2: AggressiveComposite) -> bool:
    """Equivalent iff every pair of corresponding parts derives the same map."""
    if len(c1.parts) != len(c2.parts):
        raise ValueError(f"composite lengths differ: {len(c1.parts)} vs {len(c2.parts)}")
    maps = {derive_pi(a, b) for a, b in zip(c1.parts, c2.parts)}
    return len(maps) == 1


def composite_traces_match(
    c1: AggressiveComposite,
    c2: AggressiveComposite,
    pi: PiMap,
    sample: Iterable[Formula],
    n: int | None = None,
) -> bool:
    """Trace of ``c1`` on f equals trace of ``c2`` on pi(f) for all samples."""
    for f in sample:
        if eval_composition(c1, f, n)[1] != eval_composition(c2, apply_pi(pi, f), n)[1]:
            return False
    return True
