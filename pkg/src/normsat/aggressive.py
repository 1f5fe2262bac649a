"""Aggressive truth assignments, their compositions, and guarding a decider with them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .classifier import algorithm2
from .formula import Formula
from .truth import GeneralizedAssignment, Trace, eval_alg1

Decider = Callable[[Formula], bool]


@dataclass(frozen=True)
class AggressiveComposite:
    """``(a_1)(a_2)...(a_k)``; evaluation starts from the rightmost part."""

    parts: tuple[GeneralizedAssignment, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a composite needs at least one part")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: GeneralizedAssignment) -> "AggressiveComposite":
        return cls(tuple(parts))

    def __len__(self):
        return len(self.parts)

    def then(self, other: "AggressiveComposite | GeneralizedAssignment") -> "AggressiveComposite":
        """Append ``other`` on the right."""
        tail = other.parts if isinstance(other, AggressiveComposite) else (other,)
        return AggressiveComposite(self.parts + tail)


def eval_aggressive(
    a: GeneralizedAssignment, f: Formula, n: int | None = None
) -> tuple[bool, Trace]:
    """Evaluate under ``a``; if that fails, accept when every count is <= 3.

    Sound on normal 3-CNF input: a true result means ``f`` is satisfiable.
    """
    value, trace = eval_alg1(a, f, n)
    if value:
        return True, trace
    easy, trace2 = algorithm2(f, a, n)
    return easy, trace + trace2


def eval_composition(
    c: AggressiveComposite | Sequence[GeneralizedAssignment], f: Formula, n: int | None = None
) -> tuple[bool, Trace]:
    parts = c.parts if isinstance(c, AggressiveComposite) else tuple(c)
    trace: Trace = ()
    for part in reversed(parts):
        value, steps = eval_aggressive(part, f, n)
        trace += steps
        if value:
            return True, trace
    return False, trace


def guard(decider: Decider, step) -> Decider:
    """Put ``step`` in front of ``decider``.

    ``step`` may be a generalized assignment or a composite (a pseudo-algorithm:
    answer true when it accepts, otherwise defer to ``decider``) or a plain
    decision procedure, which absorbs the decider entirely.
    """
    if isinstance(step, GeneralizedAssignment):
        step = AggressiveComposite((step,))
    if isinstance(step, AggressiveComposite):
        composite = step

        def guarded(f: Formula) -> bool:
            if eval_composition(composite, f)[0]:
                return True
            return decider(f)

        guarded.composite = composite
        guarded.base = decider
        return guarded
    if callable(step):
        return absorb(decider, step)
    raise TypeError(f"cannot guard with {type(step).__name__}")


def absorb(decider: Decider, algorithm: Decider) -> Decider:
    """Composition with a full decision procedure is that procedure."""

    def absorbed(f: Formula) -> bool:
        return bool(algorithm(f))

    return absorbed


def guard_chain(decider: Decider, *steps) -> Decider:
    """``f a b ...``: each later step is consulted before the earlier ones."""
    for step in steps:
        decider = guard(decider, step)
    return decider
