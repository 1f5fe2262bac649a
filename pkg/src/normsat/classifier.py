"""Occurrence-count classification of normal 3-CNF instances."""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Formula, is_normal
from .truth import CHECKC, INCC, RET_F, RET_T, SETC, GeneralizedAssignment, Trace, decide, probe

EASY = "Easy"
HARD4 = "Hard4"
OVER_BUDGET = "OverBudget"


def algorithm2(
    f: Formula, a: GeneralizedAssignment, n: int | None = None
) -> tuple[bool, Trace]:
    """True iff each of x_1..x_n occurs at most 3 times.

    Scans every literal position once per variable index i. The atom e_i is
    defined only on literals of x_i; each such hit bumps the counter and is
    followed by the ``c > 3`` check.
    """
    if n is None:
        n = f.num_vars
    steps = []
    literals = list(f.literals())
    for i in range(1, n + 1):
        steps.append(SETC)
        c = 0
        for lit in literals:
            var = abs(lit)
            if var != i:
                steps.append(probe(i, var))
                continue
            steps.append(decide(i, a.sign(i) == (lit > 0)))
            c += 1
            steps.append(INCC)
            steps.append(CHECKC)
            if c > 3:
                steps.append(RET_F)
                return False, tuple(steps)
    steps.append(RET_T)
    return True, tuple(steps)


@dataclass(frozen=True)
class ClassLabel:
    kind: str
    s: int

    def __post_init__(self):
        expected = EASY if self.s <= 3 else HARD4 if self.s == 4 else OVER_BUDGET
        if self.kind != expected:
            raise ValueError(f"{self.kind} is inconsistent with max occurrence {self.s}")

    @property
    def satisfiable(self) -> bool | None:
        """Known satisfiable for the easy classes, otherwise undecided."""
        return True if self.kind == EASY else None

    def __str__(self):
        sat = "yes" if self.kind == EASY else "unknown"
        return f"CLASS kind={self.kind} s={self.s} satisfiable={sat}"


def classify(f: Formula) -> ClassLabel:
    if not is_normal(f, 3):
        raise ValueError("classify expects a normal formula with exactly 3 literals per clause")
    s = f.max_occurrence()
    if s <= 3:
        return ClassLabel(EASY, s)
    return ClassLabel(HARD4 if s == 4 else OVER_BUDGET, s)
