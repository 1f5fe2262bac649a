"""Rewrite any 3-CNF instance into an equisatisfiable normal 3-CNF instance.

The pipeline drops tautological clauses, drops repeated clauses, strips
repeated literals inside a clause, drops repeats again (stripping can create
new ones), and finally replaces every 1- and 2-literal clause with a block of
full 3-literal clauses over fresh variables that forces it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Clause, Formula, clause_key, is_tautological

TAUTOLOGY_REMOVED = "TautologyRemoved"
DUPLICATE_REMOVED = "DuplicateRemoved"
REPEAT_STRIPPED = "RepeatStripped"
UNIT_EXPANDED = "UnitExpanded"
BINARY_EXPANDED = "BinaryExpanded"


class FreshVarAllocator:
    """Hands out consecutive variable indices above everything already in use."""

    def __init__(self, next_index: int):
        if next_index < 1:
            raise ValueError("variable indices start at 1")
        self.next_index = next_index

    @classmethod
    def above(cls, f: Formula) -> "FreshVarAllocator":
        return cls(max(f.num_vars, max(f.variables(), default=0)) + 1)

    def fresh(self) -> int:
        v = self.next_index
        self.next_index += 1
        return v

    def take(self, k: int) -> list[int]:
        return [self.fresh() for _ in range(k)]

    @property
    def last(self) -> int:
        return self.next_index - 1


@dataclass(frozen=True)
class TransformRecord:
    """One rewrite; ``clause_position`` is 1-based in that stage's input."""

    kind: str
    clause_position: int
    introduced_vars: tuple[int, ...] = ()
    introduced_clauses: int = 0

    def __str__(self):
        vars_ = ",".join(map(str, self.introduced_vars))
        return f"{self.kind} pos={self.clause_position} vars={vars_} clauses={self.introduced_clauses}"


def format_certificate(records) -> str:
    return "".join(f"{r}\n" for r in records)


def remove_tautologies(f: Formula) -> tuple[Formula, list[TransformRecord]]:
    kept, records = [], []
    for pos, clause in enumerate(f.clauses, 1):
        if is_tautological(clause):
            records.append(TransformRecord(TAUTOLOGY_REMOVED, pos))
        else:
            kept.append(clause)
    return Formula(tuple(kept), f.num_vars), records


def dedup_clauses(f: Formula) -> tuple[Formula, list[TransformRecord]]:
    """Keep the first copy of every clause (compared as literal multisets)."""
    kept, records, seen = [], [], set()
    for pos, clause in enumerate(f.clauses, 1):
        key = clause_key(clause)
        if key in seen:
            records.append(TransformRecord(DUPLICATE_REMOVED, pos))
            continue
        seen.add(key)
        kept.append(clause)
    return Formula(tuple(kept), f.num_vars), records


def strip_repeated_variables(f: Formula) -> tuple[Formula, list[TransformRecord]]:
    """Reduce x | x | y to x | y, keeping the first copy of each literal."""
    out, records = [], []
    for pos, clause in enumerate(f.clauses, 1):
        if is_tautological(clause):
            raise ValueError(
                f"clause {pos} is tautological; remove tautologies before stripping repeats"
            )
        stripped = tuple(dict.fromkeys(clause))
        if len(stripped) != len(clause):
            records.append(TransformRecord(REPEAT_STRIPPED, pos))
        out.append(stripped)
    return Formula(tuple(out), f.num_vars), records


def unit_gadget(x: int, alloc: FreshVarAllocator) -> list[Clause]:
    """Nine full clauses over ``x`` and six fresh variables; every model makes ``x`` true.

    Fresh variables are taken in the order a1, b1, d1, a2, b2, d2.
    """
    a1, b1, d1, a2, b2, d2 = alloc.take(6)
    return [
        (x, a1, b1),
        (x, a2, b2),
        (d1, -a1, -b1),
        (d1, -a1, b1),
        (d1, a1, -b1),
        (d2, -a2, -b2),
        (d2, -a2, b2),
        (d2, a2, -b2),
        (-d1, -d2, x),
    ]


def binary_gadget(x: int, y: int, alloc: FreshVarAllocator) -> list[Clause]:
    """Five full clauses over ``x``, ``y`` and fresh a, b, d; every model satisfies x | y."""
    if abs(x) == abs(y):
        raise ValueError("binary gadget needs literals on two distinct variables")
    a, b, d = alloc.take(3)
    return [
        (x, y, a),
        (d, -a, -b),
        (d, -a, b),
        (d, a, -b),
        (-d, x, y),
    ]


def expand_short_clauses(
    f: Formula, alloc: FreshVarAllocator
) -> tuple[Formula, list[TransformRecord]]:
    """Replace each 1- or 2-literal clause by its gadget, appended at the end."""
    kept, added, records = [], [], []
    for pos, clause in enumerate(f.clauses, 1):
        if len(clause) == 1:
            first = alloc.next_index
            block = unit_gadget(clause[0], alloc)
            kind = UNIT_EXPANDED
        elif len(clause) == 2:
            first = alloc.next_index
            block = binary_gadget(clause[0], clause[1], alloc)
            kind = BINARY_EXPANDED
        else:
            kept.append(clause)
            continue
        added.extend(block)
        records.append(
            TransformRecord(kind, pos, tuple(range(first, alloc.next_index)), len(block))
        )
    num_vars = max(f.num_vars, alloc.last)
    return Formula(tuple(kept + added), num_vars), records


def normalize(f: Formula) -> tuple[Formula, list[TransformRecord]]:
    if f.width() > 3:
        raise ValueError(f"clause of width {f.width()} found; input must be 3-CNF (width <= 3)")
    records: list[TransformRecord] = []
    for stage in (remove_tautologies, dedup_clauses, strip_repeated_variables, dedup_clauses):
        f, recs = stage(f)
        records += recs
    f, recs = expand_short_clauses(f, FreshVarAllocator.above(f))
    return f, records + recs
