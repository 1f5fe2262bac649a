"""Bring every variable of a normal 3-CNF instance down to at most 4 occurrences.

A variable with k > 4 occurrences is replaced occurrence by occurrence with
fresh copies x_1..x_k chained by the cyclic clauses (x_i | ~x_{i+1} | ~y_i).
Each link variable y_i is forced true by its own nine-clause unit gadget, so
the chain forces all copies equal. Every split adds 10k clauses, and the
total stays within 31 times the input clause count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Formula, is_normal
from .normalizer import FreshVarAllocator, unit_gadget

MAX_OCCURRENCES = 4


@dataclass(frozen=True)
class SplitRecord:
    split_var: int
    occurrence_count: int
    replacement_vars: tuple[int, ...]
    link_vars: tuple[int, ...]
    added_clauses: int

    def __str__(self):
        reps = ",".join(map(str, self.replacement_vars))
        links = ",".join(map(str, self.link_vars))
        return f"SPLIT var={self.split_var} k={self.occurrence_count} reps={reps} links={links}"


def needs_reduction(f: Formula) -> int | None:
    """Lowest-indexed variable occurring more than 4 times, if any."""
    over = [v for v, c in f.occurrences().items() if c > MAX_OCCURRENCES]
    return min(over, default=None)


def split_variable(
    f: Formula, v: int, alloc: FreshVarAllocator
) -> tuple[Formula, SplitRecord]:
    k = f.occurrences()[v]
    if k <= MAX_OCCURRENCES:
        raise ValueError(f"x{v} occurs {k} times; splitting needs more than {MAX_OCCURRENCES}")
    reps = alloc.take(k)
    links = alloc.take(k)
    seen = 0
    clauses = []
    for clause in f.clauses:
        new = []
        for lit in clause:
            if abs(lit) == v:
                rep = reps[seen]
                seen += 1
                new.append(rep if lit > 0 else -rep)
            else:
                new.append(lit)
        clauses.append(tuple(new))
    for i in range(k):
        clauses.append((reps[i], -reps[(i + 1) % k], -links[i]))
    for y in links:
        clauses.extend(unit_gadget(y, alloc))
    out = Formula(tuple(clauses), max(f.num_vars, alloc.last))
    return out, SplitRecord(v, k, tuple(reps), tuple(links), 10 * k)


def reduce_to_34(f: Formula) -> tuple[Formula, list[SplitRecord]]:
    """Split offending variables, lowest index first, until none exceeds 4 occurrences."""
    if not is_normal(f, 3):
        raise ValueError("reduce_to_34 expects a normal 3-CNF formula; normalize it first")
    alloc = FreshVarAllocator.above(f)
    records = []
    while (v := needs_reduction(f)) is not None:
        f, rec = split_variable(f, v, alloc)
        records.append(rec)
    return f, records


def format_splits(records) -> str:
    return "".join(f"{r}\n" for r in records)
