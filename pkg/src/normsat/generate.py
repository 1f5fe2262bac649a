"""Seeded random instances and assignments for corpora and the CLI."""

from __future__ import annotations

import random

from .cauchy import RegularCauchySeq, regular_cauchy
from .formula import Formula, clause_key
from .truth import GeneralizedAssignment


def random_cnf(
    rng: random.Random,
    n: int,
    m: int,
    weights: tuple[float, float, float] = (0.1, 0.15, 0.75),
) -> Formula:
    """Unconstrained clauses of width 1..3 over x_1..x_n.

    Literals are drawn independently, so tautologies, repeated literals and
    repeated clauses all occur naturally.
    """
    clauses = []
    for _ in range(m):
        width = rng.choices((1, 2, 3), weights)[0]
        clauses.append(tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(width)))
    return Formula(tuple(clauses), n)


def random_normal_3cnf(
    rng: random.Random, n: int, m: int, max_occ: int | None = None, tries: int = 200
) -> Formula:
    """Up to ``m`` distinct full 3-literal clauses, optionally capping occurrences.

    Fewer than ``m`` clauses come back when the cap or ``n`` leaves no room.
    """
    if n < 3:
        raise ValueError("need at least 3 variables for full 3-literal clauses")
    counts = [0] * (n + 1)
    seen = set()
    clauses = []
    for _ in range(m):
        for _ in range(tries):
            pool = [v for v in range(1, n + 1) if max_occ is None or counts[v] < max_occ]
            if len(pool) < 3:
                break
            vs = rng.sample(pool, 3)
            clause = tuple(v if rng.random() < 0.5 else -v for v in vs)
            key = clause_key(clause)
            if key in seen:
                continue
            seen.add(key)
            clauses.append(clause)
            for v in vs:
                counts[v] += 1
            break
    return Formula(tuple(clauses), n)


def random_occurrence_instance(
    rng: random.Random, n: int, m: int, s: int, tries: int = 1000
) -> Formula:
    """A normal 3-CNF instance whose maximum occurrence count is exactly ``s``."""
    for _ in range(tries):
        f = random_normal_3cnf(rng, n, m, max_occ=s)
        if f.clauses and f.max_occurrence() == s:
            return f
    raise ValueError(f"could not hit max occurrence {s} with n={n}, m={m}")


def random_2sat(rng: random.Random, n: int, m: int, unit_prob: float = 0.1) -> Formula:
    clauses = []
    for _ in range(m):
        if rng.random() < unit_prob:
            clauses.append((rng.choice((1, -1)) * rng.randint(1, n),))
        else:
            u, v = rng.sample(range(1, n + 1), 2) if n > 1 else (1, 1)
            clauses.append((rng.choice((1, -1)) * u, rng.choice((1, -1)) * v))
    return Formula(tuple(clauses), n)


def random_assignment(
    rng: random.Random, max_prefix: int = 8, max_tail: int = 3
) -> GeneralizedAssignment:
    prefix = tuple(rng.random() < 0.5 for _ in range(rng.randint(0, max_prefix)))
    tail = tuple(rng.random() < 0.5 for _ in range(rng.randint(1, max_tail)))
    return GeneralizedAssignment(prefix, tail)


def random_regular_sequence(
    rng: random.Random, a0: GeneralizedAssignment | None = None, span: int = 64
) -> RegularCauchySeq:
    """Regular sequence with a random sign at each of the first ``span`` indices."""
    signs = [rng.random() < 0.5 for _ in range(span)]
    return regular_cauchy(
        a0 or GeneralizedAssignment(), lambda i: signs[i - 1] if i <= span else False
    )
