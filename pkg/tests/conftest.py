import itertools

import pytest

from normsat.formula import Formula, parse_dimacs


def naive_sat(f: Formula):
    """Plain itertools enumeration; returns the first model or None."""
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if f.evaluate(bits):
            return bits
    return None


def minisat(f: Formula) -> bool:
    from pysat.solvers import Minisat22

    with Minisat22(bootstrap_with=[list(c) for c in f.clauses]) as s:
        return s.solve()


@pytest.fixture
def eta1():
    return parse_dimacs("p cnf 3 2\n-1 -2 -3 0\n-1 2 3 0\n")


@pytest.fixture
def eta1_n4(eta1):
    # four declared variables so the fourth atom of the example assignment is in range
    return Formula(eta1.clauses, 4)


@pytest.fixture
def eta2():
    return parse_dimacs("p cnf 3 2\n1 3 0\n-1 -3 0\n")


def _unsat_base() -> Formula:
    from normsat.formula import compact_variables
    from normsat.occurrence import reduce_to_34

    full = [tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in itertools.product((1, -1), repeat=3)]
    reduced, _ = reduce_to_34(Formula.of(full))
    return compact_variables(reduced)[0]


UNSAT34 = _unsat_base()


def unsat_probe(v: int) -> Formula:
    """An unsatisfiable normal instance with max occurrence 4 whose first literal is on x_v.

    Every aggressive assignment fails on it, so a composite runs all of its
    parts, and a sign disagreement at x_v shows up in the very first decision.
    """
    first = abs(UNSAT34.clauses[0][0])

    def relabel(lit):
        var = abs(lit)
        var = v if var == first else first if var == v else var
        return var if lit > 0 else -var

    clauses = tuple(tuple(relabel(l) for l in c) for c in UNSAT34.clauses)
    return Formula(clauses, max(UNSAT34.num_vars, v))
