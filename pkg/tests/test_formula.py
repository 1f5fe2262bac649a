import random

import pytest
from hypothesis import given, strategies as st

from normsat.formula import (
    DimacsError,
    Formula,
    compact_variables,
    emit_dimacs,
    inspect_normal,
    parse_dimacs,
)
from normsat.generate import random_cnf

ETA1_TEXT = "p cnf 3 2\n-1 -2 -3 0\n-1 2 3 0\n"


def test_parse_example_one(eta1):
    assert eta1.clauses == ((-1, -2, -3), (-1, 2, 3))
    assert eta1.num_vars == 3


def test_parse_unit():
    assert parse_dimacs("p cnf 1 1\n1 0\n") == Formula(((1,),), 1)


def test_parse_accepts_bytes_comments_and_wrapped_clauses():
    f = parse_dimacs(b"c hello\np cnf 3 2\n1 -2\n 3 0 -1 0\n")
    assert f.clauses == ((1, -2, 3), (-1,))


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("p cnf 2 1\n3 0\n", 2, "exceeds declared"),
        ("p cnf 2 1\n1 2\n", 2, "terminator"),
        ("p cnf x 1\n1 0\n", 1, "malformed header"),
        ("p dnf 2 1\n1 0\n", 1, "malformed header"),
        ("1 0\n", 1, "before 'p cnf'"),
        ("p cnf 2 1\n1 q 0\n", 2, "bad literal"),
        ("p cnf 2 1\n0\n", 2, "empty clause"),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(DimacsError) as exc:
        parse_dimacs(text)
    assert exc.value.lineno == lineno
    assert fragment in str(exc.value)


def test_emit_exact_strings(eta1, eta2):
    assert emit_dimacs(eta1) == ETA1_TEXT
    assert emit_dimacs(eta2) == "p cnf 3 2\n1 3 0\n-1 -3 0\n"
    assert emit_dimacs(Formula((), 3)) == "p cnf 3 0\n"


@given(st.integers(0, 2**32))
def test_round_trip(seed):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(1, 9), rng.randint(0, 12))
    assert parse_dimacs(emit_dimacs(f)) == f


def test_formula_rejects_out_of_range_literal():
    with pytest.raises(ValueError):
        Formula(((1, 4),), 3)


def test_compact_relabels_in_order():
    f = Formula.of([(2, -5), (9, 5, -2)])
    g, vmap = compact_variables(f)
    assert g.clauses == ((1, -2), (3, 2, -1))
    assert g.num_vars == 3
    assert vmap.as_dict() == {2: 1, 5: 2, 9: 3}


def test_compact_single_variable():
    g, vmap = compact_variables(Formula.of([(7,)]))
    assert g == Formula(((1,),), 1)
    assert vmap.as_dict() == {7: 1}


def test_compact_identity_on_contiguous(eta1):
    g, vmap = compact_variables(eta1)
    assert g is eta1
    assert vmap.is_identity()


@given(st.integers(0, 2**32))
def test_compact_idempotent_and_normalness_stable(seed):
    rng = random.Random(seed)
    f = random_cnf(rng, 12, rng.randint(1, 10))
    g, m1 = compact_variables(f)
    h, m2 = compact_variables(g)
    assert h == g and m2.is_identity()
    assert len(g) == len(f)
    assert inspect_normal(f).is_normal == inspect_normal(g).is_normal


def test_inspect_tautology():
    r = inspect_normal(Formula.of([(1, -1, 2), (1, 2, 3)]), 3)
    assert r.tautological_clause_positions == (1,)
    assert not r.is_normal


def test_inspect_duplicate_reports_later_copy():
    r = inspect_normal(Formula.of([(1, 2, 3), (1, 2, 3)]), 3)
    assert r.duplicate_clause_positions == (2,)
    assert r.tautological_clause_positions == ()


def test_inspect_duplicate_ignores_literal_order():
    r = inspect_normal(Formula.of([(1, 2, 3), (3, 1, 2)]), 3)
    assert r.duplicate_clause_positions == (2,)


def test_inspect_non_full():
    r = inspect_normal(Formula.of([(1, 2), (1, 1, 2), (1, 2, 3)]), 3)
    assert r.non_full_clause_positions == (1, 2)


def test_inspect_eta1_normal(eta1):
    # two full, distinct, non-tautological clauses
    r = inspect_normal(eta1, 3)
    assert r.is_normal
    assert inspect_normal(Formula(eta1.clauses, 9), 3).is_normal


def test_inspect_rejects_bad_width():
    with pytest.raises(ValueError):
        inspect_normal(Formula((), 1), 0)
