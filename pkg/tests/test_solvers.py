import random

import pytest

from conftest import naive_sat
from normsat.formula import Formula
from normsat.generate import random_2sat, random_cnf
from normsat.solvers import (
    OracleBudgetError,
    Verdict,
    aggressive_2sat,
    brute_force_sat,
    implication_graph,
    solve_2sat,
)
from normsat.truth import NEGATIVE, GeneralizedAssignment, eval_alg1


def test_brute_eta1_first_model(eta1):
    # x1 = false already satisfies both clauses; all-false is lexicographically first
    v = brute_force_sat(eta1)
    assert v.satisfiable and v.witness == (False, False, False)
    assert str(v) == "SAT -1 -2 -3"


def test_brute_contradiction():
    v = brute_force_sat(Formula.of([(1,), (-1,)]))
    assert not v and str(v) == "UNSAT"


def test_brute_eta2(eta2):
    assert brute_force_sat(eta2).satisfiable


def test_brute_budget():
    with pytest.raises(OracleBudgetError):
        brute_force_sat(Formula((), 26))


def test_brute_empty_formula():
    assert brute_force_sat(Formula((), 4)).witness == (False,) * 4


@pytest.mark.parametrize("seed", range(300))
def test_brute_matches_naive_enumeration(seed):
    rng = random.Random(seed)
    f = random_cnf(rng, rng.randint(1, 11), rng.randint(1, 40))
    v = brute_force_sat(f)
    assert v.witness == naive_sat(f)
    if v:
        assert eval_alg1(GeneralizedAssignment.negative_extension(v.witness), f)[0]


def test_brute_crosses_chunk_boundary():
    # only model is all-true, the last assignment of a multi-chunk enumeration
    n = 22
    f = Formula.of([(i,) for i in range(1, n + 1)])
    assert brute_force_sat(f).witness == (True,) * n
    assert not brute_force_sat(Formula.of([(i,) for i in range(1, n + 1)] + [(-n,)]))


def test_2sat_eta2(eta2):
    v = solve_2sat(eta2)
    assert v and eta2.evaluate(v.witness)


def test_2sat_all_patterns_unsat():
    assert not solve_2sat(Formula.of([(1, 2), (-1, 2), (1, -2), (-1, -2)]))


def test_2sat_rejects_wide_clause(eta1):
    with pytest.raises(ValueError):
        solve_2sat(eta1)


def test_implication_graph_symmetric():
    f = Formula.of([(1, -2), (2, 3), (-3,)])
    g = implication_graph(f)
    edges = {(u, v) for u, out in enumerate(g.adjacency) for v in out}
    # u -> v implies not-v -> not-u
    assert edges == {(v ^ 1, u ^ 1) for u, v in edges}
    assert g.num_components <= 2 * f.num_vars


@pytest.mark.parametrize("seed", range(200))
def test_2sat_matches_brute(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    f = random_2sat(rng, n, rng.randint(1, 3 * n))
    v = solve_2sat(f)
    assert v.satisfiable == brute_force_sat(f).satisfiable
    if v:
        assert f.evaluate(v.witness)


def test_aggressive_2sat_step_one(eta2):
    a = GeneralizedAssignment.parse("1 -2 -3 4")
    assert eval_alg1(a, eta2, 4)[0]
    assert aggressive_2sat(a, eta2, 4)


def test_aggressive_2sat_unsat_false():
    f = Formula.of([(1, 2), (-1, 2), (1, -2), (-1, -2)])
    assert not aggressive_2sat(NEGATIVE, f)


def test_aggressive_2sat_falls_back_to_solver():
    f = Formula.of([(1, 2), (-1, 2)])
    assert not eval_alg1(NEGATIVE, f)[0]
    assert aggressive_2sat(NEGATIVE, f)
