"""Satisfiability-preserving CNF rewriting, occurrence classification,
traced aggressive truth assignments and the exact assignment metric."""

from .aggressive import AggressiveComposite, eval_aggressive, eval_composition, guard, guard_chain
from .cauchy import RegularCauchySeq, characteristic_rep, diagonalize, regular_cauchy
from .classifier import ClassLabel, algorithm2, classify
from .equivalence import (
    PiMap,
    apply_pi,
    check_equivalent_composite,
    check_equivalent_ta1,
    derive_pi,
)
from .formula import (
    DimacsError,
    Formula,
    NormalReport,
    VarMap,
    compact_variables,
    emit_dimacs,
    inspect_normal,
    parse_dimacs,
)
from .metric import (
    Atom,
    atomic_distance,
    distance_algorithms,
    distance_composite,
    distance_empty_ta1,
    distance_ta1,
)
from .normalizer import (
    FreshVarAllocator,
    TransformRecord,
    binary_gadget,
    dedup_clauses,
    normalize,
    remove_tautologies,
    strip_repeated_variables,
    unit_gadget,
)
from .occurrence import SplitRecord, needs_reduction, reduce_to_34, split_variable
from .solvers import Verdict, aggressive_2sat, brute_force_sat, solve_2sat
from .truth import GeneralizedAssignment, Step, eval_alg1

__version__ = "0.1.0"
