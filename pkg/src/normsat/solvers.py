"""Ground-truth engines: exhaustive enumeration and the linear-time 2SAT procedure."""

from __future__ import annotations

from array import array
from dataclasses import dataclass

import numpy as np

from .formula import Formula
from .truth import GeneralizedAssignment, eval_alg1

MAX_BRUTE_VARS = 25

_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
# bit b of the word is set iff bit p of b is set, for p < 6
_LOW_MASKS = [
    np.uint64(sum(1 << b for b in range(64) if (b >> p) & 1)) for p in range(6)
]
_CHUNK_WORDS = 1 << 14


class OracleBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    satisfiable: bool
    witness: tuple[bool, ...] | None = None

    def __post_init__(self):
        if self.satisfiable and self.witness is None:
            raise ValueError("a satisfiable verdict needs a witness")

    def __bool__(self):
        return self.satisfiable

    def __str__(self):
        if not self.satisfiable:
            return "UNSAT"
        lits = [str(i) if v else str(-i) for i, v in enumerate(self.witness, 1)]
        return " ".join(["SAT", *lits])


def brute_force_sat(f: Formula) -> Verdict:
    """Decide ``f`` by enumerating all 2^n assignments over the declared variables.

    Assignments are visited in lexicographic order with x_1 most significant
    and false < true, so the witness is the lexicographically first model.
    Assignments are packed 64 to a machine word and evaluated in chunks.
    """
    n = f.num_vars
    if n > MAX_BRUTE_VARS:
        raise OracleBudgetError(
            f"brute force limited to {MAX_BRUTE_VARS} variables, formula declares {n}"
        )
    if not f.clauses:
        return Verdict(True, (False,) * n)

    total = 1 << n
    nwords = max(1, total >> 6)
    valid = _ALL if total >= 64 else np.uint64((1 << total) - 1)
    for start in range(0, nwords, _CHUNK_WORDS):
        words = np.arange(start, min(nwords, start + _CHUNK_WORDS), dtype=np.uint64)
        columns: dict[int, np.ndarray] = {}

        def column(var: int) -> np.ndarray:
            col = columns.get(var)
            if col is None:
                p = n - var
                if p < 6:
                    col = np.full(words.shape, _LOW_MASKS[p], dtype=np.uint64)
                else:
                    bit = (words >> np.uint64(p - 6)) & np.uint64(1)
                    col = np.where(bit.astype(bool), _ALL, np.uint64(0))
                columns[var] = col
            return col

        acc = np.full(words.shape, valid, dtype=np.uint64)
        for clause in f.clauses:
            sat = np.zeros(words.shape, dtype=np.uint64)
            for lit in clause:
                col = column(abs(lit))
                sat |= col if lit > 0 else ~col
            acc &= sat
            if not acc.any():
                break
        hits = np.flatnonzero(acc)
        if hits.size:
            w = int(hits[0])
            word = int(acc[w])
            bit = (word & -word).bit_length() - 1
            t = ((start + w) << 6) | bit
            return Verdict(True, tuple(bool((t >> (n - i)) & 1) for i in range(1, n + 1)))
    return Verdict(False)


def _node(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (lit < 0)


@dataclass(frozen=True)
class ImplicationGraph:
    """Implication digraph of a 2SAT instance in compressed sparse row form.

    Node ``2(v-1)`` is x_v and ``2(v-1)+1`` is its negation; the successors of
    node u are ``targets[offsets[u]:offsets[u+1]]``. ``scc_ids`` numbers
    components in reverse topological order (sinks first).
    """

    num_vars: int
    offsets: array
    targets: array
    scc_ids: array

    def successors(self, u: int):
        return self.targets[self.offsets[u]:self.offsets[u + 1]]

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.successors(u)) for u in range(2 * self.num_vars))

    @property
    def num_components(self) -> int:
        return max(self.scc_ids, default=-1) + 1


def _edges(f: Formula):
    for clause in f.clauses:
        if len(clause) > 2:
            raise ValueError(f"clause {clause} wider than 2 literals; not a 2SAT instance")
        l1, l2 = clause if len(clause) == 2 else (clause[0], clause[0])
        yield _node(-l1), _node(l2)
        if l1 != l2:
            yield _node(-l2), _node(l1)


def implication_graph(f: Formula) -> ImplicationGraph:
    # two passes into flat arrays: no per-edge objects survive, which keeps
    # the garbage collector from rescanning an ever larger heap
    n = 2 * f.num_vars
    offsets = array("l", [0]) * (n + 1)
    for u, _ in _edges(f):
        offsets[u + 1] += 1
    for u in range(n):
        offsets[u + 1] += offsets[u]
    fill = array("l", offsets)
    targets = array("l", [0]) * offsets[n]
    for u, v in _edges(f):
        targets[fill[u]] = v
        fill[u] += 1
    return ImplicationGraph(f.num_vars, offsets, targets, _tarjan(offsets, targets))


def _tarjan(offsets: array, targets: array) -> array:
    # iterative: recursion depth would otherwise grow with the instance
    n = len(offsets) - 1
    index = array("l", [-1]) * n
    low = array("l", [0]) * n
    cursor = array("l", offsets[:-1])
    on_stack = bytearray(n)
    comp = array("l", [-1]) * n
    stack: list[int] = []
    counter = ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = 1
        work = [root]
        while work:
            v = work[-1]
            i = cursor[v]
            if i < offsets[v + 1]:
                cursor[v] = i + 1
                w = targets[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = 1
                    work.append(w)
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def solve_2sat(f: Formula) -> Verdict:
    """Implication graph + strongly connected components.

    Unit clauses are read as (l or l). Unsatisfiable iff some x and not-x share
    a component; otherwise x is set true when its component comes later in
    topological order than that of not-x.
    """
    g = implication_graph(f)
    comp = g.scc_ids
    witness = []
    for v in range(f.num_vars):
        pos, neg = comp[2 * v], comp[2 * v + 1]
        if pos == neg:
            return Verdict(False)
        witness.append(pos < neg)
    return Verdict(True, tuple(witness))


def aggressive_2sat(a: GeneralizedAssignment, f: Formula, n: int | None = None) -> bool:
    """Evaluate ``f`` under ``a``; fall back to the 2SAT decision when that fails.

    True iff ``f`` is satisfiable, unlike the width-3 aggressive assignment
    which is only sound.
    """
    if f.width() > 2:
        raise ValueError("aggressive_2sat needs a 2SAT instance")
    value, _ = eval_alg1(a, f, n)
    if value:
        return True
    return solve_2sat(f).satisfiable
