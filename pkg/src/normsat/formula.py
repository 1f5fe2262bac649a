"""CNF formulas, DIMACS I/O, variable compaction and normal-form inspection.

Literals are nonzero ints in the DIMACS convention: ``k`` is x_k and ``-k``
is its negation. A clause is a tuple of literals and a formula is an ordered
tuple of clauses plus a declared variable count. Order matters everywhere;
evaluation traces depend on it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Clause = tuple[int, ...]


class DimacsError(ValueError):
    """Malformed DIMACS input. ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Formula:
    clauses: tuple[Clause, ...]
    num_vars: int

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        for pos, clause in enumerate(clauses, 1):
            if not clause:
                raise ValueError(f"clause {pos} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(
                        f"clause {pos}: literal {lit} outside 1..{self.num_vars}"
                    )

    @classmethod
    def of(cls, clauses: Iterable[Sequence[int]], num_vars: int | None = None) -> "Formula":
        """Build a formula, inferring ``num_vars`` from the largest index if omitted."""
        clauses = tuple(tuple(c) for c in clauses)
        if num_vars is None:
            num_vars = max((abs(l) for c in clauses for l in c), default=0)
        return cls(clauses, num_vars)

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def literals(self):
        """All literal positions in clause order, then literal order."""
        for clause in self.clauses:
            yield from clause

    def variables(self) -> set[int]:
        return {abs(l) for l in self.literals()}

    def occurrences(self) -> Counter:
        """Per-variable occurrence count, positive and negative together."""
        return Counter(abs(l) for l in self.literals())

    def max_occurrence(self) -> int:
        return max(self.occurrences().values(), default=0)

    def width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def evaluate(self, signs: Sequence[bool]) -> bool:
        """Truth value under ``signs``, where ``signs[i-1]`` is the value of x_i."""
        return all(any(signs[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def __str__(self):
        def lit(l):
            return f"x{l}" if l > 0 else f"~x{-l}"

        if not self.clauses:
            return "T"
        return " & ".join("(" + " | ".join(map(lit, c)) + ")" for c in self.clauses)


def parse_dimacs(text: str | bytes) -> Formula:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    header = None
    clauses: list[Clause] = []
    pending: list[int] = []
    pending_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line == "%":
            continue
        if line.startswith("p"):
            if header is not None:
                raise DimacsError(lineno, "duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(lineno, f"malformed header {line!r}")
            try:
                nvars, nclauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(lineno, f"malformed header {line!r}") from None
            if nvars < 0 or nclauses < 0:
                raise DimacsError(lineno, "negative count in header")
            header = (nvars, nclauses)
            continue
        if header is None:
            raise DimacsError(lineno, "clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(lineno, f"bad literal {tok!r}") from None
            if lit == 0:
                if not pending:
                    raise DimacsError(lineno, "empty clause")
                clauses.append(tuple(pending))
                pending = []
                continue
            if abs(lit) > header[0]:
                raise DimacsError(
                    lineno, f"literal {lit} exceeds declared variable count {header[0]}"
                )
            if not pending:
                pending_line = lineno
            pending.append(lit)
    if header is None:
        raise DimacsError(0, "missing 'p cnf' header")
    if pending:
        raise DimacsError(pending_line, "clause missing 0 terminator")
    if len(clauses) != header[1]:
        raise DimacsError(
            0, f"header declares {header[1]} clauses, found {len(clauses)}"
        )
    return Formula(tuple(clauses), header[0])


def emit_dimacs(f: Formula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VarMap:
    """Order-preserving relabeling old index -> new index."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        olds = [o for o, _ in self.pairs]
        if olds != sorted(set(olds)):
            raise ValueError("VarMap keys must be strictly increasing")
        if [n for _, n in self.pairs] != list(range(1, len(self.pairs) + 1)):
            raise ValueError("VarMap image must be 1..n in order")

    def __getitem__(self, old: int) -> int:
        return dict(self.pairs)[old]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def is_identity(self) -> bool:
        return all(o == n for o, n in self.pairs)


def compact_variables(f: Formula) -> tuple[Formula, VarMap]:
    """Relabel the occurring variables x_{i_1} < ... < x_{i_n} as x_1 ... x_n.

    If ``f`` already uses exactly 1..n it is returned unchanged with the
    identity map.
    """
    used = sorted(f.variables())
    vmap = VarMap(tuple((old, new) for new, old in enumerate(used, 1)))
    if vmap.is_identity() and f.num_vars == len(used):
        return f, vmap
    table = vmap.as_dict()
    clauses = tuple(
        tuple(table[abs(l)] if l > 0 else -table[abs(l)] for l in c) for c in f.clauses
    )
    return Formula(clauses, len(used)), vmap


def is_tautological(clause: Sequence[int]) -> bool:
    lits = set(clause)
    return any(-l in lits for l in lits)


def is_full(clause: Sequence[int], k: int) -> bool:
    """``k`` distinct variables and no repeated variable."""
    vars_ = [abs(l) for l in clause]
    return len(vars_) == k and len(set(vars_)) == k


def clause_key(clause: Sequence[int]) -> tuple[int, ...]:
    """Multiset identity of a clause; literal order is not significant."""
    return tuple(sorted(clause))


@dataclass(frozen=True)
class NormalReport:
    tautological_clause_positions: tuple[int, ...] = ()
    duplicate_clause_positions: tuple[int, ...] = ()
    non_full_clause_positions: tuple[int, ...] = ()
    is_normal: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "is_normal",
            not (
                self.tautological_clause_positions
                or self.duplicate_clause_positions
                or self.non_full_clause_positions
            ),
        )


def inspect_normal(f: Formula, k: int = 3) -> NormalReport:
    """Flag tautological, repeated and non-full clauses (1-based positions).

    A repeated clause is reported at the position of the later copy.
    """
    if k < 1:
        raise ValueError("clause width k must be >= 1")
    taut, dup, nonfull = [], [], []
    seen: set[tuple[int, ...]] = set()
    for pos, clause in enumerate(f.clauses, 1):
        if is_tautological(clause):
            taut.append(pos)
        key = clause_key(clause)
        if key in seen:
            dup.append(pos)
        seen.add(key)
        distinct = {abs(l) for l in clause}
        if len(distinct) < k or len(distinct) != len(clause):
            nonfull.append(pos)
    return NormalReport(tuple(taut), tuple(dup), tuple(nonfull))


def is_normal(f: Formula, k: int = 3) -> bool:
    """Normal and every clause exactly width ``k``."""
    return inspect_normal(f, k).is_normal and all(len(c) == k for c in f.clauses)
