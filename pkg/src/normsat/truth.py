"""Generalized truth assignments, evaluation traces and the traced CNF evaluator.

A generalized assignment fixes a sign for every variable index 1, 2, 3, ...
from finite data: an explicit prefix followed by a repeating tail word.

Trace steps are encoded so that steps which must be considered the same
compare equal structurally. Deciding a literal of variable i is recorded as
``DECIDE i value`` whatever the polarities involved, and probing a literal
of variable j with the atomic assignment at i != j is ``PROBE i j``
regardless of either sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .formula import Formula


class Step(NamedTuple):
    op: str
    a: int | None = None
    b: int | bool | None = None

    def __str__(self):
        if self.op == "DECIDE":
            return f"DECIDE {self.a} {'T' if self.b else 'F'}"
        if self.op == "PROBE":
            return f"PROBE {self.a} {self.b}"
        if self.op == "RET":
            return f"RET {'T' if self.b else 'F'}"
        return self.op


def decide(var: int, value: bool) -> Step:
    return Step("DECIDE", var, bool(value))


def probe(index: int, var: int) -> Step:
    if index == var:
        raise ValueError("a probe needs the assignment index to differ from the variable")
    return Step("PROBE", index, var)


SETC = Step("SETC")
INCC = Step("INCC")
CHECKC = Step("CHECKC")
RET_T = Step("RET", None, True)
RET_F = Step("RET", None, False)

Trace = tuple[Step, ...]


def format_trace(trace: Iterable[Step]) -> str:
    return "".join(f"{step}\n" for step in trace)


def parse_trace(text: str) -> Trace:
    steps = []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        op = parts[0]
        if op == "DECIDE":
            steps.append(decide(int(parts[1]), parts[2] == "T"))
        elif op == "PROBE":
            steps.append(probe(int(parts[1]), int(parts[2])))
        elif op == "RET":
            steps.append(RET_T if parts[1] == "T" else RET_F)
        elif op in ("SETC", "INCC", "CHECKC") and len(parts) == 1:
            steps.append(Step(op))
        else:
            raise ValueError(f"unknown trace line {line!r}")
    return tuple(steps)


def _primitive_root(word: tuple[bool, ...]) -> tuple[bool, ...]:
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return word[:p]
    return word


@dataclass(frozen=True)
class GeneralizedAssignment:
    """Signs for x_1, x_2, ...: ``prefix`` then ``tail`` repeated forever.

    True means x_i* (x_i true), False means the negated atom. The stored form
    is canonical (primitive tail, shortest prefix), so two instances are
    equal exactly when they assign the same sign at every index.
    """

    prefix: tuple[bool, ...] = ()
    tail: tuple[bool, ...] = (False,)

    def __post_init__(self):
        prefix = tuple(bool(s) for s in self.prefix)
        tail = _primitive_root(tuple(bool(s) for s in self.tail))
        if not tail:
            raise ValueError("tail word must be nonempty")
        while prefix and prefix[-1] == tail[-1]:
            prefix = prefix[:-1]
            tail = tail[-1:] + tail[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def negative_extension(cls, signs: Sequence[bool]) -> "GeneralizedAssignment":
        return cls(tuple(signs), (False,))

    @classmethod
    def positive_extension(cls, signs: Sequence[bool]) -> "GeneralizedAssignment":
        return cls(tuple(signs), (True,))

    @classmethod
    def from_literals(cls, lits: Iterable[int], tail: str = "neg") -> "GeneralizedAssignment":
        """``[1, -2, -3, 4]`` gives x1* ~x2* ~x3* x4*, then the named tail.

        Literals must be listed for 1, 2, ... in order.
        """
        signs = []
        for i, lit in enumerate(lits, 1):
            if abs(lit) != i:
                raise ValueError(f"prefix literal {lit} is not at position {i}")
            signs.append(lit > 0)
        return cls(tuple(signs), parse_tail(tail))

    @classmethod
    def parse(cls, prefix: str, tail: str = "neg") -> "GeneralizedAssignment":
        return cls.from_literals([int(t) for t in prefix.split()], tail)

    def sign(self, i: int) -> bool:
        if i < 1:
            raise ValueError("variable indices start at 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.tail[(i - len(self.prefix) - 1) % len(self.tail)]

    def signs(self, n: int) -> tuple[bool, ...]:
        return tuple(self.sign(i) for i in range(1, n + 1))

    def value(self, index: int, lit: int) -> bool | None:
        """The atom at ``index`` applied to ``lit``; None when undefined."""
        if abs(lit) != index:
            return None
        return self.sign(index) == (lit > 0)

    def with_sign(self, i: int, sign: bool) -> "GeneralizedAssignment":
        width = max(i, len(self.prefix))
        signs = list(self.signs(width))
        signs[i - 1] = sign
        tail = self.tail
        # keep the periodic phase aligned after lengthening the prefix
        shift = (width - len(self.prefix)) % len(tail)
        return GeneralizedAssignment(tuple(signs), tail[shift:] + tail[:shift])

    def period_start(self) -> int:
        """First index from which the sign pattern is purely periodic."""
        return len(self.prefix) + 1

    def to_text(self) -> str:
        lits = " ".join(str(i if s else -i) for i, s in enumerate(self.prefix, 1))
        return f"{lits} tail={format_tail(self.tail)}".strip()

    def __str__(self):
        return self.to_text()


def parse_tail(spec: str) -> tuple[bool, ...]:
    if spec == "neg":
        return (False,)
    if spec == "pos":
        return (True,)
    if spec == "alt":
        return (True, False)
    if spec.startswith("word:"):
        word = spec[5:]
        if not word or set(word) - {"+", "-"}:
            raise ValueError(f"bad tail word {spec!r}")
        return tuple(c == "+" for c in word)
    raise ValueError(f"unknown tail {spec!r}; expected neg, pos, alt or word:<+->")


def format_tail(tail: Sequence[bool]) -> str:
    if tuple(tail) == (False,):
        return "neg"
    if tuple(tail) == (True,):
        return "pos"
    return "word:" + "".join("+" if s else "-" for s in tail)


NEGATIVE = GeneralizedAssignment((), (False,))
POSITIVE = GeneralizedAssignment((), (True,))


def _loop_bound(f: Formula, n: int | None) -> int:
    if n is None:
        n = f.num_vars
    top = max(f.variables(), default=0)
    if top > n:
        raise ValueError(f"variable x{top} lies beyond the loop bound n={n}")
    return n


def eval_alg1(a: GeneralizedAssignment, f: Formula, n: int | None = None) -> tuple[bool, Trace]:
    """Evaluate ``f`` under ``a`` clause by clause, recording every atom application.

    For each literal the atoms e_1, e_2, ... are tried from p = 1 until the one
    matching the literal's variable; the others are undefined on it and show
    up as probes. A true literal ends its clause; the formula is false at the
    first clause whose literals are all false.
    """
    _loop_bound(f, n)
    steps: list[Step] = []
    for clause in f.clauses:
        for lit in clause:
            var = abs(lit)
            steps.extend(probe(p, var) for p in range(1, var))
            value = a.sign(var) == (lit > 0)
            steps.append(decide(var, value))
            if value:
                break
        else:
            steps.append(RET_F)
            return False, tuple(steps)
    steps.append(RET_T)
    return True, tuple(steps)
