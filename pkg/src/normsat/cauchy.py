"""Regular Cauchy sequences of guarded deciders, their characteristic
representation, and the diagonal construction over a finite list."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .aggressive import AggressiveComposite, Decider, guard_chain
from .equivalence import check_equivalent_composite
from .formula import Formula
from .metric import distance_algorithms, ta1_tail
from .truth import NEGATIVE, GeneralizedAssignment

SignRule = Callable[[int], bool]


def _negative(i: int) -> bool:
    return False


class RegularCauchySeq:
    """The sequence f a0 a_1, f a0 a_2, ...; terms are built lazily and cached.

    ``term(n)`` is the negative extension of a sign prefix of length n + 1.
    """

    def __init__(self, a0: GeneralizedAssignment, term_fn: Callable[[int], GeneralizedAssignment]):
        self.a0 = a0
        self._term_fn = term_fn
        self._cache: dict[int, GeneralizedAssignment] = {}

    def term(self, n: int) -> GeneralizedAssignment:
        if n < 1:
            raise ValueError("terms are indexed from 1")
        a = self._cache.get(n)
        if a is None:
            a = self._cache[n] = self._term_fn(n)
        return a

    def element(self, n: int) -> AggressiveComposite:
        """The suffix (a0)(a_n) of the n-th decider."""
        return AggressiveComposite((self.a0, self.term(n)))

    def distance(self, m: int, n: int) -> Fraction:
        return distance_algorithms(self.element(m), self.element(n))

    def is_regular(self, upto: int) -> bool:
        """Check the prefix-length and agreement conditions for terms 1..upto."""
        for n in range(1, upto + 1):
            a, b = self.term(n), self.term(n + 1)
            if a != GeneralizedAssignment.negative_extension(a.signs(n + 1)):
                return False
            if a.signs(n) != b.signs(n):
                return False
        return True


def regular_cauchy(a0: GeneralizedAssignment = NEGATIVE, rule: SignRule | None = None) -> RegularCauchySeq:
    """Term n takes signs rule(1), ..., rule(n+1), then the negative tail."""
    rule = rule or _negative
    return RegularCauchySeq(
        a0, lambda n: GeneralizedAssignment.negative_extension([rule(i) for i in range(1, n + 2)])
    )


def cauchy_bound(n: int) -> Fraction:
    """Upper bound (6n+8) / (9 * 4**(n+1)) on d(f_n, f_{n+1})."""
    return Fraction(6 * n + 8, 9 * 4 ** (n + 1))


def cauchy_modulus(eps: Fraction) -> int:
    """Smallest N with d(f_m, f_n) < eps for all m, n > N.

    Terms past m agree on their first m signs, so d(f_m, f_n) is at most a
    quarter of the tail sum from index m + 1.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    N = 0
    while ta1_tail(N + 2) / 4 >= eps:
        N += 1
    return N


def convergence_table(seq: RegularCauchySeq, upto: int) -> str:
    rows = [
        f"{n}\t{seq.distance(n, n + 1)}\t{cauchy_bound(n)}" for n in range(1, upto + 1)
    ]
    return "".join(row + "\n" for row in rows)


def characteristic_rep(base: Decider, seq: RegularCauchySeq) -> Decider:
    """Decide a formula over n >= 3 variables with f a0 a_{n-2}."""

    def decide(f: Formula) -> bool:
        n = f.num_vars
        if n < 3:
            raise ValueError(f"characteristic representation needs n >= 3, got {n}")
        return guard_chain(base, seq.a0, seq.term(n - 2))(f)

    decide.sequence = seq
    return decide


def diagonalize(listed: Sequence[RegularCauchySeq], free: SignRule | None = None) -> RegularCauchySeq:
    """A regular sequence whose k-th term negates the k-th sign of listed[k]'s k-th term.

    Signs past the diagonal come from ``free`` (negative by default). Should a
    term still derive the same map as its listed counterpart, its free sign
    at k + 1 is flipped.
    """
    if not listed:
        raise ValueError("nothing to diagonalize")
    free = free or _negative
    a0 = listed[0].a0
    diag = [not seq.term(k).sign(k) for k, seq in enumerate(listed, 1)]

    def sign(i: int) -> bool:
        return diag[i - 1] if i <= len(diag) else free(i)

    def term(k: int) -> GeneralizedAssignment:
        signs = [sign(i) for i in range(1, k + 1)] + [free(k + 1)]
        a = GeneralizedAssignment.negative_extension(signs)
        if k <= len(listed):
            ours = AggressiveComposite((a0, a))
            theirs = listed[k - 1].element(k)
            if check_equivalent_composite(ours, theirs):
                signs[k] = not signs[k]
                a = GeneralizedAssignment.negative_extension(signs)
        return a

    return RegularCauchySeq(a0, term)
