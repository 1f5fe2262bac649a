"""Exact distances between assignments, composites and guarded deciders.

All values are ``fractions.Fraction``. Infinite sums over eventually periodic
sign patterns are evaluated in closed form as arithmetic-geometric series.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple

from .aggressive import AggressiveComposite
from .truth import GeneralizedAssignment

HALF = Fraction(1, 2)


class Atom(NamedTuple):
    """x_var* when ``sign`` is True, the negated atom otherwise."""

    var: int
    sign: bool


def atomic_distance(e1: Atom | None, e2: Atom | None) -> Fraction:
    """Distance between two atoms; ``None`` is the empty parameter."""
    if e1 is None and e2 is None:
        raise ValueError("at least one atom must be given")
    if e1 is None or e2 is None:
        i = (e1 or e2).var
        return Fraction(i, 2 ** (i + 2))
    i, j = e1.var, e2.var
    if e1.sign != e2.sign:
        return Fraction(i + j, 2 ** (i + j + 2))
    return Fraction(abs(i - j), 2 ** (i + j + 2))


def arith_geom_tail(start: int, step: int, q: Fraction) -> Fraction:
    """sum over t >= 0 of (start + t*step) * q**(start + t*step), for 0 < q < 1."""
    y = q**step
    return q**start * (start / (1 - y) + step * y / (1 - y) ** 2)


def ta1_tail(k: int) -> Fraction:
    """sum_{j >= k} j / 2**(2j+1): everything from index k on disagrees."""
    return arith_geom_tail(k, 1, Fraction(1, 4)) / 2


def empty_tail(k: int) -> Fraction:
    """sum_{j >= k} j / 2**(j+2), which equals (k+1) / 2**(k+1)."""
    return arith_geom_tail(k, 1, HALF) / 4


def distance_ta1(a: GeneralizedAssignment, b: GeneralizedAssignment) -> Fraction:
    """Sum over all indices k of the distance between the k-th atoms of ``a`` and ``b``.

    Only disagreeing indices contribute, each k / 2**(2k+1). Past both prefixes
    the disagreement pattern repeats with period lcm of the tail lengths.
    """
    start = max(len(a.prefix), len(b.prefix))
    period = lcm(len(a.tail), len(b.tail))
    total = Fraction(0)
    for k in range(1, start + 1):
        if a.sign(k) != b.sign(k):
            total += Fraction(k, 2 ** (2 * k + 1))
    for k in range(start + 1, start + period + 1):
        if a.sign(k) != b.sign(k):
            total += arith_geom_tail(k, period, Fraction(1, 4)) / 2
    return total


def distance_empty_ta1(a: GeneralizedAssignment | None = None) -> Fraction:
    """Distance from any assignment to the empty parameter; always 1/2."""
    return empty_tail(1)


def _parts(c) -> tuple[GeneralizedAssignment, ...]:
    if c is None:
        return ()
    if isinstance(c, GeneralizedAssignment):
        return (c,)
    if isinstance(c, AggressiveComposite):
        return c.parts
    return tuple(c)


def distance_composite(c1, c2) -> Fraction:
    """Position-weighted sum with weight 1/i**2 at the i-th part.

    Where one composite is longer, its surplus parts are measured against the
    empty parameter.
    """
    p1, p2 = _parts(c1), _parts(c2)
    total = Fraction(0)
    for i in range(1, max(len(p1), len(p2)) + 1):
        if i <= len(p1) and i <= len(p2):
            d = distance_ta1(p1[i - 1], p2[i - 1])
        else:
            d = distance_empty_ta1()
        total += d / (i * i)
    return total


def distance_algorithms(c1, c2, same_family: bool = True) -> Fraction:
    """Distance between ``f c1`` and ``f c2``; ``None`` stands for bare ``f``.

    Deciders built on different base procedures are at distance 1.
    """
    if not same_family:
        return Fraction(1)
    return distance_composite(c1, c2)
