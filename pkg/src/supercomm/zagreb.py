"""First and second Zagreb indices, closed forms, and the Hansen-Vukicevic comparison.

All index values are exact Python integers.  The comparison
``M2/|E| >= M1/|V|`` is decided by cross-multiplication, never division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import NotInCatalog
from .presentation import Family
from .structure import CONJUGACY, EQUALITY, ORDER, RELATIONS


def m1(g):
    d = g.degrees.astype(np.int64)
    return int(d @ d)


def m2(g):
    # sum over ordered adjacent pairs counts each edge twice
    d = g.degrees.astype(np.int64)
    neighbour_sums = g.adjacency.astype(np.int64) @ d
    return int(d @ neighbour_sums) // 2


def zagreb_closed_form(f):
    """(M1, M2) of ``K_a v (K_p1 + ...)`` from the form alone."""
    a = f.a
    top = f.n_vertices - 1  # degree of a dominant vertex
    first = a * top ** 2
    second = comb(a, 2) * top ** 2
    for p in f.parts:
        deg = a + p - 1
        first += p * deg ** 2
        second += a * p * top * deg + comb(p, 2) * deg ** 2
    return first, second


def lemma_closed_form(a, b, c, d):
    """Zagreb indices of ``K_a v (d K_b + K_c)`` exactly as the lemma prints them."""
    N1 = a + d * b + c - 1
    first = a * N1 ** 2 + d * b * (a + b - 1) ** 2 + c * (a + c - 1) ** 2
    second = (
        Fraction(1, 2) * a * (a - 1) * N1 ** 2
        + d * a * b * N1 * (a + b - 1)
        + a * c * N1 * (a + c - 1)
        + Fraction(1, 2) * d * b * (b - 1) * (a + b - 1) ** 2
        + Fraction(1, 2) * c * (c - 1) * (a + c - 1) ** 2
    )
    return first, _integral(second)


def edge_count_form(f):
    total = sum(f.parts)
    return comb(f.a, 2) + f.a * total + sum(comb(p, 2) for p in f.parts)


@dataclass(frozen=True)
class ZagrebReport:
    n_vertices: int
    n_edges: int
    m1: int
    m2: int
    margin_numerator: int
    holds: bool
    strict: bool
    vacuous: bool = False

    def to_json(self):
        """JSON-ready dict; exact integers rendered as decimal strings."""
        return {
            "n_vertices": str(self.n_vertices),
            "n_edges": str(self.n_edges),
            "m1": str(self.m1),
            "m2": str(self.m2),
            "margin_numerator": str(self.margin_numerator),
            "holds": self.holds,
            "strict": self.strict,
            "vacuous": self.vacuous,
        }


def hansen_check(g):
    """Evaluate ``M2/|E| >= M1/|V|`` as ``M2*|V| - M1*|E| >= 0``.

    An edgeless graph is reported as holding vacuously with margin 0.
    """
    if g.n_vertices < 1:
        raise ValueError("the inequality needs at least one vertex")
    return report_from_values(g.n_vertices, g.n_edges, m1(g), m2(g))


def report_from_values(v, e, first, second):
    if e == 0:
        return ZagrebReport(v, 0, first, second, 0, True, False, vacuous=True)
    margin = second * v - first * e
    return ZagrebReport(v, e, first, second, margin, margin >= 0, margin > 0)


@dataclass(frozen=True)
class PaperValues:
    m1: int | Fraction
    m2: int | Fraction
    v: int | Fraction
    e: int | Fraction

    def as_tuple(self):
        return (self.m1, self.m2, self.v, self.e)


def paper_polynomials(spec, relation):
    """Evaluate the printed (M1, M2, |V|, |E|) polynomials for ``spec`` and ``relation``.

    Values are ints, or Fractions where a printed expression is not integral.

    Raises NotInCatalog when no printed formula covers the pair (order relation
    on M_2mn).
    """
    relation = relation.lower()
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    f = spec.family
    if f is Family.M2MN:
        values = _m2mn_values(spec.m, spec.n, relation)
    elif f is Family.QUASIDIHEDRAL:
        # QD_{2^m} is SD_{8n} with n = 2^(m-3)
        values = _sd_values(2 ** (spec.m - 3), relation)
    elif f is Family.SEMIDIHEDRAL:
        values = _sd_values(spec.n, relation)
    else:
        values = _SINGLE_PARAM[f](spec.n, relation)
    return PaperValues(*(_exact(x) for x in values))


def _integral(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


def _exact(x):
    # a misprinted polynomial may evaluate to a non-integer; keep it exact so it compares unequal
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def _complete_values(k):
    return k * (k - 1) ** 2, Fraction(k * (k - 1) ** 3, 2), k, Fraction(k * (k - 1), 2)


def _dihedral_values(n, relation):
    odd = n % 2
    if relation == EQUALITY:
        if odd:
            return n**3 + n**2, Fraction(n**4 - n**3 + 3 * n**2 - n, 2), 2 * n, Fraction(n**2 + n, 2)
        return n**3 + 4 * n**2 + 6 * n, Fraction(n**4 + n**3 + 21 * n**2, 2), 2 * n, Fraction(n**2 + 4 * n, 2)
    if relation == ORDER and not odd:
        return _complete_values(2 * n)
    if odd:
        return 2 * n**3 + n**2 - n, Fraction(2 * n**4 + 2 * n**3 - 3 * n**2 + n, 2), 2 * n, n**2
    if (n // 2) % 2 == 0:
        q = Fraction(n)
        return (
            Fraction(5, 4) * q**3 + 5 * q**2 - 2 * q,
            Fraction(9, 16) * q**4 + Fraction(21, 8) * q**3 + Fraction(3, 2) * q**2 - q,
            2 * n,
            Fraction(3, 4) * q**2 + q,
        )
    return 2 * n**3 + 6 * n**2 - 2 * n, n**4 + 5 * n**3 - n, 2 * n, n**2 + n


def _quaternion_values(n, relation):
    if relation == EQUALITY:
        return 8 * n**3 + 16 * n**2 + 12 * n, 8 * n**4 + 4 * n**3 + 42 * n**2, 4 * n, 2 * n**2 + 4 * n
    if relation == ORDER and n % 2 == 0:
        return _complete_values(4 * n)
    if n % 2 == 0:
        return 10 * n**3 + 20 * n**2 - 4 * n, 9 * n**4 + 21 * n**3 + 5 * n**2 - 2 * n, 4 * n, 3 * n**2 + 2 * n
    return 16 * n**3 + 16 * n**2 + 4 * n, 16 * n**4 + 40 * n**3 - 2 * n, 4 * n, 4 * n**2 + 2 * n


# the four shapes printed for V_8n, reused for SD_8n
def _k4_nk4(n):
    return 64 * n**3 + 160 * n**2 + 168 * n, 128 * n**4 + 160 * n**3 + 888 * n**2 + 196 * n, 8 * n, 8 * n**2 + 20 * n


def _k2_2nk2(n):
    return 64 * n**3 + 64 * n**2 + 24 * n, 128 * n**4 + 96 * n**3 + 104 * n**2, 8 * n, 8 * n**2 + 8 * n


def _k4_2k2n(n):
    return 80 * n**3 + 208 * n**2 + 8 * n, 144 * n**4 + 456 * n**3 + 356 * n**2 + 20 * n, 8 * n, 12 * n**2 + 12 * n


def _k2_2k2n(n):
    return 80 * n**3 + 80 * n**2 - 8 * n, 144 * n**4 + 168 * n**3 + 20 * n**2 - 4 * n, 8 * n, 12 * n**2 + 4 * n


def _v8n_values(n, relation):
    even = n % 2 == 0
    if relation == EQUALITY:
        return _k4_nk4(n) if even else _k2_2nk2(n)
    if relation == CONJUGACY:
        return _k4_2k2n(n) if even else _k2_2k2n(n)
    if even:
        return _complete_values(8 * n)
    return (
        304 * n**3 + 80 * n**2 + 8 * n,
        960 * n**4 + 1080 * n**3 + 1568 * n**2 - 220 * n,
        8 * n,
        24 * n**2 + 4 * n,
    )


def _sd_values(n, relation):
    even = n % 2 == 0
    if relation == EQUALITY:
        return _k2_2nk2(n) if even else _k4_nk4(n)
    if relation == CONJUGACY:
        if even:
            return _k2_2k2n(n)
        return 128 * n**3 + 256 * n**2 + 8 * n, 256 * n**4 + 832 * n**3 + 336 * n**2 - 52 * n, 8 * n, 16 * n**2 + 12 * n
    return _complete_values(8 * n)


def _u6n_values(n, relation):
    if relation == EQUALITY:
        return (
            66 * n**3 - 36 * n**2 + 6 * n,
            Fraction(228 * n**4 - 198 * n**3 + 54 * n**2 - 6 * n, 2),
            6 * n,
            Fraction(18 * n**2 - 6 * n, 2),
        )
    return (
        102 * n**3 - 48 * n**2 + 6 * n,
        Fraction(432 * n**4 - 306 * n**3 + 72 * n**2 - 6 * n, 2),
        6 * n,
        Fraction(19 * n**2 - 6 * n, 2),
    )


def _m2mn_values(m, n, relation):
    if relation == ORDER:
        raise NotInCatalog("no Zagreb formulas are printed for the order super commuting graph of M_2mn")
    m, n = Fraction(m), Fraction(n)
    v = 2 * m * n
    if relation == EQUALITY:
        if m % 2:
            first = m**3 * n**3 - 2 * m**2 * n**2 + 2 * m * n + 3 * m**2 * n**3 - 6 * m * n**2 + 4 * m * n**3
            second = Fraction(1, 2) * (
                m**4 * n**4 - 3 * m**3 * n**3 + 9 * m * n**2 + 2 * m**3 * n**4 - 9 * m**2 * n**3
                + 9 * m**2 * n**4 - 12 * m * n**3 + 3 * m**2 * n**2 - 2 * m * n + 4 * m * n**4
            )
            return first, second, v, (m**2 * n**2 + 3 * m * n**2 - 2 * m * n) / 2
        first = m**3 * n**3 - 2 * m**2 * n**2 + 6 * m**2 * n**3 + 16 * m * n**3 - 12 * m * n**2 + 2 * m * n
        second = Fraction(1, 2) * (
            m**4 * n**4 - 3 * m**3 * n**3 + 18 * m * n**2 + 4 * m**3 * n**4 - 18 * m**2 * n**3
            + 36 * m**2 * n**4 - 48 * m * n**3 + 3 * m**2 * n**2 - 2 * m * n + 32 * m * n**4
        )
        return first, second, v, (m**2 * n**2 + 6 * m * n**2 - 2 * m * n) / 2
    if m % 2:
        first = 2 * m**3 * n**3 + 5 * m**2 * n**3 - 4 * m**2 * n**2 + m * n**3 - 4 * m * n**2 + 2 * m * n
        second = Fraction(1, 2) * (
            2 * m**4 * n**4 - 6 * m**3 * n**3 + 6 * m * n**2 + 8 * m**3 * n**4 - 15 * m**2 * n**3
            + 6 * m**2 * n**4 - 3 * m * n**3 + 6 * m**2 * n**2 - 2 * m * n
        )
        return first, second, v, (2 * m**2 * n**2 + 2 * m * n**2 - 2 * m * n) / 2
    if (m / 2) % 2 == 0:
        first = (
            Fraction(5, 4) * m**3 * n**3 - 6 * m**2 * n**2 + 8 * m**2 * n**3
            + 4 * m * n**3 - 8 * m * n**2 + 2 * m * n
        )
        second = (
            Fraction(9, 16) * m**4 * n**4 - Fraction(15, 8) * m**3 * n**3 + 7 * m * n**2
            + Fraction(9, 2) * m**3 * n**4 - 12 * m**2 * n**3 + 11 * m**2 * n**4
            - 6 * m * n**3 + Fraction(9, 4) * m**2 * n**2 - m * n
        )
        return first, second, v, Fraction(3, 4) * m**2 * n**2 + 2 * m * n**2 - m * n
    first = 2 * m**3 * n**3 + 10 * m**2 * n**3 - 4 * m**2 * n**2 + 4 * m * n**3 - 8 * m * n**2 + 2 * m * n
    second = (
        m**4 * n**4 - 3 * m**3 * n**3 + 6 * m * n**2 + 8 * m**3 * n**4 - 16 * m**2 * n**3
        + 12 * m**2 * n**4 - 6 * m * n**3 + 3 * m**2 * n**2 - m * n
    )
    return first, second, v, m**2 * n**2 + 2 * m * n**2 - m * n


_SINGLE_PARAM = {
    Family.DIHEDRAL: _dihedral_values,
    Family.QUATERNION: _quaternion_values,
    Family.V8N: _v8n_values,
    Family.U6N: _u6n_values,
}
