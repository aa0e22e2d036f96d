"""Clique-join forms ``K_a v (K_p1 + K_p2 + ...)`` and the catalog of predicted forms.

Every super commuting graph of the supported families is a complete graph
joined to a disjoint union of cliques.  Such a graph is determined up to
isomorphism by ``a`` and the multiset of clique sizes, which is what
:class:`CliqueJoinForm` stores.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import NotCliqueJoin, NotInCatalog
from .graph import Graph
from .presentation import Family

EQUALITY = "equality"
CONJUGACY = "conjugacy"
ORDER = "order"
RELATIONS = (EQUALITY, CONJUGACY, ORDER)


@dataclass(frozen=True, order=True)
class CliqueJoinForm:
    """``a`` dominant vertices joined to cliques of sizes ``parts`` (descending).

    Use :func:`normalize` to construct; a single part is folded into ``a``.
    """

    a: int
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        if self.a < 0 or any(p <= 0 for p in self.parts):
            raise ValueError(f"invalid form ({self.a}, {self.parts})")
        if len(self.parts) == 1:
            raise ValueError("a single part must be folded into a; use normalize()")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be sorted descending; use normalize()")

    @property
    def n_vertices(self):
        return self.a + sum(self.parts)

    @property
    def is_complete(self):
        return not self.parts

    def __str__(self):
        return render_form(self)


def normalize(a, parts=()):
    """Canonical form of ``K_a v (K_p1 + ...)``; zero-size parts are dropped."""
    parts = sorted((int(p) for p in parts if p), reverse=True)
    if len(parts) == 1:
        return CliqueJoinForm(int(a) + parts[0], ())
    return CliqueJoinForm(int(a), tuple(parts))


def forms_equal(f1, f2):
    return f1.a == f2.a and f1.parts == f2.parts


def render_form(f):
    """``K_a v (K_p1 + K_p2)`` with parts ascending; ``K_n`` when complete."""
    if not f.parts:
        return f"K_{f.a}"
    inner = " + ".join(f"K_{p}" for p in sorted(f.parts))
    if f.a == 0:
        return inner
    return f"K_{f.a} v ({inner})"


_FORM_RE = re.compile(r"^\s*(?:K_(\d+)\s*v\s*\((.*)\)|(.*))\s*$")


def parse_form(text):
    """Inverse of :func:`render_form`."""
    m = _FORM_RE.match(text)
    a = int(m.group(1)) if m.group(1) else 0
    body = m.group(2) if m.group(1) else m.group(3)
    parts = []
    for term in body.split("+"):
        t = term.strip()
        if not re.fullmatch(r"K_\d+", t):
            raise ValueError(f"cannot parse form {text!r}")
        parts.append(int(t[2:]))
    if not m.group(1) and len(parts) == 1:
        return normalize(parts[0])
    return normalize(a, parts)


def build_form(f):
    """The graph ``K_a v (K_p1 + ...)``: dominant vertices first, then parts descending."""
    n = f.n_vertices
    owner = np.repeat(np.arange(len(f.parts)), f.parts)
    A = np.ones((n, n), dtype=bool)
    A[f.a:, f.a:] = owner[:, None] == owner[None, :]
    np.fill_diagonal(A, False)
    return Graph(A)


def recognize_form(g):
    """Recover the clique-join form of ``g``.

    Strips the dominant vertices and requires every component of the rest to
    be a clique; raises NotCliqueJoin otherwise.
    """
    n = g.n_vertices
    if n == 0:
        raise ValueError("cannot recognize the empty graph")
    A = g.adjacency
    dominant = A.sum(axis=1) == n - 1
    rest = np.nonzero(~dominant)[0]
    closed = A[np.ix_(rest, rest)] | np.eye(len(rest), dtype=bool)
    seen = np.zeros(len(rest), dtype=bool)
    parts = []
    for v in range(len(rest)):
        if seen[v]:
            continue
        members = np.nonzero(closed[v])[0]
        # in a disjoint union of cliques every member has the same closed neighbourhood
        if not (closed[members] == closed[v]).all():
            raise NotCliqueJoin(f"the non-dominant part has a component containing vertex {rest[v]} that is not a clique")
        seen[members] = True
        parts.append(len(members))
    return normalize(int(dominant.sum()), parts)


def predicted_form(spec, relation):
    """The structure the theorem catalog predicts for ``spec`` under ``relation``.

    Raises NotInCatalog for the order relation on M_2mn, for which no
    structure is stated.
    """
    relation = relation.lower()
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    f = spec.family
    if f is Family.QUASIDIHEDRAL:
        return _quasidihedral(spec.m, relation)
    if f is Family.M2MN:
        return _m2mn(spec.m, spec.n, relation)
    n = spec.n
    odd = n % 2 == 1
    if f is Family.DIHEDRAL:
        if relation == EQUALITY:
            return normalize(1, [1] * n + [n - 1]) if odd else normalize(2, [2] * (n // 2) + [n - 2])
        if relation == CONJUGACY:
            if odd:
                return normalize(1, [n - 1, n])
            if (n // 2) % 2 == 0:
                return normalize(2, [n - 2, n // 2, n // 2])
            return normalize(2, [n - 2, n])
        return normalize(1, [n - 1, n]) if odd else normalize(2 * n)
    if f is Family.QUATERNION:
        if relation == EQUALITY:
            return normalize(2, [2] * n + [2 * n - 2])
        if relation == CONJUGACY:
            return normalize(2, [2 * n - 2, 2 * n]) if odd else normalize(2, [2 * n - 2, n, n])
        return normalize(2, [2 * n, 2 * n - 2]) if odd else normalize(4 * n)
    if f is Family.V8N:
        if relation == EQUALITY:
            return normalize(2, [4 * n - 2] + [2] * (2 * n)) if odd else normalize(4, [4 * n - 4] + [4] * n)
        if relation == CONJUGACY:
            return normalize(2, [4 * n - 2, 2 * n, 2 * n]) if odd else normalize(4, [4 * n - 4, 2 * n, 2 * n])
        return normalize(2 * n + 4, [2 * n, 4 * n - 4]) if odd else normalize(8 * n)
    if f is Family.SEMIDIHEDRAL:
        if relation == EQUALITY:
            return normalize(4, [4 * n - 4] + [4] * n) if odd else normalize(2, [4 * n - 2] + [2] * (2 * n))
        if relation == CONJUGACY:
            return normalize(4, [4 * n - 4, 4 * n]) if odd else normalize(2, [4 * n - 2, 2 * n, 2 * n])
        return normalize(8 * n)
    if f is Family.U6N:
        if relation == EQUALITY:
            return normalize(n, [2 * n] + [n] * 3)
        return normalize(n, [2 * n, 3 * n])
    raise NotInCatalog(f"no catalog entry for {spec}")


def _quasidihedral(m, relation):
    if relation == EQUALITY:
        return normalize(2, [2 ** (m - 1) - 2] + [2] * 2 ** (m - 2))
    if relation == CONJUGACY:
        return normalize(2, [2 ** (m - 2), 2 ** (m - 2), 2 ** (m - 1) - 2])
    return normalize(2 ** m)


def _m2mn(m, n, relation):
    if relation == ORDER:
        raise NotInCatalog("no order super commuting graph structure is stated for M_2mn")
    if relation == EQUALITY:
        if m % 2:
            return normalize(n, [(m - 1) * n] + [n] * m)
        return normalize(2 * n, [(m // 2 - 1) * 2 * n] + [2 * n] * (m // 2))
    if m % 2:
        return normalize(n, [m * n - n, m * n])
    if (m // 2) % 2 == 0:
        return normalize(2 * n, [m * n // 2, m * n // 2, m * n - 2 * n])
    return normalize(2 * n, [m * n, m * n - 2 * n])
