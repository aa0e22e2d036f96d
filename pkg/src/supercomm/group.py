"""Finite groups from presentations, and the element partitions used by super graphs.

Groups are built by Todd-Coxeter coset enumeration over the trivial subgroup
(HLT strategy, Holt-style coincidence processing).  The resulting coset table
is the right regular action, from which the full multiplication table follows.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, OrderMismatch
from .presentation import Presentation

DEFAULT_MAX_COSETS = 100_000


def default_budget():
    env = os.environ.get("SUPERCOMM_MAX_COSETS")
    return int(env) if env else DEFAULT_MAX_COSETS


class _CosetTable:
    def __init__(self, ngens, max_cosets):
        # column 2i is generator i, column 2i+1 its inverse
        self.ncols = 2 * ngens
        self.inv = [c ^ 1 for c in range(self.ncols)]
        self.max_cosets = max_cosets
        self.rows = [[-1] * self.ncols]
        self.parent = [0]

    def alive(self, c):
        return self.parent[c] == c

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c, x):
        d = len(self.rows)
        if d >= self.max_cosets:
            raise BudgetExceeded(f"coset enumeration exceeded {self.max_cosets} cosets")
        self.rows.append([-1] * self.ncols)
        self.parent.append(d)
        self.rows[c][x] = d
        self.rows[d][self.inv[x]] = c

    def _merge(self, c, d, queue):
        c, d = self.rep(c), self.rep(d)
        if c == d:
            return
        if d < c:
            c, d = d, c
        self.parent[d] = c
        queue.append(d)

    def coincidence(self, c, d):
        queue = []
        self._merge(c, d, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = self.rows[e]
            for x in range(self.ncols):
                f = row[x]
                if f < 0:
                    continue
                xi = self.inv[x]
                if self.rows[f][xi] == e:
                    self.rows[f][xi] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if self.rows[e1][x] >= 0:
                    self._merge(f1, self.rows[e1][x], queue)
                elif self.rows[f1][xi] >= 0:
                    self._merge(e1, self.rows[f1][xi], queue)
                else:
                    self.rows[e1][x] = f1
                    self.rows[f1][xi] = e1

    def scan_and_fill(self, c, word):
        rows, inv = self.rows, self.inv
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and rows[f][word[i]] >= 0:
                f = rows[f][word[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and rows[b][inv[word[j]]] >= 0:
                b = rows[b][inv[word[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                rows[f][word[i]] = b
                rows[b][inv[word[i]]] = f
                return
            self.define(f, word[i])

    def run(self, relators):
        c = 0
        while c < len(self.rows):
            if self.alive(c):
                for w in relators:
                    self.scan_and_fill(c, w)
                    if not self.alive(c):
                        break
                if self.alive(c):
                    for x in range(self.ncols):
                        if self.rows[c][x] < 0:
                            self.define(c, x)
            c += 1

    def compact(self):
        """Live cosets relabelled in BFS order from coset 0, plus the BFS tree."""
        label = {0: 0}
        order = [0]
        tree = [(-1, -1)]  # (parent label, column)
        q = deque([0])
        while q:
            c = q.popleft()
            for x in range(self.ncols):
                d = self.rep(self.rows[c][x])
                if d not in label:
                    label[d] = len(order)
                    order.append(d)
                    tree.append((label[c], x))
                    q.append(d)
        table = np.array(
            [[label[self.rep(self.rows[c][x])] for x in range(self.ncols)] for c in order],
            dtype=np.int64,
        )
        return table, tree


def _column_word(word):
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in word]


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group as a multiplication table on element indices ``0..N-1``.

    ``table[i, j]`` is the index of ``i * j``.  Element 0 is the identity.
    """

    table: np.ndarray
    generator_map: dict = field(default_factory=dict)
    identity: int = 0

    def __post_init__(self):
        self.table.setflags(write=False)

    @property
    def size(self):
        return self.table.shape[0]

    def __len__(self):
        return self.size

    def mul(self, x, y):
        return int(self.table[x, y])

    @property
    def inverses(self):
        inv = getattr(self, "_inv", None)
        if inv is None:
            rows, cols = np.nonzero(self.table == self.identity)
            inv = np.empty(self.size, dtype=np.int64)
            inv[rows] = cols
            inv.setflags(write=False)
            object.__setattr__(self, "_inv", inv)
        return inv

    def inverse(self, x):
        return int(self.inverses[x])

    def power(self, x, k):
        if k < 0:
            x, k = self.inverse(x), -k
        result = self.identity
        for _ in range(k):
            result = self.mul(result, x)
        return result

    def element(self, word):
        """Evaluate a word over the generator symbols, e.g. ``[("a", 3), ("b", -1)]``."""
        result = self.identity
        for sym, k in word:
            result = self.mul(result, self.power(self.generator_map[sym], k))
        return result

    def commutes(self):
        """Boolean matrix: ``C[i, j]`` iff elements i and j commute."""
        return self.table == self.table.T

    @property
    def orders(self):
        orders = getattr(self, "_orders", None)
        if orders is None:
            orders = _element_orders(self)
            orders.setflags(write=False)
            object.__setattr__(self, "_orders", orders)
        return orders


def enumerate_group(p: Presentation, expected=None, max_cosets=None):
    """Enumerate the finite group presented by ``p``.

    Raises BudgetExceeded if enumeration defines more than ``max_cosets``
    cosets (default from ``SUPERCOMM_MAX_COSETS`` or 100000), and
    OrderMismatch if ``expected`` is given and differs from the order found.
    """
    if max_cosets is None:
        max_cosets = default_budget()
    ct = _CosetTable(len(p.generators), max_cosets)
    ct.run([_column_word(r) for r in p.relators])
    gen_perms, tree = ct.compact()
    n = gen_perms.shape[0]
    if expected is not None and n != expected:
        raise OrderMismatch(n, expected)

    # perms[j] is the right action of element j on cosets; element j * k = perms[k][j]
    perms = np.empty((n, n), dtype=np.int64)
    perms[0] = np.arange(n)
    for j in range(1, n):
        parent, col = tree[j]
        perms[j] = gen_perms[perms[parent], col]
    table = np.ascontiguousarray(perms.T)
    gmap = {sym: int(gen_perms[0, 2 * i]) for i, sym in enumerate(p.generators)}
    return Group(table, gmap, 0)


def check_group_axioms(G, exhaustive_limit=512, samples=100_000, seed=0):
    """Return a list of violated axioms (empty when G is a group).

    Associativity is checked on all triples when ``G.size <= exhaustive_limit``,
    otherwise on ``samples`` random triples.
    """
    T, n, e = G.table, G.size, G.identity
    problems = []
    if T.shape != (n, n) or T.min() < 0 or T.max() >= n:
        return ["closure"]
    if not (np.array_equal(T[e], np.arange(n)) and np.array_equal(T[:, e], np.arange(n))):
        problems.append("identity")
    if not all((T[i] == e).sum() == 1 and T[i, G.inverses[i]] == e and T[G.inverses[i], i] == e for i in range(n)):
        problems.append("inverses")
    if n <= exhaustive_limit:
        for a in range(n):
            # (a*b)*c versus a*(b*c), all b, c at once
            if not np.array_equal(T[T[a]], T[a][T]):
                problems.append("associativity")
                break
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        if not np.array_equal(T[T[a, b], c], T[a, T[b, c]]):
            problems.append("associativity")
    return problems


def _element_orders(G):
    n = G.size
    orders = np.zeros(n, dtype=np.int64)
    elems = np.arange(n)
    power = elems.copy()
    k = 1
    while True:
        done = (power == G.identity) & (orders == 0)
        orders[done] = k
        if orders.all():
            return orders
        power = G.table[power, elems]
        k += 1


def element_order(G, x):
    """Least k >= 1 with x^k equal to the identity."""
    k, y = 1, x
    while y != G.identity:
        y = G.mul(y, x)
        k += 1
    return k


def center(G):
    C = G.commutes()
    return frozenset(int(z) for z in np.nonzero(C.all(axis=1))[0])


@dataclass(frozen=True, eq=False)
class Partition:
    """Disjoint blocks covering ``0..N-1``; blocks ordered by least element."""

    blocks: tuple[tuple[int, ...], ...]
    block_of: np.ndarray

    @classmethod
    def from_labels(cls, labels):
        """Group elements sharing a label into blocks."""
        labels = np.asarray(labels)
        _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
        # renumber so block ids follow the least element of each block
        rank = np.empty(len(first), dtype=np.int64)
        rank[np.argsort(first, kind="stable")] = np.arange(len(first))
        block_of = rank[inverse.ravel()]
        blocks = [[] for _ in range(len(first))]
        for x, b in enumerate(block_of.tolist()):
            blocks[b].append(x)
        block_of.setflags(write=False)
        return cls(tuple(tuple(b) for b in blocks), block_of)

    @classmethod
    def from_blocks(cls, blocks, size):
        labels = np.full(size, -1, dtype=np.int64)
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < size or labels[x] != -1:
                    raise ValueError(f"element {x} out of range or in two blocks")
                labels[x] = i
        if (labels < 0).any() or any(len(b) == 0 for b in blocks):
            raise ValueError("blocks must be non-empty and cover every element")
        return cls.from_labels(labels)

    @property
    def size(self):
        return len(self.block_of)

    def __len__(self):
        return len(self.blocks)

    def block_sizes(self):
        return sorted(len(b) for b in self.blocks)

    def refines(self, other):
        """True when every block of self lies inside a block of other."""
        return all(len({int(other.block_of[x]) for x in b}) == 1 for b in self.blocks)


def equality_partition(G):
    return Partition.from_labels(np.arange(G.size))


def conjugacy_partition(G):
    T, inv = G.table, G.inverses
    # conj[x, g] = x g x^-1; the orbit of g is column g
    conj = T[T, inv[:, None]]
    return Partition.from_labels(conj.min(axis=0))


def order_partition(G):
    return Partition.from_labels(G.orders)
