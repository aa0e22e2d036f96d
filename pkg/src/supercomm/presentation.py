"""Finite group presentations: a small text grammar and the built-in family catalog.

Grammar (ASCII, whitespace-insensitive)::

    <g1,g2,... | rel, rel, ...>

A word is a juxtaposition or ``*``-separated product of ``gen``, ``gen^k``,
``gen^-k`` or ``1``.  A rel is ``word = word (= word)*`` or a bare word
(meaning ``word = 1``).  Chains ``w1 = w2 = w3`` become the relators
``w1 w2^-1`` and ``w2 w3^-1``.

Words are stored as tuples of nonzero ints: ``i + 1`` is generator ``i`` and
``-(i + 1)`` its inverse.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import InvalidParams, PresentationSyntaxError, UnknownGenerator

Word = tuple[int, ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert(word):
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"duplicate generator symbols in {self.generators}")
        for g in self.generators:
            if not _IDENT.fullmatch(g):
                raise ValueError(f"invalid generator symbol {g!r}")
        if not self.relators:
            raise ValueError("a presentation needs at least one relator")
        k = len(self.generators)
        for rel in self.relators:
            for x in rel:
                if x == 0 or abs(x) > k:
                    raise ValueError(f"relator letter {x} out of range for {k} generators")

    def render(self):
        return f"<{','.join(self.generators)} | {', '.join(self.render_word(r) for r in self.relators)}>"

    def render_word(self, word):
        if not word:
            return "1"
        syllables = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            sym = self.generators[abs(word[i]) - 1]
            power = (j - i) * (1 if word[i] > 0 else -1)
            syllables.append(sym if power == 1 else f"{sym}^{power}")
            i = j
        return "*".join(syllables)

    def __str__(self):
        return self.render()


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.gens = []

    def error(self, message):
        raise PresentationSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self):
        self.expect("<")
        self.gens = [self.ident()]
        while self.peek() == ",":
            self.pos += 1
            self.gens.append(self.ident())
        if len(set(self.gens)) != len(self.gens):
            self.error("duplicate generator symbol")
        # longest symbol first so that juxtaposition prefers e.g. 'ab' over 'a'
        self.by_length = sorted(self.gens, key=len, reverse=True)
        self.expect("|")
        relators = self.relation()
        while self.peek() == ",":
            self.pos += 1
            relators.extend(self.relation())
        self.expect(">")
        if self.peek():
            self.error("trailing characters after '>'")
        relators = [r for r in (free_reduce(r) for r in relators) if r]
        if not relators:
            self.error("presentation has no nontrivial relator")
        return Presentation(tuple(self.gens), tuple(relators))

    def ident(self):
        self.skip_ws()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.error("expected a generator symbol")
        self.pos = m.end()
        return m.group()

    def integer(self):
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected an integer exponent")
        self.pos = m.end()
        return int(m.group())

    def relation(self):
        words = [self.word()]
        while self.peek() == "=":
            self.pos += 1
            words.append(self.word())
        if len(words) == 1:
            return words
        return [w1 + invert(w2) for w1, w2 in zip(words, words[1:])]

    def word(self):
        letters = []
        factor = self.factor()
        if factor is None:
            self.error("expected a word")
        letters.extend(factor)
        while True:
            if self.peek() == "*":
                self.pos += 1
                factor = self.factor()
                if factor is None:
                    self.error("expected a factor after '*'")
            else:
                factor = self.factor()
                if factor is None:
                    return tuple(letters)
            letters.extend(factor)

    def factor(self):
        ch = self.peek()
        if ch == "1":
            self.pos += 1
            return ()
        if not ch or not (ch.isalpha() or ch == "_"):
            return None
        start = self.pos
        for sym in self.by_length:
            if self.text.startswith(sym, self.pos):
                self.pos += len(sym)
                break
        else:
            raise UnknownGenerator(_IDENT.match(self.text, start).group(), start)
        letter = self.gens.index(sym) + 1
        power = 1
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            power = sign * self.integer()
        return (letter if power > 0 else -letter,) * abs(power)


def parse_presentation(text):
    """Parse ``<gens | rels>`` into a :class:`Presentation`."""
    return _Parser(text).parse()


class Family(str, enum.Enum):
    DIHEDRAL = "dihedral"
    QUATERNION = "quaternion"
    SEMIDIHEDRAL = "semidihedral"
    QUASIDIHEDRAL = "qd"
    V8N = "v8n"
    U6N = "u6n"
    M2MN = "m2mn"

    @classmethod
    def parse(cls, name):
        key = name.strip().lower()
        key = _FAMILY_ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise InvalidParams(f"unknown family {name!r}") from None


_FAMILY_ALIASES = {
    "d": "dihedral",
    "q": "quaternion",
    "dicyclic": "quaternion",
    "sd": "semidihedral",
    "quasidihedral": "qd",
}

# parameter names in stored order
_PARAM_NAMES = {
    Family.DIHEDRAL: ("n",),
    Family.QUATERNION: ("n",),
    Family.SEMIDIHEDRAL: ("n",),
    Family.QUASIDIHEDRAL: ("m",),
    Family.V8N: ("n",),
    Family.U6N: ("n",),
    Family.M2MN: ("m", "n"),
}

_LOWER_BOUNDS = {
    Family.DIHEDRAL: {"n": 3},
    Family.QUATERNION: {"n": 2},
    Family.SEMIDIHEDRAL: {"n": 2},
    Family.QUASIDIHEDRAL: {"m": 4},
    Family.V8N: {"n": 2},
    Family.U6N: {"n": 1},
    Family.M2MN: {"m": 3, "n": 1},
}


@dataclass(frozen=True, order=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    @classmethod
    def of(cls, family, *, n=None, m=None):
        """Build and validate a spec from keyword parameters."""
        family = family if isinstance(family, Family) else Family.parse(family)
        given = {"n": n, "m": m}
        names = _PARAM_NAMES[family]
        for name in names:
            if given[name] is None:
                raise InvalidParams(f"{family.value} requires parameter {name}")
        spec = cls(family, tuple(int(given[name]) for name in names))
        spec.validate()
        return spec

    def __getattr__(self, name):
        if name in ("n", "m"):
            names = _PARAM_NAMES[self.family]
            if name in names:
                return self.params[names.index(name)]
        raise AttributeError(name)

    def validate(self):
        names = _PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise InvalidParams(f"{self.family.value} takes parameters {names}, got {self.params}")
        for name, value in zip(names, self.params):
            low = _LOWER_BOUNDS[self.family][name]
            if value < low:
                raise InvalidParams(f"{self.family.value}: {name} = {value} violates {name} >= {low}")
        if self.family is Family.M2MN and self.m == 4:
            raise InvalidParams("m2mn: m = 4 is excluded (m >= 3, m != 4)")

    def expected_order(self):
        f = self.family
        if f is Family.DIHEDRAL:
            return 2 * self.n
        if f is Family.QUATERNION:
            return 4 * self.n
        if f in (Family.SEMIDIHEDRAL, Family.V8N):
            return 8 * self.n
        if f is Family.QUASIDIHEDRAL:
            return 2 ** self.m
        if f is Family.U6N:
            return 6 * self.n
        return 2 * self.m * self.n

    @property
    def label(self):
        """Parameter text such as ``n=5`` or ``m=3;n=2`` (CSV-safe)."""
        return ";".join(f"{k}={v}" for k, v in zip(_PARAM_NAMES[self.family], self.params))

    def __str__(self):
        return f"{self.family.value}({self.label})"


def family_presentation(spec):
    """Return the catalog presentation of ``spec`` with parameters substituted."""
    spec.validate()
    f = spec.family
    if f is Family.DIHEDRAL:
        text = f"<a,b | a^{spec.n}=b^2=1, b*a*b^-1=a^-1>"
    elif f is Family.QUATERNION:
        text = f"<a,b | a^{2 * spec.n}=1, a^{spec.n}=b^2, b*a*b^-1=a^-1>"
    elif f is Family.SEMIDIHEDRAL:
        text = f"<a,b | a^{4 * spec.n}=b^2=1, b*a*b^-1=a^{2 * spec.n - 1}>"
    elif f is Family.QUASIDIHEDRAL:
        text = f"<a,b | a^{2 ** (spec.m - 1)}=b^2=1, b*a*b^-1=a^{2 ** (spec.m - 2) - 1}>"
    elif f is Family.V8N:
        text = f"<a,b | a^{2 * spec.n}=b^4=1, b*a=a^-1*b^-1, b^-1*a=a^-1*b>"
    elif f is Family.U6N:
        text = f"<a,b | a^{2 * spec.n}=b^3=1, a^-1*b*a=b^-1>"
    else:
        text = f"<a,b | a^{spec.m}=b^{2 * spec.n}=1, b*a*b^-1=a^-1>"
    return parse_presentation(text)


def sweep_specs(family=None, max_order=400):
    """All valid specs of ``family`` (or every family) with order <= max_order.

    Sorted by family catalog order, then parameters.
    """
    families = list(Family) if family is None else [family]
    out = []
    for fam in families:
        if fam is Family.M2MN:
            for m in range(3, max_order // 2 + 1):
                if m == 4:
                    continue
                for n in range(1, max_order // (2 * m) + 1):
                    out.append(FamilySpec(fam, (m, n)))
            continue
        low = _LOWER_BOUNDS[fam][_PARAM_NAMES[fam][0]]
        k = low
        while True:
            spec = FamilySpec(fam, (k,))
            if spec.expected_order() > max_order:
                break
            out.append(spec)
            k += 1
    return out
