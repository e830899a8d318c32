"""Words over a finite alphabet, graded monomial orders, and polynomials
in the free associative algebra with exact coefficients.

Words are stored as tuples of letter indices into an Alphabet; the empty
tuple is the unit word and prints as "1".
"""

import re

from . import wordops
from .errors import ZeroPolynomial
from .fields import QQ

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")
_NUM_RE = re.compile(r"[0-9]+(/[0-9]+)?$")


class Alphabet:
    """Ordered set of generator names; listing order is precedence, highest first."""

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be non-empty")
        for name in letters:
            if not _NAME_RE.match(name) or name == "1":
                raise ValueError("bad letter name %r" % (name,))
        if len(set(letters)) != len(letters):
            raise ValueError("duplicate letter names")
        self.letters = letters
        self._index = {name: i for i, name in enumerate(letters)}
        self._compact = all(len(name) == 1 for name in letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.letters == self.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Alphabet(%r)" % (list(self.letters),)

    def index(self, name):
        return self._index[name]

    def word(self, text):
        """Parse a word: "1" is empty, names are * separated, or juxtaposed
        when every letter is a single character ("xyx")."""
        text = text.strip()
        if text == "1" or text == "":
            return ()
        if "*" in text:
            parts = [p.strip() for p in text.split("*")]
        elif text in self._index:
            parts = [text]
        elif self._compact:
            parts = list(text)
        else:
            parts = [text]
        out = []
        for p in parts:
            if p == "1":
                continue
            if p not in self._index:
                raise ValueError("unknown letter %r" % (p,))
            out.append(self._index[p])
        return tuple(out)

    def word_str(self, w, sep=None):
        """Render a word; the empty word renders as "1"."""
        if not w:
            return "1"
        if sep is None:
            sep = "" if self._compact else "*"
        return sep.join(self.letters[i] for i in w)


class MonomialOrder:
    """Weight-graded order on words: compare total weight, then left-to-right
    by letter precedence (earlier alphabet letters are greater)."""

    def __init__(self, alphabet, weights=None):
        self.alphabet = alphabet
        if weights is None:
            wt = (1,) * len(alphabet)
        else:
            if isinstance(weights, dict):
                wt = tuple(int(weights.get(name, 1)) for name in alphabet.letters)
            else:
                wt = tuple(int(e) for e in weights)
        if len(wt) != len(alphabet) or any(e < 1 for e in wt):
            raise ValueError("weights must assign an integer >= 1 to each letter")
        self.weights = wt

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and other.alphabet == self.alphabet
                and other.weights == self.weights)

    def __repr__(self):
        return "MonomialOrder(%r, weights=%r)" % (self.alphabet, list(self.weights))

    def weight(self, w):
        wt = self.weights
        return sum(wt[i] for i in w)

    def key(self, w):
        # equal-weight words are never prefixes of one another, so plain
        # tuple comparison on negated indices realizes the precedence
        return (self.weight(w), tuple(-i for i in w))

    def compare(self, a, b):
        """-1, 0 or 1 according to a < b, a == b, a > b."""
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0


def find_subword(w, u):
    """Leftmost start index of u inside w, or None."""
    i = wordops.find_subword(w, u)
    return None if i < 0 else i


def is_proper_subword(u, w):
    return u != w and wordops.find_subword(w, u) >= 0


def words_up_to_weight(alphabet, order, max_weight):
    """All words of weight <= max_weight, ascending by the order key."""
    out = []
    stack = [((), 0)]
    while stack:
        w, wt = stack.pop()
        out.append(w)
        for i in range(len(alphabet)):
            nwt = wt + order.weights[i]
            if nwt <= max_weight:
                stack.append((w + (i,), nwt))
    out.sort(key=order.key)
    return out


class Polynomial:
    """Finite coefficient map word -> nonzero scalar."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            nc = terms.get(w, 0) + c
            if nc:
                terms[w] = nc
            else:
                terms.pop(w, None)
        return Polynomial(self.algebra, terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            nc = terms.get(w, 0) - c
            if nc:
                terms[w] = nc
            else:
                terms.pop(w, None)
        return Polynomial(self.algebra, terms)

    def __neg__(self):
        return Polynomial(self.algebra, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            terms = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    nc = terms.get(w, 0) + c1 * c2
                    if nc:
                        terms[w] = nc
                    else:
                        terms.pop(w, None)
            return Polynomial(self.algebra, terms)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self.algebra.field(c)
        if not c:
            return Polynomial(self.algebra, {})
        return Polynomial(self.algebra, {w: c * v for w, v in self.terms.items()})

    def support(self):
        return set(self.terms)

    def lm(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return max(self.terms, key=self.algebra.order.key)

    def lc(self):
        return self.terms[self.lm()]

    def monic(self):
        if not self.terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        inv = self.algebra.field.one / self.lc()
        return self.scale(inv)

    def __repr__(self):
        return "<poly %s>" % (self.algebra.format(self),)

    def __str__(self):
        return self.algebra.format(self)


class FreeAlgebra:
    """Context object tying together alphabet, monomial order and field."""

    def __init__(self, alphabet, order=None, field=QQ):
        if isinstance(alphabet, (list, tuple)):
            alphabet = Alphabet(alphabet)
        self.alphabet = alphabet
        self.order = order if order is not None else MonomialOrder(alphabet)
        if self.order.alphabet != alphabet:
            raise ValueError("order alphabet mismatch")
        self.field = field

    def __repr__(self):
        return "FreeAlgebra(%r, field=%r)" % (self.alphabet, self.field)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(): self.field.one})

    def word(self, text):
        return self.alphabet.word(text)

    def word_str(self, w):
        return self.alphabet.word_str(w)

    def poly(self, mapping):
        """Build a polynomial from {word: coeff}; words may be strings."""
        terms = {}
        for w, c in mapping.items():
            if isinstance(w, str):
                w = self.alphabet.word(w)
            c = self.field(c)
            if c:
                nc = terms.get(w, self.field.zero) + c
                if nc:
                    terms[w] = nc
                else:
                    terms.pop(w, None)
        return Polynomial(self, terms)

    def from_word(self, w, coeff=1):
        if isinstance(w, str):
            w = self.alphabet.word(w)
        c = self.field(coeff)
        return Polynomial(self, {w: c} if c else {})

    def parse(self, text):
        """Parse "c*x*y - z" style input: terms joined by + or -, each an
        optional integer or fraction coefficient and * separated letters."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        chunks = []
        sign = 1
        buf = []
        pending = False
        for ch in s:
            if ch in "+-":
                if buf and "".join(buf).strip():
                    chunks.append((sign, "".join(buf).strip()))
                    buf = []
                    sign = 1
                    pending = False
                if pending and ch == "+":
                    raise ValueError("misplaced + in %r" % (text,))
                if ch == "-":
                    sign = -sign
                pending = True
            else:
                buf.append(ch)
        if buf and "".join(buf).strip():
            chunks.append((sign, "".join(buf).strip()))
        elif pending:
            raise ValueError("dangling operator in %r" % (text,))
        if not chunks:
            raise ValueError("no terms in %r" % (text,))
        result = self.zero()
        for sign, term in chunks:
            coeff = self.field.one
            letters = []
            parts = [p.strip() for p in term.split("*")]
            if not all(parts):
                raise ValueError("empty factor in term %r" % (term,))
            if _NUM_RE.match(parts[0]):
                coeff = self.field(parts[0])
                parts = parts[1:]
            word = []
            for p in parts:
                if p == "1":
                    continue
                word.extend(self.alphabet.word(p))
            if sign < 0:
                coeff = -coeff
            result = result + Polynomial(self, {tuple(word): coeff} if coeff else {})
        return result

    def format(self, p):
        """Canonical text form: terms descending in the order, * separated."""
        if not p.terms:
            return "0"
        words = sorted(p.terms, key=self.order.key, reverse=True)
        pieces = []
        for w in words:
            c = p.terms[w]
            neg = getattr(c, "numerator", 1) < 0
            mag = -c if neg else c
            if not w:
                body = str(mag)
            elif mag == self.field.one:
                body = self.alphabet.word_str(w, sep="*")
            else:
                body = "%s*%s" % (mag, self.alphabet.word_str(w, sep="*"))
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)
