"""Rewriting with a set of relations: normal forms, overlap analysis,
bounded completion, and normal-word enumeration and counting."""

import hashlib
import json
from collections import namedtuple
from dataclasses import dataclass

from . import wordops
from .errors import BoundExceeded, InvalidPresentation, ZeroPolynomial
from .fields import QQ, field_from_json
from .free_algebra import (Alphabet, FreeAlgebra, MonomialOrder, Polynomial,
                           words_up_to_weight)


class Presentation:
    """Augmented algebra presentation: generators, graded order, relations,
    and an augmentation given by a scalar value per generator."""

    def __init__(self, algebra, relations, augmentation=None):
        self.algebra = algebra
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = algebra.parse(r)
            if not r:
                raise InvalidPresentation("zero relation")
            rels.append(r)
        self.relations = tuple(rels)
        n = len(algebra.alphabet)
        if augmentation is None:
            aug = (algebra.field.zero,) * n
        elif isinstance(augmentation, dict):
            aug = tuple(algebra.field(augmentation.get(name, 0))
                        for name in algebra.alphabet.letters)
        else:
            aug = tuple(algebra.field(v) for v in augmentation)
            if len(aug) != n:
                raise InvalidPresentation("augmentation arity mismatch")
        self.augmentation = aug
        for r in self.relations:
            lm = r.lm()
            if len(lm) < 2:
                raise InvalidPresentation(
                    "relation %s has leading monomial of length %d; eliminate "
                    "the generator instead of relating it to lower terms"
                    % (algebra.format(r), len(lm)))
            if self.augmentation_eval(r):
                raise InvalidPresentation(
                    "relation %s does not vanish at the augmentation point"
                    % (algebra.format(r),))

    def augmentation_eval(self, p):
        """Evaluate a polynomial at the augmentation point."""
        aug = self.augmentation
        total = self.algebra.field.zero
        for w, c in p.terms.items():
            v = c
            for i in w:
                v = v * aug[i]
                if not v:
                    break
            total = total + v
        return total

    def word_eval(self, w):
        """Augmentation value of a single word."""
        aug = self.augmentation
        v = self.algebra.field.one
        for i in w:
            v = v * aug[i]
            if not v:
                break
        return v

    def to_json(self):
        alg = self.algebra
        return {
            "generators": list(alg.alphabet.letters),
            "weights": {name: alg.order.weights[i]
                        for i, name in enumerate(alg.alphabet.letters)},
            "field": alg.field.to_json(),
            "relations": [alg.format(r) for r in self.relations],
            "augmentation": {name: str(self.augmentation[i])
                             for i, name in enumerate(alg.alphabet.letters)},
        }

    def digest(self):
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise InvalidPresentation("presentation must be a JSON object")
        try:
            generators = data["generators"]
            relations = data["relations"]
        except KeyError as exc:
            raise InvalidPresentation("missing key %s" % (exc,)) from None
        try:
            alphabet = Alphabet(generators)
            order = MonomialOrder(alphabet, data.get("weights"))
            field = field_from_json(data.get("field"))
        except ValueError as exc:
            raise InvalidPresentation(str(exc)) from None
        algebra = FreeAlgebra(alphabet, order, field)
        aug = data.get("augmentation")
        if aug is not None:
            unknown = set(aug) - set(alphabet.letters)
            if unknown:
                raise InvalidPresentation("augmentation for unknown letters %s"
                                          % (sorted(unknown),))
        try:
            return cls(algebra, relations, aug)
        except ValueError as exc:
            raise InvalidPresentation(str(exc)) from None

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InvalidPresentation("bad JSON: %s" % (exc,)) from None
        return cls.from_json(data)


class RewriteSystem:
    """Monic rules sorted by leading monomial, descending.

    minimal / reduced are computed from the rules; verified_to_degree is
    bookkeeping updated by check_groebner and complete.
    """

    def __init__(self, algebra, rules, verified_to_degree=0):
        self.algebra = algebra
        prepared = [r.monic() for r in rules]
        prepared.sort(key=lambda r: algebra.order.key(r.lm()), reverse=True)
        self.rules = tuple(prepared)
        self.leading_words = tuple(r.lm() for r in self.rules)
        self.minimal = self._antichain()
        self.reduced = self.minimal and self._tails_normal()
        self.verified_to_degree = verified_to_degree
        self._nf_cache = {}
        self._automaton = None

    def _antichain(self):
        lms = self.leading_words
        for i, u in enumerate(lms):
            for j, w in enumerate(lms):
                if i != j and wordops.find_subword(w, u) >= 0:
                    return False
        return True

    def _tails_normal(self):
        for r in self.rules:
            lm = r.lm()
            for w in r.terms:
                if w != lm and not wordops.is_normal(w, self.leading_words):
                    return False
        return True

    def max_rule_weight(self):
        weight = self.algebra.order.weight
        return max((weight(w) for w in self.leading_words), default=0)

    def is_normal_word(self, w):
        return wordops.is_normal(w, self.leading_words)

    def one_step(self, word, pos, rule_index):
        """Rewrite the rule occurrence at pos in word once."""
        rule = self.rules[rule_index]
        lm = self.leading_words[rule_index]
        prefix = word[:pos]
        suffix = word[pos + len(lm):]
        terms = {}
        for w2, c2 in rule.terms.items():
            if w2 == lm:
                continue
            key = prefix + w2 + suffix
            nc = terms.get(key, 0) - c2
            if nc:
                terms[key] = nc
            else:
                terms.pop(key, None)
        return Polynomial(self.algebra, terms)

    def normal_form_word(self, w):
        """Normal form of a single word, cached."""
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        keyf = self.algebra.order.key
        lms = self.leading_words
        pending = {w: self.algebra.field.one}
        normal = {}
        while pending:
            u = max(pending, key=keyf)
            c = pending.pop(u)
            pos, ridx = wordops.first_match(u, lms)
            if pos < 0:
                normal[u] = c
                continue
            rule = self.rules[ridx]
            lm = lms[ridx]
            prefix = u[:pos]
            suffix = u[pos + len(lm):]
            for w2, c2 in rule.terms.items():
                if w2 == lm:
                    continue
                word = prefix + w2 + suffix
                nc = pending.get(word, 0) - c * c2
                if nc:
                    pending[word] = nc
                else:
                    pending.pop(word, None)
        result = Polynomial(self.algebra, normal)
        self._nf_cache[w] = result
        return result

    def normal_form(self, p):
        """Normal form of a polynomial: reduce the largest reducible support
        word first, leftmost occurrence, rules in stored order."""
        acc = {}
        for w, c in p.terms.items():
            for v, m in self.normal_form_word(w).terms.items():
                nc = acc.get(v, 0) + c * m
                if nc:
                    acc[v] = nc
                else:
                    acc.pop(v, None)
        return Polynomial(self.algebra, acc)

    def automaton(self):
        if self._automaton is None:
            self._automaton = NormalWordAutomaton(self.leading_words,
                                                  len(self.algebra.alphabet))
        return self._automaton

    def normal_words(self, max_length):
        """All normal words of length <= max_length, sorted by weight and
        then alphabetically."""
        if max_length < 0:
            raise ValueError("max_length must be nonnegative")
        weight = self.algebra.order.weight
        out = self.automaton().language(max_length)
        out.sort(key=lambda w: (weight(w), w))
        return out

    def count_normal_words(self, max_length):
        """Number of normal words of each length 0..max_length."""
        if max_length < 0:
            raise ValueError("max_length must be nonnegative")
        return self.automaton().counts(max_length)

    @classmethod
    def from_presentation(cls, pres):
        return cls(pres.algebra, pres.relations)


Overlap = namedtuple("Overlap", "i j word offset_i offset_j")


def overlaps(rs):
    """All proper overlap and containment ambiguities between rule pairs.

    Each entry records the two rule indices, the ambiguity word, and the
    offsets of both leading-monomial occurrences inside it. Sorted by
    weight, then alphabetically, matching the word listing convention, so
    bounded scans proceed in ascending weight.
    """
    lms = rs.leading_words
    weight = rs.algebra.order.weight
    out = []
    for j, t in enumerate(lms):
        for i, s in enumerate(lms):
            for k in range(1, len(t)):
                shared = len(t) - k
                if shared < len(s) and t[k:] == s[:shared]:
                    out.append(Overlap(i, j, t + s[shared:], k, 0))
            if i != j:
                for p in range(len(t) - len(s) + 1):
                    if t[p:p + len(s)] == s:
                        out.append(Overlap(i, j, t, p, 0))
    out.sort(key=lambda ov: (weight(ov.word), ov.word, ov.i, ov.j, ov.offset_i))
    return out


@dataclass
class CheckReport:
    ok: bool
    verified_to_degree: int
    counterexample: tuple = None
    branches: tuple = None
    spoly_normal_form: object = None


def check_groebner(rs, max_degree):
    """Confluence check on every ambiguity word of weight <= max_degree.

    On success sets rs.verified_to_degree; on failure reports the first
    ambiguity word (in the order) whose two branch normal forms differ.
    """
    if max_degree < rs.max_rule_weight():
        raise ValueError("max_degree %d is below the largest rule weight %d"
                         % (max_degree, rs.max_rule_weight()))
    weight = rs.algebra.order.weight
    for ov in overlaps(rs):
        if weight(ov.word) > max_degree:
            continue
        a = rs.normal_form(rs.one_step(ov.word, ov.offset_j, ov.j))
        b = rs.normal_form(rs.one_step(ov.word, ov.offset_i, ov.i))
        if a != b:
            # ambiguities arrive in ascending weight, so everything strictly
            # below the failing word has already passed
            return CheckReport(False, max(rs.verified_to_degree,
                                          weight(ov.word) - 1),
                               counterexample=ov.word, branches=(a, b),
                               spoly_normal_form=a - b)
    rs.verified_to_degree = max(rs.verified_to_degree, max_degree)
    return CheckReport(True, max_degree)


def _interreduce(algebra, rules):
    rules = [r.monic() for r in rules if r]
    changed = True
    while changed:
        changed = False
        rules.sort(key=lambda r: algebra.order.key(r.lm()))
        for idx in range(len(rules)):
            others = rules[:idx] + rules[idx + 1:]
            if not others:
                continue
            sub = RewriteSystem(algebra, others)
            nf = sub.normal_form(rules[idx])
            if nf != rules[idx]:
                changed = True
                if nf:
                    rules[idx] = nf.monic()
                else:
                    del rules[idx]
                break
    rules.sort(key=lambda r: algebra.order.key(r.lm()))
    return rules


def complete(rs, max_degree):
    """Bounded completion: resolve ambiguities of weight <= max_degree,
    adding the smallest new rule first, interreducing after each addition.

    The result is independent of the input rule order. Raises BoundExceeded
    when an input rule already outweighs the bound.
    """
    algebra = rs.algebra
    keyf = algebra.order.key
    weight = algebra.order.weight
    for w in rs.leading_words:
        if weight(w) > max_degree:
            raise BoundExceeded(
                "rule leading monomial %s has weight %d > bound %d"
                % (algebra.word_str(w), weight(w), max_degree))
    rules = _interreduce(algebra, list(rs.rules))
    while True:
        current = RewriteSystem(algebra, rules)
        candidates = []
        for ov in overlaps(current):
            if weight(ov.word) > max_degree:
                continue
            a = current.normal_form(current.one_step(ov.word, ov.offset_j, ov.j))
            b = current.normal_form(current.one_step(ov.word, ov.offset_i, ov.i))
            d = a - b
            if d:
                candidates.append(d.monic())
        if not candidates:
            break
        candidates.sort(key=lambda p: (keyf(p.lm()), algebra.format(p)))
        rules.append(candidates[0])
        rules = _interreduce(algebra, rules)
    done = RewriteSystem(algebra, rules)
    done.verified_to_degree = max_degree
    return done


class NormalWordAutomaton:
    """Deterministic automaton accepting exactly the words that avoid every
    pattern as a subword (Aho-Corasick construction)."""

    def __init__(self, patterns, n_letters):
        self.patterns = tuple(tuple(p) for p in patterns)
        self.n_letters = n_letters
        children = [{}]
        terminal = [False]
        for pat in self.patterns:
            s = 0
            for a in pat:
                if a not in children[s]:
                    children.append({})
                    terminal.append(False)
                    children[s][a] = len(children) - 1
                s = children[s][a]
            terminal[s] = True
        n = len(children)
        fail = [0] * n
        dead = list(terminal)
        goto = [[0] * n_letters for _ in range(n)]
        order = [0]
        seen = {0}
        qi = 0
        while qi < len(order):
            s = order[qi]
            qi += 1
            dead[s] = dead[s] or dead[fail[s]]
            for a in range(n_letters):
                child = children[s].get(a)
                if child is None:
                    goto[s][a] = goto[fail[s]][a] if s else 0
                else:
                    fail[child] = goto[fail[s]][a] if s else 0
                    goto[s][a] = child
                    if child not in seen:
                        seen.add(child)
                        order.append(child)
        self.dead = dead
        self.transitions = [
            [-1 if dead[goto[s][a]] else goto[s][a] for a in range(n_letters)]
            if not dead[s] else [-1] * n_letters
            for s in range(n)
        ]
        self.n_states = n

    def accepts(self, w):
        if self.dead[0]:
            return False
        s = 0
        for a in w:
            s = self.transitions[s][a]
            if s < 0:
                return False
        return True

    def language(self, max_length):
        """All accepted words of length <= max_length."""
        if self.dead[0]:
            return []
        out = []
        stack = [((), 0)]
        while stack:
            w, s = stack.pop()
            out.append(w)
            if len(w) < max_length:
                row = self.transitions[s]
                for a in range(self.n_letters):
                    t = row[a]
                    if t >= 0:
                        stack.append((w + (a,), t))
        return out

    def transfer_matrix(self):
        """M[s][t] = number of letters moving live state s to live state t."""
        n = self.n_states
        mat = [[0] * n for _ in range(n)]
        for s in range(n):
            if self.dead[s]:
                continue
            for a in range(self.n_letters):
                t = self.transitions[s][a]
                if t >= 0:
                    mat[s][t] += 1
        return mat

    def counts(self, max_length):
        """Number of accepted words of each length 0..max_length, computed by
        iterating the transfer matrix on the start vector."""
        if self.dead[0]:
            return [0] * (max_length + 1)
        mat = self.transfer_matrix()
        n = self.n_states
        vec = [0] * n
        vec[0] = 1
        out = [1]
        for _ in range(max_length):
            nxt = [0] * n
            for s in range(n):
                c = vec[s]
                if not c:
                    continue
                row = mat[s]
                for t in range(n):
                    if row[t]:
                        nxt[t] += c * row[t]
            vec = nxt
            out.append(sum(vec))
        return out


def leading_monomials_oracle(pres, max_degree):
    """Leading monomials of the relation ideal up to the weight bound,
    by row reduction of the span of all products u * g * v.

    Independent of the rewriting machinery; intended for cross-validation.
    Every word returned does lead some ideal element. The list is complete
    when the relations form a Groebner basis up to the bound; otherwise
    ideal elements whose derivation passes through weights above the bound
    can be missed.
    """
    alg = pres.algebra
    order = alg.order
    field = alg.field
    keyf = order.key
    pivots = {}
    for g in pres.relations:
        rem = max_degree - order.weight(g.lm())
        if rem < 0:
            continue
        smalls = words_up_to_weight(alg.alphabet, order, rem)
        for u in smalls:
            wu = order.weight(u)
            for v in smalls:
                if wu + order.weight(v) > rem:
                    continue
                row = {u + w + v: c for w, c in g.terms.items()}
                while row:
                    lw = max(row, key=keyf)
                    piv = pivots.get(lw)
                    if piv is None:
                        inv = field.one / row[lw]
                        pivots[lw] = {w2: c2 * inv for w2, c2 in row.items()}
                        break
                    c = row[lw]
                    for w2, c2 in piv.items():
                        nc = row.get(w2, 0) - c * c2
                        if nc:
                            row[w2] = nc
                        else:
                            row.pop(w2, None)
    return set(pivots)
