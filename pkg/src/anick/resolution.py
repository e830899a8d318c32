"""Free right-module elements over the chain bases, the differentials of
the resolution, and the contracting homotopy that defines them."""

import time
from dataclasses import dataclass

from . import wordops
from .chains import (ChainGraph, bracket_prefix, bracket_tail, enumerate_chains,
                     identity_chain, obstructions)
from .errors import NonTermination, NotGroebner, NotInKernel, ZeroElement
from .groebner import RewriteSystem, check_groebner, complete


@dataclass(frozen=True)
class TensorTerm:
    """Basis element chain (x) normal word."""

    chain: object
    word: tuple


class ModuleElement:
    """Finite combination of TensorTerms of one homological degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = terms if terms is not None else {}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch %d vs %d"
                             % (self.degree, other.degree))
        terms = dict(self.terms)
        for t, c in other.terms.items():
            nc = terms.get(t, 0) + c
            if nc:
                terms[t] = nc
            else:
                terms.pop(t, None)
        return ModuleElement(self.degree, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ModuleElement(self.degree,
                             {t: -c for t, c in self.terms.items()})

    def scale(self, c):
        if not c:
            return ModuleElement(self.degree, {})
        return ModuleElement(self.degree,
                             {t: c * v for t, v in self.terms.items()})

    def __repr__(self):
        return "<module element deg %d, %d terms>" % (self.degree,
                                                      len(self.terms))


@dataclass
class DegreeReport:
    degree: int
    chains: int
    ok: bool
    seconds: float


class ResolutionEngine:
    """Computes differentials d_n and contracting homotopies i_n over the
    chain bases of a verified minimal rewrite system.

    Differentials and homotopy values are cached; repeated runs produce
    identical orderings and cache contents.
    """

    def __init__(self, presentation, rewrite_system, debug=False):
        self.presentation = presentation
        self.rs = rewrite_system
        self.algebra = presentation.algebra
        self.order = self.algebra.order
        self.field = self.algebra.field
        self.debug = debug
        self.obstruction_set = obstructions(rewrite_system)
        self.graph = ChainGraph(self.obstruction_set, self.algebra.alphabet)
        self._chains = {}
        self._chain_index = {}
        self._d_cache = {}
        self._i_memo = {}

    @classmethod
    def from_presentation(cls, pres, max_degree=7, complete_system=False,
                          debug=False):
        """Build the engine after verifying (or completing) the relations."""
        rs = RewriteSystem.from_presentation(pres)
        bound = max(max_degree, rs.max_rule_weight())
        if complete_system:
            rs = complete(rs, bound)
        else:
            report = check_groebner(rs, bound)
            if not report.ok:
                word = pres.algebra.word_str(report.counterexample)
                raise NotGroebner(
                    "relations are not confluent: ambiguity %s reduces to "
                    "%s and %s" % (word,
                                   pres.algebra.format(report.branches[0]),
                                   pres.algebra.format(report.branches[1])),
                    counterexample=report.counterexample)
        return cls(pres, rs, debug=debug)

    # ---- chain bookkeeping ----

    def chains(self, degree):
        if degree not in self._chains:
            cs = enumerate_chains(self.graph, degree, self.order)
            self._chains[degree] = cs
            self._chain_index[degree] = {c.word: c for c in cs}
        return self._chains[degree]

    def chain_with_word(self, degree, word):
        self.chains(degree)
        return self._chain_index[degree].get(tuple(word))

    # ---- element constructors ----

    def zero(self, degree):
        return ModuleElement(degree, {})

    def element(self, degree, items):
        """Build from (chain, word, coeff) triples; words may be strings."""
        terms = {}
        for chain, word, coeff in items:
            if isinstance(word, str):
                word = self.algebra.word(word)
            c = self.field(coeff)
            t = TensorTerm(chain, tuple(word))
            nc = terms.get(t, self.field.zero) + c
            if nc:
                terms[t] = nc
            else:
                terms.pop(t, None)
        return ModuleElement(degree, terms)

    def basis_element(self, degree, chain_word, word="1", coeff=1):
        if isinstance(chain_word, str):
            chain_word = self.algebra.word(chain_word)
        chain = self.chain_with_word(degree, chain_word)
        if chain is None:
            raise ValueError("%s is not a degree-%d chain word"
                             % (self.algebra.word_str(tuple(chain_word)), degree))
        return self.element(degree, [(chain, word, coeff)])

    # ---- order on the tensor basis ----

    def basis_key(self, term):
        return self.order.key(term.chain.word + term.word)

    def basis_compare(self, t1, t2):
        k1, k2 = self.basis_key(t1), self.basis_key(t2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0

    def module_lm(self, elem):
        """Leading (word, term, coeff) of a nonzero element."""
        if not elem.terms:
            raise ZeroElement("zero element has no leading term")
        best = None
        best_key = None
        tie = False
        for t in elem.terms:
            k = self.basis_key(t)
            if best_key is None or k > best_key:
                best, best_key, tie = t, k, False
            elif k == best_key:
                tie = True
        assert not tie, "distinct basis terms share a word; basis order broken"
        return best.chain.word + best.word, best, elem.terms[best]

    # ---- scalars ----

    def word_eval(self, w):
        return self.presentation.word_eval(w)

    def epsilon(self, elem):
        """Augmentation of a degree-0 element."""
        if elem.degree != 0:
            raise ValueError("epsilon applies to degree-0 elements")
        total = self.field.zero
        for t, c in elem.terms.items():
            total = total + c * self.word_eval(t.word)
        return total

    # ---- module structure ----

    def act(self, elem, word):
        """Right action: multiply every normal-word factor by word and
        renormalize."""
        word = tuple(word)
        if not word:
            return elem
        terms = {}
        for t, c in elem.terms.items():
            nf = self.rs.normal_form_word(t.word + word)
            for v, m in nf.terms.items():
                nt = TensorTerm(t.chain, v)
                nc = terms.get(nt, 0) + c * m
                if nc:
                    terms[nt] = nc
                else:
                    terms.pop(nt, None)
        return ModuleElement(elem.degree, terms)

    # ---- differentials ----

    def differential(self, chain):
        """d_n(chain (x) 1) for a degree n >= 1 chain, cached."""
        n = chain.degree
        if n < 1:
            raise ValueError("no differential below degree 1")
        key = (n, chain.word)
        cached = self._d_cache.get(key)
        if cached is not None:
            return cached
        if n == 1:
            terms = {TensorTerm(identity_chain(), chain.word): self.field.one}
            eps = self.word_eval(chain.word)
            if eps:
                terms[TensorTerm(identity_chain(), ())] = -eps
            result = ModuleElement(0, terms)
        else:
            prefix = bracket_prefix(chain, n - 1)
            tail = bracket_tail(chain, n - 1)
            base = self.element(n - 1, [(prefix, tail, self.field.one)])
            boundary = self.apply_differential(base)
            correction = self.homotopy(n - 2, boundary)
            result = base - correction
            lead = TensorTerm(prefix, tail)
            ckey = self.order.key(chain.word)
            assert result.terms.get(lead) == self.field.one, \
                "leading coefficient drifted"
            for t in result.terms:
                assert t == lead or self.basis_key(t) < ckey, \
                    "differential tail must sit below the chain word"
            if self.debug and n >= 2:
                assert not self.apply_differential(result), \
                    "d d != 0 at degree %d" % n
        self._d_cache[key] = result
        return result

    def apply_differential(self, elem):
        """Extend d over a whole element by right-linearity."""
        if elem.degree < 1:
            raise ValueError("no differential below degree 1")
        out = self.zero(elem.degree - 1)
        for t, c in elem.terms.items():
            img = self.act(self.differential(t.chain), t.word)
            out = out + img.scale(c)
        return out

    # ---- contracting homotopy ----

    def i0(self, elem):
        """Homotopy in degree 0: splits epsilon over the normal-word basis."""
        if elem.degree != 0:
            raise ValueError("i0 applies to degree-0 elements")
        if self.epsilon(elem):
            raise NotInKernel("element has nonzero augmentation")
        out = {}
        for t, c in elem.terms.items():
            s = t.word
            prefix_val = self.field.one
            for j in range(len(s)):
                coeff = c * prefix_val
                if coeff:
                    letter_chain = self.chain_with_word(1, (s[j],))
                    nt = TensorTerm(letter_chain, s[j + 1:])
                    nc = out.get(nt, 0) + coeff
                    if nc:
                        out[nt] = nc
                    else:
                        out.pop(nt, None)
                prefix_val = prefix_val * self.word_eval((s[j],))
                if not prefix_val:
                    break
        return ModuleElement(1, out)

    def _canon(self, n, elem):
        items = sorted(elem.terms.items(),
                       key=lambda kv: self.basis_key(kv[0]), reverse=True)
        return (n,) + tuple((t.chain.word, t.word, c) for t, c in items)

    def homotopy(self, n, elem):
        """i_n: a right inverse of d_{n+1} on the kernel of d_n.

        Peels the leading term, locates the obstruction completing it to a
        degree n+1 chain, and recurses on the remainder; the leading word
        strictly decreases, which is also enforced as a guard.
        """
        if n == 0:
            return self.i0(elem)
        if elem.degree != n:
            raise ValueError("degree mismatch")
        if elem and self.apply_differential(elem):
            raise NotInKernel("element is not a d_%d cycle" % n)
        obs_words = self.obstruction_set.words
        contributions = []
        keys = []
        tail = None
        work = elem
        prev_key = None
        guard = 0
        while work:
            ck = self._canon(n, work)
            memo = self._i_memo.get(ck)
            if memo is not None:
                tail = memo
                break
            keys.append(ck)
            lead_word, term, coeff = self.module_lm(work)
            lk = self.order.key(lead_word)
            if prev_key is not None and not lk < prev_key:
                raise NonTermination(
                    "leading word %s failed to decrease"
                    % self.algebra.word_str(lead_word))
            prev_key = lk
            c0 = term.chain
            cut = 0 if n == 1 else (1 if n == 2 else c0.ends[n - 3])
            w = c0.word + term.word
            pos, idx = wordops.first_match(w[cut:], obs_words)
            if pos < 0:
                raise NonTermination(
                    "no obstruction occurrence in the reducible part of %s; "
                    "input was outside the kernel" % self.algebra.word_str(w))
            start = cut + pos
            end = start + len(obs_words[idx])
            if not (start < len(c0.word) < end):
                raise NonTermination(
                    "obstruction occurrence in %s does not straddle the "
                    "chain boundary" % self.algebra.word_str(w))
            cnew = self.chain_with_word(n + 1, w[:end])
            if cnew is None:
                raise NonTermination(
                    "%s is not a degree-%d chain word"
                    % (self.algebra.word_str(w[:end]), n + 1))
            tword = w[end:]
            contributions.append((TensorTerm(cnew, tword), coeff))
            step = self.act(self.differential(cnew), tword)
            work = work - step.scale(coeff)
            guard += 1
            if guard > 100000:
                raise NonTermination("iteration cap reached at degree %d" % n)
            if self.debug and work and self.apply_differential(work):
                raise NotInKernel("cycle condition lost mid-recursion")
        if tail is None:
            tail = self.zero(n + 1)
        suffix = tail
        for i in range(len(contributions) - 1, -1, -1):
            t, c = contributions[i]
            suffix = suffix + ModuleElement(n + 1, {t: c})
            self._i_memo[keys[i]] = suffix
        return suffix

    # ---- reports ----

    def verify_complex(self, max_degree):
        """Check d_{n-1} d_n = 0 on every basis chain up to max_degree."""
        rows = []
        for n in range(1, max_degree + 1):
            t0 = time.perf_counter()
            ok = True
            cs = self.chains(n)
            for c in cs:
                d = self.differential(c)
                if n == 1:
                    if self.epsilon(d):
                        ok = False
                elif self.apply_differential(d):
                    ok = False
            rows.append(DegreeReport(n, len(cs), ok,
                                     time.perf_counter() - t0))
        return rows

    def minimality_diagnostic(self, max_degree):
        """Apply the augmentation to the module coordinates of each d_n.

        A nonzero entry at degree n certifies the resolution is not minimal
        there. Returns {degree: {"rows", "cols", "matrix", "nonzero"}}.
        """
        out = {}
        for n in range(1, max_degree + 1):
            rows = self.chains(n - 1)
            cols = self.chains(n)
            row_index = {c.word: i for i, c in enumerate(rows)}
            mat = [[self.field.zero for _ in cols] for _ in rows]
            for j, c in enumerate(cols):
                for t, coeff in self.differential(c).terms.items():
                    val = coeff * self.word_eval(t.word)
                    if val:
                        i = row_index[t.chain.word]
                        mat[i][j] = mat[i][j] + val
            nonzero = any(any(bool(e) for e in r) for r in mat)
            out[n] = {"rows": [c.word for c in rows],
                      "cols": [c.word for c in cols],
                      "matrix": mat,
                      "nonzero": nonzero}
        return out

    # ---- rendering ----

    def format_element(self, elem):
        """Render with terms descending: coeff·[chainword | normalword]."""
        if not elem.terms:
            return "0"
        ws = self.algebra.word_str
        terms = sorted(elem.terms.items(),
                       key=lambda kv: self.basis_key(kv[0]), reverse=True)
        pieces = []
        for t, c in terms:
            neg = getattr(c, "numerator", 1) < 0
            mag = -c if neg else c
            body = "[%s | %s]" % (ws(t.chain.word), ws(t.word))
            if mag != self.field.one:
                body = "%s·%s" % (mag, body)
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)
