"""Obstruction anti-chains, the order-ideal/anti-chain correspondence,
the chain graph, and chain enumeration with placement tuples."""

from dataclasses import dataclass

from . import wordops
from .errors import NotAnAntichain, NotAnOim, NotMinimal
from .free_algebra import MonomialOrder


class ObstructionSet:
    """Anti-chain of words under the subword order, each of length >= 2."""

    def __init__(self, words):
        ws = sorted({tuple(w) for w in words}, key=lambda w: (len(w), w))
        for w in ws:
            if len(w) < 2:
                raise ValueError("obstruction %r shorter than 2" % (w,))
        for u in ws:
            for w in ws:
                if u != w and wordops.find_subword(w, u) >= 0:
                    raise NotAnAntichain("%r is a subword of %r" % (u, w))
        self.words = tuple(ws)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return tuple(w) in self.words

    def __eq__(self, other):
        return isinstance(other, ObstructionSet) and other.words == self.words

    def __repr__(self):
        return "ObstructionSet(%r)" % (list(self.words),)


def obstructions(rs):
    """Leading monomials of a minimal rewrite system as an ObstructionSet."""
    if not rs.minimal:
        raise NotMinimal("rule leading monomials are not an anti-chain")
    return ObstructionSet(rs.leading_words)


def oim_from_antichain(poset, antichain):
    """Elements of the poset smaller than or incomparable to the anti-chain.

    The poset is a finite collection of words ordered by the subword
    relation. The result is the downward-closed set of words avoiding
    every anti-chain element.
    """
    universe = {tuple(w) for w in poset}
    front = {tuple(w) for w in antichain}
    if not front <= universe:
        raise ValueError("anti-chain not contained in the poset")
    for u in front:
        for w in front:
            if u != w and wordops.find_subword(w, u) >= 0:
                raise NotAnAntichain("%r is a subword of %r" % (u, w))
    pats = tuple(sorted(front, key=lambda w: (len(w), w)))
    return frozenset(y for y in universe if wordops.is_normal(y, pats))


def antichain_from_oim(poset, oim):
    """Minimal elements of the complement of a downward-closed set."""
    universe = {tuple(w) for w in poset}
    ideal = {tuple(w) for w in oim}
    if not ideal <= universe:
        raise ValueError("set not contained in the poset")
    for w in ideal:
        for i in range(len(w) + 1):
            for j in range(i, len(w) + 1):
                u = w[i:j]
                if u != w and u in universe and u not in ideal:
                    raise NotAnOim("%r in the set but its subword %r is not"
                                   % (w, u))
    comp = universe - ideal
    out = set()
    for y in comp:
        minimal = True
        for x in comp:
            if x != y and wordops.find_subword(y, x) >= 0:
                minimal = False
                break
        if minimal:
            out.add(y)
    return frozenset(out)


@dataclass(frozen=True)
class Chain:
    """A degree-n chain: its word, node path, and obstruction placements.

    path includes the leading empty root node. starts/ends hold the
    1-indexed obstruction spans (n-1 of them for degree n >= 2); the last
    span always ends at len(word).
    """

    degree: int
    word: tuple
    path: tuple
    starts: tuple
    ends: tuple


def identity_chain():
    return Chain(0, (), ((),), (), ())


def extend_chain(chain, node, witness):
    """Extend a chain along a graph edge; placements follow by induction."""
    word = chain.word + node
    if chain.degree == 0:
        return Chain(1, word, chain.path + (node,), (), ())
    prev_end = chain.ends[-1] if chain.ends else len(chain.word)
    end = prev_end + len(node)
    start = end - len(witness) + 1
    return Chain(chain.degree + 1, word, chain.path + (node,),
                 chain.starts + (start,), chain.ends + (end,))


def _cut(chain, m):
    if m == 0:
        return 0
    if m == 1:
        return 1
    return chain.ends[m - 2]


def bracket_prefix(chain, m):
    """The m-chain prefix of a chain of degree >= m."""
    n = chain.degree
    if not 0 <= m <= n:
        raise ValueError("no %d-chain prefix of a degree-%d chain" % (m, n))
    if m == n:
        return chain
    if m == 0:
        return identity_chain()
    return Chain(m, chain.word[:_cut(chain, m)], chain.path[:m + 1],
                 chain.starts[:max(m - 1, 0)], chain.ends[:max(m - 1, 0)])


def bracket_tail(chain, m):
    """The leftover word after the m-chain prefix."""
    if not 0 <= m <= chain.degree:
        raise ValueError("no index-%d tail of a degree-%d chain"
                         % (m, chain.degree))
    return chain.word[_cut(chain, m):]


def split_chain(chain):
    """Split off the largest proper chain prefix: (prefix, tail word)."""
    if chain.degree < 1:
        raise ValueError("cannot split the identity chain")
    m = chain.degree - 1
    return bracket_prefix(chain, m), bracket_tail(chain, m)


class ChainGraph:
    """Directed graph whose length-n paths from the root spell the
    degree-n chains.

    Nodes: the root (empty word), the letters, and every proper suffix of
    an obstruction. Edge s -> t exists when st contains exactly one
    obstruction occurrence and that occurrence is a suffix of st; the
    occurrence is stored as the edge witness.
    """

    def __init__(self, obstruction_set, alphabet):
        if not isinstance(obstruction_set, ObstructionSet):
            obstruction_set = ObstructionSet(obstruction_set)
        self.obstructions = obstruction_set
        self.alphabet = alphabet
        obs = obstruction_set.words
        nodes = {(i,) for i in range(len(alphabet))}
        for w in obs:
            for k in range(1, len(w)):
                nodes.add(w[k:])
        ordered = [()] + sorted(nodes, key=lambda w: (len(w), w))
        self.nodes = tuple(ordered)
        edges = {(): tuple(((i,), None) for i in range(len(alphabet)))}
        for s in ordered[1:]:
            targets = []
            for t in ordered[1:]:
                st = s + t
                ms = wordops.all_matches(st, obs)
                if len(ms) == 1:
                    pos, k = ms[0]
                    if pos + len(obs[k]) == len(st):
                        targets.append((t, obs[k]))
            edges[s] = tuple(targets)
        self.edges = edges

    def reachable(self):
        """Nodes reachable from the root."""
        seen = {()}
        stack = [()]
        while stack:
            s = stack.pop()
            for t, _ in self.edges.get(s, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return seen

    def to_dot(self, prune=True):
        """GraphViz text; prune drops nodes unreachable from the root."""
        keep = self.reachable() if prune else set(self.nodes)
        label = self.alphabet.word_str
        lines = ["digraph chain_graph {"]
        for v in self.nodes:
            if v in keep:
                lines.append('  "%s";' % label(v))
        for v in self.nodes:
            if v not in keep:
                continue
            for t, wit in self.edges[v]:
                if t not in keep:
                    continue
                if wit is None:
                    lines.append('  "%s" -> "%s";' % (label(v), label(t)))
                else:
                    lines.append('  "%s" -> "%s" [label="%s"];'
                                 % (label(v), label(t), label(wit)))
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_chain_graph(obstruction_set, alphabet):
    return ChainGraph(obstruction_set, alphabet)


def enumerate_chains(graph, degree, order=None):
    """All chains of the given degree, ascending by the order on their words."""
    if degree < 0:
        raise ValueError("negative degree")
    if order is None:
        order = MonomialOrder(graph.alphabet)
    chains = [identity_chain()]
    for _ in range(degree):
        nxt = []
        for c in chains:
            for dst, witness in graph.edges.get(c.path[-1], ()):
                nxt.append(extend_chain(c, dst, witness))
        chains = nxt
    chains.sort(key=lambda c: order.key(c.word))
    words = {c.word for c in chains}
    assert len(words) == len(chains), "chain words at one degree must be distinct"
    return chains


def _occurrences(word, obs_words):
    """1-indexed (start, end) spans of obstruction occurrences, in order."""
    ms = wordops.all_matches(tuple(word), obs_words)
    return [(pos + 1, pos + len(obs_words[k])) for pos, k in ms]


def _placement_pairs(occs, n):
    """Reachable (previous end, current end) pairs after placing m = 1..n
    overlapping obstructions, first one anchored at position 1."""
    levels = []
    cur = {(1, b) for a, b in occs if a == 1}
    levels.append(cur)
    for _ in range(1, n):
        nxt = set()
        for prev_b, b in cur:
            for a2, b2 in occs:
                if prev_b < a2 <= b and b2 > b:
                    nxt.add((b, b2))
        levels.append(nxt)
        cur = nxt
    return levels


def is_prechain(word, n, obstruction_set):
    """True when word is a degree-n prechain.

    Degree 0 is the empty word and degree 1 a single letter; for n >= 2
    the word must be covered by n - 1 overlapping obstruction placements
    satisfying the prechain inequalities.
    """
    if n < 0:
        return False
    word = tuple(word)
    if n <= 1:
        return len(word) == n
    obs = obstruction_set.words if isinstance(obstruction_set, ObstructionSet) \
        else tuple(obstruction_set)
    occs = _occurrences(word, obs)
    levels = _placement_pairs(occs, n - 1)
    return any(b == len(word) for _, b in levels[n - 2])


def _full_placements(occs, n, length):
    """All (starts, ends) n-tuples with the last span ending the word."""
    out = []

    def rec(chosen):
        m = len(chosen)
        if m == n:
            if chosen[-1][1] == length:
                out.append((tuple(a for a, _ in chosen),
                            tuple(b for _, b in chosen)))
            return
        prev_prev = chosen[-2][1] if m >= 2 else 1
        prev = chosen[-1][1]
        for a, b in occs:
            if prev_prev < a <= prev and b > prev:
                rec(chosen + [(a, b)])

    for a, b in occs:
        if a == 1:
            rec([(a, b)])
    return out


def is_chain_top_down(word, n, obstruction_set):
    """Validate the chain property of a degree-n word directly from the
    definition, without the graph.

    Returns the unique (starts, ends) obstruction placement when word is
    an n-chain (empty tuples for n <= 1), else None. A placement
    qualifies when no obstruction span could have ended earlier, i.e. no
    proper prefix is a prechain of the same intermediate degree.
    """
    if n < 0:
        raise ValueError("chain degree must be nonnegative")
    word = tuple(word)
    if n <= 1:
        return ((), ()) if len(word) == n else None
    k = n - 1
    obs = obstruction_set.words if isinstance(obstruction_set, ObstructionSet) \
        else tuple(obstruction_set)
    occs = _occurrences(word, obs)
    if not occs:
        return None
    placements = _full_placements(occs, k, len(word))
    if not placements:
        return None
    levels = _placement_pairs(occs, k)
    # earliest possible prechain end at each level; the chain condition
    # forces each placement end to be exactly this minimum
    min_end = [min((b for _, b in lv), default=None) for lv in levels]
    valid = []
    for starts, ends in placements:
        if all(min_end[m] is not None and ends[m] <= min_end[m]
               for m in range(k)):
            valid.append((starts, ends))
    assert len(valid) <= 1, "chain placements must be unique"
    return valid[0] if valid else None


def enumerate_prechains(obstruction_set, n):
    """Degree-n prechain words, generated by overlapping concatenation of
    obstructions rather than by scanning all words. Superset of the
    degree-n chain words. Needs n >= 2; lower degrees do not involve
    obstructions at all."""
    if n < 2:
        raise ValueError("prechain generation needs degree >= 2")
    k = n - 1
    obs = obstruction_set.words if isinstance(obstruction_set, ObstructionSet) \
        else tuple(obstruction_set)
    out = set()

    def rec(word, prev_b, cur_b, m):
        if m == k:
            out.add(word)
            return
        for s in obs:
            ls = len(s)
            for a in range(prev_b + 1, cur_b + 1):
                shared = cur_b - a + 1
                if shared >= ls:
                    continue
                if word[a - 1:] == s[:shared]:
                    rec(word + s[shared:], cur_b, cur_b + ls - shared, m + 1)

    for s in obs:
        rec(tuple(s), 1, len(s), 1)
    return out
