"""Obstructions, the chain graph, and the two equivalent chain
characterizations."""

import itertools

import pytest

import anick
from anick import (Alphabet, Chain, ObstructionSet, RewriteSystem,
                   antichain_from_oim, bracket_prefix, bracket_tail,
                   build_chain_graph, enumerate_chains, enumerate_prechains,
                   identity_chain, is_chain_top_down, is_prechain,
                   obstructions, oim_from_antichain, split_chain)

XY = Alphabet(["x", "y"])


@pytest.fixture(scope="module")
def running(running_presentation):
    rs = RewriteSystem.from_presentation(running_presentation)
    obs = obstructions(rs)
    graph = build_chain_graph(obs, running_presentation.algebra.alphabet)
    return running_presentation, obs, graph


# ---- obstruction sets ----

def test_obstruction_words(running):
    pres, obs, _ = running
    assert [pres.algebra.word_str(w) for w in obs.words] == ["xxx", "yxz", "xxyx"]


def test_obstruction_set_validation():
    with pytest.raises(ValueError):
        ObstructionSet([(0,)])
    with pytest.raises(anick.NotAnAntichain):
        ObstructionSet([(0, 1), (0, 1, 1)])
    ObstructionSet([(0, 1), (1, 0)])


# ---- ideal/anti-chain bijection ----

def poset_words(max_len):
    out = []
    for n in range(max_len + 1):
        out.extend(itertools.product(range(2), repeat=n))
    return out


def is_antichain(words):
    return all(anick.find_subword(w, u) is None
               for u in words for w in words if u != w)


def is_closed(poset, subset):
    sub = set(subset)
    for w in sub:
        for i in range(len(w) + 1):
            for j in range(i, len(w) + 1):
                if w[i:j] != w and w[i:j] not in sub:
                    return False
    return True


def test_bijection_exhaustive_two_letters():
    poset = poset_words(3)
    nonempty = [w for w in poset]
    antichains = []
    for bits in range(1 << len(nonempty)):
        sub = [w for k, w in enumerate(nonempty) if bits >> k & 1]
        if is_antichain(sub):
            antichains.append(frozenset(sub))
    ideals = [frozenset(s) for bits in range(1 << len(nonempty))
              for s in [[w for k, w in enumerate(nonempty) if bits >> k & 1]]
              if is_closed(poset, s)]
    assert len(antichains) == len(ideals)
    seen = set()
    for a in antichains:
        ideal = oim_from_antichain(poset, a)
        assert is_closed(poset, ideal)
        assert antichain_from_oim(poset, ideal) == a
        seen.add(ideal)
    assert seen == set(ideals)


def test_bijection_validation():
    poset = poset_words(2)
    with pytest.raises(anick.NotAnAntichain):
        oim_from_antichain(poset, [(0,), (0, 0)])
    with pytest.raises(anick.NotAnOim):
        antichain_from_oim(poset, [(0, 0)])  # xx without its subwords
    with pytest.raises(ValueError):
        oim_from_antichain(poset, [(0, 0, 0)])
    with pytest.raises(ValueError):
        antichain_from_oim(poset, [(1, 1, 1)])


def test_bijection_running_example(running):
    pres, obs, _ = running
    order = pres.algebra.order
    poset = anick.words_up_to_weight(pres.algebra.alphabet, order, 4)
    # the o.i.m. attached to the obstruction anti-chain is the normal-word set
    oim = oim_from_antichain(poset, obs.words)
    assert antichain_from_oim(poset, oim) == frozenset(obs.words)
    rs = RewriteSystem.from_presentation(pres)
    assert oim == set(rs.normal_words(4))


# ---- chain graph ----

def test_graph_nodes(running):
    pres, _, graph = running
    ws = pres.algebra.word_str
    assert [ws(n) for n in graph.nodes] == \
        ["1", "x", "y", "z", "xx", "xz", "yx", "xyx"]


def test_graph_edges(running):
    pres, _, graph = running
    ws = pres.algebra.word_str
    got = sorted((ws(s), ws(t), ws(wit) if wit else "")
                 for s in graph.nodes for t, wit in graph.edges[s])
    assert got == sorted([
        ("1", "x", ""), ("1", "y", ""), ("1", "z", ""),
        ("x", "xx", "xxx"), ("x", "xyx", "xxyx"),
        ("y", "xz", "yxz"),
        ("xx", "x", "xxx"), ("xx", "yx", "xxyx"),
        ("yx", "z", "yxz"), ("yx", "xx", "xxx"), ("yx", "xyx", "xxyx"),
        ("xyx", "z", "yxz"), ("xyx", "xx", "xxx"), ("xyx", "xyx", "xxyx"),
    ])


def test_graph_all_reachable(running):
    _, _, graph = running
    assert graph.reachable() == set(graph.nodes)


def test_graph_dot_output(running):
    _, _, graph = running
    dot = graph.to_dot()
    assert dot.startswith("digraph chain_graph {")
    assert '"x" -> "xyx" [label="xxyx"];' in dot
    assert dot.strip().endswith("}")


def test_graph_pruning():
    obs = ObstructionSet([XY.word("xxyy")])
    graph = build_chain_graph(obs, XY)
    assert [XY.word_str(n) for n in graph.nodes] == ["1", "x", "y", "yy", "xyy"]
    assert XY.word("yy") not in graph.reachable()
    assert '"yy"' not in graph.to_dot()
    assert '"yy"' in graph.to_dot(prune=False)
    assert [c.word for c in enumerate_chains(graph, 3)] == []


# ---- chain enumeration ----

def test_chain_census(running):
    _, _, graph = running
    assert [len(enumerate_chains(graph, n)) for n in range(7)] == \
        [1, 3, 3, 5, 10, 20, 40]


def test_chain_words_golden(running):
    pres, _, graph = running
    ws = pres.algebra.word_str

    def words(n):
        return [ws(c.word) for c in enumerate_chains(graph, n)]

    assert words(0) == ["1"]
    assert words(1) == ["z", "y", "x"]
    assert words(2) == ["yxz", "xxx", "xxyx"]
    assert words(3) == ["xxxx", "xxyxz", "xxxyx", "xxyxxx", "xxyxxyx"]
    assert words(4) == ["xxxyxz", "xxxxxx", "xxyxxxx", "xxxyxxx", "xxxxxyx",
                        "xxyxxyxz", "xxyxxxyx", "xxxyxxyx", "xxyxxyxxx",
                        "xxyxxyxxyx"]


def test_chains_sorted_ascending(running):
    pres, _, graph = running
    key = pres.algebra.order.key
    for n in range(6):
        keys = [key(c.word) for c in enumerate_chains(graph, n)]
        assert keys == sorted(keys)


def test_chain_structure(running):
    pres, _, graph = running
    ws = pres.algebra.word_str
    by_word = {ws(c.word): c for c in enumerate_chains(graph, 3)}
    c = by_word["xxyxz"]
    assert c.degree == 3
    assert [ws(p) for p in c.path] == ["1", "x", "xyx", "z"]
    assert c.starts == (1, 3)
    assert c.ends == (4, 5)
    # path concatenation spells the word, spans are obstruction occurrences
    for c in enumerate_chains(graph, 4):
        assert sum(c.path, ()) == c.word
        for a, b in zip(c.starts, c.ends):
            assert c.word[a - 1:b] in {w for w in graph.obstructions.words}


def test_identity_chain():
    c = identity_chain()
    assert c.degree == 0 and c.word == () and c.path == ((),)


# ---- bracket decomposition ----

def test_split_chain(running):
    pres, _, graph = running
    ws = pres.algebra.word_str
    by_word = {ws(c.word): c for c in enumerate_chains(graph, 3)}
    prefix, tail = split_chain(by_word["xxxyx"])
    assert ws(prefix.word) == "xxx" and prefix.degree == 2
    assert ws(tail) == "yx"
    prefix, tail = split_chain(by_word["xxxx"])
    assert ws(prefix.word) == "xxx" and ws(tail) == "x"


def test_bracket_prefixes(running):
    pres, _, graph = running
    ws = pres.algebra.word_str
    c = {ws(ch.word): ch for ch in enumerate_chains(graph, 3)}["xxyxz"]
    assert ws(bracket_prefix(c, 1).word) == "x"
    assert ws(bracket_tail(c, 1)) == "xyxz"
    assert bracket_prefix(c, 0) == identity_chain()
    assert ws(bracket_tail(c, 0)) == "xxyxz"
    assert bracket_prefix(c, 3) is c
    assert bracket_tail(c, 3) == ()
    with pytest.raises(ValueError):
        bracket_prefix(c, 4)
    with pytest.raises(ValueError):
        split_chain(identity_chain())


def test_bracket_prefix_is_chain(running):
    # every prefix of a chain is itself a chain of lower degree
    pres, obs, graph = running
    for c in enumerate_chains(graph, 4):
        for m in range(5):
            sub = bracket_prefix(c, m)
            assert is_chain_top_down(sub.word, m, obs) == (sub.starts, sub.ends)


# ---- top-down characterization ----

def test_prechain_degree_bounds(running):
    _, obs, _ = running
    assert is_prechain((), 0, obs)
    assert not is_prechain((0,), 0, obs)
    assert is_prechain((2,), 1, obs)
    assert not is_prechain((), 1, obs)
    assert not is_prechain((0, 0), 1, obs)
    assert not is_prechain((0,), -1, obs)


def test_prechain_not_chain(running):
    pres, obs, _ = running
    W = pres.algebra.alphabet.word
    # both admit placements, but not ones with minimal ends
    for s in ["xxxxx", "xxxxyx"]:
        assert is_prechain(W(s), 3, obs)
        assert is_chain_top_down(W(s), 3, obs) is None
    assert is_prechain(W("xxxx"), 3, obs)
    assert is_chain_top_down(W("xxxx"), 3, obs) == ((1, 2), (3, 4))


def test_top_down_placements(running):
    pres, obs, _ = running
    W = pres.algebra.alphabet.word
    assert is_chain_top_down(W("xxyxxyxz"), 4, obs) == ((1, 4, 6), (4, 7, 8))
    assert is_chain_top_down(W("xyz"), 2, obs) is None
    assert is_chain_top_down(W("x"), 1, obs) == ((), ())
    assert is_chain_top_down((), 0, obs) == ((), ())
    assert is_chain_top_down(W("x"), 0, obs) is None


def test_definitions_agree_small(running):
    pres, obs, graph = running
    for n in range(5):
        graph_side = {c.word: (c.starts, c.ends)
                      for c in enumerate_chains(graph, n) if len(c.word) <= 5}
        scan_side = {}
        for length in range(6):
            for w in itertools.product(range(3), repeat=length):
                placed = is_chain_top_down(w, n, obs)
                if placed is not None:
                    scan_side[w] = placed
        assert graph_side == scan_side


def test_enumerate_prechains(running):
    pres, obs, _ = running
    ws = pres.algebra.word_str
    got = sorted(ws(w) for w in enumerate_prechains(obs, 3))
    # degree-3 prechains are exactly the overlap ambiguity words
    assert got == ["xxxx", "xxxxx", "xxxxyx", "xxxyx", "xxyxxx", "xxyxxyx",
                   "xxyxz"]
    with pytest.raises(ValueError):
        enumerate_prechains(obs, 1)


def test_enumerate_prechains_matches_scan(running):
    _, obs, _ = running
    for n in (2, 3, 4):
        gen = {w for w in enumerate_prechains(obs, n) if len(w) <= 7}
        scan = {w for length in range(8)
                for w in itertools.product(range(3), repeat=length)
                if is_prechain(w, n, obs)}
        assert gen == scan


def test_chains_are_prechains(running):
    _, obs, graph = running
    for n in range(2, 6):
        words = {c.word for c in enumerate_chains(graph, n)}
        assert words <= enumerate_prechains(obs, n)
