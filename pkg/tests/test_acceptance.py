"""Acceptance criteria, one test per criterion.

Every test carries a ``criterion`` mark; the terminal summary prints one
PASS/FAIL line per criterion.  Labels with a ``*`` run the same checks on
the five-word invariant code {0,1,20,21,22}, because the word set named in
criteria 7, 9 and 10 is not a complete prefix code.

Run directly with ``python tests/test_acceptance.py`` or through pytest.
"""

import random
import sys
import time

import pytest

from conftest import higman_pairs, perm, random_top_code
from symthompson.codes import PrefixCode, Triple, find_solution, is_complete
from symthompson.perms import PermGroup
from symthompson.roots import root_group
from symthompson.successors import (AlgContext, embed_alg, successors_formula,
                                    successors_inductive, verify_expansion_lemma)
from symthompson.tables import (compose, equals, evaluate, expand_column, identity_table, inverse,
                                block_expand, push_down, push_up, random_element, random_point,
                                reduce_once, validate)
from symthompson.topo import block_code, build_context, embed_topo, translate_point
from symthompson.words import concat, parse_word, perm_act

criterion = pytest.mark.criterion

LITERAL_S = ("00", "01", "10", "11", "2")
FIXED_S = ("0", "1", "20", "21", "22")


def words(texts):
    return [parse_word(t) for t in texts]


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@criterion("1", "successor example on {20,210,211,212,22}, m=3, n=5")
def test_c1_successor_example():
    code = words(["22", "212", "211", "210", "20"])
    with Clock() as clock:
        s = successors_inductive(code, 3, 5)
    expected = dict(zip(code, words(["23", "213", "214", "24", "3"])))
    assert {x: s[x] for x in code} == {x: (y,) for x, y in expected.items()}
    assert clock.seconds < 1e-3, f"took {clock.seconds * 1e3:.3f} ms"


@criterion("2", "closed formula equals inductive successors on 200+ codes")
def test_c2_formula_equals_induction():
    rng = random.Random(2)
    checked = 0
    with Clock() as clock:
        for _ in range(240):
            m, n = rng.choice(higman_pairs())
            code = random_top_code(rng, m)
            s = successors_inductive(code, m, n)
            for x in code:
                for i in range(1, s.k + 1):
                    assert successors_formula(x, m, n, i) == s[x][i - 1], (code, m, n, x, i)
            checked += 1
    assert checked >= 200
    assert clock.seconds < 5, clock.seconds


@criterion("3", "expansion lemma on 50+ (code, leaf) instances")
def test_c3_expansion_lemma():
    rng = random.Random(3)
    with Clock() as clock:
        for _ in range(80):
            m, n = rng.choice(higman_pairs())
            code = random_top_code(rng, m)
            index = rng.randrange(len(code))
            assert verify_expansion_lemma(code, m, n, index), (code, m, n, index)
    assert clock.seconds < 5, clock.seconds


@criterion("4", "column count identity of the algebraic embedding")
def test_c4_counting_identity():
    rng = random.Random(4)
    cases = [(2, 3, PermGroup.trivial(2)), (2, 4, PermGroup.symmetric(2)),
             (3, 5, PermGroup.symmetric(3)), (3, 7, PermGroup.trivial(3)),
             (4, 7, PermGroup(4, [perm(4, (0, 1, 2, 3))]))]
    with Clock() as clock:
        for _ in range(120):
            m, n, group = rng.choice(cases)
            ctx = AlgContext(m, n, group)
            g = random_element(m, group, 4, rng=rng)
            d, rest = divmod(len(g) - 1, m - 1)
            assert rest == 0
            image = embed_alg(ctx, g)
            assert validate(image) == []
            assert (m + d * (m - 1)) * (ctx.k + 1) == len(image) + ctx.k
            assert len(image) == n + d * (n - 1)
    assert clock.seconds < 5, clock.seconds


@criterion("5", "algebraic embedding is an injective homomorphism, m=3, n=5, G=Sym(3)")
def test_c5_algebraic_homomorphism():
    rng = random.Random(5)
    group = PermGroup.symmetric(3)
    ctx = AlgContext(3, 5, group)
    hext = ctx.ext_group

    def iota(t):
        return embed_alg(ctx, t, hext)

    broken, collisions = [], 0
    with Clock() as clock:
        for _ in range(100):
            g = random_element(3, group, 3, rng=rng)
            h = random_element(3, group, 3, rng=rng)
            if not equals(iota(compose(h, g)), compose(iota(h), iota(g))):
                broken.append((g, h))
        pairs = 0
        while pairs < 100:
            g = random_element(3, group, 3, rng=rng)
            h = random_element(3, group, 3, rng=rng)
            if equals(g, h):
                continue
            pairs += 1
            if equals(iota(g), iota(h)):
                collisions += 1
    message = (f"homomorphism fails on {len(broken)}/100 pairs; "
               f"{collisions}/100 distinct pairs collide")
    if broken:
        g, h = broken[0]
        message += f"; first counterexample g={g.columns} h={h.columns}"
    assert not broken and not collisions, message
    assert clock.seconds < 30, clock.seconds


@criterion("6", "algebraic embedding acts as g on the top cylinder")
def test_c6_cylinder_conjugacy():
    rng = random.Random(6)
    group = PermGroup.symmetric(3)
    ctx = AlgContext(3, 5, group)
    top = (ctx.m - 1,)
    with Clock() as clock:
        for _ in range(100):
            g = random_element(3, group, 4, rng=rng)
            z = random_point(3, rng)
            assert evaluate(embed_alg(ctx, g), concat(top, z)) == concat(top, evaluate(g, z))
    assert clock.seconds < 10, clock.seconds


def run_topological(code_words):
    assert is_complete(words(code_words), 3), \
        f"{{{','.join(code_words)}}} is not a complete prefix code over 3 letters"
    rng = random.Random(7)
    group = PermGroup(3, [perm(3, (0, 1))])
    h_group = PermGroup(5, [perm(5, (0, 3), (1, 2))])
    ctx = build_context(3, 5, group, h_group, PrefixCode(3, words(code_words)))
    blocks = block_code(ctx)
    with Clock() as clock:
        for _ in range(100):
            g = random_element(5, h_group, 3, rng=rng)
            h = random_element(5, h_group, 3, rng=rng)
            assert equals(embed_topo(ctx, compose(h, g)),
                          compose(embed_topo(ctx, h), embed_topo(ctx, g)))
        for _ in range(100):
            g = random_element(5, h_group, 3, rng=rng)
            z = random_point(5, rng)
            assert evaluate(embed_topo(ctx, g), translate_point(ctx, z)) == \
                translate_point(ctx, evaluate(g, z))
        for _ in range(100):
            g = random_element(5, h_group, 3, rng=rng)
            i = rng.randrange(len(g))
            image = embed_topo(ctx, g)
            assert equals(embed_topo(ctx, expand_column(g, i)), block_expand(image, i, blocks))
            assert equals(embed_topo(ctx, push_down(g)), push_down(image))
            assert equals(embed_topo(ctx, push_up(g)), push_up(image))
    assert clock.seconds < 30, clock.seconds


@criterion("7", "topological embedding with S={00,01,10,11,2}")
def test_c7_topological_embedding():
    run_topological(LITERAL_S)


@criterion("7*", "topological embedding with S={0,1,20,21,22}")
def test_c7_topological_embedding_invariant_code():
    run_topological(FIXED_S)


@criterion("8", "group axioms of V_n(H), n in {2,3,5}, H trivial or Sym(n)")
def test_c8_group_axioms():
    rng = random.Random(8)
    with Clock() as clock:
        for n in (2, 3, 5):
            for group in (PermGroup.trivial(n), PermGroup.symmetric(n)):
                e = identity_table(n, group)
                for _ in range(100):
                    a, b, c = (random_element(n, group, 3, rng=rng) for _ in range(3))
                    assert equals(compose(compose(a, b), c), compose(a, compose(b, c)))
                    assert equals(compose(a, inverse(a)), e)
                    assert equals(compose(inverse(a), a), e)
                    assert equals(compose(a, e), a) and equals(compose(e, a), a)
    assert clock.seconds < 30, clock.seconds


def orbit_sizes_are_three(max_len):
    """Oracle: under the 3-cycle every nonempty word up to max_len has an orbit of size 3."""
    c = perm(3, (0, 1, 2))
    frontier = [()]
    for _ in range(max_len):
        frontier = [x + (a,) for x in frontier for a in range(3)]
        if any(len({x, perm_act(c, x), perm_act(c * c, x)}) != 3 for x in frontier):
            return False
    return True


def run_solution_search(first_expected):
    failures = []
    with Clock() as clock:
        got = find_solution(Triple(3, 5, PermGroup(3, [perm(3, (0, 1))])), 2)
        if got is None or list(got.words) != sorted(words(first_expected)):
            failures.append(f"(3,5,<(0 1)>) returned {got}, expected {{{','.join(first_expected)}}}")
        got = find_solution(Triple(3, 9, PermGroup(3, [perm(3, (0, 1, 2))])), 2)
        if got != PrefixCode.uniform(3, 2):
            failures.append(f"(3,9,<(0 1 2)>) returned {got}")
        got = find_solution(Triple(3, 5, PermGroup(3, [perm(3, (0, 1, 2))])), 6)
        # 5 is neither 1 nor a multiple of 3
        if got is not None or not orbit_sizes_are_three(6):
            failures.append(f"(3,5,<(0 1 2)>) returned {got}")
    assert not failures, "; ".join(failures)
    assert clock.seconds < 10, clock.seconds


@criterion("9", "solution search, first expected answer {00,01,10,11,2}")
def test_c9_solution_search():
    run_solution_search(LITERAL_S)


@criterion("9*", "solution search, first expected answer {0,1,20,21,22}")
def test_c9_solution_search_invariant_code():
    run_solution_search(FIXED_S)


def run_root_groups(code_words, expected_gen):
    failures = []
    with Clock() as clock:
        cases = [(PermGroup(3, [perm(3, (0, 1))]), code_words, expected_gen),
                 (PermGroup(3, [perm(3, (0, 1, 2))]), [f"{i}{j}" for i in range(3) for j in range(3)],
                  perm(9, (0, 4, 8), (1, 5, 6), (2, 3, 7)))]
        for group, texts, gen in cases:
            if not is_complete(words(texts), 3):
                failures.append(f"{{{','.join(texts)}}} is not a complete prefix code")
                continue
            root = root_group(group, PrefixCode(3, words(texts)))
            if root.perms != PermGroup(gen.degree, [gen]):
                failures.append(f"root group of {texts} is {root.perms}")
            for a in group:
                for b in group:
                    if root(a * b) != root(a) * root(b):
                        failures.append(f"not a homomorphism at {a}, {b}")
            if len({root(a) for a in group}) != group.order:
                failures.append("map is not injective")
    assert not failures, "; ".join(failures)
    assert clock.seconds < 1, clock.seconds


@criterion("10", "root groups of {00,01,10,11,2} and the length-2 words")
def test_c10_root_groups():
    run_root_groups(LITERAL_S, perm(5, (0, 3), (1, 2)))


@criterion("10*", "root groups of {0,1,20,21,22} and the length-2 words")
def test_c10_root_groups_invariant_code():
    run_root_groups(FIXED_S, perm(5, (0, 1), (2, 3)))


@criterion("11", "the four moves preserve evaluation on 200 random triples")
def test_c11_move_soundness():
    rng = random.Random(11)
    spaces = [(2, PermGroup.symmetric(2)), (3, PermGroup.symmetric(3)), (3, PermGroup.trivial(3)),
              (5, PermGroup(5, [perm(5, (0, 3), (1, 2))]))]

    def expansion(t):
        return expand_column(t, rng.randrange(len(t)))

    def reduction(t):
        grown = expansion(t)
        return grown, reduce_once(grown)

    counts = dict.fromkeys(["expansion", "reduction", "push_down", "push_up"], 0)
    with Clock() as clock:
        for _ in range(200):
            n, group = rng.choice(spaces)
            t = random_element(n, group, 4, rng=rng)
            z = random_point(n, rng)
            move = rng.choice(sorted(counts))
            counts[move] += 1
            if move == "reduction":
                before, after = reduction(t)
                assert len(after) == len(before) - (n - 1)
            else:
                before = t
                after = {"expansion": expansion, "push_down": push_down, "push_up": push_up}[move](t)
            assert validate(after) == []
            assert evaluate(after, z) == evaluate(before, z), (move, t, z)
    assert all(counts.values())
    assert clock.seconds < 10, clock.seconds


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider",
                          "-W", "ignore::pytest.PytestAssertRewriteWarning"]))
