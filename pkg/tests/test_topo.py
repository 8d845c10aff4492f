import pytest
from hypothesis import given, settings, strategies as st

from conftest import elements, evwords, perm
from symthompson.codes import CodeError, PrefixCode
from symthompson.perms import PermGroup
from symthompson.tables import (block_expand, compose, equals, evaluate, expand_column,
                                identity_table, inverse, is_identity, make_table, push_down,
                                push_up, validate)
from symthompson.topo import (EmbeddingError, block_code, build_context, embed_topo,
                              translate_point, translate_word)
from symthompson.words import EvWord, parse_word

G = PermGroup(3, [perm(3, (0, 1))])
S5 = PrefixCode(3, [parse_word(x) for x in ("0", "1", "20", "21", "22")])
H_ROOT = PermGroup(5, [perm(5, (0, 1), (2, 3))])
H_OTHER = PermGroup(5, [perm(5, (0, 3), (1, 2))])


def w(text):
    return parse_word(text)


@pytest.fixture(scope="module")
def ctx():
    return build_context(3, 5, G, H_OTHER, S5)


@pytest.fixture(scope="module")
def ctx_v3():
    c = PrefixCode(2, [w("0"), w("10"), w("11")])
    return build_context(2, 3, PermGroup.trivial(2), PermGroup.trivial(3), c)


def test_context_with_root_group_itself():
    c = build_context(3, 5, G, H_ROOT, S5, conj=perm(5))
    assert c.lower(perm(5, (0, 1), (2, 3))) == perm(3, (0, 1))


def test_context_conjugator_found_by_search(ctx):
    assert H_OTHER.conjugate(ctx.conj) == H_ROOT


def test_classical_context(ctx_v3):
    assert [ctx_v3.letter(i) for i in range(3)] == [w("0"), w("10"), w("11")]


def test_literal_word_set_is_not_a_code():
    # {00,01,10,11,2} leaves 12 uncovered
    with pytest.raises(CodeError):
        PrefixCode(3, [w(x) for x in ("00", "01", "10", "11", "2")])


def test_wrong_conjugator_rejected():
    with pytest.raises(EmbeddingError):
        build_context(3, 5, G, H_OTHER, S5, conj=perm(5))


def test_non_conjugate_groups_rejected():
    with pytest.raises(EmbeddingError):
        build_context(3, 5, G, PermGroup(5, [perm(5, (0, 1))]), S5)


def test_higman_condition():
    with pytest.raises(EmbeddingError):
        build_context(3, 4, PermGroup.trivial(3), PermGroup.trivial(4),
                      PrefixCode(3, [w("0"), w("1"), w("2")]))


def test_non_invariant_code_rejected():
    with pytest.raises(EmbeddingError):
        build_context(3, 5, PermGroup(3, [perm(3, (1, 2))]), H_ROOT, S5)


def test_translate_point_examples():
    c = build_context(3, 5, G, H_ROOT, S5, conj=perm(5))
    assert translate_point(c, EvWord((), (0,))) == EvWord((), (0,))
    assert translate_point(c, EvWord((4,), (0,))) == EvWord((2, 2), (0,))
    assert translate_point(c, EvWord((), (1, 2))) == EvWord((), (1, 2, 0))
    assert translate_word(c, ()) == ()


def test_embed_identity(ctx):
    assert is_identity(embed_topo(ctx, identity_table(5, H_OTHER)))


def test_embed_lowers_permutations(ctx):
    g = make_table(5, H_OTHER, [((), perm(5), (), perm(5, (0, 3), (1, 2)))])
    image = embed_topo(ctx, g)
    assert image.columns[0].tau == perm(3, (0, 1))
    assert image.columns[0].p == () and image.columns[0].q == ()


def test_embed_classical_swap(ctx_v3):
    i3 = perm(3)
    g = make_table(3, PermGroup.trivial(3), [(w("0"), i3, w("1"), i3), (w("1"), i3, w("0"), i3),
                                             (w("2"), i3, w("2"), i3)])
    image = embed_topo(ctx_v3, g)
    assert [(c.p, c.q) for c in image.columns] == [(w("0"), w("10")), (w("10"), w("0")),
                                                  (w("11"), w("11"))]


@settings(deadline=None, max_examples=60)
@given(elements(5, H_OTHER), evwords(5))
def test_embedding_conjugates_evaluation(g, z):
    c = build_context(3, 5, G, H_OTHER, S5)
    image = embed_topo(c, g)
    assert validate(image) == []
    assert evaluate(image, translate_point(c, z)) == translate_point(c, evaluate(g, z))


@settings(deadline=None, max_examples=40)
@given(elements(5, H_OTHER), elements(5, H_OTHER))
def test_embedding_is_a_homomorphism(g, h):
    c = build_context(3, 5, G, H_OTHER, S5)
    assert equals(embed_topo(c, compose(h, g)), compose(embed_topo(c, h), embed_topo(c, g)))
    assert equals(embed_topo(c, inverse(g)), inverse(embed_topo(c, g)))


@settings(deadline=None, max_examples=40)
@given(elements(5, H_OTHER), st.data())
def test_embedding_commutes_with_moves(g, data):
    c = build_context(3, 5, G, H_OTHER, S5)
    i = data.draw(st.integers(0, len(g) - 1))
    image = embed_topo(c, g)
    assert embed_topo(c, expand_column(g, i)).same_columns(block_expand(image, i, block_code(c)))
    assert embed_topo(c, push_down(g)) == push_down(image)
    assert embed_topo(c, push_up(g)) == push_up(image)


def test_embedding_is_injective_on_samples(ctx):
    a = make_table(5, H_OTHER, [((), perm(5), (), perm(5))])
    b = make_table(5, H_OTHER, [((), perm(5), (), perm(5, (0, 3), (1, 2)))])
    assert not equals(embed_topo(ctx, a), embed_topo(ctx, b))


def test_wrong_source_space(ctx):
    with pytest.raises(EmbeddingError):
        embed_topo(ctx, identity_table(5))
