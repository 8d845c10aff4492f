"""Embedding V_n(H) into V_m(G) by substituting code words for letters.

Given a G-invariant complete code S = {s_0 < ... < s_{n-1}} over m letters and
a conjugator ``c`` with ``c H c^-1`` equal to the root group of S, the letter
``i`` is replaced by ``s_{c(i)}`` and a permutation ``h`` of H by the element of
G whose letterwise action permutes S as ``c h c^-1`` does.  The result is the
conjugate of ``h`` by this substitution map on Cantor space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import CodeError, PrefixCode, is_invariant
from .perms import Perm, PermGroup, find_cyclic_isomorphism
from .roots import RootGroup, root_group
from .tables import Column, Table, check
from .words import EvWord, Word


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class TopoContext:
    m: int
    n: int
    group: PermGroup      # G <= Sym(m)
    h_group: PermGroup    # H <= Sym(n)
    code: PrefixCode
    root: RootGroup
    conj: Perm

    def letter(self, i: int) -> Word:
        return self.code.words[self.conj(i)]

    def lower(self, h: Perm) -> Perm:
        """The element of G realizing ``h`` on the blocks of the code."""
        return self.root.preimage(self.conj * h * self.conj.inverse())


def build_context(m: int, n: int, group: PermGroup, h_group: PermGroup, code: PrefixCode,
                  conj: Perm | None = None) -> TopoContext:
    if not 2 <= m < n:
        raise EmbeddingError(f"need 2 <= m < n, got m={m}, n={n}")
    if (n - 1) % (m - 1):
        raise EmbeddingError(f"n={n} is not 1 mod (m-1)={m - 1}")
    if group.degree != m or h_group.degree != n:
        raise EmbeddingError("group degrees do not match m and n")
    if code.n != m or len(code) != n:
        raise EmbeddingError(f"code must have {n} words over {m} letters")
    if not is_invariant(code, group):
        raise EmbeddingError(f"{code} is not invariant under G")
    root = root_group(group, code)
    if conj is None:
        conj = find_cyclic_isomorphism(h_group, root.perms)
        if conj is None:
            raise EmbeddingError("H is not cyclically isomorphic to the root group of the code")
    elif h_group.conjugate(conj) != root.perms:
        raise EmbeddingError("the given conjugator does not carry H onto the root group")
    ctx = TopoContext(m, n, group, h_group, code, root, conj)
    for h in h_group.generators:
        t = root(ctx.lower(h))
        for i in range(n):
            # translating a permuted letter equals permuting the translated letter
            if ctx.code.words[t(conj(i))] != ctx.letter(h(i)):
                raise EmbeddingError("alignment of H with the root group failed")
    return ctx


def translate_word(ctx: TopoContext, w: Word) -> Word:
    out: tuple = ()
    for i in w:
        out += ctx.letter(i)
    return out


def translate_point(ctx: TopoContext, z: EvWord) -> EvWord:
    return EvWord(translate_word(ctx, z.head), translate_word(ctx, z.period))


def embed_topo(ctx: TopoContext, g: Table) -> Table:
    if g.n != ctx.n or g.group != ctx.h_group:
        raise EmbeddingError("table is not an element of V_n(H) for this context")
    check(g)
    cols = tuple(Column(translate_word(ctx, c.p), ctx.lower(c.sigma),
                        translate_word(ctx, c.q), ctx.lower(c.tau)) for c in g.columns)
    return Table(ctx.m, ctx.group, cols)


def block_code(ctx: TopoContext) -> tuple:
    """The code words in letter order, for expanding an image column in blocks."""
    return tuple(ctx.letter(i) for i in range(ctx.n))


__all__ = ["EmbeddingError", "TopoContext", "build_context", "translate_word",
           "translate_point", "embed_topo", "block_code", "CodeError"]
