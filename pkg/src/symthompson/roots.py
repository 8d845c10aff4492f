"""Root groups: the permutations of an invariant code induced by letterwise action."""

from __future__ import annotations

from dataclasses import dataclass

from .codes import CodeError, PrefixCode, is_invariant
from .perms import DegreeMismatch, Perm, PermGroup
from .words import perm_act


@dataclass(frozen=True)
class RootGroup:
    group: PermGroup          # G <= Sym(m)
    code: PrefixCode          # s_0 < ... < s_{n-1} in dictionary order
    perms: PermGroup          # the induced group inside Sym(n)
    forward: dict             # G element -> induced permutation
    backward: dict            # induced permutation -> G element

    @property
    def m(self) -> int:
        return self.group.degree

    @property
    def n(self) -> int:
        return len(self.code)

    def __call__(self, sigma: Perm) -> Perm:
        return self.forward[sigma]

    def preimage(self, sigma_tilde: Perm) -> Perm:
        return self.backward[sigma_tilde]


def induced_perm(sigma: Perm, code: PrefixCode) -> Perm:
    words = code.words
    where = {w: i for i, w in enumerate(words)}
    return Perm(where[perm_act(sigma, w)] for w in words)


def root_group(group: PermGroup, code: PrefixCode, n: int | None = None) -> RootGroup:
    if group.degree != code.n:
        raise DegreeMismatch(f"group degree {group.degree} differs from alphabet size {code.n}")
    if n is not None and len(code) != n:
        raise CodeError(f"code has {len(code)} words, expected {n}")
    if not is_invariant(code, group):
        raise CodeError(f"code {code} is not invariant under the group")
    forward = {g: induced_perm(g, code) for g in group}
    backward = {v: k for k, v in forward.items()}
    if len(backward) != len(forward):
        raise CodeError("the group does not act faithfully on the code")
    perms = PermGroup(len(code), [forward[g] for g in group.generators])
    return RootGroup(group, code, perms, forward, backward)
