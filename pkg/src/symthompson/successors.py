"""Successor words and the algebraic embedding V_m(G) -> V_n(G_ext).

The alphabet {0..m-1} sits inside {0..n-1}; the letters m..n-1 are new.  For a
code P whose words all start with the letter m-1, every word receives k
successors of the form x a with x a strict prefix of some word of P and a a
new letter, where n - m = k (m - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codes import is_complete, spref
from .perms import Perm, PermGroup, extend
from .tables import Column, Table, check
from .words import Word, format_word


class SuccessorError(ValueError):
    pass


def higman_k(m: int, n: int) -> int:
    if m < 2 or n < m or (n - m) % (m - 1):
        raise SuccessorError(f"m={m}, n={n} violate n = k(m-1) + m")
    return (n - m) // (m - 1)


@dataclass(frozen=True)
class SuccessorAssignment:
    m: int
    n: int
    code: tuple      # words in the order successors were assigned
    succ: dict       # word -> tuple of k successor words

    @property
    def k(self) -> int:
        return higman_k(self.m, self.n)

    def __getitem__(self, w: Word) -> tuple:
        return self.succ[tuple(w)]

    def all_successors(self) -> list:
        return [s for w in self.code for s in self.succ[w]]

    def format(self) -> str:
        lines = []
        for w in self.code:
            succ = "  ".join(format_word(s, self.n) for s in self.succ[w])
            lines.append(f"{format_word(w, self.n)}\t{succ}")
        return "\n".join(lines)


def _check_code(words: Sequence[Word], m: int) -> None:
    if not words:
        raise SuccessorError("empty code")
    if len(set(words)) != len(words):
        raise SuccessorError("repeated words in the code")
    for w in words:
        if not w or w[0] != m - 1:
            raise SuccessorError(f"{format_word(w) or 'ε'} does not start with the letter {m - 1}")
        if any(a >= m for a in w):
            raise SuccessorError(f"{format_word(w)} uses letters outside 0..{m - 1}")
    if not is_complete([w[1:] for w in words], m):
        raise SuccessorError("code is not a complete prefix code below the letter m-1")


def successors_inductive(ordered_code: Sequence[Word], m: int, n: int) -> SuccessorAssignment:
    """Assign successors word by word in the given order, each time taking the
    dictionary-least unused candidate that is larger than the word."""
    k = higman_k(m, n)
    code = tuple(tuple(w) for w in ordered_code)
    _check_code(code, m)
    candidates = sorted(x + (a,) for x in spref(code) for a in range(m, n))
    taken = set()
    succ = {}
    for w in code:
        mine = []
        for i in range(k):
            pick = next((c for c in candidates if c > w and c not in taken), None)
            if pick is None:
                raise SuccessorError(
                    f"no candidate left for successor {i + 1} of {format_word(w)}; "
                    "the assignment order does not admit successors")
            taken.add(pick)
            mine.append(pick)
        succ[w] = tuple(mine)
    return SuccessorAssignment(m, n, code, succ)


def reverse_dict_order(words) -> list:
    return sorted((tuple(w) for w in words), reverse=True)


def successors_formula(w: Word, m: int, n: int, i: int) -> Word:
    """Closed form of the i-th successor (1-based) for reverse dictionary order.

    Writing ``w = u j 0^t`` with ``j`` the last nonzero letter, the successor is
    ``u`` followed by the letter ``m - 1 + (m - 1 - j) k + i``.
    """
    k = higman_k(m, n)
    if not 1 <= i <= k:
        raise SuccessorError(f"successor index {i} outside 1..{k}")
    w = tuple(w)
    end = len(w)
    while end and w[end - 1] == 0:
        end -= 1
    if end == 0:
        raise SuccessorError(f"{format_word(w) or 'ε'} has no nonzero letter")
    j = w[end - 1]
    return w[: end - 1] + (m - 1 + (m - 1 - j) * k + i,)


def expand_in_order(ordered_code: Sequence[Word], index: int, m: int) -> list:
    """Replace the word at ``index`` by its children, largest child first."""
    code = [tuple(w) for w in ordered_code]
    w = code[index]
    return code[:index] + [w + (a,) for a in reversed(range(m))] + code[index + 1:]


def verify_expansion_lemma(ordered_code: Sequence[Word], m: int, n: int, index: int) -> bool:
    """Check the successor pattern of an expanded word against a recomputation.

    After expanding ``p`` (at ``index``), child ``p (m-1-r)`` must receive
    ``p (m + r k)``, ..., ``p (m + r k + k - 1)`` for r = 0..m-2, and child
    ``p 0`` must inherit the successors ``p`` had before the expansion.
    """
    k = higman_k(m, n)
    before = successors_inductive(ordered_code, m, n)
    p = tuple(ordered_code[index])
    after = successors_inductive(expand_in_order(ordered_code, index, m), m, n)
    for r in range(m - 1):
        child = p + (m - 1 - r,)
        expected = tuple(p + (m + r * k + j,) for j in range(k))
        if after[child] != expected:
            return False
    return after[p + (0,)] == before[p]


@dataclass(frozen=True)
class AlgContext:
    m: int
    n: int
    group: PermGroup

    def __post_init__(self):
        higman_k(self.m, self.n)
        if self.k < 1:
            raise SuccessorError("need k >= 1, i.e. m < n")
        if self.group.degree != self.m:
            raise SuccessorError(f"group degree {self.group.degree} differs from m={self.m}")

    @property
    def k(self) -> int:
        return higman_k(self.m, self.n)

    @property
    def ext_group(self) -> PermGroup:
        return self.group.extend(self.n)


RANGE_ORDERS = ("domain", "reverse-dict")


def embed_alg(ctx: AlgContext, g: Table, ext_group: PermGroup | None = None,
              range_order: str = "domain") -> Table:
    """Image of ``g`` in V_n(G_ext).

    Columns, in order: the letters 0..m-2 fixed; ``g`` moved under the letter
    m-1; the successor columns level by level; the letters m+k..n-1 fixed.
    Domain successors use reverse dictionary order of the domain.  With
    ``range_order="domain"`` the range words are processed in the order of
    their domain partners; with ``"reverse-dict"`` the range gets its own
    reverse dictionary order.  Only the second is independent of the table
    chosen for ``g``, and only when G is trivial (see README).
    """
    if range_order not in RANGE_ORDERS:
        raise ValueError(f"range_order must be one of {RANGE_ORDERS}")
    m, n, k = ctx.m, ctx.n, ctx.k
    if g.n != m or g.group != ctx.group:
        raise SuccessorError("table is not an element of V_m(G) for this context")
    check(g)
    hext = ext_group if ext_group is not None else ctx.ext_group
    top = m - 1
    ordered = sorted(g.columns, key=lambda c: c.p, reverse=True)
    dom = successors_inductive([(top,) + c.p for c in ordered], m, n)
    range_words = [(top,) + c.q for c in ordered]
    if range_order == "reverse-dict":
        range_words = reverse_dict_order(range_words)
    ran = successors_inductive(range_words, m, n)
    ident = Perm.identity(n)
    cols = [Column((a,), ident, (a,), ident) for a in range(m - 1)]
    ext = [(extend(c.sigma, n), extend(c.tau, n)) for c in ordered]
    for c, (s, t) in zip(ordered, ext):
        cols.append(Column((top,) + c.p, s, (top,) + c.q, t))
    for j in range(k):
        for c, (s, t) in zip(ordered, ext):
            cols.append(Column(dom[(top,) + c.p][j], s, ran[(top,) + c.q][j], t))
    cols.extend(Column((a,), ident, (a,), ident) for a in range(m + k, n))
    return Table(n, hext, tuple(cols))
