"""Complete prefix codes over {0, ..., n-1}.

A complete prefix code is the leaf set of a finite rooted n-ary tree in which
every internal node has all n children.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .perms import DegreeMismatch, PermGroup
from .words import Word, check_word, format_word, perm_act


class CodeError(ValueError):
    pass


def strict_prefixes(words: Iterable[Word]) -> set:
    out = set()
    for w in words:
        for i in range(len(w)):
            out.add(tuple(w[:i]))
    return out


def is_complete(words: Iterable[Word], n: int) -> bool:
    """True iff ``words`` is a complete antichain for the prefix order."""
    words = [tuple(w) for w in words]
    leaves = set(words)
    if not leaves or len(leaves) != len(words):
        return False
    for w in words:
        check_word(w, n)
    internal = strict_prefixes(leaves)
    if leaves & internal:
        return False
    for x in internal:
        for a in range(n):
            child = x + (a,)
            if child not in leaves and child not in internal:
                return False
    return True


@dataclass(frozen=True)
class PrefixCode:
    """Complete prefix code; ``words`` are kept in dictionary order."""

    n: int
    words: tuple

    def __post_init__(self):
        words = tuple(sorted(tuple(w) for w in self.words))
        object.__setattr__(self, "words", words)
        if not is_complete(words, self.n):
            shown = ", ".join(format_word(w) or "ε" for w in words)
            raise CodeError(f"{{{shown}}} is not a complete prefix code over {self.n} letters")

    @classmethod
    def trivial(cls, n: int) -> "PrefixCode":
        return cls(n, ((),))

    @classmethod
    def letters(cls, n: int) -> "PrefixCode":
        return cls(n, tuple((a,) for a in range(n)))

    @classmethod
    def uniform(cls, n: int, depth: int) -> "PrefixCode":
        words = [()]
        for _ in range(depth):
            words = [w + (a,) for w in words for a in range(n)]
        return cls(n, tuple(words))

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return tuple(w) in self.words

    def index(self, w: Word) -> int:
        return self.words.index(tuple(w))

    def depth(self) -> int:
        return max(len(w) for w in self.words)

    def leaf_above(self, w: Word):
        """The code word that is a prefix of ``w``, or None."""
        for i in range(len(w) + 1):
            if tuple(w[:i]) in self.words:
                return tuple(w[:i])
        return None

    def __str__(self):
        return "{" + ", ".join(format_word(w, self.n) or "ε" for w in self.words) + "}"


def expand(code: PrefixCode, w: Word) -> PrefixCode:
    w = tuple(w)
    if w not in code:
        raise CodeError(f"{format_word(w) or 'ε'} is not in the code")
    rest = [x for x in code.words if x != w]
    return PrefixCode(code.n, tuple(rest) + tuple(w + (a,) for a in range(code.n)))


def spref(code: Iterable[Word]) -> set:
    return strict_prefixes(code)


def common_refinement(p: PrefixCode, q: PrefixCode) -> PrefixCode:
    """Leaves of the union of the two trees."""
    if p.n != q.n:
        raise CodeError(f"alphabet sizes {p.n} and {q.n} differ")
    internal = spref(p) | spref(q)
    if not internal:
        return PrefixCode.trivial(p.n)
    leaves = [x + (a,) for x in internal for a in range(p.n) if x + (a,) not in internal]
    return PrefixCode(p.n, tuple(leaves))


def is_invariant(code, group: PermGroup) -> bool:
    """True iff every generator maps the word set onto itself.

    ``code`` may be a :class:`PrefixCode` or any iterable of words.
    """
    if isinstance(code, PrefixCode):
        if group.degree != code.n:
            raise DegreeMismatch(f"group degree {group.degree} differs from alphabet size {code.n}")
        words = set(code.words)
    else:
        words = {tuple(w) for w in code}
        for w in words:
            check_word(w, group.degree)
    return all({perm_act(g, w) for w in words} == words for g in group.generators)


@dataclass(frozen=True)
class Triple:
    m: int
    n: int
    group: PermGroup

    def __post_init__(self):
        if not 2 <= self.m <= self.n:
            raise CodeError(f"need 2 <= m <= n, got m={self.m}, n={self.n}")
        if (self.n - 1) % (self.m - 1):
            raise CodeError(f"n={self.n} is not 1 mod (m-1)={self.m - 1}")
        if self.group.degree != self.m:
            raise DegreeMismatch(f"group degree {self.group.degree} differs from m={self.m}")


def _orbit(group: PermGroup, w: Word) -> tuple:
    return tuple(sorted({perm_act(g, w) for g in group}))


def find_solution(triple: Triple, max_depth: int):
    """Breadth-first search for a G-invariant complete code of size n.

    Only invariant codes are visited: each step expands a whole G-orbit of
    leaves.  Returns None when no solution has all words of length <= max_depth.
    """
    m, n, group = triple.m, triple.n, triple.group
    start = frozenset([()])
    seen = {start}
    queue = deque([start])
    while queue:
        words = queue.popleft()
        if len(words) == n:
            return PrefixCode(m, tuple(words))
        orbits = sorted({_orbit(group, w) for w in words})
        for orb in orbits:
            if len(orb[0]) >= max_depth:
                continue
            grown = len(words) + len(orb) * (m - 1)
            if grown > n:
                continue
            new = frozenset((words - set(orb)) | {w + (a,) for w in orb for a in range(m)})
            if new not in seen:
                seen.add(new)
                queue.append(new)
    return None


def find_solution_bruteforce(triple: Triple, max_depth: int):
    """Leaf-by-leaf search over all codes of size <= n, filtered by invariance.

    Much slower than :func:`find_solution`; kept as an independent check.
    """
    m, n, group = triple.m, triple.n, triple.group
    start = frozenset([()])
    seen = {start}
    queue = deque([start])
    found = []
    while queue:
        words = queue.popleft()
        if len(words) == n:
            code = PrefixCode(m, tuple(words))
            if is_invariant(code, group):
                found.append(code)
            continue
        for w in sorted(words):
            if len(w) >= max_depth:
                continue
            new = frozenset((words - {w}) | {w + (a,) for a in range(m)})
            if new not in seen:
                seen.add(new)
                queue.append(new)
    return found
