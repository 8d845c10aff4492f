"""Finite words and eventually-periodic infinite words over {0, ..., n-1}.

Finite words are plain tuples of ints; ``()`` is the empty word.  Python's
tuple ordering is exactly the dictionary order (a prefix sorts first, otherwise
the first differing letter decides), so ``sorted`` and ``<`` can be used on
words directly.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Sequence, Union

Word = tuple


class AlphabetError(ValueError):
    pass


class PrefixRelation(enum.Enum):
    U_PREFIX_OF_V = "u-prefix-of-v"
    V_PREFIX_OF_U = "v-prefix-of-u"
    INCOMPARABLE = "incomparable"


def word(letters: Sequence[int] = (), n: int | None = None) -> Word:
    w = tuple(int(a) for a in letters)
    if n is not None:
        check_word(w, n)
    return w


def check_word(w: Sequence[int], n: int) -> None:
    if n < 2:
        raise AlphabetError(f"alphabet size must be >= 2, got {n}")
    for a in w:
        if not 0 <= a < n:
            raise AlphabetError(f"letter {a} not in alphabet of size {n}")


def _primitive_root(w: Word) -> Word:
    size = len(w)
    for d in range(1, size + 1):
        if size % d == 0 and w[:d] * (size // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class EvWord:
    """The infinite word ``head period period period ...``.

    Stored canonically: the period is primitive and the head never ends with
    the period's last letter, so two instances are equal iff they spell the
    same infinite sequence.
    """

    head: Word
    period: Word

    def __post_init__(self):
        head = tuple(self.head)
        period = tuple(self.period)
        if not period:
            raise ValueError("period of an eventually periodic word must be nonempty")
        period = _primitive_root(period)
        while head and head[-1] == period[-1]:
            head = head[:-1]
            period = period[-1:] + period[:-1]
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "period", period)

    def letter(self, i: int) -> int:
        if i < len(self.head):
            return self.head[i]
        return self.period[(i - len(self.head)) % len(self.period)]

    def take(self, k: int) -> Word:
        return tuple(self.letter(i) for i in range(k))

    def drop(self, k: int) -> "EvWord":
        if k <= len(self.head):
            return EvWord(self.head[k:], self.period)
        shift = (k - len(self.head)) % len(self.period)
        return EvWord((), self.period[shift:] + self.period[:shift])

    def startswith(self, u: Sequence[int]) -> bool:
        return self.take(len(u)) == tuple(u)

    def letters(self) -> set:
        return set(self.head) | set(self.period)

    def __str__(self):
        return format_evword(self)


def concat(u: Word, v: Union[Word, EvWord]):
    if isinstance(v, EvWord):
        return EvWord(tuple(u) + v.head, v.period)
    return tuple(u) + tuple(v)


def prefix_compare(u: Word, v: Union[Word, EvWord]) -> PrefixRelation:
    """Relate two words in the prefix order; equal words count as u-prefix-of-v."""
    if isinstance(v, EvWord):
        if v.startswith(u):
            return PrefixRelation.U_PREFIX_OF_V
        return PrefixRelation.INCOMPARABLE
    if tuple(v[: len(u)]) == tuple(u):
        return PrefixRelation.U_PREFIX_OF_V
    if tuple(u[: len(v)]) == tuple(v):
        return PrefixRelation.V_PREFIX_OF_U
    return PrefixRelation.INCOMPARABLE


def is_prefix(u: Word, v: Union[Word, EvWord]) -> bool:
    return prefix_compare(u, v) is PrefixRelation.U_PREFIX_OF_V


def dict_compare(u: Word, v: Word) -> int:
    """-1, 0 or 1 according to the dictionary order."""
    u, v = tuple(u), tuple(v)
    return (u > v) - (u < v)


def perm_act(sigma, w: Union[Word, EvWord]):
    """Apply ``sigma`` to every letter of ``w``."""
    img = sigma.image
    if isinstance(w, EvWord):
        for a in w.letters():
            if a >= len(img):
                raise AlphabetError(f"letter {a} outside degree {len(img)}")
        return EvWord(tuple(img[a] for a in w.head), tuple(img[a] for a in w.period))
    try:
        return tuple(img[a] for a in w)
    except IndexError:
        raise AlphabetError(f"word {w} has letters outside degree {len(img)}") from None


def ev_equal(z: EvWord, x: EvWord) -> bool:
    return z == x


# text forms

def format_word(w: Sequence[int], n: int | None = None) -> str:
    if (n is not None and n > 10) or any(a > 9 for a in w):
        return "[" + ",".join(str(a) for a in w) + "]"
    return "".join(str(a) for a in w)


def parse_word(text: str, n: int | None = None) -> Word:
    text = text.strip()
    if text in ("", "e", "ε", "[]"):
        w: Word = ()
    elif text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"malformed word {text!r}")
        w = tuple(int(a) for a in text[1:-1].split(","))
    elif text.isdigit():
        w = tuple(int(a) for a in text)
    else:
        raise ValueError(f"malformed word {text!r}")
    if n is not None:
        check_word(w, n)
    return w


def format_evword(z: EvWord, n: int | None = None) -> str:
    return f"{format_word(z.head, n)}({format_word(z.period, n)})"


_EV_RE = re.compile(r"^(.*)\((.*)\)$")


def parse_evword(text: str, n: int | None = None) -> EvWord:
    match = _EV_RE.match(text.strip())
    if not match:
        raise ValueError(f"malformed eventually periodic word {text!r}, expected head(period)")
    head = parse_word(match.group(1), n)
    period = parse_word(match.group(2), n)
    return EvWord(head, period)
