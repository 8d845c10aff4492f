"""Permutations of {0, ..., n-1} and small permutation groups.

Products follow the left-action convention: ``tau * sigma`` applies ``sigma``
first, so ``(tau * sigma)(i) == tau(sigma(i))``.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from typing import Iterable, Sequence

DEFAULT_CAP = 10**6


class PermError(ValueError):
    pass


class DegreeMismatch(PermError):
    pass


class CapExceeded(PermError):
    pass


class Perm:
    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise PermError(f"{list(image)} is not a permutation of 0..{len(image) - 1}")
        self.image = image

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        image = list(range(n))
        seen = set()
        for cyc in cycles:
            for i, a in enumerate(cyc):
                if not 0 <= a < n or a in seen:
                    raise PermError(f"bad cycle {tuple(cyc)} for degree {n}")
                seen.add(a)
                image[a] = cyc[(i + 1) % len(cyc)]
        return cls(image)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        img = self.image
        return Perm(tuple(img[j] for j in other.image))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.image):
            inv[j] = i
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def cycles(self, include_fixed: bool = False) -> list:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.image[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.image[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.image == other.image

    def __lt__(self, other):
        return self.image < other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Perm({list(self.image)})"

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose_perm(sigma: Perm, tau: Perm) -> Perm:
    """``sigma * tau``: apply ``tau`` first, then ``sigma``."""
    return sigma * tau


def cycle_type(sigma: Perm) -> tuple:
    """Cycle lengths (fixed points included) in non-increasing order."""
    return tuple(sorted((len(c) for c in sigma.cycles(include_fixed=True)), reverse=True))


def extend(sigma: Perm, n: int) -> Perm:
    if n < sigma.degree:
        raise PermError(f"cannot extend degree {sigma.degree} to smaller degree {n}")
    return Perm(sigma.image + tuple(range(sigma.degree, n)))


class PermGroup:
    """A finite permutation group, stored with its full element list."""

    def __init__(self, degree: int, generators: Iterable[Perm] = (), cap: int = DEFAULT_CAP):
        gens = []
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator {g!r} has degree {g.degree}, expected {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.elements = _close(degree, self.generators, cap)
        self._element_set = frozenset(self.elements)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree)

    @classmethod
    def symmetric(cls, degree: int) -> "PermGroup":
        gens = []
        if degree >= 2:
            gens.append(Perm.from_cycles(degree, [(0, 1)]))
        if degree >= 3:
            gens.append(Perm.from_cycles(degree, [tuple(range(degree))]))
        return cls(degree, gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def __contains__(self, sigma: Perm) -> bool:
        return sigma in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self._element_set == other._element_set)

    def __hash__(self):
        return hash((self.degree, self._element_set))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup({self.degree}, <{gens}>, order={self.order})"

    def conjugate(self, c: Perm) -> "PermGroup":
        """The group ``c G c^-1``."""
        cinv = c.inverse()
        return PermGroup(self.degree, [c * g * cinv for g in self.generators])

    def extend(self, n: int) -> "PermGroup":
        return PermGroup(n, [extend(g, n) for g in self.generators])


def _close(degree: int, gens: Sequence[Perm], cap: int) -> tuple:
    ident = Perm.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                queue.append(y)
    return tuple(sorted(seen))


def closure(generators: Iterable[Perm], degree: int | None = None, cap: int = DEFAULT_CAP) -> PermGroup:
    generators = list(generators)
    if degree is None:
        if not generators:
            raise PermError("degree is required when there are no generators")
        degree = generators[0].degree
    return PermGroup(degree, generators, cap=cap)


def _solve_conjugator(gens: Sequence[Perm], targets: Sequence[Perm], n: int):
    # find c with c * g == h * c for every (g, h); each orbit of <gens> is
    # fixed by the image of one point, so branch only on orbit representatives
    def search(c):
        free = [x for x in range(n) if c[x] is None]
        if not free:
            return c
        x = free[0]
        used = {y for y in c if y is not None}
        for y in range(n):
            if y in used:
                continue
            trial = propagate(list(c), x, y)
            if trial is not None:
                found = search(trial)
                if found is not None:
                    return found
        return None

    def propagate(c, x, y):
        c[x] = y
        used = {v for v in c if v is not None}
        todo = [x]
        while todo:
            a = todo.pop()
            ca = c[a]
            for g, h in zip(gens, targets):
                for img, dst in ((g(a), h(ca)), (g.inverse()(a), h.inverse()(ca))):
                    cur = c[img]
                    if cur is None:
                        if dst in used:
                            return None
                        c[img] = dst
                        used.add(dst)
                        todo.append(img)
                    elif cur != dst:
                        return None
        return c

    return search([None] * n)


def find_cyclic_isomorphism(h1: PermGroup, h2: PermGroup):
    """Return ``c`` with ``c h1 c^-1 == h2``, or None when the groups are not conjugate.

    Every conjugation preserves cycle types, so a returned ``c`` induces an
    isomorphism preserving the cycle type of every element.
    """
    if h1.degree != h2.degree:
        raise DegreeMismatch(f"degrees {h1.degree} and {h2.degree} differ")
    n = h1.degree
    if h1.order != h2.order:
        return None
    if Counter(cycle_type(g) for g in h1) != Counter(cycle_type(g) for g in h2):
        return None
    gens = h1.generators
    if not gens:
        return Perm.identity(n)
    candidates = [[h for h in h2 if cycle_type(h) == cycle_type(g)] for g in gens]

    def choose(j, chosen):
        if j == len(gens):
            c = _solve_conjugator(gens, chosen, n)
            if c is None:
                return None
            c = Perm(c)
            # c h1 c^-1 lies in h2 and has the same order, hence equals it
            return c
        for h in candidates[j]:
            found = choose(j + 1, chosen + [h])
            if found is not None:
                return found
        return None

    return choose(0, [])


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse ``[1,0,2]`` (one-line image) or ``(0 1)(2)`` (cycles; needs degree)."""
    text = text.strip()
    if text.startswith("["):
        p = Perm(int(a) for a in text[1:-1].split(",") if a.strip())
        if degree is not None and p.degree != degree:
            raise DegreeMismatch(f"{text} has degree {p.degree}, expected {degree}")
        return p
    if text.startswith("(") or text in ("", "id", "Id"):
        cycles = []
        for body in _CYCLE_RE.findall(text):
            parts = body.replace(",", " ").split()
            cycles.append(tuple(int(a) for a in parts))
        if degree is None:
            degree = max((max(c) for c in cycles if c), default=-1) + 1
        return Perm.from_cycles(degree, [c for c in cycles if c])
    raise PermError(f"cannot parse permutation {text!r}")


def format_perm(sigma: Perm) -> str:
    return "[" + ",".join(str(i) for i in sigma.image) + "]"
