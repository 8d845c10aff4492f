"""Elements of V_n(H) as tables, the four moves, and the group operations.

A column ``(p, sigma, q, tau)`` sends ``p sigma(u)`` to ``q tau(u)`` for every
infinite word ``u``.  ``compose(v, u)`` applies ``u`` first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .codes import PrefixCode, is_complete, strict_prefixes
from .perms import Perm, PermGroup
from .words import EvWord, Word, concat, format_word, perm_act


class TableError(ValueError):
    pass


class InvalidTable(TableError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class Column:
    p: Word
    sigma: Perm
    q: Word
    tau: Perm

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))


@dataclass(frozen=True)
class Table:
    n: int
    group: PermGroup
    columns: tuple

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    @property
    def domain(self) -> tuple:
        return tuple(c.p for c in self.columns)

    @property
    def range(self) -> tuple:
        return tuple(c.q for c in self.columns)

    def key(self) -> tuple:
        """Order-insensitive structural key; equal keys mean identical tables up to column order."""
        return (self.n, tuple(sorted((c.p, c.sigma.image, c.q, c.tau.image) for c in self.columns)))

    def same_columns(self, other: "Table") -> bool:
        return self.key() == other.key()

    def __str__(self):
        rows = [[], [], [], []]
        for c in self.columns:
            rows[0].append(format_word(c.p, self.n) or "ε")
            rows[1].append(str(c.sigma))
            rows[2].append(format_word(c.q, self.n) or "ε")
            rows[3].append(str(c.tau))
        widths = [max(len(r[i]) for r in rows) for i in range(len(self.columns))]
        return "\n".join("  ".join(s.ljust(w) for s, w in zip(r, widths)) for r in rows)


def identity_table(n: int, group: PermGroup | None = None) -> Table:
    group = group if group is not None else PermGroup.trivial(n)
    ident = Perm.identity(n)
    return Table(n, group, (Column((), ident, (), ident),))


def make_table(n: int, group: PermGroup, columns: Iterable[Sequence]) -> Table:
    """Build and validate a table from ``(p, sigma, q, tau)`` tuples."""
    cols = tuple(c if isinstance(c, Column) else Column(*c) for c in columns)
    t = Table(n, group, cols)
    check(t)
    return t


def validate(t: Table) -> list:
    """List of problems with ``t``; empty when the table is valid."""
    problems = []
    if not t.columns:
        return ["table has no columns"]
    if t.group.degree != t.n:
        problems.append(f"group degree {t.group.degree} differs from n={t.n}")
    for which, words in (("domain", t.domain), ("range", t.range)):
        try:
            ok = is_complete(words, t.n)
        except ValueError as exc:
            problems.append(f"{which} row: {exc}")
            continue
        if not ok:
            problems.append(f"{which} row is not a complete prefix code")
    for i, c in enumerate(t.columns):
        for name, s in (("sigma", c.sigma), ("tau", c.tau)):
            if s.degree != t.n:
                problems.append(f"column {i}: {name} has degree {s.degree}, expected {t.n}")
            elif s not in t.group:
                problems.append(f"column {i}: {name} {s} is outside H")
    return problems


def check(t: Table) -> Table:
    problems = validate(t)
    if problems:
        raise InvalidTable(problems)
    return t


def evaluate(t: Table, z: EvWord) -> EvWord:
    for c in t.columns:
        if z.startswith(c.p):
            rest = z.drop(len(c.p))
            return concat(c.q, perm_act(c.tau * c.sigma.inverse(), rest))
    raise TableError(f"no domain word of the table is a prefix of {z}")


def expand_column(t: Table, i: int) -> Table:
    if not 0 <= i < len(t.columns):
        raise IndexError(f"column index {i} out of range for a table of length {len(t.columns)}")
    c = t.columns[i]
    kids = tuple(Column(c.p + (c.sigma(j),), c.sigma, c.q + (c.tau(j),), c.tau) for j in range(t.n))
    return Table(t.n, t.group, t.columns[:i] + kids + t.columns[i + 1:])


def block_expand(t: Table, i: int, code: Sequence[Word]) -> Table:
    """Expand column ``i`` along a complete code, i.e. several expansions at once.

    Needs ``code`` to be invariant under the column's permutations.
    """
    c = t.columns[i]
    kids = tuple(Column(c.p + perm_act(c.sigma, s), c.sigma, c.q + perm_act(c.tau, s), c.tau)
                 for s in code)
    return Table(t.n, t.group, t.columns[:i] + kids + t.columns[i + 1:])


def _reducible_groups(columns):
    groups = {}
    for idx, c in enumerate(columns):
        if c.p and c.q:
            groups.setdefault((c.p[:-1], c.sigma, c.q[:-1], c.tau), []).append(idx)
    return groups


def reduce_once(t: Table) -> Table:
    """Merge one set of n sibling columns that forms an expansion; else return ``t``."""
    n = t.n
    for (p0, sigma, q0, tau), idxs in sorted(_reducible_groups(t.columns).items(),
                                            key=lambda kv: min(kv[1])):
        if len(idxs) != n:
            continue
        # child p0 sigma(j) must pair with q0 tau(j)
        if all(tau(sigma.inverse()(t.columns[i].p[-1])) == t.columns[i].q[-1] for i in idxs):
            merged = Column(p0, sigma, q0, tau)
            first = min(idxs)
            keep = [c for i, c in enumerate(t.columns) if i not in idxs]
            keep.insert(first, merged)
            return Table(n, t.group, tuple(keep))
    return t


def reduce_full(t: Table) -> Table:
    while True:
        r = reduce_once(t)
        if r is t:
            return t
        t = r


def push_down(t: Table) -> Table:
    ident = Perm.identity(t.n)
    return Table(t.n, t.group, tuple(Column(c.p, ident, c.q, c.tau * c.sigma.inverse())
                                     for c in t.columns))


def push_up(t: Table) -> Table:
    ident = Perm.identity(t.n)
    return Table(t.n, t.group, tuple(Column(c.p, c.sigma * c.tau.inverse(), c.q, ident)
                                     for c in t.columns))


def inverse(t: Table) -> Table:
    return Table(t.n, t.group, tuple(Column(c.q, c.tau, c.p, c.sigma) for c in t.columns))


def _refine_range(t: Table, target: set) -> Table:
    # expand until no range word is a strict prefix of a word in target
    cols = list(t.columns)
    internal = strict_prefixes(target)
    out = []
    while cols:
        c = cols.pop()
        if c.q in internal:
            cols.extend(Column(c.p + (c.sigma(j),), c.sigma, c.q + (c.tau(j),), c.tau)
                        for j in range(t.n))
        else:
            out.append(c)
    return Table(t.n, t.group, tuple(out))


def _same_space(a: Table, b: Table):
    if a.n != b.n:
        raise TableError(f"tables over {a.n} and {b.n} letters cannot be combined")
    if a.group != b.group:
        raise TableError("tables carry different groups H")


def compose(v: Table, u: Table) -> Table:
    """``v o u``: first ``u``, then ``v``."""
    _same_space(v, u)
    target = set(u.range) | set(v.domain)
    u2 = push_up(_refine_range(u, target))
    v2 = push_down(inverse(_refine_range(inverse(v), target)))
    by_domain = {c.p: c for c in v2.columns}
    cols = []
    for c in u2.columns:
        d = by_domain[c.q]
        cols.append(Column(c.p, c.sigma, d.q, d.tau))
    return Table(u.n, u.group, tuple(cols))


def canonical(t: Table) -> Table:
    r = reduce_full(push_down(t))
    return Table(r.n, r.group, tuple(sorted(r.columns, key=lambda c: c.p)))


def is_identity(t: Table) -> bool:
    return all(c.p == c.q and c.tau == c.sigma for c in t.columns)


def equals(g: Table, h: Table) -> bool:
    _same_space(g, h)
    return is_identity(compose(g, inverse(h)))


def random_code(n: int, expansions: int, rng: random.Random) -> list:
    words = [()]
    for _ in range(expansions):
        w = words.pop(rng.randrange(len(words)))
        words.extend(w + (a,) for a in range(n))
    return words


def random_element(n: int, group: PermGroup, depth: int, seed=None, rng: random.Random | None = None) -> Table:
    """Random table built from ``d <= depth`` random expansions on each side.

    Deterministic in ``seed``; pass ``rng`` instead to draw several elements from
    one stream.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    rng = rng if rng is not None else random.Random(seed)
    d = rng.randint(0, depth)
    p = random_code(n, d, rng)
    q = random_code(n, d, rng)
    rng.shuffle(q)
    elements = group.elements
    cols = tuple(Column(a, rng.choice(elements), b, rng.choice(elements)) for a, b in zip(p, q))
    return Table(n, group, cols)


def random_point(n: int, rng: random.Random, max_head: int = 6, max_period: int = 4) -> EvWord:
    head = tuple(rng.randrange(n) for _ in range(rng.randint(0, max_head)))
    period = tuple(rng.randrange(n) for _ in range(rng.randint(1, max_period)))
    return EvWord(head, period)


def find_witness(g: Table, h: Table, rng: random.Random, tries: int = 200):
    """A point where ``g`` and ``h`` differ, found by random sampling, or None."""
    for _ in range(tries):
        z = random_point(g.n, rng)
        if evaluate(g, z) != evaluate(h, z):
            return z
    return None


def domain_code(t: Table) -> PrefixCode:
    return PrefixCode(t.n, t.domain)


def range_code(t: Table) -> PrefixCode:
    return PrefixCode(t.n, t.range)
