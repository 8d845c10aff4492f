"""JSON and text forms for groups, codes, tables and embedding contexts.

Element format::

    {"n": 2, "H": [[1, 0]],
     "columns": [{"p": "0", "sigma": [0, 1], "q": "1", "tau": [0, 1]}, ...]}

Words are digit strings (``""`` is the empty word) or ``"[11,2]"`` lists when a
letter exceeds 9.  Permutations are one-line image arrays; strings in cycle
notation such as ``"(0 1)"`` are accepted on input.
"""

from __future__ import annotations

import json

from .codes import PrefixCode
from .perms import Perm, PermGroup, parse_perm
from .tables import Column, Table, canonical
from .words import format_word, parse_word


def perm_from_json(obj, degree: int) -> Perm:
    if isinstance(obj, str):
        return parse_perm(obj, degree)
    p = Perm(obj)
    if p.degree != degree:
        raise ValueError(f"permutation {obj} has degree {p.degree}, expected {degree}")
    return p


def perm_to_json(p: Perm) -> list:
    return list(p.image)


def group_from_json(obj, degree: int) -> PermGroup:
    return PermGroup(degree, [perm_from_json(g, degree) for g in (obj or [])])


def group_to_json(group: PermGroup) -> list:
    return [perm_to_json(g) for g in group.generators]


def word_to_json(w, n: int | None = None) -> str:
    return format_word(w, n)


def code_from_json(obj, n: int) -> PrefixCode:
    if isinstance(obj, str):
        obj = json.loads(obj) if obj.strip().startswith("[") and '"' in obj else obj.split(",")
    return PrefixCode(n, tuple(parse_word(w, n) for w in obj))


def code_to_json(code: PrefixCode) -> list:
    return [format_word(w, code.n) for w in code.words]


def table_from_json(obj) -> Table:
    n = int(obj["n"])
    group = group_from_json(obj.get("H", []), n)
    cols = []
    for c in obj["columns"]:
        cols.append(Column(parse_word(c["p"], n), perm_from_json(c["sigma"], n),
                           parse_word(c["q"], n), perm_from_json(c["tau"], n)))
    return Table(n, group, tuple(cols))


def table_to_json(t: Table, sort: bool = True) -> dict:
    cols = sorted(t.columns, key=lambda c: c.p) if sort else t.columns
    return {
        "n": t.n,
        "H": group_to_json(t.group),
        "columns": [{"p": format_word(c.p, t.n), "sigma": perm_to_json(c.sigma),
                     "q": format_word(c.q, t.n), "tau": perm_to_json(c.tau)} for c in cols],
    }


def canonical_json(t: Table) -> dict:
    return table_to_json(canonical(t))


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def load_json_arg(text: str):
    """Parse inline JSON, or read it from a file path."""
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    with open(text) as fh:
        return json.load(fh)


def table_to_dot(t: Table, name: str = "element") -> str:
    """Graphviz digraph with the domain tree on the left, the range tree on the
    right, and a dashed edge from each domain leaf to its range leaf."""
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=TB;", "  node [shape=circle, fontsize=10];"]

    def tree(side, words):
        nodes = set()
        for w in words:
            for i in range(len(w) + 1):
                nodes.add(w[:i])
        lines.append(f"  subgraph cluster_{side} {{")
        lines.append(f'    label="{"domain" if side == "d" else "range"}";')
        for v in sorted(nodes):
            label = format_word(v, t.n) or "ε"
            shape = ", shape=box" if v in words else ""
            lines.append(f'    {side}_{_node_id(v)} [label="{label}"{shape}];')
        for v in sorted(nodes):
            if v:
                lines.append(f"    {side}_{_node_id(v[:-1])} -> {side}_{_node_id(v)};")
        lines.append("  }")

    tree("d", set(t.domain))
    tree("r", set(t.range))
    for i, c in enumerate(t.columns):
        perms = []
        if not c.sigma.is_identity():
            perms.append(f"σ={c.sigma}")
        if not c.tau.is_identity():
            perms.append(f"τ={c.tau}")
        label = f'{i}' + (" " + " ".join(perms) if perms else "")
        lines.append(f'  d_{_node_id(c.p)} -> r_{_node_id(c.q)} [style=dashed, constraint=false, label="{label}"];')
    lines.append("}")
    return "\n".join(lines)


def _node_id(w) -> str:
    return "n" + "_".join(str(a) for a in w) if w else "root"
