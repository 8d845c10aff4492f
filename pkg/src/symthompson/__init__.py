"""Symmetric Thompson groups V_n(H): tables, moves, and embeddings between them."""

from .words import EvWord, concat, dict_compare, ev_equal, perm_act, prefix_compare, PrefixRelation
from .perms import (Perm, PermGroup, closure, compose_perm, cycle_type, extend,
                    find_cyclic_isomorphism)
from .codes import (PrefixCode, Triple, common_refinement, expand, find_solution, is_complete,
                    is_invariant, spref)
from .tables import (Column, Table, canonical, compose, equals, evaluate, expand_column,
                     identity_table, inverse, is_identity, make_table, push_down, push_up,
                     random_element, reduce_once, validate)
from .roots import RootGroup, root_group
from .topo import TopoContext, build_context, embed_topo, translate_point
from .successors import (AlgContext, SuccessorAssignment, embed_alg, successors_formula,
                         successors_inductive, verify_expansion_lemma)

__all__ = [
    "EvWord", "concat", "dict_compare", "ev_equal", "perm_act", "prefix_compare", "PrefixRelation",
    "Perm", "PermGroup", "closure", "compose_perm", "cycle_type", "extend", "find_cyclic_isomorphism",
    "PrefixCode", "Triple", "common_refinement", "expand", "find_solution", "is_complete",
    "is_invariant", "spref",
    "Column", "Table", "canonical", "compose", "equals", "evaluate", "expand_column",
    "identity_table", "inverse", "is_identity", "make_table", "push_down", "push_up",
    "random_element", "reduce_once", "validate",
    "RootGroup", "root_group",
    "TopoContext", "build_context", "embed_topo", "translate_point",
    "AlgContext", "SuccessorAssignment", "embed_alg", "successors_formula", "successors_inductive",
    "verify_expansion_lemma",
]

__version__ = "0.1.0"
