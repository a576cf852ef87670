"""Double triangle descendants of K5: enumeration, zigzag structure, chain
vectors, generating functions and the c2 invariant."""

from .canonical import CanonicalForm, canonical_form, canonical_graph, canonical_labeling
from .chain_rewrite import ChainVector, dte_children, dtr_closure, dtr_parents, normalize, parse
from .dt_ops import DoubleTriangle, DteSite, ancestor, completion, decompletions, dte, dtr, find_double_triangles, product
from .enumerate import DescendantDatabase, DescendantRecord, count_table, descendants_up_to
from .graph import Graph, circulant, complete_graph, make_graph, one_zigzag
from .graph6 import from_graph6, to_graph6
from .zigzag import DteType, chain_vector, classify_dte_site, is_one_zigzag, zigzag_decomposition

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "ChainVector",
    "DescendantDatabase",
    "DescendantRecord",
    "DoubleTriangle",
    "DteSite",
    "DteType",
    "Graph",
    "ancestor",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "chain_vector",
    "circulant",
    "classify_dte_site",
    "complete_graph",
    "completion",
    "count_table",
    "decompletions",
    "descendants_up_to",
    "dte",
    "dte_children",
    "dtr",
    "dtr_closure",
    "dtr_parents",
    "find_double_triangles",
    "from_graph6",
    "is_one_zigzag",
    "make_graph",
    "normalize",
    "one_zigzag",
    "parse",
    "product",
    "to_graph6",
    "zigzag_decomposition",
]
