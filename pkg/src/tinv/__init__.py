"""Tree invariants of string links and closed links from Gauss diagrams."""

from .diagram import (
    CLOSED,
    HEAD,
    STRING,
    TAIL,
    Arrow,
    GaussCodeError,
    GaussDiagram,
    linking_sum,
    parse_gauss,
    permute,
    reflect,
    restrict,
    serialize,
)
from .invariants import Residue, check_s1, check_s2, check_s3, delta_z, z_bar, z_string
from .milnor import TruncatedSeries, delta_mu, longitude, mu, mu_bar, series_of_word
from .pairing import pair, pair_conditional, pair_poly
from .tree import (
    ArrowPolynomial,
    TreeDiagram,
    decompose,
    elementary,
    elementary_bar,
    empty,
    enumerate_all,
    generate,
    is_planar,
    recompose,
    sign_tree,
    stack,
    tree_polynomial,
)

__all__ = [
    "Arrow",
    "ArrowPolynomial",
    "CLOSED",
    "GaussCodeError",
    "GaussDiagram",
    "HEAD",
    "Residue",
    "STRING",
    "TAIL",
    "TreeDiagram",
    "TruncatedSeries",
    "check_s1",
    "check_s2",
    "check_s3",
    "decompose",
    "delta_mu",
    "delta_z",
    "elementary",
    "elementary_bar",
    "empty",
    "enumerate_all",
    "generate",
    "is_planar",
    "linking_sum",
    "longitude",
    "mu",
    "mu_bar",
    "pair",
    "pair_conditional",
    "pair_poly",
    "parse_gauss",
    "permute",
    "recompose",
    "reflect",
    "restrict",
    "serialize",
    "sign_tree",
    "stack",
    "tree_polynomial",
    "z_bar",
    "z_string",
]

__version__ = "0.1.0"
