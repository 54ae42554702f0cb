"""String-link tree invariants, closed-link residues, and relation checks.

For a string link the pairing of the full tree polynomial against the Gauss
diagram is an integer link-homotopy invariant.  For a based closed link the
raw pairing depends on the basepoints, but its class modulo the gcd of all
lower-order values does not; that gcd is the indeterminacy computed here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .diagram import CLOSED, STRING, GaussDiagram, permute, reflect
from .pairing import pair_poly
from .tree import tree_polynomial


@dataclass(frozen=True)
class Residue:
    """An integer modulo a nonnegative modulus; modulus 0 means no reduction."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus > 0 and not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} not reduced mod {self.modulus}")

    @staticmethod
    def reduce(raw: int, modulus: int) -> Residue:
        if modulus < 0:
            raise ValueError("modulus must be nonnegative")
        return Residue(raw % modulus if modulus else raw, modulus)


def _check_index_set(g: GaussDiagram, leaves, trunk) -> tuple[int, ...]:
    leaves = tuple(sorted(set(leaves)))
    if len(leaves) < 2:
        raise ValueError("index set needs at least two components")
    missing = set(leaves) - set(g.components)
    if missing:
        raise ValueError(f"components {sorted(missing)} not in diagram")
    if trunk not in leaves:
        raise ValueError(f"trunk {trunk} not in index set {leaves}")
    return leaves


def z_string(g: GaussDiagram, leaves, trunk: int) -> int:
    """Tree invariant of a string link: the pairing of the full signed tree
    polynomial on (leaves, trunk) against the diagram."""
    if g.kind != STRING:
        raise ValueError("z_string needs a string-link diagram")
    leaves = _check_index_set(g, leaves, trunk)
    return pair_poly(tree_polynomial(leaves, trunk), g)


def _subset_values(g: GaussDiagram, leaves: tuple[int, ...], reduced: bool) -> list[int]:
    values = []
    for size in range(2, len(leaves)):
        for sub in itertools.combinations(leaves, size):
            trunks = (sub[0], sub[-1]) if reduced else sub
            for k in trunks:
                values.append(pair_poly(tree_polynomial(sub, k), g))
    return values


def delta_z(g: GaussDiagram, leaves, trunk: int, *, reduced: bool = False) -> int:
    """Indeterminacy: gcd of the pairings over all proper subsets with at
    least two components and every trunk choice.

    Singleton subsets carry the zero polynomial and never contribute; the gcd
    of an empty or all-zero family is 0.  With ``reduced=True`` only the
    minimal and maximal trunk of each subset is used, which gives the same
    gcd because middle-trunk values factor through smaller subsets.
    """
    if g.kind != CLOSED:
        raise ValueError("delta_z needs a closed-link diagram")
    leaves = _check_index_set(g, leaves, trunk)
    return math.gcd(*(_subset_values(g, leaves, reduced) or (0,)))


def z_bar(g: GaussDiagram, leaves, trunk: int) -> Residue:
    """Residue tree invariant of a based closed link."""
    if g.kind != CLOSED:
        raise ValueError("z_bar needs a closed-link diagram")
    leaves = _check_index_set(g, leaves, trunk)
    raw = pair_poly(tree_polynomial(leaves, trunk), g)
    return Residue.reduce(raw, delta_z(g, leaves, trunk))


def check_s1(g: GaussDiagram, leaves, k: int) -> bool:
    """Splitting at a middle trunk: the invariant with trunk at position k
    equals the product of the invariants on the lower and upper halves."""
    leaves = _check_index_set(g, leaves, min(leaves))
    r = len(leaves)
    if not 1 < k < r:
        raise ValueError(f"k must satisfy 1 < k < {r}")
    trunk = leaves[k - 1]
    lower, upper = leaves[:k], leaves[k - 1 :]
    whole = z_string(g, leaves, trunk)
    return whole == z_string(g, lower, trunk) * z_string(g, upper, trunk)


def check_s2(g: GaussDiagram, leaves, trunk: int) -> bool:
    """Reversal of the component numbering.

    Renumbering components by i -> n+1-i mirrors every tree diagram, flipping
    the direction of each of the r-1 arrows, so the invariant picks up the
    factor (-1)**(r-1) against the invariant with reflected indices.
    """
    leaves = _check_index_set(g, leaves, trunk)
    if not g.is_standard():
        raise ValueError("check_s2 needs a standard 1..n diagram")
    n = g.n
    r = len(leaves)
    mirrored = tuple(sorted(n + 1 - i for i in leaves))
    factor = -1 if (r - 1) % 2 else 1
    return z_string(reflect(g), leaves, trunk) == factor * z_string(
        g, mirrored, n + 1 - trunk
    )


def check_s3(g: GaussDiagram, leaves) -> bool:
    """Trunk rotation: moving the trunk from the maximal to the minimal leaf
    by cyclically renumbering the strands inside the index set.

    With sigma cycling i_1 -> i_2 -> ... -> i_r -> i_1, the invariant of the
    renumbered link with trunk i_r equals (-1)**(r-1) times the invariant of
    the original with trunk i_1.  (For honest string links; the identity is
    not diagram-combinatorial.)
    """
    leaves = _check_index_set(g, leaves, min(leaves))
    if not g.is_standard():
        raise ValueError("check_s3 needs a standard 1..n diagram")
    r = len(leaves)
    sigma = {i: i for i in g.components}
    for a, b in zip(leaves, leaves[1:] + leaves[:1]):
        sigma[a] = b
    factor = -1 if (r - 1) % 2 else 1
    return z_string(permute(g, sigma), leaves, leaves[-1]) == factor * z_string(
        g, leaves, leaves[0]
    )
