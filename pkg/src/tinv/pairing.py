"""Sign-weighted counting of embeddings of tree diagrams into Gauss diagrams.

An embedding assigns to every arrow of a tree diagram an arrow of the Gauss
diagram with the same (head component, tail component) coordinates, injectively,
so that along each component the endpoint order of the tree maps to strictly
increasing positions from the basepoint.  The pairing sums the products of the
matched crossing signs over all embeddings.
"""

from __future__ import annotations

from collections.abc import Iterator

from .diagram import HEAD, TAIL, GaussDiagram
from .tree import ArrowPolynomial, TreeDiagram

FORCE = "force"
FORBID = "forbid"


def _check_components(a: TreeDiagram, g: GaussDiagram):
    missing = set(a.leaves) - set(g.components)
    if missing:
        raise ValueError(f"tree components {sorted(missing)} not in the Gauss diagram")


def embeddings(a: TreeDiagram, g: GaussDiagram) -> Iterator[dict[tuple[int, int], str]]:
    """Yield all embeddings as maps from tree-arrow coordinates to arrow ids."""
    _check_components(a, g)
    arrows = sorted(a.arrows)
    if not arrows:
        yield {}
        return

    by_coords: dict[tuple[int, int], list[str]] = {}
    for aid in sorted(g.arrows):
        arr = g.arrows[aid]
        by_coords.setdefault((arr.head, arr.tail), []).append(aid)

    # Per component, the tree endpoints in top-to-bottom order, as
    # (arrow coords, role); their images must sit at increasing positions.
    comp_seqs: dict[int, list[tuple[tuple[int, int], str]]] = {}
    for comp in a.leaves:
        seq = []
        for role, partner in a.endpoint_order(comp):
            coords = (comp, partner) if role == HEAD else (partner, comp)
            seq.append((coords, role))
        comp_seqs[comp] = seq

    g_pos = {
        (aid, role): g.position(aid, role)[1]
        for aid in g.arrows
        for role in (HEAD, TAIL)
    }

    assign: dict[tuple[int, int], str] = {}
    used: set[str] = set()

    def order_ok(comp: int) -> bool:
        last = -1
        for coords, role in comp_seqs[comp]:
            aid = assign.get(coords)
            if aid is None:
                continue
            pos = g_pos[(aid, role)]
            if pos <= last:
                return False
            last = pos
        return True

    def extend(idx: int) -> Iterator[dict[tuple[int, int], str]]:
        if idx == len(arrows):
            yield dict(assign)
            return
        coords = arrows[idx]
        for aid in by_coords.get(coords, ()):
            if aid in used:
                continue
            assign[coords] = aid
            used.add(aid)
            if order_ok(coords[0]) and order_ok(coords[1]):
                yield from extend(idx + 1)
            used.discard(aid)
            del assign[coords]

    yield from extend(0)


def _sign(g: GaussDiagram, phi: dict[tuple[int, int], str]) -> int:
    sign = 1
    for aid in phi.values():
        sign *= g.arrows[aid].sign
    return sign


def pair(a: TreeDiagram, g: GaussDiagram) -> int:
    """The pairing: sum of embedding signs."""
    return sum(_sign(g, phi) for phi in embeddings(a, g))


def pair_poly(poly: ArrowPolynomial, g: GaussDiagram) -> int:
    """Linear extension of the pairing to arrow polynomials."""
    return sum(coef * pair(diag, g) for coef, diag in poly)


def pair_conditional(
    a: TreeDiagram,
    g: GaussDiagram,
    alpha: tuple[int, int],
    g_arrow: str,
    mode: str,
) -> int:
    """Partial pairing over embeddings with ``phi(alpha) = g_arrow`` (``force``)
    or ``phi(alpha) != g_arrow`` (``forbid``)."""
    if alpha not in a.arrows:
        raise ValueError(f"arrow {alpha} not in tree diagram")
    if g_arrow not in g.arrows:
        raise ValueError(f"arrow {g_arrow!r} not in Gauss diagram")
    if mode not in (FORCE, FORBID):
        raise ValueError(f"mode must be {FORCE!r} or {FORBID!r}")
    total = 0
    for phi in embeddings(a, g):
        hit = phi[alpha] == g_arrow
        if hit == (mode == FORCE):
            total += _sign(g, phi)
    return total
