"""Diagram rewriting: Reidemeister moves, basepoint moves, closure, and
seeded random generation.

Moves are total functions from diagrams to diagrams that validate their site
before rewriting.  The r3 site catalog matches the braid-relation picture:
three arrows whose six endpoints are pairwise adjacent on three strands, with
the coordinate pattern of a strand hierarchy and the sign/order combinations
realizable by orienting the strands (plus the global mirror); the move swaps
each adjacent endpoint pair.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import CLOSED, HEAD, STRING, TAIL, Arrow, GaussDiagram

R1_INSERT = "R1_INSERT"
R1_DELETE = "R1_DELETE"
R2_INSERT = "R2_INSERT"
R2_DELETE = "R2_DELETE"
R3 = "R3"
BASEPOINT = "BASEPOINT"


@dataclass(frozen=True)
class Move:
    """A move kind together with the site parameters it was applied at."""

    kind: str
    params: tuple


def _rebuild(
    g: GaussDiagram,
    arrows: dict[str, Arrow],
    endpoints: dict[int, tuple[tuple[str, str], ...]],
    kind: str | None = None,
) -> GaussDiagram:
    return GaussDiagram(kind or g.kind, g.components, arrows, endpoints)


def _fresh_ids(g: GaussDiagram, count: int) -> list[str]:
    taken = set(g.arrows)
    out = []
    k = 1
    while len(out) < count:
        cand = f"m{k}"
        if cand not in taken:
            out.append(cand)
            taken.add(cand)
        k += 1
    return out


# -- Reidemeister 1 ---------------------------------------------------------


def apply_r1(
    g: GaussDiagram,
    component: int,
    position: int,
    sign: int = 1,
    insert: bool = True,
    head_first: bool = True,
) -> GaussDiagram:
    """Insert or delete an isolated self-arrow with adjacent endpoints.

    ``position`` is the index of the first of the two endpoints within the
    component's endpoint list.
    """
    if component not in g.components:
        raise ValueError(f"no component {component}")
    eps = list(g.endpoints(component))
    if insert:
        if not 0 <= position <= len(eps):
            raise ValueError(f"position {position} out of range")
        (aid,) = _fresh_ids(g, 1)
        roles = (HEAD, TAIL) if head_first else (TAIL, HEAD)
        eps[position:position] = [(aid, roles[0]), (aid, roles[1])]
        arrows = dict(g.arrows)
        arrows[aid] = Arrow(component, component, sign)
        return _rebuild(g, arrows, {**{c: g.endpoints(c) for c in g.components}, component: tuple(eps)})
    if not 0 <= position < len(eps) - 1:
        raise ValueError(f"position {position} out of range")
    (a1, r1), (a2, r2) = eps[position], eps[position + 1]
    if a1 != a2 or {r1, r2} != {HEAD, TAIL}:
        raise ValueError("site is not an isolated self-arrow")
    del eps[position : position + 2]
    arrows = dict(g.arrows)
    del arrows[a1]
    return _rebuild(g, arrows, {**{c: g.endpoints(c) for c in g.components}, component: tuple(eps)})


def find_r1_delete_sites(g: GaussDiagram) -> list[tuple[int, int]]:
    sites = []
    for c in g.components:
        eps = g.endpoints(c)
        for i in range(len(eps) - 1):
            if eps[i][0] == eps[i + 1][0]:
                sites.append((c, i))
    return sites


# -- Reidemeister 2 ---------------------------------------------------------


def apply_r2_insert(
    g: GaussDiagram,
    over: int,
    under: int,
    head_pos: int,
    tail_pos: int,
    antiparallel: bool = False,
    lead_sign: int = 1,
) -> GaussDiagram:
    """Insert two adjacent parallel arrows of opposite sign, heads on ``over``
    at ``head_pos`` and tails on ``under`` at ``tail_pos``.  ``antiparallel``
    reverses the tail order relative to the head order."""
    for c in (over, under):
        if c not in g.components:
            raise ValueError(f"no component {c}")
    a1, a2 = _fresh_ids(g, 2)
    arrows = dict(g.arrows)
    arrows[a1] = Arrow(over, under, lead_sign)
    arrows[a2] = Arrow(over, under, -lead_sign)
    heads = [(a1, HEAD), (a2, HEAD)]
    tails = [(a2, TAIL), (a1, TAIL)] if antiparallel else [(a1, TAIL), (a2, TAIL)]

    endpoints = {c: list(g.endpoints(c)) for c in g.components}
    if not 0 <= head_pos <= len(endpoints[over]):
        raise ValueError(f"head position {head_pos} out of range")
    if not 0 <= tail_pos <= len(endpoints[under]):
        raise ValueError(f"tail position {tail_pos} out of range")
    if over == under:
        first, second = sorted(
            [(head_pos, heads), (tail_pos, tails)], key=lambda pc: pc[0], reverse=True
        )
        endpoints[over][first[0] : first[0]] = first[1]
        endpoints[over][second[0] : second[0]] = second[1]
    else:
        endpoints[over][head_pos:head_pos] = heads
        endpoints[under][tail_pos:tail_pos] = tails
    return _rebuild(g, arrows, {c: tuple(v) for c, v in endpoints.items()})


def find_r2_delete_sites(g: GaussDiagram) -> list[tuple[str, str]]:
    """Pairs of same-coordinate, opposite-sign arrows with adjacent heads and
    adjacent tails."""
    sites = []
    for a1 in sorted(g.arrows):
        for a2 in sorted(g.arrows):
            if a2 <= a1:
                continue
            x, y = g.arrows[a1], g.arrows[a2]
            if (x.head, x.tail) != (y.head, y.tail) or x.sign != -y.sign:
                continue
            if abs(g.position(a1, HEAD)[1] - g.position(a2, HEAD)[1]) != 1:
                continue
            if abs(g.position(a1, TAIL)[1] - g.position(a2, TAIL)[1]) != 1:
                continue
            sites.append((a1, a2))
    return sites


def apply_r2_delete(g: GaussDiagram, site: tuple[str, str]) -> GaussDiagram:
    if site not in find_r2_delete_sites(g) and (site[1], site[0]) not in find_r2_delete_sites(g):
        raise ValueError(f"{site} is not a legal r2 deletion site")
    drop = set(site)
    arrows = {aid: a for aid, a in g.arrows.items() if aid not in drop}
    endpoints = {
        c: tuple(ep for ep in g.endpoints(c) if ep[0] not in drop) for c in g.components
    }
    return _rebuild(g, arrows, endpoints)


# -- Reidemeister 3 ---------------------------------------------------------


@dataclass(frozen=True)
class R3Site:
    """Arrows (g, h, k) with pattern g~(a,b), h~(a,c), k~(b,c) on distinct
    strands a, b, c, all six endpoints pairwise adjacent per strand."""

    g: str
    h: str
    k: str
    strands: tuple[int, int, int]


def find_r3_sites(g: GaussDiagram) -> list[R3Site]:
    sites = []
    ids = sorted(g.arrows)
    for gid in ids:
        ga = g.arrows[gid]
        a, b = ga.head, ga.tail
        if a == b:
            continue
        for hid in ids:
            if hid == gid:
                continue
            ha = g.arrows[hid]
            if ha.head != a:
                continue
            c = ha.tail
            if c in (a, b):
                continue
            for kid in ids:
                if kid in (gid, hid):
                    continue
                ka = g.arrows[kid]
                if (ka.head, ka.tail) != (b, c):
                    continue
                site = R3Site(gid, hid, kid, (a, b, c))
                if _r3_site_legal(g, site):
                    sites.append(site)
    return sites


def _r3_pairs(site: R3Site):
    a, b, c = site.strands
    return (
        (a, (site.g, HEAD), (site.h, HEAD)),
        (b, (site.g, TAIL), (site.k, HEAD)),
        (c, (site.h, TAIL), (site.k, TAIL)),
    )


def _r3_site_legal(g: GaussDiagram, site: R3Site) -> bool:
    eps = []
    for comp, first, second in _r3_pairs(site):
        p1 = g.position(first[0], first[1])[1]
        p2 = g.position(second[0], second[1])[1]
        if abs(p1 - p2) != 1:
            return False
        eps.append(1 if p1 < p2 else -1)
    ea, eb, ec = eps
    s = (g.arrows[site.g].sign, g.arrows[site.h].sign, g.arrows[site.k].sign)
    return s[0] * ea * eb == s[1] * ea * ec == s[2] * eb * ec


def apply_r3(g: GaussDiagram, site: R3Site) -> GaussDiagram:
    """Slide the three arrows past each other: swap each adjacent endpoint pair."""
    if not all(aid in g.arrows for aid in (site.g, site.h, site.k)):
        raise ValueError("site references arrows not in the diagram")
    if not _r3_site_legal(g, site):
        raise ValueError("site is not in a legal r3 configuration")
    endpoints = {c: list(g.endpoints(c)) for c in g.components}
    for comp, first, second in _r3_pairs(site):
        p1 = g.position(first[0], first[1])[1]
        p2 = g.position(second[0], second[1])[1]
        seq = endpoints[comp]
        seq[p1], seq[p2] = seq[p2], seq[p1]
    return _rebuild(g, dict(g.arrows), {c: tuple(v) for c, v in endpoints.items()})


# -- basepoint moves and closure --------------------------------------------


def basepoint_move(g: GaussDiagram, component: int, direction: str = "forward") -> GaussDiagram:
    """Cycle one endpoint of a closed-based diagram across the basepoint:
    forward moves the endpoint nearest the basepoint to the far end."""
    if g.kind != CLOSED:
        raise ValueError("basepoints are fixed for string links")
    if component not in g.components:
        raise ValueError(f"no component {component}")
    if direction not in ("forward", "backward"):
        raise ValueError(f"bad direction {direction!r}")
    eps = list(g.endpoints(component))
    if len(eps) >= 2:
        eps = eps[1:] + eps[:1] if direction == "forward" else eps[-1:] + eps[:-1]
    return _rebuild(g, dict(g.arrows), {**{c: g.endpoints(c) for c in g.components}, component: tuple(eps)})


def close(g: GaussDiagram) -> GaussDiagram:
    """Close a string link: same data, closed kind."""
    if g.kind != STRING:
        raise ValueError("close needs a string-link diagram")
    return _rebuild(g, dict(g.arrows), {c: g.endpoints(c) for c in g.components}, kind=CLOSED)


def cut(g: GaussDiagram) -> GaussDiagram:
    """Cut a based closed link at its basepoints: same data, string kind."""
    if g.kind != CLOSED:
        raise ValueError("cut needs a closed-link diagram")
    return _rebuild(g, dict(g.arrows), {c: g.endpoints(c) for c in g.components}, kind=STRING)


# -- random generation -------------------------------------------------------


def random_diagram(n: int, max_arrows: int, kind: str, seed: int) -> GaussDiagram:
    """Arbitrary virtual Gauss diagram, deterministic in the seed.

    No realizability filter is applied; endpoints are interleaved uniformly.
    """
    if n < 1:
        raise ValueError("need at least one component")
    rng = random.Random(seed)
    m = rng.randint(0, max_arrows)
    arrows: dict[str, Arrow] = {}
    endpoints: dict[int, list[tuple[str, str]]] = {c: [] for c in range(1, n + 1)}
    for i in range(1, m + 1):
        aid = str(i)
        head = rng.randint(1, n)
        tail = rng.randint(1, n)
        arrows[aid] = Arrow(head, tail, rng.choice((1, -1)))
        hp = rng.randint(0, len(endpoints[head]))
        endpoints[head].insert(hp, (aid, HEAD))
        tp = rng.randint(0, len(endpoints[tail]))
        endpoints[tail].insert(tp, (aid, TAIL))
    return GaussDiagram(kind, tuple(range(1, n + 1)), arrows, {c: tuple(v) for c, v in endpoints.items()})


def random_string_link(n: int, letters: int, seed: int) -> GaussDiagram:
    """Realizable string-link diagram: the Gauss diagram of a random pure
    braid word (a random word closed up by bubble-sorting the strands home).

    Identities relating the tree invariants to linking coefficients are
    theorems about honest string links, so their test corpora come from this
    generator rather than from :func:`random_diagram`.
    """
    if n < 1:
        raise ValueError("need at least one component")
    rng = random.Random(seed)
    word = [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(letters)] if n > 1 else []

    at = list(range(1, n + 1))  # strand at each position, left to right
    arrows: dict[str, Arrow] = {}
    endpoints: dict[int, list[tuple[str, str]]] = {c: [] for c in range(1, n + 1)}

    def emit(p: int, sign: int):
        left, right = at[p - 1], at[p]
        over, under = (right, left) if sign > 0 else (left, right)
        aid = str(len(arrows) + 1)
        arrows[aid] = Arrow(over, under, sign)
        endpoints[over].append((aid, HEAD))
        endpoints[under].append((aid, TAIL))
        at[p - 1], at[p] = at[p], at[p - 1]

    for p, sign in word:
        emit(p, sign)
    # Return every strand to its own anchor with adjacent swaps.
    done = False
    while not done:
        done = True
        for p in range(1, n):
            if at[p - 1] > at[p]:
                emit(p, rng.choice((1, -1)))
                done = False
    return GaussDiagram(STRING, tuple(range(1, n + 1)), arrows, {c: tuple(v) for c, v in endpoints.items()})


def legal_moves(g: GaussDiagram) -> list[str]:
    kinds = [R1_INSERT, R2_INSERT]
    if find_r1_delete_sites(g):
        kinds.append(R1_DELETE)
    if find_r2_delete_sites(g):
        kinds.append(R2_DELETE)
    if find_r3_sites(g):
        kinds.append(R3)
    if g.kind == CLOSED and any(g.endpoints(c) for c in g.components):
        kinds.append(BASEPOINT)
    return kinds


def _random_move(g: GaussDiagram, rng: random.Random) -> tuple[Move, GaussDiagram]:
    kind = rng.choice(legal_moves(g))
    if kind == R1_INSERT:
        comp = rng.choice(g.components)
        pos = rng.randint(0, len(g.endpoints(comp)))
        sign = rng.choice((1, -1))
        head_first = rng.choice((True, False))
        move = Move(R1_INSERT, (comp, pos, sign, head_first))
        return move, apply_r1(g, comp, pos, sign, insert=True, head_first=head_first)
    if kind == R1_DELETE:
        comp, pos = rng.choice(find_r1_delete_sites(g))
        return Move(R1_DELETE, (comp, pos)), apply_r1(g, comp, pos, insert=False)
    if kind == R2_INSERT:
        over = rng.choice(g.components)
        under = rng.choice(g.components)
        hp = rng.randint(0, len(g.endpoints(over)))
        tp = rng.randint(0, len(g.endpoints(under)))
        anti = rng.choice((True, False))
        lead = rng.choice((1, -1))
        move = Move(R2_INSERT, (over, under, hp, tp, anti, lead))
        return move, apply_r2_insert(g, over, under, hp, tp, anti, lead)
    if kind == R2_DELETE:
        site = rng.choice(find_r2_delete_sites(g))
        return Move(R2_DELETE, site), apply_r2_delete(g, site)
    if kind == R3:
        site = rng.choice(find_r3_sites(g))
        return Move(R3, (site.g, site.h, site.k, site.strands)), apply_r3(g, site)
    comp = rng.choice([c for c in g.components if g.endpoints(c)])
    direction = rng.choice(("forward", "backward"))
    return Move(BASEPOINT, (comp, direction)), basepoint_move(g, comp, direction)


def random_walk(g: GaussDiagram, move_count: int, seed: int) -> list[tuple[Move | None, GaussDiagram]]:
    """A legal move trajectory starting at ``g``; the first entry carries no
    move.  Deterministic in the seed."""
    rng = random.Random(seed)
    trail: list[tuple[Move | None, GaussDiagram]] = [(None, g)]
    current = g
    for _ in range(move_count):
        move, current = _random_move(current, rng)
        trail.append((move, current))
    return trail
