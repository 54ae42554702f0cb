"""Planar tree diagrams, stacking, recursive generation, and arrow polynomials.

A tree diagram on a leaf set I with trunk j is an unsigned arrow diagram in
which every non-trunk component carries exactly one tail, all heads precede
that tail along the component, the arrows form a tree on I, and the whole
picture admits a planar realization with the leaves in index order.  Two
diagrams are equal when their per-component endpoint sequences agree, since
arrows can always be pushed vertically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

HEAD = "h"
TAIL = "t"

Endpoint = tuple[str, int]  # (role, partner component)


@dataclass(frozen=True)
class TreeDiagram:
    """A planar tree diagram.

    Attributes:
        leaves: strictly increasing component labels, trunk included.
        trunk: the distinguished component, an element of ``leaves``.
        order: for each leaf (aligned with ``leaves``) the top-to-bottom
            endpoint sequence, each endpoint a ``(role, partner)`` pair.
    """

    leaves: tuple[int, ...]
    trunk: int
    order: tuple[tuple[Endpoint, ...], ...]

    def __post_init__(self):
        if list(self.leaves) != sorted(set(self.leaves)):
            raise ValueError(f"leaves must be strictly increasing: {self.leaves}")
        if self.trunk not in self.leaves:
            raise ValueError(f"trunk {self.trunk} not among leaves {self.leaves}")
        if len(self.order) != len(self.leaves):
            raise ValueError("order must align with leaves")
        self._validate()

    def _validate(self):
        leafset = set(self.leaves)
        halves: dict[tuple[int, int], set[str]] = {}
        for comp, seq in zip(self.leaves, self.order):
            tail_seen = False
            for role, partner in seq:
                if partner not in leafset:
                    raise ValueError(f"endpoint partner {partner} outside leaf set")
                if partner == comp:
                    raise ValueError(f"self-arrow on component {comp}")
                if role == HEAD:
                    if tail_seen:
                        raise ValueError(f"head below the tail on component {comp}")
                    coords = (comp, partner)
                elif role == TAIL:
                    if tail_seen:
                        raise ValueError(f"two tails on component {comp}")
                    tail_seen = True
                    coords = (partner, comp)
                else:
                    raise ValueError(f"bad role {role!r}")
                got = halves.setdefault(coords, set())
                if role in got:
                    raise ValueError(f"duplicate arrow coordinates {coords}")
                got.add(role)
            if comp == self.trunk:
                if tail_seen:
                    raise ValueError("the trunk must not carry a tail")
            elif not tail_seen:
                raise ValueError(f"non-trunk component {comp} carries no tail")
        for coords, got in halves.items():
            if got != {HEAD, TAIL}:
                raise ValueError(f"arrow {coords} lacks a matching endpoint")
        # Treeness: r-1 arrows connecting all leaves.
        if len(halves) != len(self.leaves) - 1:
            raise ValueError("arrow count must be one less than the leaf count")
        if self.leaves and not _connected(set(self.leaves), set(halves)):
            raise ValueError("arrows do not connect the leaf set")

    # -- queries -----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.leaves)

    @property
    def degree(self) -> int:
        return len(self.leaves) - 1

    @property
    def arrows(self) -> frozenset[tuple[int, int]]:
        """Arrow coordinate pairs (head component, tail component)."""
        out = set()
        for comp, seq in zip(self.leaves, self.order):
            for role, partner in seq:
                out.add((comp, partner) if role == HEAD else (partner, comp))
        return frozenset(out)

    def endpoint_order(self, comp: int) -> tuple[Endpoint, ...]:
        return self.order[self.leaves.index(comp)]

    def is_empty(self) -> bool:
        return self.size == 1

    def sign(self) -> int:
        """(-1) to the number of right-pointing arrows (tail left of head)."""
        return -1 if sum(1 for h, t in self.arrows if t < h) % 2 else 1

    # -- relabeling ----------------------------------------------------------

    def relabel(self, new_leaves: tuple[int, ...] | list[int]) -> TreeDiagram:
        """Transport the diagram onto a new increasing leaf set of equal size."""
        new_leaves = tuple(new_leaves)
        if len(new_leaves) != self.size:
            raise ValueError("leaf count mismatch")
        table = dict(zip(self.leaves, new_leaves))
        order = tuple(
            tuple((role, table[p]) for role, p in seq) for seq in self.order
        )
        return TreeDiagram(new_leaves, table[self.trunk], order)

    def standard(self) -> TreeDiagram:
        """The same diagram on leaves 1..r."""
        return self.relabel(tuple(range(1, self.size + 1)))

    def is_standard(self) -> bool:
        return self.leaves == tuple(range(1, self.size + 1))


def _connected(vertices: set[int], edges: set[tuple[int, int]]) -> bool:
    if not vertices:
        return True
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for h, t in edges:
        adj[h].append(t)
        adj[t].append(h)
    seen = set()
    stack = [next(iter(vertices))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj[v])
    return seen == vertices


def empty() -> TreeDiagram:
    """The unit of stacking: a single bare strand."""
    return TreeDiagram((1,), 1, ((),))


def elementary() -> TreeDiagram:
    """The elementary tree with trunk 1: one arrow with head on 1, tail on 2."""
    return TreeDiagram((1, 2), 1, (((HEAD, 2),), ((TAIL, 1),)))


def elementary_bar() -> TreeDiagram:
    """The elementary tree with trunk 2: one arrow with head on 2, tail on 1."""
    return TreeDiagram((1, 2), 2, (((TAIL, 2),), ((HEAD, 1),)))


def stack(p: TreeDiagram, k: int, q: TreeDiagram) -> TreeDiagram:
    """Glue the trunk of ``q`` onto the k-th leaf of ``p``.

    Both diagrams must be standard (leaves 1..size).  The k-th leaf of ``p``
    merges with the trunk strand of ``q``, whose endpoints sit above it; the
    result has ``|p|+|q|-1`` leaves and its trunk index follows the three-case
    rule driven by the relative position of p's trunk and k.
    """
    if not (p.is_standard() and q.is_standard()):
        raise ValueError("stack operates on standard diagrams")
    n, m = p.size, q.size
    if not 1 <= k <= n:
        raise ValueError(f"leaf position {k} out of range 1..{n}")
    r, s = p.trunk, q.trunk

    def map_p(u: int) -> int:
        if u < k:
            return u
        if u == k:
            return k + s - 1
        return u + m - 1

    def map_q(v: int) -> int:
        return k + v - 1

    if r < k:
        trunk = r
    elif r > k:
        trunk = r + m - 1
    else:
        trunk = r + s - 1

    order: list[tuple[Endpoint, ...]] = []
    for c in range(1, n + m):
        parts: list[Endpoint] = []
        if k <= c <= k + m - 1:
            v = c - k + 1
            parts.extend((role, map_q(x)) for role, x in q.endpoint_order(v))
        if c == k + s - 1:
            parts.extend((role, map_p(x)) for role, x in p.endpoint_order(k))
        elif c < k or c > k + m - 1:
            u = c if c < k else c - m + 1
            parts.extend((role, map_p(x)) for role, x in p.endpoint_order(u))
        order.append(tuple(parts))
    return TreeDiagram(tuple(range(1, n + m)), trunk, tuple(order))


def leaf_index_maps(p_size: int, k: int, q_size: int, q_trunk: int) -> tuple[dict[int, int], dict[int, int]]:
    """Positions of p's and q's leaves inside ``stack(p, k, q)``."""
    map_p = {}
    for u in range(1, p_size + 1):
        map_p[u] = u if u < k else (k + q_trunk - 1 if u == k else u + q_size - 1)
    map_q = {v: k + v - 1 for v in range(1, q_size + 1)}
    return map_p, map_q


def is_planar(a: TreeDiagram) -> bool:
    """Planarity oracle: does a realization with leaves in index order exist?

    Arrows get distinct depths.  Along every component the depths must follow
    the endpoint order, and an arrow spanning over an intermediate component
    must lie below that component's tail (the point where its segment ends).
    A cycle among these constraints, or a span over the trunk, is exactly the
    geometric obstruction.
    """
    leaves = a.leaves
    tail_arrow: dict[int, tuple[int, int]] = {}
    for comp in leaves:
        for role, partner in a.endpoint_order(comp):
            if role == TAIL:
                tail_arrow[comp] = (partner, comp)

    after: dict[tuple[int, int], set[tuple[int, int]]] = {arr: set() for arr in a.arrows}
    for comp in leaves:
        seq = a.endpoint_order(comp)
        arrs = [(comp, p) if role == HEAD else (p, comp) for role, p in seq]
        for above, below in zip(arrs, arrs[1:]):
            after[above].add(below)
    for h, t in a.arrows:
        lo, hi = min(h, t), max(h, t)
        for comp in leaves:
            if lo < comp < hi:
                if comp == a.trunk:
                    return False
                after[tail_arrow[comp]].add((h, t))

    # Feasible iff the "is strictly above" relation is acyclic.
    state: dict[tuple[int, int], int] = {}

    def dfs(u) -> bool:
        state[u] = 1
        for v in after[u]:
            c = state.get(v, 0)
            if c == 1 or (c == 0 and not dfs(v)):
                return False
        state[u] = 2
        return True

    return all(state.get(u, 0) == 2 or dfs(u) for u in after)


@lru_cache(maxsize=None)
def _generate_standard(n: int, r: int) -> frozenset[TreeDiagram]:
    """All planar tree diagrams on leaves 1..n with trunk r, built recursively
    by stacking elementary trees onto smaller diagrams."""
    if n < 1 or not 1 <= r <= n:
        return frozenset()
    if n == 1:
        return frozenset({empty()})
    e, ebar = elementary(), elementary_bar()
    out: set[TreeDiagram] = set()
    if r >= 2:
        for a in _generate_standard(n - 1, r - 1):
            for k in range(1, r - 1):
                out.add(stack(a, k, e))
            for k in range(1, r):
                out.add(stack(a, k, ebar))
    if r <= n - 1:
        for a in _generate_standard(n - 1, r):
            for k in range(r, n):
                out.add(stack(a, k, e))
            for k in range(r + 1, n):
                out.add(stack(a, k, ebar))
    return frozenset(out)


def generate(leaves: set[int] | tuple[int, ...], trunk: int) -> frozenset[TreeDiagram]:
    """The set of planar tree diagrams with the given leaves and trunk.

    Empty for a single leaf (a bare strand carries no arrow data); raises for
    an empty leaf set or a trunk outside it.
    """
    leaves = tuple(sorted(set(leaves)))
    if not leaves:
        raise ValueError("empty leaf set")
    if trunk not in leaves:
        raise ValueError(f"trunk {trunk} not in {leaves}")
    if len(leaves) == 1:
        return frozenset()
    pos = leaves.index(trunk) + 1
    return frozenset(t.relabel(leaves) for t in _generate_standard(len(leaves), pos))


def enumerate_all(leaves: set[int] | tuple[int, ...], trunk: int) -> frozenset[TreeDiagram]:
    """Brute-force oracle for :func:`generate`.

    Enumerates every tail assignment forming a tree, every per-component head
    ordering, and keeps the planar ones.  Guarded to at most 6 leaves.
    """
    leaves = tuple(sorted(set(leaves)))
    if not leaves:
        raise ValueError("empty leaf set")
    if trunk not in leaves:
        raise ValueError(f"trunk {trunk} not in {leaves}")
    if len(leaves) > 6:
        raise ValueError("enumerate_all is limited to 6 leaves")
    if len(leaves) == 1:
        return frozenset()

    others = [c for c in leaves if c != trunk]
    out: set[TreeDiagram] = set()
    for heads in itertools.product(*([c for c in leaves if c != i] for i in others)):
        parent = dict(zip(others, heads))
        if not _is_tree(parent, trunk):
            continue
        heads_on: dict[int, list[int]] = {c: [] for c in leaves}
        for child, par in parent.items():
            heads_on[par].append(child)
        per_comp_orders = []
        for c in leaves:
            seqs = []
            for perm in itertools.permutations(heads_on[c]):
                seq = [(HEAD, p) for p in perm]
                if c != trunk:
                    seq.append((TAIL, parent[c]))
                seqs.append(tuple(seq))
            per_comp_orders.append(seqs)
        for combo in itertools.product(*per_comp_orders):
            cand = TreeDiagram(leaves, trunk, tuple(combo))
            if is_planar(cand):
                out.add(cand)
    return frozenset(out)


def _is_tree(parent: dict[int, int], root: int) -> bool:
    for start in parent:
        seen = {start}
        v = start
        while v != root:
            v = parent[v]
            if v in seen:
                return False
            seen.add(v)
    return True


def sign_tree(a: TreeDiagram) -> int:
    """Sign of a tree diagram: ``(-1)**q`` with q the right-pointing arrows."""
    return a.sign()


def descendants(a: TreeDiagram, comp: int) -> set[int]:
    """The strand and everything hanging from it through tails."""
    children: dict[int, list[int]] = {c: [] for c in a.leaves}
    for h, t in a.arrows:
        children[h].append(t)
    out = set()
    stack_ = [comp]
    while stack_:
        v = stack_.pop()
        if v in out:
            continue
        out.add(v)
        stack_.extend(children[v])
    return out


def induced(a: TreeDiagram, strands: set[int], trunk: int) -> TreeDiagram:
    """Sub-diagram on ``strands``: keep only endpoints whose arrow stays inside."""
    kept = tuple(sorted(strands))
    order = tuple(
        tuple(ep for ep in a.endpoint_order(c) if ep[1] in strands) for c in kept
    )
    return TreeDiagram(kept, trunk, order)


def decompose(a: TreeDiagram, arrow: tuple[int, int]) -> tuple[TreeDiagram, TreeDiagram, TreeDiagram]:
    """Split ``a`` along one arrow into (P, R, S) so that re-stacking the
    elementary tree of the arrow with R and S onto P reproduces ``a``.

    The factor above the arrow's tail is the tail-side subtree; the factor
    above its head consists of the subtrees hanging over the head endpoint.
    For a left-pointing arrow (head < tail) these are R and S respectively;
    for a right-pointing one the roles swap, mirroring the elementary factor.
    Single-strand factors play the role of the empty diagram.
    """
    if arrow not in a.arrows:
        raise ValueError(f"arrow {arrow} not in diagram")
    head, tail = arrow

    tail_side = descendants(a, tail)
    head_seq = a.endpoint_order(head)
    cut = head_seq.index((HEAD, tail))
    above = set()
    for role, partner in head_seq[:cut]:
        if role == HEAD:
            above |= descendants(a, partner)
    head_side = above | {head}

    rest = (set(a.leaves) - tail_side - head_side) | {head}
    p = induced(a, rest, a.trunk)
    r_part = induced(a, tail_side, tail)
    s_part = induced(a, head_side, head)
    if head < tail:
        return p, r_part, s_part
    return p, s_part, r_part


def recompose(p: TreeDiagram, r_part: TreeDiagram, s_part: TreeDiagram, arrow: tuple[int, int]) -> TreeDiagram:
    """Inverse of :func:`decompose`: rebuild the diagram from its factors."""
    head, tail = arrow
    x = elementary() if head < tail else elementary_bar()
    q = stack(stack(x, 2, r_part.standard()), 1, s_part.standard())
    v = p.leaves.index(head) + 1
    return stack(p.standard(), v, q)


@dataclass(frozen=True)
class ArrowPolynomial:
    """Integer combination of tree diagrams sharing one (leaves, trunk) pair."""

    leaves: tuple[int, ...]
    trunk: int
    terms: tuple[tuple[int, TreeDiagram], ...]

    def __post_init__(self):
        for coef, diag in self.terms:
            if coef == 0:
                raise ValueError("zero coefficient stored")
            if diag.leaves != self.leaves or diag.trunk != self.trunk:
                raise ValueError("mixed (leaves, trunk) in one polynomial")

    @staticmethod
    def from_terms(leaves: tuple[int, ...], trunk: int, terms) -> ArrowPolynomial:
        acc: dict[TreeDiagram, int] = {}
        for coef, diag in terms:
            acc[diag] = acc.get(diag, 0) + coef
        ordered = sorted(
            ((c, d) for d, c in acc.items() if c != 0), key=lambda cd: _term_key(cd[1])
        )
        return ArrowPolynomial(tuple(leaves), trunk, tuple(ordered))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


def _term_key(d: TreeDiagram):
    return (d.leaves, d.trunk, d.order)


def tree_polynomial(leaves: set[int] | tuple[int, ...], trunk: int) -> ArrowPolynomial:
    """The arrow polynomial whose terms are all planar trees on (leaves, trunk),
    each weighted by its sign."""
    leaves = tuple(sorted(set(leaves)))
    diagrams = generate(leaves, trunk)
    return ArrowPolynomial.from_terms(leaves, trunk, ((d.sign(), d) for d in diagrams))


def canonical_name(d: TreeDiagram) -> str:
    """Compact text form: trunk and per-component endpoint strings."""
    comps = []
    for comp, seq in zip(d.leaves, d.order):
        eps = ",".join(f"{role}{p}" for role, p in seq)
        comps.append(f"{comp}[{eps}]")
    return f"t{d.trunk}|" + "|".join(comps)
