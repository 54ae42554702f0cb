"""Gauss diagrams of string links and based closed links.

A Gauss diagram records, for each component of a link diagram, the ordered
sequence of crossing endpoints met while walking from the basepoint along
the orientation, together with one signed arrow per crossing pointing from
the underpass endpoint to the overpass endpoint.

Diagrams here are *combinatorial*: they need not be realizable as planar
link projections, and all operations are defined on arbitrary (virtual)
Gauss diagrams.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

HEAD = "h"  # overpass endpoint (written O in Gauss code)
TAIL = "t"  # underpass endpoint (written U in Gauss code)

STRING = "string"
CLOSED = "closed"

_TOKEN_RE = re.compile(r"([OU])([A-Za-z0-9_]+)([+-])$")


class GaussCodeError(ValueError):
    """Syntax or semantic error in a Gauss code document."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Arrow:
    """A signed crossing arrow: tail on the under-strand, head on the over-strand."""

    head: int
    tail: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"arrow sign must be +1 or -1, got {self.sign}")


class GaussDiagram:
    """An immutable Gauss diagram of a string link or based closed link.

    Attributes:
        kind: ``"string"`` or ``"closed"``; the same linear data is stored for
            both, the flag only changes which invariants are legal to request.
        components: strictly increasing component indices (``1..n`` for
            standard diagrams; restriction may leave gaps).
        arrows: mapping from arrow id to :class:`Arrow`.
    """

    __slots__ = ("kind", "components", "arrows", "_endpoints", "_key")

    def __init__(
        self,
        kind: str,
        components: tuple[int, ...],
        arrows: dict[str, Arrow],
        endpoints: dict[int, tuple[tuple[str, str], ...]],
    ):
        if kind not in (STRING, CLOSED):
            raise ValueError(f"kind must be {STRING!r} or {CLOSED!r}, got {kind!r}")
        components = tuple(components)
        if not components:
            raise ValueError("diagram needs at least one component")
        if list(components) != sorted(set(components)) or components[0] < 1:
            raise ValueError(f"component indices must be distinct, increasing, >= 1: {components}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "arrows", dict(arrows))
        object.__setattr__(self, "_endpoints", {c: tuple(endpoints.get(c, ())) for c in components})
        object.__setattr__(self, "_key", None)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("GaussDiagram is immutable")

    def _validate(self):
        seen: dict[str, set[str]] = {}
        for c in self.components:
            for aid, role in self._endpoints[c]:
                if role not in (HEAD, TAIL):
                    raise ValueError(f"bad endpoint role {role!r}")
                if aid not in self.arrows:
                    raise ValueError(f"endpoint references unknown arrow {aid!r}")
                arrow = self.arrows[aid]
                want = arrow.head if role == HEAD else arrow.tail
                if want != c:
                    raise ValueError(f"arrow {aid!r} {role}-endpoint recorded on component {c}, expected {want}")
                roles = seen.setdefault(aid, set())
                if role in roles:
                    raise ValueError(f"arrow {aid!r} has two {role}-endpoints")
                roles.add(role)
        for aid, arrow in self.arrows.items():
            if seen.get(aid, set()) != {HEAD, TAIL}:
                raise ValueError(f"arrow {aid!r} must occur exactly once as head and once as tail")
            if arrow.head not in self._endpoints or arrow.tail not in self._endpoints:
                raise ValueError(f"arrow {aid!r} touches a missing component")

    # -- basic queries ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.components)

    def endpoints(self, component: int) -> tuple[tuple[str, str], ...]:
        """Ordered (arrow id, role) pairs along ``component`` from the basepoint."""
        return self._endpoints[component]

    def position(self, arrow_id: str, role: str) -> tuple[int, int]:
        """(component, position index) of the given endpoint."""
        arrow = self.arrows[arrow_id]
        comp = arrow.head if role == HEAD else arrow.tail
        return comp, self._endpoints[comp].index((arrow_id, role))

    def is_standard(self) -> bool:
        """True when components are exactly 1..n."""
        return self.components == tuple(range(1, self.n + 1))

    # -- structural equality ---------------------------------------------

    def canonical_key(self) -> str:
        if self._key is None:
            object.__setattr__(self, "_key", serialize(self))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"GaussDiagram({self.kind}, n={self.n}, arrows={len(self.arrows)})"


def parse_gauss(text: str) -> GaussDiagram:
    """Parse a Gauss code document.

    Format, one header plus one line per component::

        gauss <string|closed> <n>
        component <i>: <token>*

    Tokens are ``O<label><sign>`` / ``U<label><sign>``; the two occurrences of
    a label must carry the same sign and opposite roles.  Blank lines and
    ``#`` comments are ignored.
    """
    lines = text.splitlines()
    entries: list[tuple[int, str]] = []
    for num, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            entries.append((num, stripped))
    if not entries:
        raise GaussCodeError("empty document")

    line_no, header = entries[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "gauss":
        raise GaussCodeError("expected header 'gauss <string|closed> <n>'", line_no, 1)
    if parts[1] not in (STRING, CLOSED):
        raise GaussCodeError(f"unknown kind {parts[1]!r}", line_no, len("gauss ") + 1)
    kind = parts[1]
    try:
        n = int(parts[2])
    except ValueError:
        raise GaussCodeError(f"component count {parts[2]!r} is not an integer", line_no) from None
    if n < 1:
        raise GaussCodeError("component count must be >= 1", line_no)
    if len(entries) - 1 != n:
        raise GaussCodeError(f"expected {n} component lines, found {len(entries) - 1}", line_no)

    components: list[int] = []
    tokens_per_comp: dict[int, list[tuple[int, int, str, str, int]]] = {}
    for line_no, line in entries[1:]:
        m = re.match(r"component\s+(\d+)\s*:(.*)$", line)
        if not m:
            raise GaussCodeError("expected 'component <i>: <token>*'", line_no, 1)
        idx = int(m.group(1))
        if idx < 1:
            raise GaussCodeError(f"component index {idx} must be >= 1", line_no)
        if components and idx <= components[-1]:
            raise GaussCodeError(f"component indices must be strictly increasing, got {idx}", line_no)
        components.append(idx)
        toks = []
        col = line.index(":") + 2
        for tok in m.group(2).split():
            tm = _TOKEN_RE.match(tok)
            if not tm:
                raise GaussCodeError(f"bad token {tok!r} (need O|U, label, sign)", line_no, col)
            role = HEAD if tm.group(1) == "O" else TAIL
            sign = 1 if tm.group(3) == "+" else -1
            toks.append((line_no, col, tm.group(2), role, sign))
            col += len(tok) + 1
        tokens_per_comp[idx] = toks

    arrows: dict[str, Arrow] = {}
    partial: dict[str, tuple[int, str, int, int, int]] = {}  # label -> (comp, role, sign, line, col)
    endpoints: dict[int, list[tuple[str, str]]] = {c: [] for c in components}
    for c in components:
        for line_no, col, label, role, sign in tokens_per_comp[c]:
            if label in arrows:
                raise GaussCodeError(f"label {label!r} appears more than twice", line_no, col)
            if label in partial:
                pcomp, prole, psign, _, _ = partial.pop(label)
                if prole == role:
                    raise GaussCodeError(
                        f"label {label!r} appears twice as {'O' if role == HEAD else 'U'}", line_no, col
                    )
                if psign != sign:
                    raise GaussCodeError(f"label {label!r} has inconsistent signs", line_no, col)
                head_comp = c if role == HEAD else pcomp
                tail_comp = c if role == TAIL else pcomp
                arrows[label] = Arrow(head_comp, tail_comp, sign)
            else:
                partial[label] = (c, role, sign, line_no, col)
            endpoints[c].append((label, role))
    if partial:
        label, (_, _, _, line_no, col) = next(iter(partial.items()))
        raise GaussCodeError(f"label {label!r} appears only once", line_no, col)

    return GaussDiagram(kind, tuple(components), arrows, {c: tuple(v) for c, v in endpoints.items()})


def serialize(diagram: GaussDiagram) -> str:
    """Canonical Gauss code of a diagram.

    Components appear in index order and arrow labels are renumbered by first
    appearance, so structurally equal diagrams serialize identically.
    """
    relabel: dict[str, str] = {}
    for c in diagram.components:
        for aid, _ in diagram.endpoints(c):
            if aid not in relabel:
                relabel[aid] = str(len(relabel) + 1)
    lines = [f"gauss {diagram.kind} {diagram.n}"]
    for c in diagram.components:
        toks = []
        for aid, role in diagram.endpoints(c):
            letter = "O" if role == HEAD else "U"
            sign = "+" if diagram.arrows[aid].sign > 0 else "-"
            toks.append(f"{letter}{relabel[aid]}{sign}")
        lines.append(f"component {c}:" + ("" if not toks else " " + " ".join(toks)))
    return "\n".join(lines) + "\n"


def restrict(diagram: GaussDiagram, keep: set[int] | tuple[int, ...]) -> GaussDiagram:
    """Subdiagram on the components in ``keep``.

    Arrows with an endpoint outside ``keep`` are removed together with the
    discarded components; surviving component indices are preserved.
    """
    keep_set = set(keep)
    if not keep_set:
        raise ValueError("restriction to an empty component set")
    missing = keep_set - set(diagram.components)
    if missing:
        raise ValueError(f"components not in diagram: {sorted(missing)}")
    arrows = {
        aid: a for aid, a in diagram.arrows.items() if a.head in keep_set and a.tail in keep_set
    }
    endpoints = {
        c: tuple(ep for ep in diagram.endpoints(c) if ep[0] in arrows)
        for c in diagram.components
        if c in keep_set
    }
    return GaussDiagram(diagram.kind, tuple(sorted(keep_set)), arrows, endpoints)


def permute(diagram: GaussDiagram, sigma: dict[int, int]) -> GaussDiagram:
    """Renumber components so that component ``i`` of the result is component
    ``sigma[i]`` of the input."""
    if not diagram.is_standard():
        raise ValueError("permute requires a standard 1..n diagram")
    n = diagram.n
    domain = set(range(1, n + 1))
    if set(sigma.keys()) != domain or set(sigma.values()) != domain:
        raise ValueError(f"sigma is not a bijection of 1..{n}")
    inverse = {v: k for k, v in sigma.items()}
    arrows = {
        aid: Arrow(inverse[a.head], inverse[a.tail], a.sign) for aid, a in diagram.arrows.items()
    }
    endpoints = {i: diagram.endpoints(sigma[i]) for i in range(1, n + 1)}
    return GaussDiagram(diagram.kind, tuple(range(1, n + 1)), arrows, endpoints)


def reflect(diagram: GaussDiagram) -> GaussDiagram:
    """Reverse the component numbering: component i becomes n+1-i."""
    n = diagram.n
    return permute(diagram, {i: n + 1 - i for i in range(1, n + 1)})


def linking_sum(diagram: GaussDiagram, i: int, j: int) -> int:
    """Sign sum of the arrows with head on ``i`` and tail on ``j``.

    For realizable string links this is the linking number of the closures of
    components ``i`` and ``j``.
    """
    if diagram.kind != STRING:
        raise ValueError("linking_sum is defined for string-link diagrams")
    if i == j:
        raise ValueError("components must differ")
    for c in (i, j):
        if c not in diagram.components:
            raise ValueError(f"no component {c}")
    return sum(a.sign for a in diagram.arrows.values() if a.head == i and a.tail == j)
