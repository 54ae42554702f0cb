"""Milnor-style linking invariants via the Magnus expansion of longitudes.

An independent oracle for the tree invariants: arc meridians of the diagram
are developed as truncated noncommutative power series, the longitude of a
component is the ordered product of the over-arc meridians at its underpasses
raised to the crossing signs, and the invariants are longitude coefficients.
All arithmetic is exact and truncated at a fixed total degree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .diagram import CLOSED, HEAD, STRING, TAIL, GaussDiagram
from .invariants import Residue

Word = tuple[tuple[int, int], ...]  # ((generator, exponent +-1), ...)


@dataclass(frozen=True)
class TruncatedSeries:
    """Element of the integer power-series ring in noncommuting variables,
    truncated above a total degree cap.  Keys are monomial index tuples."""

    nvars: int
    cap: int
    coeffs: tuple[tuple[tuple[int, ...], int], ...]

    @staticmethod
    def from_dict(nvars: int, cap: int, data: dict[tuple[int, ...], int]) -> TruncatedSeries:
        items = tuple(sorted((w, c) for w, c in data.items() if c != 0 and len(w) <= cap))
        return TruncatedSeries(nvars, cap, items)

    @staticmethod
    def one(nvars: int, cap: int) -> TruncatedSeries:
        return TruncatedSeries.from_dict(nvars, cap, {(): 1})

    @staticmethod
    def generator(i: int, nvars: int, cap: int) -> TruncatedSeries:
        """The expansion 1 + X_i of the i-th meridian generator."""
        return TruncatedSeries.from_dict(nvars, cap, {(): 1, (i,): 1})

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.coeffs)

    def coefficient(self, word: tuple[int, ...]) -> int:
        return self.as_dict().get(tuple(word), 0)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._compatible(other)
        data = self.as_dict()
        for w, c in other.coeffs:
            data[w] = data.get(w, 0) + c
        return TruncatedSeries.from_dict(self.nvars, self.cap, data)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.nvars, self.cap, tuple((w, -c) for w, c in self.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._compatible(other)
        data: dict[tuple[int, ...], int] = {}
        for w1, c1 in self.coeffs:
            room = self.cap - len(w1)
            for w2, c2 in other.coeffs:
                if len(w2) > room:
                    continue
                w = w1 + w2
                data[w] = data.get(w, 0) + c1 * c2
        return TruncatedSeries.from_dict(self.nvars, self.cap, data)

    def inverse(self) -> TruncatedSeries:
        """Inverse of a unit with constant term +-1, by the geometric series."""
        const = self.coefficient(())
        if const not in (1, -1):
            raise ValueError("only units with constant term +-1 are invertible")
        y = self - TruncatedSeries.from_dict(self.nvars, self.cap, {(): const})
        out = TruncatedSeries.from_dict(self.nvars, self.cap, {(): const})
        term = TruncatedSeries.one(self.nvars, self.cap)
        for _ in range(self.cap):
            term = term * y * TruncatedSeries.from_dict(self.nvars, self.cap, {(): -const})
            out = out + term * TruncatedSeries.from_dict(self.nvars, self.cap, {(): const})
        return out

    def power(self, exponent: int) -> TruncatedSeries:
        if exponent == 1:
            return self
        if exponent == -1:
            return self.inverse()
        if exponent == 0:
            return TruncatedSeries.one(self.nvars, self.cap)
        base = self if exponent > 0 else self.inverse()
        out = TruncatedSeries.one(self.nvars, self.cap)
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def _compatible(self, other: TruncatedSeries):
        if (self.nvars, self.cap) != (other.nvars, other.cap):
            raise ValueError("mixed series parameters")


def series_of_word(word: Word, nvars: int, cap: int) -> TruncatedSeries:
    """Magnus expansion of a free-group word: each generator maps to 1 + X_i,
    its inverse to the alternating geometric series."""
    out = TruncatedSeries.one(nvars, cap)
    for gen, exp in word:
        if not 1 <= gen <= nvars:
            raise ValueError(f"generator {gen} out of range 1..{nvars}")
        out = out * TruncatedSeries.generator(gen, nvars, cap).power(exp)
    return out


def _crossing_data(g: GaussDiagram):
    """Longitude bookkeeping.

    Arcs of a component are the intervals between its consecutive head
    endpoints.  For each component, list its head endpoints in order, each
    with the partner arc address (tail component, arc index containing the
    tail endpoint) and the crossing sign.  With the arrow convention used
    throughout (tail at the underpass), this role assignment is the one under
    which the longitude coefficients reproduce the tree invariants.
    """
    arc_index: dict[int, dict[tuple[str, str], int]] = {}
    for comp in g.components:
        count = 0
        table: dict[tuple[str, str], int] = {}
        for aid, role in g.endpoints(comp):
            table[(aid, role)] = count
            if role == HEAD:
                count += 1
        arc_index[comp] = table

    stations: dict[int, list[tuple[str, int, int, int]]] = {c: [] for c in g.components}
    for comp in g.components:
        for aid, role in g.endpoints(comp):
            if role != HEAD:
                continue
            arrow = g.arrows[aid]
            partner = arrow.tail
            partner_arc = arc_index[partner][(aid, TAIL)]
            stations[comp].append((aid, partner, partner_arc, arrow.sign))
    return stations


def _arc_meridians(g: GaussDiagram, cap: int) -> dict[int, list[TruncatedSeries]]:
    """Meridian series of every arc, solved by fixed-point iteration.

    Arc t+1 of a component is the conjugate of arc t by the partner arc
    meridian at the separating head endpoint.  Each sweep refines agreement
    by one degree, so ``cap`` sweeps reach the truncated solution; for
    realizable diagrams this is the chronological Wirtinger solution.
    """
    if not g.is_standard():
        raise ValueError("meridian computation needs a standard 1..n diagram")
    n = g.n
    stations = _crossing_data(g)
    arcs = {
        comp: [TruncatedSeries.generator(comp, n, cap)] * (len(stations[comp]) + 1)
        for comp in g.components
    }
    for _ in range(cap):
        new: dict[int, list[TruncatedSeries]] = {}
        for comp in g.components:
            seq = [TruncatedSeries.generator(comp, n, cap)]
            for _, partner, partner_arc, sign in stations[comp]:
                c = arcs[partner][partner_arc]
                conj = c.power(-sign) * seq[-1] * c.power(sign)
                seq.append(conj)
            new[comp] = seq
        arcs = new
    return arcs


def longitude(g: GaussDiagram, comp: int, cap: int) -> TruncatedSeries:
    """Magnus series of the longitude of ``comp``: the ordered product, along
    the component, of the partner arc meridians at its head endpoints raised
    to the crossing signs.  No framing factor is applied; powers of the
    component's own meridian cannot change coefficients of words avoiding it."""
    if g.kind != STRING:
        raise ValueError("longitude needs a string-link diagram")
    if comp not in g.components:
        raise ValueError(f"no component {comp}")
    if cap < 1:
        raise ValueError("degree cap must be >= 1")
    arcs = _arc_meridians(g, cap)
    out = TruncatedSeries.one(g.n, cap)
    for _, partner, partner_arc, sign in _crossing_data(g)[comp]:
        out = out * arcs[partner][partner_arc].power(sign)
    return out


def mu(g: GaussDiagram, iseq, trunk: int) -> int:
    """Linking coefficient: the coefficient of the word X_{i1}...X_{is} in the
    longitude of the trunk component, truncated at degree s.

    Only the link-homotopy regime is supported: the indices and the trunk must
    be pairwise distinct.
    """
    if g.kind != STRING:
        raise ValueError("mu needs a string-link diagram (cut a closed one first)")
    iseq = tuple(iseq)
    if not iseq:
        raise ValueError("empty index sequence")
    if len(set(iseq)) != len(iseq):
        raise ValueError(f"repeated indices in {iseq} are out of scope")
    if trunk in iseq:
        raise ValueError("trunk must not occur in the index sequence")
    for c in (*iseq, trunk):
        if c not in g.components:
            raise ValueError(f"no component {c}")
    return longitude(g, trunk, len(iseq)).coefficient(iseq)


def _subsequence_family(seq: tuple[int, ...], full: bool):
    for size in range(2, len(seq)):
        for sub in itertools.combinations(seq, size):
            if full:
                for shift in range(size):
                    yield sub[shift:] + sub[:shift]
            else:
                yield sub


def delta_mu(g: GaussDiagram, iseq, trunk: int, *, full: bool = False) -> int:
    """Indeterminacy: gcd of the coefficients over all proper subsequences of
    (i1, ..., is, trunk) of length at least two, read with the last entry as
    the trunk.  ``full=True`` additionally ranges over cyclic rotations, which
    yields the same gcd."""
    string = cut_for_mu(g)
    seq = (*tuple(iseq), trunk)
    values = []
    for sub in _subsequence_family(seq, full):
        values.append(mu(string, sub[:-1], sub[-1]))
    return math.gcd(*(values or (0,)))


def mu_bar(g: GaussDiagram, iseq, trunk: int) -> Residue:
    """Residue linking invariant of a based closed link: the coefficient on the
    cut-open diagram modulo the indeterminacy."""
    if g.kind != CLOSED:
        raise ValueError("mu_bar needs a closed-link diagram")
    string = cut_for_mu(g)
    return Residue.reduce(mu(string, iseq, trunk), delta_mu(g, iseq, trunk))


def cut_for_mu(g: GaussDiagram) -> GaussDiagram:
    """Reinterpret a based closed diagram as a string diagram (no arrow data
    changes); string diagrams pass through unchanged."""
    if g.kind == STRING:
        return g
    return GaussDiagram(STRING, g.components, g.arrows, {c: g.endpoints(c) for c in g.components})
