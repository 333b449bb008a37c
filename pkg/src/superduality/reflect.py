"""Fundamental systems, odd reflections and highest-weight tracking."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cartan import ODD, DynkinDiagram, Sgcm
from .errors import ConsistencyError, CoordinateError, DomainError, SequencingError
from .weights import (
    CorootAlpha, Coroot, HeadFw, TailFw, TailOmega, Weight,
    parse_tail_vertex, pairing, tail_vertex,
)

RootExpr = Mapping  # original vertex id -> integer coefficient


def _clean(expr: Mapping) -> dict:
    return {k: v for k, v in expr.items() if v}


def _add(a: Mapping, b: Mapping, scale=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return _clean(out)


def _freeze(expr: Mapping) -> tuple:
    return tuple(sorted(_clean(expr).items()))


@dataclass(frozen=True)
class FundamentalSystem:
    """A fundamental system expressed in the original simple roots and coroots.

    Entries keep the ids of the original vertices they descend from.
    basis_weights optionally maps original ids to their simple roots as
    Weights, which enables highest-weight tracking.
    """

    base: Sgcm
    ids: tuple
    parity: Mapping
    roots: Mapping  # id -> {original id: int}
    coroots: Mapping  # id -> Coroot
    basis_weights: Mapping | None = None

    @classmethod
    def from_sgcm(cls, sgcm: Sgcm, basis_weights: Mapping | None = None) -> "FundamentalSystem":
        ids = sgcm.indices
        return cls(sgcm, ids, dict(sgcm.parity), {i: {i: 1} for i in ids},
                   {i: Coroot({CorootAlpha(i): 1}) for i in ids}, basis_weights)

    @classmethod
    def from_diagram(cls, diagram: DynkinDiagram, basis_weights=None) -> "FundamentalSystem":
        return cls.from_sgcm(diagram.to_sgcm(), basis_weights)

    # -- pairings ----------------------------------------------------------

    def _basis_pair(self, root_id: str, csym) -> Fraction:
        kind = csym[-1]
        if kind == "coroot":
            return Fraction(self.base.a(csym.vertex, root_id))
        if kind == "d":
            return Fraction(-1 if root_id == tail_vertex(csym.tail, -2) else 0)
        raise CoordinateError(f"cannot pair a root with {csym!r}")

    def pair_expr(self, expr: Mapping, coroot: Coroot) -> Fraction:
        total = Fraction(0)
        for csym, cc in coroot.items():
            for rid, rc in expr.items():
                total += rc * cc * self._basis_pair(rid, csym)
        return total

    def a(self, i: str, j: str) -> Fraction:
        """Current <alpha_j, alpha_i^vee>."""
        return self.pair_expr(self.roots[j], self.coroots[i])

    def pairing_matrix(self) -> list[list[Fraction]]:
        return [[self.a(i, j) for j in self.ids] for i in self.ids]

    def root(self, vertex: str) -> dict:
        return dict(self.roots[vertex])

    def find(self, expr: Mapping) -> str:
        key = _freeze(expr)
        for i in self.ids:
            if _freeze(self.roots[i]) == key:
                return i
        raise SequencingError(f"{format_root(expr)} is not a simple root of the current system")

    def root_set(self) -> set:
        return {_freeze(self.roots[i]) for i in self.ids}

    def root_weight(self, expr: Mapping) -> Weight:
        if self.basis_weights is None:
            raise CoordinateError("system carries no weight coordinates")
        out = Weight()
        for rid, c in expr.items():
            out = out + self.basis_weights[rid] * c
        return out

    # -- output ------------------------------------------------------------

    def to_sgcm(self) -> Sgcm:
        entries = []
        for row in self.pairing_matrix():
            if any(v.denominator != 1 for v in row):
                raise ConsistencyError("pairing matrix is not integral")
            entries.append([int(v) for v in row])
        return Sgcm(self.ids, self.parity, entries)

    def to_diagram(self) -> DynkinDiagram:
        return DynkinDiagram.from_sgcm(self.to_sgcm())

    def restrict(self, ids: Iterable[str]) -> "FundamentalSystem":
        keep = tuple(i for i in self.ids if i in set(ids))
        return FundamentalSystem(self.base, keep, {i: self.parity[i] for i in keep},
                                 {i: self.roots[i] for i in keep},
                                 {i: self.coroots[i] for i in keep}, self.basis_weights)

    def describe(self) -> list[dict]:
        return [{"id": i, "parity": "odd" if self.parity[i] else "even",
                 "root": format_root(self.roots[i])} for i in self.ids]


def format_root(expr: Mapping) -> str:
    parts = []
    for k, v in sorted(_clean(expr).items(), key=lambda kv: _vertex_order(kv[0])):
        name = f"a[{k}]"
        parts.append(f"+{name}" if v == 1 else f"-{name}" if v == -1 else f"{v:+d}*{name}")
    text = "".join(parts) or "0"
    return text[1:] if text.startswith("+") else text


def _vertex_order(vertex: str):
    parsed = parse_tail_vertex(vertex)
    return (1, parsed[0], parsed[1], "") if parsed else (0, 0, 0, vertex)


def odd_reflection(fs: FundamentalSystem, s: str, reflected_sign: int = -1) -> FundamentalSystem:
    """Odd reflection at the isotropic odd simple root with id s.

    The new root -alpha_s receives the coroot reflected_sign * alpha_s^vee.
    Both signs give the same algebra since rescaling the row of an
    isotropic root does not change it.
    """
    if reflected_sign not in (1, -1):
        raise DomainError("reflected_sign must be 1 or -1")
    if s not in fs.ids:
        raise DomainError(f"unknown vertex {s!r}")
    if fs.parity[s] != ODD or fs.a(s, s) != 0:
        raise DomainError(f"{s} is not an isotropic odd simple root")
    roots, coroots, parity = {}, {}, dict(fs.parity)
    for i in fs.ids:
        if i == s:
            roots[i] = {k: -v for k, v in fs.roots[s].items()}
            coroots[i] = fs.coroots[s] * reflected_sign
            continue
        a_is = fs.a(i, s)
        if a_is == 0:
            roots[i] = dict(fs.roots[i])
            coroots[i] = fs.coroots[i]
            continue
        a_si = fs.a(s, i)
        if a_si == 0:
            raise ConsistencyError(f"a({i},{s}) is nonzero while a({s},{i}) vanishes")
        roots[i] = _add(fs.roots[i], fs.roots[s])
        coroots[i] = fs.coroots[i] + fs.coroots[s] * (a_is / a_si)
        parity[i] = 1 - parity[i]
    return FundamentalSystem(fs.base, fs.ids, parity, roots, coroots, fs.basis_weights)


def normalize_diagonal(fs: FundamentalSystem) -> FundamentalSystem:
    """Negate every coroot whose diagonal pairing is -2."""
    coroots = {i: (-fs.coroots[i] if fs.a(i, i) == -2 else fs.coroots[i]) for i in fs.ids}
    return FundamentalSystem(fs.base, fs.ids, fs.parity, fs.roots, coroots, fs.basis_weights)


def _interval(tail: int, low: int, high: int) -> dict:
    return {tail_vertex(tail, m): 1 for m in range(low, high + 1)}


def bc_sequence(n: int, tail: int = 0) -> list[dict]:
    """n(n+1)/2 odd roots leading to the Borel with the even chain of beta_j."""
    if n <= 0:
        raise DomainError("sequence length parameter must be positive")
    seq = []
    for k in range(1, n + 1):
        top = 2 * k - 1
        seq += [_interval(tail, top - 2 * i, top) for i in range(k)]
    return seq


def bs_sequence(n: int, tail: int = 0) -> list[dict]:
    """n(n+1)/2 odd roots leading to the Borel with the chain of beta_{j+1/2}."""
    if n <= 0:
        raise DomainError("sequence length parameter must be positive")
    seq = []
    for k in range(1, n + 1):
        top = 2 * k
        seq += [_interval(tail, top - 2 * i, top) for i in range(k)]
    return seq


def apply_sequence(fs: FundamentalSystem, seq: Sequence[Mapping], normalize: bool = True,
                   reflected_sign: int = -1) -> FundamentalSystem:
    for expr in seq:
        fs = odd_reflection(fs, fs.find(expr), reflected_sign)
        if normalize:
            fs = normalize_diagonal(fs)
    return fs


def track_highest_weight(weight: Weight, fs: FundamentalSystem, seq: Sequence[Mapping]) -> Weight:
    """Follow a highest weight through a sequence of odd reflections."""
    for expr in seq:
        s = fs.find(expr)
        if pairing(weight, fs.coroots[s]) != 0:
            weight = weight - fs.root_weight(fs.roots[s])
        fs = normalize_diagonal(odd_reflection(fs, s))
    return weight


# --- systems attached to a head ----------------------------------------------

def basis_weights_for(diagram: DynkinDiagram) -> dict:
    """Simple roots of a merged diagram written as Weights.

    For a vertex j, alpha_j = sum_i a_ij FW(i) + sum_t c_j^t omega^t with
    c_j^t = <alpha_j, d^t> + sum over tail-t vertices i of a_ij. The
    diagram should extend one vertex past the last tail vertex used, since
    the coefficient of the next fundamental weight is read from it.
    """
    sgcm = diagram.to_sgcm()
    out = {}
    for j in sgcm.indices:
        terms: dict = {}
        parsed_j = parse_tail_vertex(j)
        for i in sgcm.indices:
            a_ij = sgcm.a(i, j)
            if not a_ij:
                continue
            parsed = parse_tail_vertex(i)
            if parsed is None:
                terms[HeadFw(i)] = terms.get(HeadFw(i), 0) + a_ij
            else:
                terms[TailFw(*parsed)] = terms.get(TailFw(*parsed), 0) + a_ij
                terms[TailOmega(parsed[0])] = terms.get(TailOmega(parsed[0]), 0) + a_ij
        if parsed_j is not None and parsed_j[1] == -2:
            key = TailOmega(parsed_j[0])
            terms[key] = terms.get(key, 0) - 1
        out[j] = Weight(terms)
    return out


def head_system(head, rank, flavor: str = "dg") -> FundamentalSystem:
    """The standard system of the merged diagram with weight coordinates."""
    from .cartan import build_merged_diagram, doubled_rank

    diagram = build_merged_diagram(head, rank, flavor)
    if flavor == "dg":
        stored = doubled_rank(rank, "dg")
        extended = build_merged_diagram(head, Fraction(max(stored, 0) + 1, 2), "dg")
        weights = basis_weights_for(extended)
        return FundamentalSystem.from_diagram(diagram, {k: weights[k] for k in diagram.ids})
    return FundamentalSystem.from_diagram(diagram)


def beta_root(index: int, tail: int = 0) -> dict:
    """beta_r as a sum of dg simple roots (index = 2r)."""
    if index == -2:
        return {tail_vertex(tail, -2): 1, tail_vertex(tail, 1): 1}
    return {tail_vertex(tail, index): 1, tail_vertex(tail, index + 1): 1}


def g_system(head, n: int) -> FundamentalSystem:
    """The even-chain system at rank n obtained inside the dg system by reflections."""
    return _flavor_system(head, n, "g")


def sg_system(head, n: int) -> FundamentalSystem:
    """The mixed-chain system at rank n obtained inside the dg system by reflections."""
    return _flavor_system(head, n, "sg")


def _flavor_system(head, n: int, flavor: str) -> FundamentalSystem:
    if flavor == "g" and n < 1:
        raise DomainError("g rank must be a positive integer")
    if flavor == "sg" and n < -1:
        raise DomainError("sg rank must be -1 or a non-negative integer")
    top = max(2 * n, 0)
    fs = head_system(head, Fraction(top, 2) if top else (Fraction(0) if n >= 0 else -1), "dg")
    keep = list(head.head_ids())
    renamed = {}
    for t in head.tails:
        if flavor == "g":
            if n >= 1:
                fs = apply_sequence(fs, bc_sequence(n, t))
            wanted = [-2] + [2 * j for j in range(1, n)]
            exprs = [beta_root(-2, t)] + [beta_root(m, t) for m in wanted[1:]]
        else:
            if n >= 1:
                fs = apply_sequence(fs, bs_sequence(n, t))
            wanted = [-2] + [2 * j - 1 for j in range(1, n + 1)]
            exprs = [{tail_vertex(t, -2): 1}] + [beta_root(m, t) for m in wanted[1:]]
        for m, expr in zip(wanted, exprs):
            current = fs.find(expr)
            renamed[current] = tail_vertex(t, m)
            keep.append(current)
    sub = fs.restrict(keep)
    order = list(head.head_ids()) + [renamed[i] for i in keep[len(head.head_ids()):]]
    inverse = {renamed.get(i, i): i for i in keep}
    return FundamentalSystem(
        sub.base, tuple(order), {k: sub.parity[inverse[k]] for k in order},
        {k: sub.roots[inverse[k]] for k in order}, {k: sub.coroots[inverse[k]] for k in order},
        sub.basis_weights)
