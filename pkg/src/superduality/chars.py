"""Formal characters under depth cutoffs.

A character is stored relative to an anchor weight: each term records how
many times every simple root of a fixed frame is subtracted from the
anchor. The cutoff bounds the total number of subtracted simple roots and
every term up to that depth is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import oracle
from .cartan import EVEN, ODD, HeadSpec, Sgcm, symmetrizer
from .coxkl import WeylGroup, dot_action, multiplicity_table
from .errors import (
    ConsistencyError, DomainError, IncompleteTableError, UnsupportedError,
)
from .linalg import SpanSolver
from .reflect import FundamentalSystem, g_system, head_system, sg_system
from .symfunc import hook_schur, schur
from .weights import (
    Weight, half_partition, symbol_key, natural_map, pairing, tail_partition, tail_vertex, theta_inverse,
    theta_map, theta_sequence, truncate_weight,
)

FLAVORS = ("dg", "g", "sg")


# --- frames ----------------------------------------------------------------------------

@dataclass(frozen=True)
class RootFrame:
    """Simple roots of a fundamental system written as weights."""

    ids: tuple
    weights: tuple
    _solver: SpanSolver = field(default=None, compare=False, repr=False)

    @classmethod
    def from_system(cls, fs: FundamentalSystem) -> "RootFrame":
        return cls(tuple(fs.ids), tuple(fs.root_weight(fs.roots[i]) for i in fs.ids))

    def position(self, vertex: str) -> int:
        try:
            return self.ids.index(vertex)
        except ValueError:
            raise DomainError(f"vertex {vertex!r} is not in the frame") from None

    def weight_at(self, anchor: Weight, depth: Sequence[int]) -> Weight:
        out = anchor
        for d, w in zip(depth, self.weights):
            if d:
                out = out - w * d
        return out

    def depth_of(self, difference: Weight) -> tuple | None:
        """Coefficients of a weight in the simple roots, or None outside their span."""
        if self._solver is None:
            try:
                solver = SpanSolver([_keyed(w) for w in self.weights])
            except ValueError:
                raise UnsupportedError("simple roots are linearly dependent as weights") from None
            object.__setattr__(self, "_solver", solver)
        coeffs = self._solver.solve(_keyed(difference))
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            return None
        return tuple(int(c) for c in coeffs)

    def mapped(self, transform) -> "RootFrame":
        return RootFrame(self.ids, tuple(transform(w) for w in self.weights))


def _keyed(weight: Weight) -> dict:
    return {symbol_key(sym): c for sym, c in weight.items()}


@dataclass(frozen=True)
class FormalCharacter:
    """Finite window sum_d terms[d] e^{anchor - sum_i d_i alpha_i} with total depth <= cutoff."""

    anchor: Weight
    frame: RootFrame
    terms: Mapping
    cutoff: int

    def __post_init__(self):
        clean = {}
        for depth, c in self.terms.items():
            depth = tuple(int(x) for x in depth)
            if len(depth) != len(self.frame.ids):
                raise DomainError("depth vector does not match the frame")
            if any(x < 0 for x in depth):
                raise DomainError("depth vectors must be non-negative")
            if c and sum(depth) <= self.cutoff:
                clean[depth] = clean.get(depth, 0) + int(c)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def one(cls, anchor: Weight, frame: RootFrame, cutoff: int) -> "FormalCharacter":
        return cls(anchor, frame, {(0,) * len(frame.ids): 1}, cutoff)

    @classmethod
    def zero(cls, anchor: Weight, frame: RootFrame, cutoff: int) -> "FormalCharacter":
        return cls(anchor, frame, {}, cutoff)

    def _check_frame(self, other: "FormalCharacter") -> None:
        if self.frame.ids != other.frame.ids:
            raise DomainError("characters live on different root frames")

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check_frame(other)
        shift = self.frame.depth_of(self.anchor - other.anchor)
        if shift is None or any(x < 0 for x in shift):
            raise DomainError("the second anchor must lie below the first")
        cutoff = min(self.cutoff, other.cutoff + sum(shift))
        out = dict(self.terms)
        for depth, c in other.terms.items():
            key = tuple(a + b for a, b in zip(depth, shift))
            out[key] = out.get(key, 0) + c
        return FormalCharacter(self.anchor, self.frame, out, cutoff)

    def __neg__(self):
        return FormalCharacter(self.anchor, self.frame, {k: -v for k, v in self.terms.items()},
                               self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, factor: int) -> "FormalCharacter":
        return FormalCharacter(self.anchor, self.frame,
                               {k: v * factor for k, v in self.terms.items()}, self.cutoff)

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check_frame(other)
        cutoff = min(self.cutoff, other.cutoff)
        out: dict = {}
        right = sorted(other.terms.items(), key=lambda kv: sum(kv[0]))
        for d1, c1 in self.terms.items():
            room = cutoff - sum(d1)
            for d2, c2 in right:
                if sum(d2) > room:
                    break
                key = tuple(a + b for a, b in zip(d1, d2))
                out[key] = out.get(key, 0) + c1 * c2
        return FormalCharacter(self.anchor + other.anchor, self.frame, out, cutoff)

    def shifted(self, depth: Sequence[int], cutoff: int | None = None) -> "FormalCharacter":
        """The same terms re-anchored one depth vector higher."""
        anchor = self.frame.weight_at(self.anchor, [-d for d in depth])
        terms = {tuple(a + b for a, b in zip(k, depth)): v for k, v in self.terms.items()}
        limit = self.cutoff + sum(depth) if cutoff is None else cutoff
        return FormalCharacter(anchor, self.frame, terms, limit)

    def with_cutoff(self, cutoff: int) -> "FormalCharacter":
        return FormalCharacter(self.anchor, self.frame, self.terms, min(cutoff, self.cutoff))

    def weight_of(self, depth: Sequence[int]) -> Weight:
        return self.frame.weight_at(self.anchor, depth)

    def as_weights(self) -> dict:
        out: dict = {}
        for depth, c in self.terms.items():
            w = self.weight_of(depth)
            out[w] = out.get(w, 0) + c
        return {k: v for k, v in out.items() if v}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def coefficient(self, depth: Sequence[int]) -> int:
        return self.terms.get(tuple(depth), 0)

    def __bool__(self):
        return bool(self.terms)

    def equal_terms(self, other: "FormalCharacter") -> bool:
        """Same frame, anchor and terms up to the smaller cutoff."""
        self._check_frame(other)
        cutoff = min(self.cutoff, other.cutoff)
        return (self.anchor == other.anchor
                and self.with_cutoff(cutoff).terms == other.with_cutoff(cutoff).terms)

    def text(self) -> str:
        if not self.terms:
            return "0"
        if set(self.terms) == {(0,) * len(self.frame.ids)} and self.terms[(0,) * len(self.frame.ids)] == 1:
            return "1"
        parts = []
        for depth, c in self.sorted_terms():
            mono = "-".join(f"{d}a[{vid}]" if d > 1 else f"a[{vid}]"
                            for vid, d in zip(self.frame.ids, depth) if d)
            body = f"e^(-{mono})" if mono else "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        from .weights import weight_to_json

        return {"anchor": weight_to_json(self.anchor), "roots": list(self.frame.ids),
                "cutoff": self.cutoff,
                "terms": [{"depth": list(d), "mult": c} for d, c in self.sorted_terms()]}


# --- systems by flavor --------------------------------------------------------------------

def flavor_system(head: HeadSpec, flavor: str, rank) -> FundamentalSystem:
    """The fundamental system of the given flavor at the given rank."""
    if flavor == "g":
        return g_system(head, int(rank))
    if flavor == "sg":
        return sg_system(head, int(rank))
    if flavor == "dg":
        return head_system(head, Fraction(rank), "dg")
    raise DomainError(f"unknown flavor {flavor!r}")


def _frame_for(head: HeadSpec, flavor: str, rank) -> tuple[FundamentalSystem, RootFrame]:
    key = (head, flavor, Fraction(rank))
    cached = _FRAMES.get(key)
    if cached is None:
        fs = flavor_system(head, flavor, rank)
        cached = (fs, RootFrame.from_system(fs))
        _FRAMES[key] = cached
    return cached


_FRAMES: dict = {}


def weight_labels(weight: Weight, fs: FundamentalSystem) -> tuple:
    """<weight, alpha_i^vee> for every vertex of the system."""
    return tuple(pairing(weight, fs.coroots[i]) for i in fs.ids)


def tail_indices(flavor: str, rank) -> list[int]:
    """Doubled epsilon indices carried by the tail Levi at the given rank."""
    if flavor == "g":
        n = int(rank)
        return [2 * j for j in range(1, n + 1)]
    if flavor == "sg":
        n = int(rank)
        return [2 * j - 1 for j in range(1, max(n, 0) + 2)]
    if flavor == "dg":
        doubled = int(Fraction(rank) * 2)
        return list(range(1, max(doubled, 0) + 2))
    raise DomainError(f"unknown flavor {flavor!r}")


def levi_ids(head: HeadSpec, fs: FundamentalSystem, levi_heads: Iterable[str]) -> list[str]:
    """Levi vertices: the chosen head vertices plus every tail vertex except the attachment."""
    levi_heads = set(levi_heads)
    unknown = levi_heads - set(head.head_ids())
    if unknown:
        raise DomainError(f"Levi vertices {sorted(unknown)} are not head vertices")
    out = []
    for i in fs.ids:
        if i in levi_heads:
            out.append(i)
        elif i.startswith("t") and not i.endswith(":-2"):
            out.append(i)
    return out


# --- building blocks --------------------------------------------------------------------

def pbw_factor(roots: Mapping, frame: RootFrame, cutoff: int, complete_to: int | None = None,
               anchor: Weight | None = None) -> FormalCharacter:
    """prod over even roots (1 - e^-a)^-mult times prod over odd roots (1 + e^-a)^mult.

    roots maps depth vectors to (multiplicity, parity); complete_to is the
    height up to which the list is known to be complete.
    """
    if complete_to is not None and complete_to < cutoff:
        raise DomainError(f"root list is complete to height {complete_to}, below cutoff {cutoff}")
    size = len(frame.ids)
    series = {(0,) * size: 1}
    for beta, (mult, parity) in sorted(roots.items()):
        if len(beta) != size:
            raise DomainError("root vector does not match the frame")
        height = sum(beta)
        if height <= 0:
            raise DomainError("roots must be positive")
        if height > cutoff:
            continue
        top = 1 if parity == ODD else cutoff // height
        for _ in range(mult):
            nxt = dict(series)
            for vec, c in series.items():
                base = sum(vec)
                for k in range(1, top + 1):
                    if base + k * height > cutoff:
                        break
                    key = tuple(a + k * b for a, b in zip(vec, beta))
                    nxt[key] = nxt.get(key, 0) + c
            series = nxt
    return FormalCharacter(anchor if anchor is not None else Weight(), frame, series, cutoff)


def weyl_kac_terms(sgcm: Sgcm, labels: Sequence, cutoff: int) -> dict:
    """Depth vectors of an integrable irreducible module of an even symmetrizable algebra.

    The alternating sum over the dot orbit is divided by the Weyl denominator,
    whose root multiplicities come from the lowering construction.
    """
    if any(sgcm.parity[i] != EVEN for i in sgcm.indices):
        raise UnsupportedError("Weyl-Kac characters are implemented for even algebras only")
    if symmetrizer(sgcm, positive=True) is None:
        raise UnsupportedError("matrix is not symmetrizable")
    labels = [Fraction(x) for x in labels]
    if any(x < 0 or x.denominator != 1 for x in labels):
        raise DomainError("highest weight must be dominant integral")
    rank = sgcm.size
    if rank == 0:
        return {(): 1}
    numerator = {(0,) * rank: 1}
    layer = {tuple(int(x) for x in labels): (0,) * rank}
    sign = 1
    orbit_complete = True
    while layer:
        sign = -sign
        nxt = {}
        for current, depth in layer.items():
            for i in range(rank):
                shift = current[i] + 1
                if shift <= 0:
                    continue
                new_depth = list(depth)
                new_depth[i] += shift
                if sum(new_depth) > cutoff:
                    orbit_complete = False
                    continue
                new = tuple(current[j] - shift * sgcm.entries[j][i] for j in range(rank))
                nxt[new] = tuple(new_depth)
        for depth in nxt.values():
            numerator[depth] = numerator.get(depth, 0) + sign
        layer = nxt
    bound = None
    if orbit_complete:
        # finite Weyl group: all weights lie above the lowest weight w0(lambda),
        # which sits 2 rho above the lowest element of the dot orbit
        lowest = max(numerator, key=sum)
        two_rho = _lowest_dot_depth(sgcm)
        bound = tuple(a - b for a, b in zip(lowest, two_rho))
        cutoff = min(cutoff, sum(bound))
    if cutoff == 0:
        return {k: v for k, v in numerator.items() if not any(k)}
    roots = oracle.root_multiplicities(sgcm, cutoff)
    return divide_series(numerator, weyl_denominator(roots, rank, cutoff), cutoff, bound)


def _lowest_dot_depth(sgcm: Sgcm) -> tuple:
    """Depth of w0 . 0 below 0, found by descending along the dot action."""
    rank = sgcm.size
    labels = [0] * rank
    depth = [0] * rank
    while True:
        move = next((i for i in range(rank) if labels[i] + 1 > 0), None)
        if move is None:
            return tuple(depth)
        shift = labels[move] + 1
        depth[move] += shift
        labels = [labels[j] - shift * sgcm.entries[j][move] for j in range(rank)]


def weyl_denominator(roots: Mapping, rank: int, cutoff: int) -> dict:
    """prod over positive even roots of (1 - e^-a)^mult, truncated at the cutoff."""
    series = {(0,) * rank: 1}
    for beta, (mult, parity) in sorted(roots.items()):
        if parity == ODD:
            raise UnsupportedError("denominator is implemented for even roots only")
        if sum(beta) > cutoff:
            continue
        for _ in range(mult):
            nxt = dict(series)
            for vec, c in series.items():
                key = tuple(a + b for a, b in zip(vec, beta))
                if sum(key) <= cutoff:
                    nxt[key] = nxt.get(key, 0) - c
            series = {k: v for k, v in nxt.items() if v}
    return series


def divide_series(numerator: Mapping, denominator: Mapping, cutoff: int,
                  bound: Sequence[int] | None = None) -> dict:
    """Quotient of two series in depth vectors, the denominator having constant term 1.

    Coefficients are found by increasing height from
    q(b) = n(b) - sum over g != 0 of d(g) q(b - g). A componentwise bound,
    when the quotient is known to vanish beyond it, prunes the search.
    """
    rank = len(next(iter(denominator)))
    if denominator.get((0,) * rank) != 1:
        raise DomainError("denominator must have constant term 1")
    steps = [(g, c) for g, c in denominator.items() if any(g)]
    buckets: dict = {}
    for b in numerator:
        if sum(b) <= cutoff:
            buckets.setdefault(sum(b), set()).add(b)
    out: dict = {}
    for height in range(cutoff + 1):
        for b in sorted(buckets.get(height, ())):
            value = numerator.get(b, 0)
            for g, c in steps:
                prev = tuple(x - y for x, y in zip(b, g))
                if min(prev) >= 0:
                    value -= c * out.get(prev, 0)
            if not value:
                continue
            out[b] = value
            for g, _ in steps:
                nxt = tuple(x + y for x, y in zip(b, g))
                if bound is not None and any(x > y for x, y in zip(nxt, bound)):
                    continue
                h = sum(nxt)
                if h <= cutoff:
                    buckets.setdefault(h, set()).add(nxt)
    return out


def weyl_kac_char(sgcm: Sgcm, labels: Sequence, cutoff: int,
                  frame: RootFrame | None = None, anchor: Weight | None = None) -> FormalCharacter:
    """Weyl-Kac character as a formal character (frame defaults to bare depth vectors)."""
    terms = weyl_kac_terms(sgcm, labels, cutoff)
    if frame is None:
        frame = RootFrame(sgcm.indices, tuple(Weight() for _ in sgcm.indices))
    return FormalCharacter(anchor if anchor is not None else Weight(), frame, terms, cutoff)


def _tail_partition_for(weight: Weight, flavor: str, tail: int) -> tuple:
    if flavor == "g":
        return tail_partition(weight, tail)
    if flavor == "sg":
        return half_partition(weight, tail)
    part = theta_inverse(theta_sequence(weight, tail))
    if part is None:
        raise DomainError(f"tail {tail} coordinates are not in the image of theta")
    return part


def _tail_polynomial(flavor: str, partition: tuple, indices: list[int]):
    """The tail Levi character and the doubled index of each of its variables."""
    if flavor in ("g", "sg"):
        return schur(partition, len(indices)), list(indices)
    integer = [m for m in indices if m % 2 == 0]
    half = [m for m in indices if m % 2 == 1]
    return hook_schur(partition, len(integer), len(half)), integer + half


def _tail_terms(weight: Weight, flavor: str, rank, tail: int, fs: FundamentalSystem,
                frame: RootFrame) -> dict:
    """Depth vectors of the tail Levi factor relative to the highest weight."""
    indices = tail_indices(flavor, rank)
    part = _tail_partition_for(weight, flavor, tail)
    poly, variables = _tail_polynomial(flavor, part, indices)
    if not poly:
        raise DomainError(f"tail partition {part} does not fit rank {rank}")
    top = {m: weight.coeff(_eps_symbol(tail, m)) for m in indices}
    size = len(frame.ids)
    positions = [frame.ids.index(tail_vertex(tail, m)) if tail_vertex(tail, m) in frame.ids else None
                 for m in indices[:-1]]
    out: dict = {}
    for exponents, c in poly.terms.items():
        content = dict(zip(variables, exponents))
        depth = [0] * size
        running = Fraction(0)
        for k, m in enumerate(indices[:-1]):
            running += top[m] - content.get(m, 0)
            if running:
                if positions[k] is None or running < 0 or running.denominator != 1:
                    raise ConsistencyError("tail monomial lies above the highest weight")
                depth[positions[k]] = int(running)
        running += top[indices[-1]] - content.get(indices[-1], 0)
        if running:
            raise ConsistencyError("tail monomial changes the tail degree")
        key = tuple(depth)
        out[key] = out.get(key, 0) + c
    return out


def _eps_symbol(tail: int, index: int):
    from .weights import Eps

    return Eps(tail, index)


def _head_terms(weight: Weight, head: HeadSpec, fs: FundamentalSystem, frame: RootFrame,
                levi_heads: Sequence[str], cutoff: int) -> dict:
    levi_heads = [i for i in fs.ids if i in set(levi_heads)]
    if not levi_heads:
        return {(0,) * len(frame.ids): 1}
    sub = head.base.restrict(levi_heads)
    if any(sub.parity[i] == ODD for i in sub.indices):
        raise UnsupportedError("odd head vertices in the Levi are handled by the oracle only")
    labels = [pairing(weight, fs.coroots[i]) for i in levi_heads]
    terms = weyl_kac_terms(sub, labels, cutoff)
    positions = [frame.ids.index(i) for i in levi_heads]
    out = {}
    for depth, c in terms.items():
        full = [0] * len(frame.ids)
        for p, d in zip(positions, depth):
            full[p] = d
        out[tuple(full)] = c
    return out


def levi_irreducible_char(head: HeadSpec, flavor: str, rank, weight: Weight, cutoff: int,
                          levi_heads: Sequence[str] = ()) -> FormalCharacter:
    """Irreducible Levi module: head Weyl-Kac factor times the tail (hook) Schur factor."""
    fs, frame = _frame_for(head, flavor, rank)
    character = FormalCharacter(weight, frame, _head_terms(weight, head, fs, frame, levi_heads, cutoff),
                                cutoff)
    for tail in head.tails:
        tail_char = FormalCharacter(Weight(), frame, _tail_terms(weight, flavor, rank, tail, fs, frame),
                                    cutoff)
        character = character * tail_char
    return character


def _nilradical_roots(sgcm: Sgcm, levi: Sequence[str], cutoff: int) -> dict:
    if cutoff < 1:
        return {}
    roots = oracle.root_multiplicities(sgcm, cutoff)
    levi_pos = {sgcm.pos(i) for i in levi}
    return {b: v for b, v in roots.items()
            if any(b[k] for k in range(len(b)) if k not in levi_pos)}


def parabolic_verma_char(head: HeadSpec, flavor: str, rank, weight: Weight, cutoff: int,
                         levi_heads: Sequence[str] = ()) -> FormalCharacter:
    """Parabolic Verma module: Levi irreducible times the PBW factor of the nilradical."""
    fs, frame = _frame_for(head, flavor, rank)
    sgcm = fs.to_sgcm()
    levi = levi_ids(head, fs, levi_heads)
    top = levi_irreducible_char(head, flavor, rank, weight, cutoff, levi_heads)
    pbw = pbw_factor(_nilradical_roots(sgcm, levi, cutoff), frame, cutoff)
    return top * pbw


def irreducible_char(head: HeadSpec, flavor: str, rank, weight: Weight, cutoff: int,
                     max_depth: int | None = None) -> FormalCharacter:
    """Irreducible highest weight module of the whole flavor algebra.

    Even algebras use the Weyl-Kac formula (the weight must be dominant
    integral); otherwise the lowering construction computes the weight spaces.
    """
    fs, frame = _frame_for(head, flavor, rank)
    sgcm = fs.to_sgcm()
    labels = weight_labels(weight, fs)
    if all(sgcm.parity[i] == EVEN for i in sgcm.indices):
        terms = weyl_kac_terms(sgcm, labels, cutoff)
    else:
        guard = cutoff if max_depth is None else max_depth
        terms = oracle.irreducible_character(sgcm, labels, cutoff, max_depth=guard)
    return FormalCharacter(weight, frame, terms, cutoff)


# --- typicality ---------------------------------------------------------------------------

def is_typical(sgcm: Sgcm, labels: Sequence, height: int | None = None) -> bool:
    """(lambda + rho, alpha) != 0 for every positive odd isotropic root alpha.

    The bilinear form comes from the signed symmetrizer and rho has labels
    a_ii / 2. Roots are enumerated up to the given height (all roots for
    finite-dimensional algebras when height is None).
    """
    sym = symmetrizer(sgcm, positive=False)
    if sym is None:
        raise UnsupportedError("matrix is not symmetrizable")
    height = height if height is not None else 2 * sgcm.size + 2
    roots = oracle.root_multiplicities(sgcm, height)
    rank = sgcm.size

    def form(u, v):
        return sum(u[i] * v[j] * sym[i] * sgcm.entries[i][j] for i in range(rank) for j in range(rank))

    shifted = [Fraction(labels[i]) + Fraction(sgcm.entries[i][i], 2) for i in range(rank)]
    for beta, (_, parity) in roots.items():
        if parity != ODD or form(beta, beta) != 0:
            continue
        value = sum(beta[i] * sym[i] * shifted[i] for i in range(rank))
        if value == 0:
            return False
    return True


# --- super duality transfer ------------------------------------------------------------------

@dataclass(frozen=True)
class TransferTable:
    """Column m_{mu lambda} of an even-side multiplicity table.

    covered lists every mu whose entry is known (absent entries are zero);
    frontier lists block weights just beyond the table's reach.
    """

    weight: Weight
    entries: Mapping
    covered: frozenset
    frontier: frozenset = frozenset()

    @classmethod
    def single(cls, weight: Weight) -> "TransferTable":
        return cls(weight, {weight: 1}, frozenset({weight}))


def even_side_table(head: HeadSpec, rank: int, weight: Weight, length_cutoff: int,
                    levi_heads: Sequence[str] = (), convention: str = "u=q") -> TransferTable:
    """Multiplicities m_{mu lambda} on the even side from parabolic KL polynomials."""
    fs, frame = _frame_for(head, "g", rank)
    sgcm = fs.to_sgcm()
    labels = weight_labels(weight, fs)
    if any(x.denominator != 1 for x in labels):
        raise DomainError("weight is not integral on the even side")
    labels = tuple(int(x) for x in labels)
    levi = levi_ids(head, fs, levi_heads)
    positions = [sgcm.pos(i) for i in levi]
    group = WeylGroup(sgcm)
    table = multiplicity_table(group, positions, labels, length_cutoff, convention)
    if labels not in table.depths:
        raise DomainError("weight is not dominant for the Levi")
    base = table.depths[labels]

    def to_weight(depth):
        return frame.weight_at(weight, [a - b for a, b in zip(depth, base)])

    entries, covered = {}, set()
    for mu, depth in table.depths.items():
        covered.add(to_weight(depth))
    for (mu, lam), value in table.entries.items():
        if lam == labels:
            entries[to_weight(table.depths[mu])] = value
    frontier = set()
    levi_set = frozenset(positions)
    for y in group.enumerate_up_to_length(length_cutoff + 1):
        if y.length != length_cutoff + 1 or group.left_descents(y) & levi_set:
            continue
        _, depth = dot_action(group, y, table.anchor)
        frontier.add(to_weight(depth))
    return TransferTable(weight, entries, frozenset(covered), frozenset(frontier - covered))


_TARGET_MAPS = {"sg": natural_map, "dg": theta_map}


def superduality_transfer(table: TransferTable, head: HeadSpec, rank, cutoff: int,
                          target: str = "sg", levi_heads: Sequence[str] = ()) -> FormalCharacter:
    """Signed sum of target-side parabolic Verma characters over the table column."""
    if target not in _TARGET_MAPS:
        raise DomainError("transfer targets are 'sg' and 'dg'")
    to_target = _TARGET_MAPS[target]
    fs, frame = _frame_for(head, target, rank)
    top = to_target(table.weight)
    total = FormalCharacter.zero(top, frame, cutoff)
    for mu in sorted(table.covered | table.frontier, key=repr):
        try:
            image = to_target(mu)
        except DomainError:
            continue
        if not fits_rank(image, target, rank):
            continue
        depth = frame.depth_of(top - image)
        if depth is None or any(d < 0 for d in depth):
            raise ConsistencyError(f"{mu!r} does not lie below the transferred weight")
        if sum(depth) > cutoff:
            continue
        if mu not in table.covered:
            raise IncompleteTableError(f"multiplicity table lacks {mu!r} within the cutoff", mu)
        m = table.entries.get(mu, 0)
        if not m:
            continue
        piece = parabolic_verma_char(head, target, rank, image, cutoff - sum(depth), levi_heads)
        total = total + piece.scaled(m)
    return total.with_cutoff(cutoff)


def fits_rank(weight: Weight, flavor: str, rank) -> bool:
    """True when every epsilon of the weight is carried by the algebra at this rank."""
    bound = tail_indices(flavor, rank)
    bound = bound[-1] if bound else 0
    return all(sym.index <= bound for sym, _ in weight.items() if sym[-1] == "eps")


# --- truncation ------------------------------------------------------------------------------

def truncate_char(character: FormalCharacter, flavor: str, n: int) -> FormalCharacter:
    """Keep exactly the terms whose weight survives truncation to rank n."""
    from .weights import omega_expansion

    def rewrite(w: Weight) -> Weight:
        out = Weight()
        for sym, c in w.items():
            if sym[-1] == "tomega":
                out = out + omega_expansion(n, sym.tail, flavor) * c
            else:
                out = out + Weight({sym: c})
        return out

    frame = character.frame.mapped(rewrite)
    kept = {d: c for d, c in character.terms.items()
            if truncate_weight(character.weight_of(d), flavor, n) is not None}
    return FormalCharacter(rewrite(character.anchor), frame, kept, character.cutoff)


# --- tensor products -------------------------------------------------------------------------

def _is_integrable(labels: Sequence, sgcm: Sgcm) -> bool:
    for i, x in zip(sgcm.indices, labels):
        x = Fraction(x)
        if x.denominator != 1:
            return False
        if sgcm.entries[sgcm.pos(i)][sgcm.pos(i)] == 2 and x < 0:
            return False
        if sgcm.parity[i] == ODD and sgcm.entries[sgcm.pos(i)][sgcm.pos(i)] == 2 and x % 2:
            return False
    return True


def tensor_decompose_integrable(head: HeadSpec, flavor: str, rank, first: Weight, second: Weight,
                                cutoff: int) -> dict:
    """Highest weights and multiplicities in first (x) second, by leading-term extraction.

    Only highest weights within the cutoff are certified.
    """
    fs, frame = _frame_for(head, flavor, rank)
    sgcm = fs.to_sgcm()
    product = irreducible_char(head, flavor, rank, first, cutoff) * \
        irreducible_char(head, flavor, rank, second, cutoff)
    residual = dict(product.terms)
    out: dict = {}
    while residual:
        depth = min(residual, key=lambda d: (sum(d), d))
        c = residual[depth]
        weight = product.weight_of(depth)
        labels = weight_labels(weight, fs)
        if c < 0 or not _is_integrable(labels, sgcm):
            raise ConsistencyError(f"leading term {weight!r} is not a dominant highest weight; "
                                   "the cutoff is probably too small")
        out[weight] = out.get(weight, 0) + c
        piece = irreducible_char(head, flavor, rank, weight, cutoff - sum(depth))
        for d, v in piece.terms.items():
            key = tuple(a + b for a, b in zip(d, depth))
            new = residual.get(key, 0) - c * v
            if new:
                residual[key] = new
            else:
                residual.pop(key, None)
    return out
