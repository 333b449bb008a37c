"""Super generalized Cartan matrices, Dynkin diagrams and head/tail assembly."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ShapeError
from .weights import parse_tail_vertex, tail_vertex

EVEN, ODD = 0, 1
FLAVORS = ("dg", "g", "sg")


def _parity_code(value) -> int:
    if value in (0, "0", "even", False):
        return EVEN
    if value in (1, "1", "odd", True):
        return ODD
    raise DomainError(f"unknown parity {value!r}")


@dataclass(frozen=True)
class Sgcm:
    """Integer matrix with a parity-graded index set; a_ij = <alpha_j, alpha_i^vee>."""

    indices: tuple
    parity: Mapping
    entries: tuple

    def __init__(self, indices: Sequence, parity, entries: Sequence[Sequence[int]]):
        indices = tuple(str(i) for i in indices)
        if len(set(indices)) != len(indices):
            raise ShapeError("duplicate vertex ids")
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if len(rows) != len(indices) or any(len(r) != len(indices) for r in rows):
            raise ShapeError("matrix is not square over its index set")
        if isinstance(parity, Mapping):
            par = {str(k): _parity_code(v) for k, v in parity.items()}
        else:
            par = {i: _parity_code(v) for i, v in zip(indices, parity)}
        if set(par) != set(indices):
            raise ShapeError("parity must be given for every index")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "parity", dict(par))
        object.__setattr__(self, "entries", rows)

    def __hash__(self):
        return hash((self.indices, tuple(sorted(self.parity.items())), self.entries))

    def __eq__(self, other):
        if not isinstance(other, Sgcm):
            return NotImplemented
        return (self.indices == other.indices and self.parity == other.parity
                and self.entries == other.entries)

    @property
    def size(self) -> int:
        return len(self.indices)

    def pos(self, vertex: str) -> int:
        try:
            return self.indices.index(vertex)
        except ValueError:
            raise DomainError(f"unknown vertex {vertex!r}") from None

    def a(self, i: str, j: str) -> int:
        return self.entries[self.pos(i)][self.pos(j)]

    def is_odd(self, vertex: str) -> bool:
        return self.parity[vertex] == ODD

    def parities(self) -> tuple:
        return tuple(self.parity[i] for i in self.indices)

    def restrict(self, vertices: Iterable[str]) -> "Sgcm":
        keep = [v for v in self.indices if v in set(vertices)]
        pos = [self.pos(v) for v in keep]
        return Sgcm(keep, {v: self.parity[v] for v in keep},
                    [[self.entries[p][q] for q in pos] for p in pos])

    def reordered(self, order: Sequence[str]) -> "Sgcm":
        if sorted(order) != sorted(self.indices):
            raise ShapeError("reordering must be a permutation of the indices")
        pos = [self.pos(v) for v in order]
        return Sgcm(order, self.parity, [[self.entries[p][q] for q in pos] for p in pos])

    def to_json(self) -> dict:
        return {"indices": list(self.indices),
                "parity": ["odd" if self.parity[i] else "even" for i in self.indices],
                "matrix": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, data) -> "Sgcm":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            matrix = data["matrix"]
            indices = data.get("indices") or [str(k + 1) for k in range(len(matrix))]
            parity = data.get("parity") or ["even"] * len(matrix)
        except (KeyError, TypeError, AttributeError) as exc:
            raise DomainError(f"malformed matrix document: {exc}") from exc
        return cls(indices, parity, matrix)


@dataclass(frozen=True)
class ValidationReport:
    is_sgcm: bool
    is_anisotropic: bool
    violations: tuple


def validate_sgcm(matrix, parity=None, indices=None) -> ValidationReport:
    """Check conditions (C0)-(C3) and the anisotropy condition (C1')."""
    if isinstance(matrix, Sgcm):
        sgcm = matrix
    else:
        rows = [list(r) for r in matrix]
        if any(len(r) != len(rows) for r in rows):
            raise ShapeError("matrix is not square")
        if indices is None:
            indices = [str(k + 1) for k in range(len(rows))]
        if parity is None:
            parity = ["even"] * len(rows)
        sgcm = Sgcm(indices, parity, rows)
    violations = []
    ids = sgcm.indices
    for p, i in enumerate(ids):
        aii = sgcm.entries[p][p]
        odd = sgcm.parity[i] == ODD
        if not odd and aii != 2:
            violations.append(("C0", i, i))
        if odd and aii not in (0, 2):
            violations.append(("C1", i, i))
        for q, j in enumerate(ids):
            if p == q:
                continue
            aij = sgcm.entries[p][q]
            if aii == 2:
                if aij > 0 or (odd and aij % 2):
                    violations.append(("C2", i, j))
            if (aij == 0) != (sgcm.entries[q][p] == 0):
                violations.append(("C3", i, j))
    is_sgcm = not violations
    anisotropic = is_sgcm and all(sgcm.entries[p][p] == 2 for p in range(len(ids)))
    return ValidationReport(is_sgcm, anisotropic, tuple(violations))


def symmetrizer(sgcm: Sgcm, positive: bool = True) -> tuple[Fraction, ...] | None:
    """Diagonal D with D*A symmetric, first entry of each component equal to 1.

    With positive=False the entries may be negative; this signed variant is
    what isotropic odd roots typically need.
    """
    n = sgcm.size
    a = sgcm.entries
    d: list = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or (a[i][j] == 0 and a[j][i] == 0):
                    continue
                if a[i][j] == 0 or a[j][i] == 0:
                    return None
                value = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    return None
    if positive and any(x <= 0 for x in d):
        return None
    return tuple(d)


# --- Dynkin diagrams -------------------------------------------------------

@dataclass(frozen=True)
class DynkinDiagram:
    vertices: tuple  # (id, parity, diag)
    edges: tuple  # (i, j, (a_ij, a_ji))

    @classmethod
    def from_sgcm(cls, sgcm: Sgcm) -> "DynkinDiagram":
        vertices = tuple((i, sgcm.parity[i], sgcm.entries[p][p]) for p, i in enumerate(sgcm.indices))
        edges = []
        for p, i in enumerate(sgcm.indices):
            for q in range(p + 1, sgcm.size):
                aij, aji = sgcm.entries[p][q], sgcm.entries[q][p]
                if aij or aji:
                    edges.append((i, sgcm.indices[q], (aij, aji)))
        return cls(vertices, tuple(edges))

    def to_sgcm(self) -> Sgcm:
        ids = [v[0] for v in self.vertices]
        pos = {v: k for k, v in enumerate(ids)}
        entries = [[0] * len(ids) for _ in ids]
        for k, (_, _, diag) in enumerate(self.vertices):
            entries[k][k] = diag
        for i, j, (aij, aji) in self.edges:
            if i not in pos or j not in pos:
                raise DomainError(f"edge {i}-{j} references an unknown vertex")
            entries[pos[i]][pos[j]] = aij
            entries[pos[j]][pos[i]] = aji
        return Sgcm(ids, {v[0]: v[1] for v in self.vertices}, entries)

    @property
    def ids(self) -> tuple:
        return tuple(v[0] for v in self.vertices)

    def label(self, i: str, j: str) -> tuple[int, int] | None:
        for a, b, lab in self.edges:
            if (a, b) == (i, j):
                return lab
            if (a, b) == (j, i):
                return (lab[1], lab[0])
        return None

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": i, "parity": "odd" if p else "even", "diag": d}
                         for i, p, d in self.vertices],
            "edges": [{"from": i, "to": j, "label": [lab[0], lab[1]]} for i, j, lab in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "DynkinDiagram":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            vertices = tuple((str(v["id"]), _parity_code(v["parity"]), int(v["diag"]))
                             for v in data["vertices"])
            edges = tuple((str(e["from"]), str(e["to"]), (int(e["label"][0]), int(e["label"][1])))
                          for e in data.get("edges", []))
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise DomainError(f"malformed diagram document: {exc}") from exc
        for _, _, diag in vertices:
            if diag not in (0, 2):
                raise DomainError("diagonal entries must be 0 or 2")
        return cls(vertices, edges)

    def text(self) -> str:
        marks = {(EVEN, 2): "o", (ODD, 2): "*", (ODD, 0): "x", (EVEN, 0): "?"}
        lines = [f"{i} {marks.get((p, d), str(d))}" for i, p, d in self.vertices]
        lines += [f"{i} -- {j} ({a},{b})" for i, j, (a, b) in self.edges]
        return "\n".join(lines)


# --- head specifications ---------------------------------------------------

@dataclass(frozen=True)
class HeadSpec:
    """The matrix B plus attachments of the odd isotropic roots alpha_{-1}^{(t)}.

    attachments maps a tail id to a tuple of (vertex, b, c) where
    b = a_{vertex,-1} and c = a_{-1,vertex}. cross maps a pair of tail ids
    (t, u) with t < u to the label (a_{t,u}, a_{u,t}).
    """

    base: Sgcm
    attachments: Mapping
    cross: Mapping = field(default_factory=dict)
    name: str = ""

    def __hash__(self):
        return hash((self.base, tuple(sorted((t, tuple(v)) for t, v in self.attachments.items())),
                     tuple(sorted(self.cross.items()))))

    @property
    def tails(self) -> tuple:
        return tuple(sorted(self.attachments))

    def head_ids(self) -> tuple:
        return self.base.indices

    def even_heads(self) -> tuple:
        return tuple(i for i in self.base.indices if not self.base.is_odd(i))

    def head_matrix(self) -> Sgcm:
        ids = list(self.base.indices) + [tail_vertex(t, -2) for t in self.tails]
        parity = dict(self.base.parity)
        n = len(self.base.indices)
        entries = [list(r) + [0] * len(self.tails) for r in self.base.entries]
        entries += [[0] * len(ids) for _ in self.tails]
        for k, t in enumerate(self.tails):
            parity[tail_vertex(t, -2)] = ODD
            row = n + k
            for vertex, b, c in self.attachments[t]:
                p = self.base.pos(vertex)
                entries[p][row] = b
                entries[row][p] = c
        for (t, u), (dtu, dut) in self.cross.items():
            p, q = n + self.tails.index(t), n + self.tails.index(u)
            entries[p][q] = dtu
            entries[q][p] = dut
        return Sgcm(ids, parity, entries)


def check_head_condition(head: HeadSpec) -> tuple:
    """Violations of condition (A) together with SGCM violations of B and the head matrix."""
    problems = []
    report = validate_sgcm(head.base)
    problems += [("B",) + v for v in report.violations]
    for t in head.tails:
        if not head.attachments[t] and head.base.size:
            problems.append(("A", f"tail {t} has no attachment"))
        for vertex, b, c in head.attachments[t]:
            if vertex not in head.base.indices:
                problems.append(("A", f"unknown vertex {vertex}"))
                continue
            if b == 0 or c == 0:
                problems.append(("A", f"zero label at {vertex}"))
                continue
            if head.base.a(vertex, vertex) == 2:
                if head.base.is_odd(vertex):
                    if b > 0 or b % 2:
                        problems.append(("A", f"b at odd vertex {vertex} not in -2Z+"))
                elif b > 0:
                    problems.append(("A", f"b at vertex {vertex} not in -Z+"))
    for (t, u), (x, y) in head.cross.items():
        if t not in head.attachments or u not in head.attachments:
            problems.append(("A", f"cross edge between unknown tails {t},{u}"))
        elif (x == 0) != (y == 0):
            problems.append(("A", f"cross edge {t}-{u} has one zero label"))
    if not problems:
        problems += [("hd",) + v for v in validate_sgcm(head.head_matrix()).violations]
    return tuple(problems)


def satisfies_condition_c(head: HeadSpec) -> bool:
    """All off-diagonal entries of the head matrix are non-positive."""
    m = head.head_matrix()
    return all(m.entries[p][q] <= 0 for p in range(m.size) for q in range(m.size) if p != q)


# --- merged diagrams ----------------------------------------------------------

def doubled_rank(rank, flavor: str) -> int:
    """Rank as stored: 2r for the dg flavor, n itself for g and sg."""
    if flavor not in FLAVORS:
        raise DomainError(f"unknown flavor {flavor!r}")
    value = Fraction(rank)
    if flavor == "dg":
        doubled = value * 2
        if doubled.denominator != 1 or (doubled != -2 and doubled < 0):
            raise DomainError(f"dg rank {rank} must lie in {{-1}} or the non-negative half-integers")
        return int(doubled)
    if value.denominator != 1:
        raise DomainError(f"{flavor} rank must be an integer")
    n = int(value)
    if flavor == "g" and n < 1:
        raise DomainError("g rank must be a positive integer")
    if flavor == "sg" and n < -1:
        raise DomainError("sg rank must be -1 or a non-negative integer")
    return n


def tail_chain(flavor: str, rank) -> list[tuple[int, int, int]]:
    """Tail vertices as (doubled index, parity, diagonal) for one tail."""
    stored = doubled_rank(rank, flavor)
    if flavor == "dg":
        out = [(-2, ODD, 0)]
        out += [(m, ODD, 0) for m in range(1, stored + 1)] if stored >= 1 else []
        return out
    if flavor == "g":
        return [(-2, EVEN, 2)] + [(2 * j, EVEN, 2) for j in range(1, stored)]
    return [(-2, ODD, 0)] + [(2 * j - 1, EVEN, 2) for j in range(1, stored + 1)]


def _chain_label(flavor: str, first: int, second: int) -> tuple[int, int]:
    if flavor == "dg":
        if first == -2:
            return (1, 1)
        sign = (-1) ** first
        return (sign, sign)
    if flavor == "sg" and first == -2:
        return (1, -1)
    return (-1, -1)


def build_merged_diagram(head: HeadSpec, ranks, flavor: str) -> DynkinDiagram:
    """Head diagram merged with one tail per attachment in the chosen flavor.

    ranks is a single rank or a map tail id -> rank; dg ranks may be
    half-integers, g and sg ranks are integers.
    """
    if flavor not in FLAVORS:
        raise DomainError(f"unknown flavor {flavor!r}")
    problems = check_head_condition(head)
    if problems:
        raise DomainError(f"head violates its conditions: {problems[0]}")
    if not isinstance(ranks, Mapping):
        ranks = {t: ranks for t in head.tails}
    base = head.base
    vertices = [(i, base.parity[i], base.a(i, i)) for i in base.indices]
    edges = [e for e in DynkinDiagram.from_sgcm(base).edges]
    for t in head.tails:
        if t not in ranks:
            raise DomainError(f"no rank given for tail {t}")
        chain = tail_chain(flavor, ranks[t])
        for index, par, diag in chain:
            vertices.append((tail_vertex(t, index), par, diag))
        anchor = tail_vertex(t, -2)
        for vertex, b, c in head.attachments[t]:
            edges.append((vertex, anchor, (b, c)))
        for (first, _, _), (second, _, _) in zip(chain, chain[1:]):
            edges.append((tail_vertex(t, first), tail_vertex(t, second),
                          _chain_label(flavor, first, second)))
    for (t, u), label in head.cross.items():
        edges.append((tail_vertex(t, -2), tail_vertex(u, -2), tuple(label)))
    return DynkinDiagram(tuple(vertices), tuple(edges))


def _max_tail_index(diagram: DynkinDiagram, tail: int) -> int:
    found = [parse_tail_vertex(v)[1] for v in diagram.ids
             if parse_tail_vertex(v) and parse_tail_vertex(v)[0] == tail]
    return max(found) if found else -3


def truncate_diagram(diagram: DynkinDiagram, flavor: str, n) -> DynkinDiagram:
    """Drop tail vertices beyond rank n (dg ranks may be half-integers)."""
    stored = doubled_rank(n, flavor)
    keep_max = {"dg": stored, "g": 2 * (stored - 1), "sg": 2 * stored - 1}[flavor]
    tails = {parse_tail_vertex(v)[0] for v in diagram.ids if parse_tail_vertex(v)}
    for t in tails:
        if keep_max > _max_tail_index(diagram, t) and keep_max > 0:
            raise DomainError(f"rank {n} exceeds the built rank of tail {t}")
    vertices = []
    for v in diagram.vertices:
        parsed = parse_tail_vertex(v[0])
        if parsed is None or parsed[1] == -2 or parsed[1] <= keep_max:
            vertices.append(v)
    ids = {v[0] for v in vertices}
    edges = tuple(e for e in diagram.edges if e[0] in ids and e[1] in ids)
    return DynkinDiagram(tuple(vertices), edges)


# --- presets -------------------------------------------------------------------

def _chain(ids: Sequence[str], labels: Sequence[tuple[int, int]], odd=()) -> Sgcm:
    n = len(ids)
    entries = [[2 if p == q else 0 for q in range(n)] for p in range(n)]
    for k, (x, y) in enumerate(labels):
        entries[k][k + 1] = x
        entries[k + 1][k] = y
    return Sgcm(ids, {i: ODD if i in odd else EVEN for i in ids}, entries)


def _direct_sum(*parts: Sgcm) -> Sgcm:
    ids = [i for p in parts for i in p.indices]
    parity = {i: p.parity[i] for p in parts for i in p.indices}
    n = len(ids)
    entries = [[0] * n for _ in range(n)]
    offset = 0
    for p in parts:
        for a in range(p.size):
            for b in range(p.size):
                entries[offset + a][offset + b] = p.entries[a][b]
        offset += p.size
    return Sgcm(ids, parity, entries)


def _type_a(ids):
    return _chain(ids, [(-1, -1)] * (len(ids) - 1))


def _type_b(ids):
    """Double bond at the start with the short root second."""
    return _chain(ids, [(-2, -1)] + [(-1, -1)] * (len(ids) - 2))


def _type_c(ids):
    return _chain(ids, [(-1, -2)] + [(-1, -1)] * (len(ids) - 2))


def _type_d(ids):
    """Fork at the start: ids[0], ids[1] both joined to ids[2]."""
    n = len(ids)
    entries = [[2 if p == q else 0 for q in range(n)] for p in range(n)]
    for leaf in (0, 1):
        entries[leaf][2] = entries[2][leaf] = -1
    for k in range(2, n - 1):
        entries[k][k + 1] = entries[k + 1][k] = -1
    return Sgcm(ids, {i: EVEN for i in ids}, entries)


def _ids(prefix: str, count: int) -> list[str]:
    return [f"{prefix}{k}" for k in range(1, count + 1)]


def _require(cond: bool, name: str):
    if not cond:
        raise DomainError(f"parameters out of range for preset {name}")


def preset(name: str) -> HeadSpec:
    """Head diagrams printed for the exceptional, classical and affine cases."""
    key = name.replace(" ", "")
    m = re.fullmatch(r"(G3|G\(3\))", key)
    if m:
        base = _chain(["1", "2"], [(-3, -1)])
        return HeadSpec(base, {0: (("1", -1, -1),)}, name="G3")
    if re.fullmatch(r"F31|F\(3\|1\)|F4", key):
        base = Sgcm(["1", "2", "3"], ["even"] * 3, [[2, -2, 0], [-1, 2, -1], [0, -1, 2]])
        return HeadSpec(base, {0: (("1", -1, -1),)}, name="F31")
    m = re.fullmatch(r"D21a\((\d+)\)|D\(2\|1,(\d+)\)", key)
    if m:
        alpha = int(m.group(1) or m.group(2))
        _require(alpha >= 1, name)
        base = Sgcm(["1", "2"], ["even"] * 2, [[2, 0], [0, 2]])
        return HeadSpec(base, {0: (("1", -1, -1), ("2", -1, -alpha))}, name=f"D21a({alpha})")
    m = re.fullmatch(r"gl\((\d+)\|1\)", key)
    if m:
        size = int(m.group(1))
        _require(size >= 1, name)
        ids = _ids("", size - 1)
        base = _type_a(ids) if ids else Sgcm([], {}, [])
        attach = ((ids[-1], -1, -1),) if ids else ()
        return HeadSpec(base, {0: attach}, name=f"gl({size}|1)")
    m = re.fullmatch(r"osp\((\d+)\|(\d+)\)", key)
    if m:
        even, odd = int(m.group(1)), int(m.group(2))
        if odd == 2 and even % 2 == 1 and even >= 5:
            size = (even - 1) // 2
            ids = _ids("", size)
            return HeadSpec(_type_b(ids), {0: ((ids[-1], -1, -1),)}, name=key)
        if odd == 2 and even % 2 == 0 and even >= 4:
            size = even // 2
            if size == 2:
                base = Sgcm(["1", "2"], ["even"] * 2, [[2, 0], [0, 2]])
                return HeadSpec(base, {0: (("1", -1, -1), ("2", -1, -1))}, name=key)
            ids = _ids("", size)
            return HeadSpec(_type_d(ids), {0: ((ids[-1], -1, -1),)}, name=key)
        if even == 2 and odd % 2 == 0 and odd >= 4:
            ids = _ids("", odd // 2)
            return HeadSpec(_type_c(ids), {0: ((ids[-1], -1, -1),)}, name=key)
        if even == 3 and odd % 2 == 0 and odd >= 4:
            ids = _ids("", odd // 2)
            base = _chain(ids, [(-2, -1)] + [(-1, -1)] * (len(ids) - 2), odd={ids[0]})
            return HeadSpec(base, {0: ((ids[-1], -1, -1),)}, name=key)
        raise DomainError(f"no preset for {name}")
    m = re.fullmatch(r"affine([ABD])(?:\((\d+),(\d+)\))?", key)
    if m:
        kind = m.group(1)
        defaults = {"A": (1, 1), "B": (2, 2), "D": (3, 2)}[kind]
        k, l = (int(m.group(2)), int(m.group(3))) if m.group(2) else defaults
        if kind == "B":
            _require(k >= 2 and l >= 2, name)
            c_ids, b_ids = _ids("c", k), _ids("b", l)
            base = _direct_sum(_type_c(c_ids), _type_b(b_ids))
            return HeadSpec(base, {0: ((c_ids[-1], -1, -1), (b_ids[-1], -1, 1))},
                            name=f"affineB({k},{l})")
        if kind == "D":
            _require(k >= 3 and l >= 2, name)
            d_ids, c_ids = _ids("d", k), _ids("c", l)
            base = _direct_sum(_type_d(d_ids), _type_c(c_ids))
            return HeadSpec(base, {0: ((d_ids[-1], -1, -1), (c_ids[-1], -1, 1))},
                            name=f"affineD({k},{l})")
        _require(k >= 1 and l >= 1, name)
        a_ids, b_ids = _ids("a", k), _ids("b", l)
        base = _direct_sum(_type_a(a_ids), _type_a(b_ids))
        return HeadSpec(base, {1: ((a_ids[0], -1, 1), (b_ids[-1], -1, -1)),
                               2: ((b_ids[0], -1, 1), (a_ids[-1], -1, -1))},
                        name=f"affineA({k},{l})")
    raise DomainError(f"unknown preset {name!r}")


def matrix_preset(name: str) -> Sgcm:
    """Plain Cartan matrices by name, or the head matrix of a head preset."""
    key = name.replace(" ", "")
    m = re.fullmatch(r"([ABCD])(\d+)", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        ids = _ids("", n)
        if kind == "A" and n >= 1:
            return _type_a(ids) if n > 1 else Sgcm(["1"], ["even"], [[2]])
        if kind == "B" and n >= 2:
            return _chain(ids, [(-1, -1)] * (n - 2) + [(-2, -1)])
        if kind == "C" and n >= 2:
            return _chain(ids, [(-1, -1)] * (n - 2) + [(-1, -2)])
        if kind == "D" and n >= 4:
            return _type_d(ids)
        raise DomainError(f"no matrix preset {name}")
    if key in ("sl(2)", "sl2"):
        return Sgcm(["1"], ["even"], [[2]])
    if key in ("sl(3)", "sl3"):
        return _type_a(["1", "2"])
    if key == "G2":
        return _chain(["1", "2"], [(-1, -3)])
    if key in ("affineA1", "affine_sl2"):
        return Sgcm(["0", "1"], ["even", "even"], [[2, -2], [-2, 2]])
    if key in ("gl(1|1)", "sl(1|1)"):
        return Sgcm(["t0:-2"], ["odd"], [[0]])
    return preset(name).head_matrix()
