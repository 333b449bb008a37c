"""Brute-force ground truth at desk scale.

Root spaces and irreducible weight spaces are built by a lowering
construction: a vector of the contragredient algebra (or of L(lambda)) at
height >= 1 vanishes exactly when every raising operator e_i kills it, so
each slice is spanned by f_j applied to the previous slices and is stored
through the images under all e_i. The dimension obtained this way equals
the rank of the contravariant form on the slice.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from .cartan import Sgcm, symmetrizer
from .errors import DomainError, ResourceGuardError, UnsupportedError
from .linalg import EchelonBasis, sparse_add
from .symfunc import schur

MAX_SLICE = 5000
MAX_DEPTH = 8


def _roots_of_height(rank: int, height: int) -> list[tuple]:
    out = []

    def walk(pos, left, acc):
        if pos == rank - 1:
            out.append(tuple(acc + [left]))
            return
        for v in range(left, -1, -1):
            walk(pos + 1, left - v, acc + [v])

    if rank == 0:
        return []
    walk(0, height, [])
    return out


@dataclass
class _Slice:
    vectors: list = field(default_factory=list)  # per basis element: {i: {index: coeff}}
    echelon: EchelonBasis = field(default_factory=EchelonBasis)
    lowering: dict = field(default_factory=dict)  # (j, source index) -> coordinates here

    @property
    def dim(self) -> int:
        return len(self.vectors)


class _LoweringEngine:
    """Shared slice construction for the algebra n^- and for L(lambda)."""

    def __init__(self, sgcm: Sgcm, labels: Sequence | None, max_slice: int):
        self.a = [list(r) for r in sgcm.entries]
        self.rank = sgcm.size
        self.parity = [sgcm.parity[i] for i in sgcm.indices]
        self.labels = [Fraction(x) for x in labels] if labels is not None else None
        self.max_slice = max_slice
        self.slices: dict = {}
        self.built_height = 0
        zero = (0,) * self.rank
        base = _Slice()
        if self.labels is None:
            base.vectors = [None] * self.rank  # Cartan elements h_k
        else:
            base.vectors = [{}]  # highest weight vector
        self.slices[zero] = base
        if self.labels is None:
            for k in range(self.rank):
                sl = _Slice()
                sl.vectors.append({k: {k: Fraction(1)}})
                sl.echelon.add({(k, k): Fraction(1)})
                self.slices[self._unit(k)] = sl
            self.built_height = 1

    def _unit(self, k: int) -> tuple:
        return tuple(int(i == k) for i in range(self.rank))

    def _lower_from_zero(self, j: int, coords: Mapping) -> dict:
        """f_j applied to a combination in the height-0 slice."""
        if self.labels is None:
            # [f_j, h_k] = a_kj f_j
            total = sum((c * self.a[k][j] for k, c in coords.items()), Fraction(0))
            return {0: total} if total else {}
        sl = self.slices.get(self._unit(j))
        return self._apply(j, (0,) * self.rank, coords, sl)

    def _apply(self, j: int, source: tuple, coords: Mapping, target: _Slice | None) -> dict:
        if target is None:
            return {}
        out: dict = {}
        for idx, c in coords.items():
            sparse_add(out, target.lowering.get((j, idx), {}), c)
        return out

    def lower(self, j: int, source: tuple, coords: Mapping) -> dict:
        if not coords:
            return {}
        if not any(source):
            return self._lower_from_zero(j, coords)
        target_key = tuple(v + (k == j) for k, v in enumerate(source))
        return self._apply(j, source, coords, self.slices.get(target_key))

    def _h_eigen(self, i: int, gamma: tuple) -> Fraction:
        pair = sum(gamma[l] * self.a[i][l] for l in range(self.rank))
        base = self.labels[i] if self.labels is not None else 0
        return base - pair

    def build_height(self, height: int) -> None:
        start = self.built_height + 1
        for h in range(start, height + 1):
            for beta in _roots_of_height(self.rank, h):
                self._build_slice(beta)
            self.built_height = h

    def _build_slice(self, beta: tuple) -> None:
        sl = _Slice()
        for j in range(self.rank):
            if beta[j] == 0:
                continue
            gamma = tuple(v - (k == j) for k, v in enumerate(beta))
            source = self.slices.get(gamma)
            if source is None or source.dim == 0:
                continue
            for idx in range(source.dim):
                vector = self._candidate(beta, j, gamma, idx, source)
                flat = {(i, k): c for i, comp in vector.items() for k, c in comp.items()}
                new_index, combo = sl.echelon.add(flat)
                if new_index is not None:
                    sl.vectors.append(vector)
                    sl.lowering[(j, idx)] = {new_index: Fraction(1)}
                    if sl.dim > self.max_slice:
                        raise ResourceGuardError(f"slice {beta} exceeds {self.max_slice} vectors")
                else:
                    sl.lowering[(j, idx)] = {k: Fraction(v) for k, v in combo.items() if v}
        self.slices[beta] = sl

    def _candidate(self, beta, j, gamma, idx, source) -> dict:
        """Images under every e_i of f_j applied to basis vector idx of slice gamma."""
        out: dict = {}
        source_vec = source.vectors[idx]
        for i in range(self.rank):
            if beta[i] == 0:
                continue
            comp: dict = {}
            if i == j:
                eig = self._h_eigen(i, gamma)
                if eig:
                    comp[idx] = eig
            image = source_vec.get(i) if source_vec else None
            if image:
                below = tuple(v - (k == i) for k, v in enumerate(gamma))
                sign = -1 if (self.parity[i] and self.parity[j]) else 1
                sparse_add(comp, self.lower(j, below, image), sign)
            if comp:
                out[i] = comp
        return out

    def dimension(self, beta: tuple) -> int:
        sl = self.slices.get(tuple(beta))
        return sl.dim if sl else 0


# --- root multiplicities -----------------------------------------------------------------

def _parity_of(sgcm_parity: Sequence[int], beta: Sequence[int]) -> int:
    return sum(p * b for p, b in zip(sgcm_parity, beta)) % 2


def root_multiplicities(sgcm: Sgcm, height: int, require_symmetrizable: bool = True,
                        max_slice: int = MAX_SLICE) -> dict:
    """Positive roots of height <= height with (multiplicity, parity)."""
    if height < 1:
        raise DomainError("height must be at least 1")
    if require_symmetrizable and symmetrizer(sgcm, positive=False) is None:
        raise UnsupportedError("matrix is not symmetrizable")
    engine = _root_engine(sgcm, max_slice)
    out = {}
    for h in range(1, height + 1):
        engine.build_height(h)
        layer = {beta: engine.dimension(beta) for beta in _roots_of_height(sgcm.size, h)}
        layer = {b: d for b, d in layer.items() if d}
        for beta, dim in layer.items():
            out[beta] = (dim, _parity_of(engine.parity, beta))
        if not layer:
            break
    return out


_ENGINES: dict = {}


def _root_engine(sgcm: Sgcm, max_slice: int) -> _LoweringEngine:
    key = (sgcm, max_slice)
    engine = _ENGINES.get(key)
    if engine is None:
        engine = _LoweringEngine(sgcm, None, max_slice)
        _ENGINES[key] = engine
    return engine


def serre_vanishes(sgcm: Sgcm, i: int, j: int) -> bool:
    """ad(f_i)^{1-a_ij}(f_j) vanishes in the quotient (i != j, a_ii = 2)."""
    if i == j or sgcm.entries[i][i] != 2:
        raise DomainError("Serre relation needs distinct i, j with a_ii = 2")
    power = 1 - sgcm.entries[i][j]
    engine = _root_engine(sgcm, MAX_SLICE)
    engine.build_height(power + 1)
    coords = {0: Fraction(1)}
    current = tuple(int(k == j) for k in range(sgcm.size))
    for _ in range(power):
        coords = engine.lower(i, current, coords)
        current = tuple(v + (k == i) for k, v in enumerate(current))
    return not coords


# --- Verma and irreducible multiplicities ------------------------------------------------

def _partition_function(roots: Mapping, depth: int, rank: int) -> dict:
    """Dimensions of U(n^-) weight spaces from root data up to total depth."""
    series = {(0,) * rank: 1}
    for beta, (mult, parity) in sorted(roots.items()):
        height = sum(beta)
        top = 1 if parity else depth // height
        for _ in range(mult):
            nxt = dict(series)
            for vec, c in series.items():
                for k in range(1, top + 1):
                    if sum(vec) + k * height > depth:
                        break
                    key = tuple(a + k * b for a, b in zip(vec, beta))
                    nxt[key] = nxt.get(key, 0) + c
            series = nxt
    return series


def shapovalov_multiplicities(sgcm: Sgcm, labels: Sequence, depth: int,
                              max_depth: int = MAX_DEPTH, max_slice: int = MAX_SLICE) -> dict:
    """Map beta -> (Verma multiplicity, irreducible multiplicity) at weight lambda - beta."""
    if depth > max_depth:
        raise ResourceGuardError(f"depth {depth} exceeds the guard {max_depth}")
    if len(labels) != sgcm.size:
        raise DomainError("one label per vertex is required")
    roots = root_multiplicities(sgcm, max(depth, 1), require_symmetrizable=False, max_slice=max_slice)
    verma = _partition_function(roots, depth, sgcm.size)
    engine = _LoweringEngine(sgcm, labels, max_slice)
    engine.build_height(depth)
    out = {}
    for beta, count in verma.items():
        out[beta] = (count, engine.dimension(beta) if any(beta) else 1)
    return out


def irreducible_character(sgcm: Sgcm, labels: Sequence, depth: int,
                          max_depth: int = MAX_DEPTH, max_slice: int = MAX_SLICE) -> dict:
    """beta -> dim L(lambda)_{lambda - beta}, nonzero entries only.

    Construction stops early at the first depth with no weight vectors.
    """
    if depth > max_depth:
        raise ResourceGuardError(f"depth {depth} exceeds the guard {max_depth}")
    if len(labels) != sgcm.size:
        raise DomainError("one label per vertex is required")
    engine = _LoweringEngine(sgcm, labels, max_slice)
    out = {(0,) * sgcm.size: 1}
    for h in range(1, depth + 1):
        engine.build_height(h)
        layer = {b: engine.dimension(b) for b in _roots_of_height(sgcm.size, h)}
        layer = {b: d for b, d in layer.items() if d}
        if not layer:
            break
        out.update(layer)
    return out


def verma_character(sgcm: Sgcm, depth: int) -> dict:
    roots = root_multiplicities(sgcm, max(depth, 1), require_symmetrizable=False)
    return _partition_function(roots, depth, sgcm.size)


def _levi_restriction(sgcm: Sgcm, levi: Sequence[int]) -> Sgcm:
    return sgcm.restrict([sgcm.indices[k] for k in levi])


def parabolic_verma_oracle(sgcm: Sgcm, levi: Sequence[int], labels: Sequence, depth: int) -> dict:
    """Character of the parabolic Verma module as beta -> multiplicity."""
    levi = sorted(levi)
    rank = sgcm.size
    if levi:
        sub = _levi_restriction(sgcm, levi)
        small = irreducible_character(sub, [labels[k] for k in levi], depth, max_depth=max(depth, MAX_DEPTH))
        levi_char = {}
        for beta, c in small.items():
            full = [0] * rank
            for pos, k in enumerate(levi):
                full[k] = beta[pos]
            levi_char[tuple(full)] = c
    else:
        levi_char = {(0,) * rank: 1}
    roots = root_multiplicities(sgcm, max(depth, 1), require_symmetrizable=False)
    nilradical = {b: v for b, v in roots.items() if any(b[k] for k in range(rank) if k not in levi)}
    pbw = _partition_function(nilradical, depth, rank)
    out: dict = {}
    for b1, c1 in levi_char.items():
        for b2, c2 in pbw.items():
            key = tuple(x + y for x, y in zip(b1, b2))
            if sum(key) <= depth:
                out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def composition_multiplicities(sgcm: Sgcm, levi: Sequence[int], labels: Sequence, depth: int) -> dict:
    """m with ch L(lambda) = sum_beta m_beta ch Delta(lambda - beta), up to depth."""
    rank = sgcm.size
    target = irreducible_character(sgcm, labels, depth, max_depth=max(depth, MAX_DEPTH))
    residual = dict(target)
    out = {}
    order = sorted(set(residual) | set(verma_character(sgcm, depth)), key=lambda b: (sum(b), b))
    for beta in order:
        r = residual.get(beta, 0)
        if not r:
            continue
        mu = [Fraction(labels[i]) - sum(beta[l] * sgcm.entries[i][l] for l in range(rank)) for i in range(rank)]
        delta = parabolic_verma_oracle(sgcm, levi, mu, depth - sum(beta))
        out[beta] = r
        for b, c in delta.items():
            key = tuple(x + y for x, y in zip(beta, b))
            residual[key] = residual.get(key, 0) - r * c
    return out


# --- matrix model of gl(m|n) ------------------------------------------------------------

class MatrixSuperalgebraModel:
    """gl(m|n) spanned by elementary matrices E_ij with the upper triangular Borel."""

    def __init__(self, m: int, n: int = 0, verify: bool = True):
        if m < 0 or n < 0 or m + n == 0:
            raise DomainError("model dimension must be positive")
        self.m, self.n = m, n
        self.size = m + n
        self.basis = [(i, j) for i in range(self.size) for j in range(self.size)]
        if verify:
            self.verify_jacobi()

    def index_parity(self, i: int) -> int:
        return int(i >= self.m)

    def parity(self, x: tuple) -> int:
        return (self.index_parity(x[0]) + self.index_parity(x[1])) % 2

    def bracket(self, x: tuple, y: tuple) -> dict:
        (i, j), (k, l) = x, y
        out: dict = {}
        if j == k:
            out[(i, l)] = out.get((i, l), 0) + 1
        if l == i:
            sign = -1 if (self.parity(x) and self.parity(y)) else 1
            out[(k, j)] = out.get((k, j), 0) - sign
        return {key: v for key, v in out.items() if v}

    def bracket_linear(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for x, a in u.items():
            for y, b in v.items():
                sparse_add(out, self.bracket(x, y), a * b)
        return out

    def verify_jacobi(self) -> None:
        for x, y, z in product(self.basis, repeat=3):
            px, py = self.parity(x), self.parity(y)
            lhs = self.bracket_linear({x: 1}, self.bracket(y, z))
            rhs = self.bracket_linear(self.bracket(x, y), {z: 1})
            sparse_add(rhs, self.bracket_linear({y: 1}, self.bracket(x, z)), (-1) ** (px * py))
            diff = dict(lhs)
            sparse_add(diff, rhs, -1)
            if diff:
                raise DomainError(f"super Jacobi identity fails on {x}, {y}, {z}")

    def weight(self, x: tuple) -> tuple:
        vec = [0] * self.size
        vec[x[0]] += 1
        vec[x[1]] -= 1
        return tuple(vec)

    def positive_roots(self) -> dict:
        """Root vector -> (multiplicity, parity) for the upper triangular Borel."""
        out = {}
        for i, j in self.basis:
            if i < j:
                key = self.weight((i, j))
                mult, par = out.get(key, (0, self.parity((i, j))))
                out[key] = (mult + 1, par)
        return out

    def simple_root_coordinates(self, root: Sequence[int]) -> tuple:
        """Express an epsilon vector of the root lattice in simple roots E_{i,i+1}."""
        partial, out = 0, []
        for k in range(self.size - 1):
            partial += root[k]
            out.append(partial)
        if partial + root[-1] != 0:
            raise DomainError("vector is not in the root lattice")
        return tuple(out)

    def tau(self, x: tuple) -> dict:
        """Anti-linear twist: E_ij -> -(-1)^{p} E_ji on raising operators, -E_ji otherwise."""
        i, j = x
        if i < j and self.parity(x):
            return {(j, i): 1}
        return {(j, i): -1}


@dataclass(frozen=True)
class ModelModule:
    """Finite-dimensional module of a matrix model given by explicit matrices."""

    model: MatrixSuperalgebraModel
    weights: tuple  # epsilon weight of each basis vector
    parities: tuple
    action: Mapping  # basis element -> {(row, col): coeff}

    @property
    def dim(self) -> int:
        return len(self.weights)

    def act(self, x: tuple, vec: Mapping) -> dict:
        out: dict = {}
        for (r, c), a in self.action.get(x, {}).items():
            if c in vec:
                out[r] = out.get(r, 0) + a * vec[c]
        return {k: v for k, v in out.items() if v}

    def verify(self) -> None:
        model = self.model
        for x in model.basis:
            for y in model.basis:
                for col in range(self.dim):
                    v = {col: 1}
                    lhs = self.act(x, self.act(y, v))
                    sign = -1 if (model.parity(x) and model.parity(y)) else 1
                    sparse_add(lhs, self.act(y, self.act(x, v)), -sign)
                    rhs: dict = {}
                    for z, c in model.bracket(x, y).items():
                        sparse_add(rhs, self.act(z, v), c)
                    sparse_add(lhs, rhs, -1)
                    if lhs:
                        raise DomainError(f"module relation fails for {x}, {y}")


def trivial_module(model: MatrixSuperalgebraModel) -> ModelModule:
    return ModelModule(model, ((0,) * model.size,), (0,), {})


def natural_module(model: MatrixSuperalgebraModel) -> ModelModule:
    weights = tuple(tuple(int(k == i) for k in range(model.size)) for i in range(model.size))
    parities = tuple(model.index_parity(i) for i in range(model.size))
    action = {(i, j): {(i, j): 1} for i, j in model.basis}
    return ModelModule(model, weights, parities, action)


def adjoint_module(model: MatrixSuperalgebraModel) -> ModelModule:
    index = {x: k for k, x in enumerate(model.basis)}
    action = {}
    for x in model.basis:
        entries = {}
        for y in model.basis:
            for z, c in model.bracket(x, y).items():
                entries[(index[z], index[y])] = entries.get((index[z], index[y]), 0) + c
        action[x] = {k: v for k, v in entries.items() if v}
    weights = tuple(model.weight(x) for x in model.basis)
    parities = tuple(model.parity(x) for x in model.basis)
    return ModelModule(model, weights, parities, action)


def dual_module(module: ModelModule) -> ModelModule:
    """Restricted dual with (x.f)(v) = (-1)^{p(x)p(f)+1} f(tau(x) v)."""
    model = module.model
    action = {}
    for x in model.basis:
        entries: dict = {}
        for y, t in model.tau(x).items():
            for (r, c), a in module.action.get(y, {}).items():
                # (x.f_r)(v_c) picks the (r, c) entry of tau(x): f_r(tau(x) v_c)
                sign = -1 if (model.parity(x) and module.parities[r]) else 1
                entries[(c, r)] = entries.get((c, r), 0) - sign * t * a
        action[x] = {k: v for k, v in entries.items() if v}
    weights = module.weights
    return ModelModule(model, weights, module.parities, action)


# --- Kostant homology ------------------------------------------------------------------------

def _blocks(model: MatrixSuperalgebraModel, composition: Sequence[int]) -> list[int]:
    if sum(composition) != model.size or any(c <= 0 for c in composition):
        raise DomainError("composition must split the model dimension")
    out = []
    for b, c in enumerate(composition):
        out += [b] * c
    return out


def nilradicals(model: MatrixSuperalgebraModel, composition: Sequence[int]) -> tuple[list, list]:
    block = _blocks(model, composition)
    lower = [(i, j) for i, j in model.basis if block[i] > block[j]]
    upper = [(i, j) for i, j in model.basis if block[i] < block[j]]
    return lower, upper


def _check_even(model, elements):
    if any(model.parity(x) for x in elements):
        raise UnsupportedError("homology is implemented for even nilradicals only")


def _chain_basis(u: Sequence, module: ModelModule, degree: int) -> list:
    return [(wedge, v) for wedge in combinations(range(len(u)), degree) for v in range(module.dim)]


def _weight_of(model, u, wedge, module, v) -> tuple:
    total = list(module.weights[v])
    for k in wedge:
        w = model.weight(u[k])
        total = [a + b for a, b in zip(total, w)]
    return tuple(total)


def _wedge_insert(elements: dict, wedge_rest: tuple) -> dict:
    """Express z ^ x_{wedge_rest} for z in span(u) as signed sorted wedges."""
    out: dict = {}
    for k, c in elements.items():
        if k in wedge_rest:
            continue
        seq = (k,) + tuple(wedge_rest)
        inversions = sum(1 for a in wedge_rest if a < k)
        key = tuple(sorted(seq))
        out[key] = out.get(key, 0) + c * (-1) ** inversions
    return {k: v for k, v in out.items() if v}


def _boundary(model, u, module, degree: int) -> dict:
    """Sparse matrix of d: C_degree -> C_{degree-1}, keyed by (target, source)."""
    position = {x: k for k, x in enumerate(u)}
    out: dict = {}
    for wedge, v in _chain_basis(u, module, degree):
        source = (wedge, v)
        for pos, k in enumerate(wedge):
            rest = wedge[:pos] + wedge[pos + 1:]
            for r, c in module.act(u[k], {v: 1}).items():
                key = ((rest, r), source)
                out[key] = out.get(key, 0) + (-1) ** pos * c
        for p, q in combinations(range(len(wedge)), 2):
            br = model.bracket(u[wedge[p]], u[wedge[q]])
            if not br:
                continue
            coords = {position[z]: c for z, c in br.items()}
            rest = tuple(x for t, x in enumerate(wedge) if t not in (p, q))
            for new_wedge, c in _wedge_insert(coords, rest).items():
                key = ((new_wedge, v), source)
                out[key] = out.get(key, 0) + (-1) ** (p + q) * c
    return {k: v for k, v in out.items() if v}


def _rank_by_weight(matrix: dict, weight_of_source) -> dict:
    columns: dict = {}
    for (target, source), c in matrix.items():
        columns.setdefault(source, {})[target] = Fraction(c)
    ranks: dict = {}
    bases: dict = {}
    for source, col in columns.items():
        wt = weight_of_source(source)
        basis = bases.setdefault(wt, EchelonBasis())
        basis.add({_key(k): v for k, v in col.items()})
        ranks[wt] = basis.size
    return ranks


def _key(chain) -> tuple:
    wedge, v = chain
    return (len(wedge),) + tuple(wedge) + (-1, v)


def homology_weight_dimensions(model, composition, module: ModelModule, degree: int) -> dict:
    """weight -> dim H_degree(u^-, M) in that weight."""
    lower, _ = nilradicals(model, composition)
    _check_even(model, lower)
    if degree < 0 or degree > len(lower):
        return {}
    weight_of = lambda chain: _weight_of(model, lower, chain[0], module, chain[1])
    dims: dict = {}
    for chain in _chain_basis(lower, module, degree):
        wt = weight_of(chain)
        dims[wt] = dims.get(wt, 0) + 1
    rank_out = _rank_by_weight(_boundary(model, lower, module, degree), weight_of) if degree else {}
    rank_in = _rank_by_weight(_boundary(model, lower, module, degree + 1), weight_of) \
        if degree + 1 <= len(lower) else {}
    # boundary preserves weight, so ranks of incoming maps are indexed by the target weight too
    out = {}
    for wt, d in dims.items():
        value = d - rank_out.get(wt, 0) - rank_in.get(wt, 0)
        if value:
            out[wt] = value
    return out


def cohomology_weight_dimensions(model, composition, module: ModelModule, degree: int) -> dict:
    """weight -> dim H^degree(u^+, M) from the Chevalley-Eilenberg cochain complex."""
    _, upper = nilradicals(model, composition)
    _check_even(model, upper)
    if degree < 0 or degree > len(upper):
        return {}

    def cochains(k):
        # basis: functional dual to x_wedge, valued in vector v; weight = wt(v) - wt(wedge)
        return [(w, v) for w in combinations(range(len(upper)), k) for v in range(module.dim)]

    def weight(ch):
        wt = list(module.weights[ch[1]])
        for k in ch[0]:
            wt = [a - b for a, b in zip(wt, model.weight(upper[k]))]
        return tuple(wt)

    position = {x: k for k, x in enumerate(upper)}

    def differential(k):
        """Matrix of d: C^k -> C^{k+1} keyed by (target, source)."""
        out: dict = {}
        for wedge in combinations(range(len(upper)), k + 1):
            for pos, t in enumerate(wedge):
                rest = wedge[:pos] + wedge[pos + 1:]
                for v in range(module.dim):
                    for r, c in module.act(upper[t], {v: 1}).items():
                        key = ((wedge, r), (rest, v))
                        out[key] = out.get(key, 0) + (-1) ** pos * c
            for p, q in combinations(range(len(wedge)), 2):
                br = model.bracket(upper[wedge[p]], upper[wedge[q]])
                rest = tuple(x for s, x in enumerate(wedge) if s not in (p, q))
                for z, c in br.items():
                    z_index = position.get(z)
                    if z_index is None or z_index in rest:
                        continue
                    seq = tuple(sorted((z_index,) + rest))
                    inversions = sum(1 for a in rest if a < z_index)
                    for v in range(module.dim):
                        key = ((wedge, v), (seq, v))
                        out[key] = out.get(key, 0) + (-1) ** (p + q) * c * (-1) ** inversions
        return {key: v for key, v in out.items() if v}

    dims: dict = {}
    for ch in cochains(degree):
        dims[weight(ch)] = dims.get(weight(ch), 0) + 1
    rank_out = _rank_by_weight(differential(degree), weight) if degree < len(upper) else {}
    rank_in = {}
    if degree > 0:
        matrix = differential(degree - 1)
        rows: dict = {}
        for (target, source), c in matrix.items():
            rows.setdefault(source, {})[target] = Fraction(c)
        bases: dict = {}
        for source, col in rows.items():
            basis = bases.setdefault(weight(source), EchelonBasis())
            basis.add({_key(k): v for k, v in col.items()})
            rank_in[weight(source)] = basis.size
    out = {}
    for wt, d in dims.items():
        value = d - rank_out.get(wt, 0) - rank_in.get(wt, 0)
        if value:
            out[wt] = value
    return out


def _levi_character(model, composition, highest: Sequence[int]) -> dict:
    """Weight multiplicities of the irreducible Levi module of the given highest weight."""
    out = {(): 1}
    start = 0
    for size in composition:
        part = list(highest[start:start + size])
        shift = part[-1]
        shifted = [p - shift for p in part]
        poly = schur([p for p in shifted if p > 0], size)
        nxt = {}
        for prefix, c in out.items():
            for exp, d in poly.terms.items():
                key = prefix + tuple(e + shift for e in exp)
                nxt[key] = nxt.get(key, 0) + c * d
        out = nxt
        start += size
    return out


def _is_levi_dominant(weight: Sequence[int], composition) -> bool:
    start = 0
    for size in composition:
        part = weight[start:start + size]
        if any(a < b for a, b in zip(part, part[1:])):
            return False
        start += size
    return True


def decompose_levi(model, composition, character: Mapping) -> dict:
    """Split a Levi character into irreducible highest weights by leading terms."""
    residual = {k: v for k, v in character.items() if v}
    out = {}
    while residual:
        top = max(residual, key=_height_key)
        if not _is_levi_dominant(top, composition):
            raise DomainError(f"leading weight {top} is not Levi dominant")
        c = residual[top]
        out[top] = out.get(top, 0) + c
        for wt, d in _levi_character(model, composition, top).items():
            residual[wt] = residual.get(wt, 0) - c * d
            if not residual[wt]:
                del residual[wt]
    return out


def _height_key(weight: Sequence[int]) -> tuple:
    partial, keys = 0, []
    for v in weight:
        partial += v
        keys.append(partial)
    return tuple(keys)


def kostant_homology(model, composition, module: ModelModule, degree: int) -> list:
    """[(Levi highest weight, multiplicity)] in H_degree(u^-, M)."""
    dims = homology_weight_dimensions(model, composition, module, degree)
    return sorted(decompose_levi(model, composition, dims).items())


def klv_from_homology(model, composition, module: ModelModule) -> dict:
    """mu -> sum_n (-q)^{-n} [H_n(u^-, M) : L(l, mu)]."""
    from .coxkl import LaurentPolynomial

    lower, _ = nilradicals(model, composition)
    out: dict = {}
    for n in range(len(lower) + 1):
        for mu, mult in kostant_homology(model, composition, module, n):
            term = LaurentPolynomial({-n: mult * (-1) ** n})
            out[mu] = out.get(mu, LaurentPolynomial()) + term
    return {k: v for k, v in out.items() if v}
