"""Weyl groups of even diagrams, Bruhat order, R- and Kazhdan-Lusztig polynomials."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cartan import Sgcm
from .errors import ConsistencyError, DomainError, ResourceGuardError, UnsupportedError

CONVENTIONS = ("u=-1", "u=q")


# --- Laurent polynomials --------------------------------------------------------

@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in one variable q."""

    coeffs: Mapping  # exponent -> nonzero int

    def __init__(self, coeffs: Mapping | None = None):
        object.__setattr__(self, "coeffs", {int(k): int(v) for k, v in (coeffs or {}).items() if v})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "LaurentPolynomial":
        return cls({exponent: c})

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({k: v * other for k, v in self.coeffs.items()})
        out: dict = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: v for e, v in self.coeffs.items()})

    def bar(self) -> "LaurentPolynomial":
        return LaurentPolynomial({-e: v for e, v in self.coeffs.items()})

    def below(self, bound: Fraction) -> "LaurentPolynomial":
        """Terms with exponent strictly less than bound."""
        return LaurentPolynomial({e: v for e, v in self.coeffs.items() if e < bound})

    def evaluate(self, value=1):
        value = Fraction(value)
        return sum((c * value ** e for e, c in self.coeffs.items()), Fraction(0))

    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def coefficient(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def text(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            else:
                mono = f"{var}^{e}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            parts.append(("-" if c < 0 else "+") + body)
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __repr__(self):
        return f"LaurentPolynomial({self.text()})"


Q = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()


# --- Coxeter groups ----------------------------------------------------------------

@dataclass(frozen=True)
class CoxeterElement:
    """Element stored by its lexicographically least reduced word."""

    word: tuple
    key: tuple  # labels of w(rho), which determine w

    @property
    def length(self) -> int:
        return len(self.word)

    def __repr__(self):
        return "e" if not self.word else "s" + ".s".join(str(i + 1) for i in self.word)


class WeylGroup:
    """Weyl group of a generalized Cartan matrix acting on weight labels."""

    def __init__(self, gcm: Sgcm, max_elements: int = 200_000):
        if any(gcm.is_odd(i) for i in gcm.indices):
            raise UnsupportedError("Weyl groups are built for even diagrams only")
        if any(gcm.entries[p][p] != 2 for p in range(gcm.size)):
            raise DomainError("diagonal entries must be 2")
        self.gcm = gcm
        self.rank = gcm.size
        self.a = [list(r) for r in gcm.entries]
        self.max_elements = max_elements
        self._by_key: dict = {}
        self._bruhat: dict = {}
        self._lower: dict = {}
        self._kl: dict = {}
        self._r: dict = {}
        self._lock = threading.RLock()
        self.identity = self._element_from_key((1,) * self.rank)

    # -- labels and words -------------------------------------------------------

    def reflect_labels(self, i: int, labels: Sequence) -> tuple:
        ci = labels[i]
        return tuple(labels[j] - ci * self.a[j][i] for j in range(self.rank))

    def dot_labels(self, i: int, labels: Sequence) -> tuple:
        """s_i . lambda in labels <lambda, alpha_j^vee>."""
        shift = labels[i] + 1
        return tuple(labels[j] - shift * self.a[j][i] for j in range(self.rank))

    def _element_from_key(self, key: tuple) -> CoxeterElement:
        found = self._by_key.get(key)
        if found is not None:
            return found
        word = []
        current = key
        while any(c < 0 for c in current):
            i = min(j for j, c in enumerate(current) if c < 0)
            word.append(i)
            current = self.reflect_labels(i, current)
            if len(word) > 10_000:
                raise ResourceGuardError("reduced word too long")
        element = CoxeterElement(tuple(word), key)
        with self._lock:
            if len(self._by_key) >= self.max_elements:
                raise ResourceGuardError("Weyl group element cache exhausted")
            self._by_key[key] = element
        return element

    def from_word(self, word: Iterable[int]) -> CoxeterElement:
        labels = (1,) * self.rank
        for i in reversed(list(word)):
            if not 0 <= i < self.rank:
                raise DomainError(f"generator {i} out of range")
            labels = self.reflect_labels(i, labels)
        return self._element_from_key(labels)

    def generator(self, i: int) -> CoxeterElement:
        return self.from_word([i])

    def left_mul(self, i: int, w: CoxeterElement) -> CoxeterElement:
        return self._element_from_key(self.reflect_labels(i, w.key))

    def right_mul(self, w: CoxeterElement, i: int) -> CoxeterElement:
        return self.from_word(w.word + (i,))

    def multiply(self, x: CoxeterElement, y: CoxeterElement) -> CoxeterElement:
        return self.from_word(x.word + y.word)

    def inverse(self, w: CoxeterElement) -> CoxeterElement:
        return self.from_word(tuple(reversed(w.word)))

    def left_descents(self, w: CoxeterElement) -> frozenset:
        return frozenset(i for i, c in enumerate(w.key) if c < 0)

    def right_descents(self, w: CoxeterElement) -> frozenset:
        return self.left_descents(self.inverse(w))

    def act_on_root(self, w: CoxeterElement, root: Sequence[int]) -> tuple:
        """w(root) in simple-root coordinates."""
        vec = list(root)
        for i in reversed(w.word):
            pair = sum(vec[k] * self.a[i][k] for k in range(self.rank))
            vec[i] -= pair
        return tuple(vec)

    def enumerate_up_to_length(self, max_length: int) -> list[CoxeterElement]:
        layer = [self.identity]
        seen = {self.identity.key}
        out = [self.identity]
        for _ in range(max_length):
            nxt = []
            for w in layer:
                for i in range(self.rank):
                    if w.key[i] > 0:
                        key = self.reflect_labels(i, w.key)
                        if key not in seen:
                            seen.add(key)
                            nxt.append(self._element_from_key(key))
            if not nxt:
                break
            out += nxt
            layer = nxt
        return out

    def longest_element(self, subset: Iterable[int] | None = None, limit: int = 100) -> CoxeterElement:
        """Longest element of the parabolic subgroup on subset (must be finite)."""
        subset = sorted(range(self.rank) if subset is None else set(subset))
        w = self.identity
        for _ in range(limit * max(1, len(subset)) + 1):
            grow = [i for i in subset if w.key[i] > 0]
            if not grow:
                return w
            w = self.left_mul(grow[0], w)
        raise UnsupportedError("parabolic subgroup appears to be infinite")

    # -- Bruhat order -----------------------------------------------------------

    def bruhat_le(self, x: CoxeterElement, w: CoxeterElement) -> bool:
        if x.length > w.length:
            return False
        if x.length == w.length:
            return x.key == w.key
        if x.length == 0:
            return True
        memo_key = (x.key, w.key)
        if memo_key in self._bruhat:
            return self._bruhat[memo_key]
        s = w.word[0]
        sw = self.left_mul(s, w)
        sx = self.left_mul(s, x)
        result = self.bruhat_le(sx, sw) if sx.length < x.length else self.bruhat_le(x, sw)
        with self._lock:
            self._bruhat[memo_key] = result
        return result

    def lower_interval(self, w: CoxeterElement) -> list[CoxeterElement]:
        """All z <= w, from subwords of the reduced word."""
        if w.key in self._lower:
            return self._lower[w.key]
        keys = {self.identity.key}
        for i in reversed(w.word):
            keys |= {self.reflect_labels(i, k) for k in keys}
        out = sorted((self._element_from_key(k) for k in keys), key=lambda e: (e.length, e.word))
        with self._lock:
            self._lower[w.key] = out
        return out

    def interval(self, x: CoxeterElement, w: CoxeterElement) -> list[CoxeterElement]:
        return [z for z in self.lower_interval(w) if self.bruhat_le(x, z)]

    # -- R and KL polynomials ---------------------------------------------------

    def r_polynomial(self, x: CoxeterElement, w: CoxeterElement) -> LaurentPolynomial:
        if not self.bruhat_le(x, w):
            return ZERO
        if x.key == w.key:
            return ONE
        memo_key = (x.key, w.key)
        if memo_key in self._r:
            return self._r[memo_key]
        s = w.word[0]
        sw = self.left_mul(s, w)
        sx = self.left_mul(s, x)
        if sx.length < x.length:
            result = self.r_polynomial(sx, sw)
        else:
            result = (Q - 1) * self.r_polynomial(x, sw) + Q * self.r_polynomial(sx, sw)
        with self._lock:
            self._r[memo_key] = result
        return result

    def kl_polynomial(self, x: CoxeterElement, w: CoxeterElement) -> LaurentPolynomial:
        """P_{x,w} by the standard left-descent recursion."""
        if not self.bruhat_le(x, w):
            return ZERO
        if x.key == w.key:
            return ONE
        memo_key = (x.key, w.key)
        if memo_key in self._kl:
            return self._kl[memo_key]
        s = w.word[0]
        v = self.left_mul(s, w)
        sx = self.left_mul(s, x)
        c = 1 if sx.length < x.length else 0
        result = self.kl_polynomial(sx, v).shift(1 - c) + self.kl_polynomial(x, v).shift(c)
        for z in self.interval(x, v):
            if z.key == v.key or s not in self.left_descents(z):
                continue
            mu = self.mu(z, v)
            if mu:
                result = result - self.kl_polynomial(x, z).shift((w.length - z.length) // 2) * mu
        bound = Fraction(w.length - x.length - 1, 2)
        degree = result.degree()
        if result.coeffs and (min(result.coeffs) < 0 or degree > bound):
            raise ConsistencyError(f"degree bound violated for P({x}, {w})")
        with self._lock:
            self._kl[memo_key] = result
        return result

    def mu(self, x: CoxeterElement, w: CoxeterElement) -> int:
        gap = w.length - x.length
        if gap <= 0 or gap % 2 == 0:
            return 0
        return self.kl_polynomial(x, w).coefficient((gap - 1) // 2)

    def kl_from_r(self, x: CoxeterElement, w: CoxeterElement) -> LaurentPolynomial:
        """P_{x,w} recovered from R-polynomials alone via the bar-invariance condition."""
        return parabolic_kl(self, (), x, w, "u=-1")

    def is_min_coset_rep(self, w: CoxeterElement, subset: Iterable[int]) -> bool:
        """True iff w is minimal in w W_J (no right descent in J)."""
        return not (self.right_descents(w) & set(subset))


def weyl_group(gcm: Sgcm) -> WeylGroup:
    return WeylGroup(gcm)


# --- parabolic polynomials -------------------------------------------------------------

def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise DomainError(f"convention must be one of {CONVENTIONS}")


def parabolic_r(group: WeylGroup, subset: Sequence[int], x, w, convention: str = "u=-1",
                memo: dict | None = None) -> LaurentPolynomial:
    _check_convention(convention)
    subset = frozenset(subset)
    memo = {} if memo is None else memo
    u = -ONE if convention == "u=-1" else Q

    def rec(x, w):
        if not group.bruhat_le(x, w):
            return ZERO
        if x.key == w.key:
            return ONE
        key = (x.key, w.key)
        if key in memo:
            return memo[key]
        s = w.word[0]
        sw = group.left_mul(s, w)
        sx = group.left_mul(s, x)
        if sx.length < x.length:
            result = rec(sx, sw)
        elif group.is_min_coset_rep(sx, subset):
            result = (Q - 1) * rec(x, sw) + Q * rec(sx, sw)
        else:
            result = (Q - 1 - u) * rec(x, sw)
        memo[key] = result
        return result

    return rec(x, w)


def parabolic_kl(group: WeylGroup, subset: Sequence[int], x: CoxeterElement, w: CoxeterElement,
                 convention: str = "u=-1") -> LaurentPolynomial:
    """Deodhar's parabolic KL polynomial P^J_{x,w} for minimal coset representatives."""
    _check_convention(convention)
    subset = frozenset(subset)
    for name, elem in (("x", x), ("w", w)):
        if not group.is_min_coset_rep(elem, subset):
            raise DomainError(f"{name} = {elem} is not a minimal coset representative")
    if not group.bruhat_le(x, w):
        return ZERO
    cache_key = ("parabolic", subset, convention)
    with group._lock:
        store = group._kl.setdefault(cache_key, {"P": {}, "R": {}})
    members = [z for z in group.interval(x, w) if group.is_min_coset_rep(z, subset)]
    members.sort(key=lambda e: -e.length)
    p_memo = store["P"]
    for z in members:
        if (z.key, w.key) in p_memo:
            continue
        if z.key == w.key:
            p_memo[(z.key, w.key)] = ONE
            continue
        rhs = ZERO
        for y in members:
            if y.key != z.key and y.length > z.length and group.bruhat_le(z, y):
                rhs = rhs + parabolic_r(group, subset, z, y, convention, store["R"]) * p_memo[(y.key, w.key)]
        result = -rhs.below(Fraction(w.length - z.length, 2))
        with group._lock:
            p_memo[(z.key, w.key)] = result
    return p_memo[(x.key, w.key)]


def inverse_parabolic_kl(group: WeylGroup, subset: Sequence[int], x, w,
                         convention: str = "u=-1") -> LaurentPolynomial:
    """Q^J with sum_z (-1)^{l(z)-l(x)} P^J_{x,z} Q^J_{z,w} = delta_{x,w}."""
    subset = frozenset(subset)
    if not group.bruhat_le(x, w):
        return ZERO
    members = [z for z in group.interval(x, w) if group.is_min_coset_rep(z, subset)]
    members.sort(key=lambda e: -e.length)
    q_memo: dict = {}
    for z in members:
        if z.key == w.key:
            q_memo[z.key] = ONE
            continue
        total = ZERO
        for y in members:
            if y.key != z.key and group.bruhat_le(z, y):
                sign = (-1) ** (y.length - z.length)
                total = total + parabolic_kl(group, subset, z, y, convention) * q_memo[y.key] * sign
        q_memo[z.key] = -total
    return q_memo[x.key]


# --- multiplicity tables ---------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicityTable:
    """Signed multiplicities m_{mu lambda} with ch L(lambda) = sum m ch Delta(mu).

    Weights are y . lambda0 for Weyl elements y minimal in W_J y; they are
    recorded by their labels and by lambda0 - y . lambda0 in simple roots.
    """

    anchor: tuple  # labels of the dominant lambda0
    levi: frozenset
    entries: Mapping  # (mu labels, lambda labels) -> int
    elements: Mapping  # labels -> Weyl element
    depths: Mapping  # labels -> root-lattice vector lambda0 - weight
    cutoff: int

    def column(self, lam: Sequence[int]) -> dict:
        lam = tuple(lam)
        return {mu: m for (mu, l), m in self.entries.items() if l == lam}


def dot_orbit_anchor(group: WeylGroup, labels: Sequence[int], max_steps: int = 10_000):
    """Return (lambda0 labels, w) with w . lambda0 = lambda and lambda0 dominant."""
    current = tuple(labels)
    word = []
    for _ in range(max_steps):
        bad = [i for i, c in enumerate(current) if c < -1]
        if any(c == -1 for c in current):
            raise UnsupportedError("weight lies in a singular block")
        if not bad:
            return current, group.from_word(tuple(reversed(word)))
        i = bad[0]
        current = group.dot_labels(i, current)
        word.append(i)
    raise ResourceGuardError("no dominant weight found in the dot orbit")


def dot_action(group: WeylGroup, w: CoxeterElement, labels: Sequence[int]) -> tuple[tuple, tuple]:
    """(labels of w . lambda, lambda - w . lambda in simple roots)."""
    current = tuple(labels)
    depth = [0] * group.rank
    for i in reversed(w.word):
        shift = current[i] + 1
        depth[i] += shift
        current = group.dot_labels(i, current)
    return current, tuple(depth)


def multiplicity_table(gcm: Sgcm, levi: Iterable[int], labels: Sequence[int], cutoff: int,
                       convention: str = "u=q") -> MultiplicityTable:
    """m_{mu lambda} for the block of lambda in parabolic category O.

    levi lists generator positions of the Levi. The table covers all
    J-dominant weights y . lambda0 with l(y) <= cutoff.
    """
    _check_convention(convention)
    group = gcm if isinstance(gcm, WeylGroup) else WeylGroup(gcm)
    levi = frozenset(levi)
    anchor, _ = dot_orbit_anchor(group, labels)
    reps = [y for y in group.enumerate_up_to_length(cutoff)
            if not (group.left_descents(y) & levi)]
    elements, depths = {}, {}
    for y in reps:
        lab, depth = dot_action(group, y, anchor)
        elements[lab] = y
        depths[lab] = depth
    entries = {}
    inv = {y.key: group.inverse(y) for y in reps}
    for w in reps:
        lam, _ = dot_action(group, w, anchor)
        for y in reps:
            if y.length < w.length or not group.bruhat_le(w, y):
                continue
            poly = inverse_parabolic_kl(group, levi, inv[w.key], inv[y.key], convention)
            value = int(poly.evaluate(1)) * (-1) ** (y.length - w.length)
            if value:
                mu, _ = dot_action(group, y, anchor)
                entries[(mu, lam)] = value
    return MultiplicityTable(anchor, levi, entries, elements, depths, cutoff)
