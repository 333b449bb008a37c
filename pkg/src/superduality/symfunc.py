"""Partitions, Schur and hook Schur polynomials, Littlewood-Richardson coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError

Partition = tuple  # weakly decreasing positive integers


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a partition (trailing zeros dropped)."""
    values = [int(p) for p in parts]
    while values and values[-1] == 0:
        values.pop()
    if any(v <= 0 for v in values) or any(a < b for a, b in zip(values, values[1:])):
        raise DomainError(f"{tuple(values)} is not a partition")
    return tuple(values)


def conjugate(mu: Sequence[int]) -> Partition:
    mu = partition(mu)
    return tuple(sum(1 for part in mu if part >= j) for j in range(1, (mu[0] if mu else 0) + 1))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


@dataclass(frozen=True)
class Polynomial:
    """Sparse integer polynomial in a fixed number of variables."""

    nvars: int
    terms: Mapping  # exponent tuple -> nonzero int

    def __init__(self, nvars: int, terms: Mapping | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise DomainError("exponent length does not match variable count")
            if c:
                clean[exp] = clean.get(exp, 0) + c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, nvars: int, k: int) -> "Polynomial":
        return cls(nvars, {tuple(int(i == k) for i in range(nvars)): 1})

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Polynomial(self.nvars, out)

    def __neg__(self):
        return Polynomial(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.nvars, {k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def monomials(self) -> list[tuple[tuple, int]]:
        """Terms in graded-lex order, largest first."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def specialize_zero(self, zero_vars: Iterable[int]) -> "Polynomial":
        """Set the given variables to 0 and drop them."""
        zero = set(zero_vars)
        keep = [i for i in range(self.nvars) if i not in zero]
        out = {}
        for exp, c in self.terms.items():
            if all(exp[i] == 0 for i in zero):
                key = tuple(exp[i] for i in keep)
                out[key] = out.get(key, 0) + c
        return Polynomial(len(keep), out)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable i to perm[i]."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[perm[i]] = e
            out[tuple(new)] = c
        return Polynomial(self.nvars, out)

    def text(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.monomials():
            mono = "*".join(f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(exp) if e)
            if not mono:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{mono}")
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c:+d}*{mono}")
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out


def _cells(shape: Sequence[int], inner: Sequence[int] = ()) -> list[tuple[int, int]]:
    inner = list(inner) + [0] * (len(shape) - len(inner))
    return [(r, c) for r, length in enumerate(shape) for c in range(inner[r], length)]


def _supertableau_weights(mu: Partition, m: int, n: int) -> dict:
    """Content vectors of (m|n)-supertableaux of shape mu with multiplicities.

    Letters 0..m-1 are unprimed (row-weak, column-strict), letters m..m+n-1
    are primed (row-strict, column-weak), all unprimed below primed.
    """
    cells = _cells(mu)
    filling: dict = {}
    counts: dict = {}
    total = m + n

    def allowed(r: int, c: int) -> list[int]:
        left = filling.get((r, c - 1))
        up = filling.get((r - 1, c))
        candidates = []
        for letter in range(total):
            primed = letter >= m
            if left is not None:
                if primed and letter <= left:
                    continue
                if not primed and letter < left:
                    continue
            if up is not None:
                if primed and letter < up:
                    continue
                if not primed and letter <= up:
                    continue
            candidates.append(letter)
        return candidates

    content = [0] * total

    def walk(k: int):
        if k == len(cells):
            key = tuple(content)
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = cells[k]
        for letter in allowed(r, c):
            filling[(r, c)] = letter
            content[letter] += 1
            walk(k + 1)
            content[letter] -= 1
            del filling[(r, c)]

    walk(0)
    return counts


@lru_cache(maxsize=None)
def _hook_schur_cached(mu: Partition, m: int, n: int) -> Polynomial:
    if m < 0 or n < 0:
        raise DomainError("variable counts must be non-negative")
    if len(mu) > m and mu[m] > n:
        return Polynomial(m + n)
    return Polynomial(m + n, _supertableau_weights(mu, m, n))


def hook_schur(mu: Sequence[int], m: int, n: int) -> Polynomial:
    """Hook Schur polynomial in x_1..x_m followed by y_1..y_n."""
    return _hook_schur_cached(partition(mu), m, n)


def schur(mu: Sequence[int], m: int) -> Polynomial:
    """Schur polynomial in m variables, enumerated by semistandard tableaux."""
    return hook_schur(mu, m, 0)


def _is_lattice(word: Sequence[int]) -> bool:
    seen: dict = {}
    for letter in word:
        seen[letter] = seen.get(letter, 0) + 1
        if letter > 1 and seen[letter] > seen.get(letter - 1, 0):
            return False
    return True


def _count_lr_tableaux(outer: Partition, inner: Partition, content: Partition) -> int:
    """Semistandard fillings of outer/inner with the given content whose
    right-to-left, top-to-bottom reading word is a lattice word."""
    inner_full = list(inner) + [0] * (len(outer) - len(inner))
    order = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner_full[r] - 1, -1)]
    filling: dict = {}
    remaining = list(content)
    seen = [0] * (len(content) + 1)
    found = 0

    def walk(k: int):
        nonlocal found
        if k == len(order):
            found += 1
            return
        r, c = order[k]
        right = filling.get((r, c + 1))
        up = filling.get((r - 1, c))
        upper_bound = right if right is not None else len(content)
        for letter in range(1, upper_bound + 1):
            if remaining[letter - 1] == 0:
                continue
            if up is not None and letter <= up:
                continue
            if letter > 1 and seen[letter] + 1 > seen[letter - 1]:
                continue
            filling[(r, c)] = letter
            remaining[letter - 1] -= 1
            seen[letter] += 1
            walk(k + 1)
            seen[letter] -= 1
            remaining[letter - 1] += 1
            del filling[(r, c)]

    walk(0)
    return found


def _containing(inner: Partition, size: int, max_rows: int, max_add: int) -> Iterator[Partition]:
    """Partitions of the given size containing inner with bounded growth per row."""
    inner_full = list(inner) + [0] * (max_rows - len(inner))

    def walk(row: int, budget: int, prev: int, acc: list):
        if row == max_rows:
            if budget == 0:
                yield partition(acc)
            return
        low = inner_full[row]
        high = min(prev, low + max_add, low + budget)
        for value in range(high, low - 1, -1):
            yield from walk(row + 1, budget - (value - low), value, acc + [value])

    extra = size - sum(inner)
    yield from walk(0, extra, 10 ** 9, [])


def lr_coefficients(mu: Sequence[int], nu: Sequence[int]) -> dict:
    """Map lambda -> c^lambda_{mu nu}, nonzero entries only."""
    mu, nu = partition(mu), partition(nu)
    if not nu:
        return {mu: 1}
    if not mu:
        return {nu: 1}
    size = sum(mu) + sum(nu)
    out = {}
    for lam in _containing(mu, size, len(mu) + len(nu), nu[0]):
        count = _count_lr_tableaux(lam, mu, nu)
        if count:
            out[lam] = count
    return out


def schur_expand(poly: Polynomial) -> dict:
    """Decompose a symmetric polynomial into Schur polynomials by leading terms."""
    m = poly.nvars
    out = {}
    rest = poly
    while rest:
        exp, coeff = max(rest.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        lam = partition(exp)
        if tuple(exp) != tuple(lam) + (0,) * (m - len(lam)):
            raise DomainError("polynomial is not symmetric")
        out[lam] = out.get(lam, 0) + coeff
        rest = rest - schur(lam, m) * coeff
    return out
