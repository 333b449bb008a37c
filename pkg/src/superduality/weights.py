"""Weight and coroot coordinates for head/tail algebras.

Tail indices r in {-1} and the positive half-integers are stored doubled,
so index -2 stands for r = -1, index 1 for r = 1/2, index 2 for r = 1.

Weights are sparse rational combinations of basis symbols. The canonical
form rewrites every tail fundamental weight with index >= 1 into
epsilon coordinates and identifies the global omega with the tail-0
omega, so two weights are equal iff they define the same functional on
the coroot symbols.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import CoordinateError, DomainError


# --- basis symbols -----------------------------------------------------------

class GlobalOmega(NamedTuple):
    kind: str = "omega"


class TailOmega(NamedTuple):
    tail: int
    kind: str = "tomega"


class HeadFw(NamedTuple):
    head: str
    kind: str = "hfw"


class TailFw(NamedTuple):
    tail: int
    index: int
    kind: str = "tfw"


class Eps(NamedTuple):
    tail: int
    index: int
    kind: str = "eps"


class AuxWeight(NamedTuple):
    """Extra weight coordinate used to realize a degenerate matrix minimally."""

    slot: int
    kind: str = "aux"


class CorootAlpha(NamedTuple):
    vertex: str
    kind: str = "coroot"


class Deriv(NamedTuple):
    tail: int
    kind: str = "d"


class HCoroot(NamedTuple):
    tail: int
    index: int
    kind: str = "h"


class AuxCoroot(NamedTuple):
    slot: int
    kind: str = "auxc"


_WEIGHT_KINDS = {"omega", "tomega", "hfw", "tfw", "eps", "aux"}
_COROOT_KINDS = {"coroot", "d", "h", "auxc"}
_TAIL_VERTEX = re.compile(r"^t(\d+):(-?\d+)$")


def tail_vertex(tail: int, index: int) -> str:
    check_tail_index(index)
    return f"t{tail}:{index}"


def parse_tail_vertex(vertex: str) -> tuple[int, int] | None:
    match = _TAIL_VERTEX.match(vertex)
    if match is None:
        return None
    return int(match.group(1)), int(match.group(2))


def check_tail_index(index: int) -> None:
    if index != -2 and index < 1:
        raise DomainError(f"tail index {index} is not in {{-2}} or the positive integers")


def symbol_key(sym) -> tuple:
    """Sort key for basis symbols of mixed shapes."""
    return (sym[-1],) + tuple(str(x) if isinstance(x, str) else f"{x:+08d}" for x in sym[:-1])


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


# --- canonical rewriting --------------------------------------------------

def _canonical_weight_terms(sym) -> list:
    kind = sym[-1]
    if kind not in _WEIGHT_KINDS:
        raise CoordinateError(f"{sym!r} is not a weight basis symbol")
    if kind == "omega":
        return [(TailOmega(0), 1)]
    if kind == "tfw":
        check_tail_index(sym.index)
        if sym.index >= 1:
            terms = [(TailFw(sym.tail, -2), 1)]
            terms += [(Eps(sym.tail, k), (-1) ** k) for k in range(1, sym.index + 1)]
            return terms
    if kind == "eps":
        check_tail_index(sym.index)
        if sym.index == -2:
            return [(TailFw(sym.tail, -2), 1)]
    return [(sym, 1)]


def _h_expansion(tail: int, index: int) -> dict:
    """h_r as a combination of alpha coroots and the derivation, index = 2r."""
    check_tail_index(index)
    d = Deriv(tail)
    if index == -2:
        return {d: Fraction(-1)}
    current = {d: Fraction(1), CorootAlpha(tail_vertex(tail, -2)): Fraction(1)}
    for m in range(2, index + 1):
        nxt = {k: -v for k, v in current.items()}
        key = CorootAlpha(tail_vertex(tail, m - 1))
        nxt[key] = nxt.get(key, 0) - (-1) ** m
        current = {k: v for k, v in nxt.items() if v}
    return current


def _canonical_coroot_terms(sym) -> list:
    kind = sym[-1]
    if kind not in _COROOT_KINDS:
        raise CoordinateError(f"{sym!r} is not a coroot basis symbol")
    if kind == "h":
        return list(_h_expansion(sym.tail, sym.index).items())
    return [(sym, 1)]


class _Linear:
    """Shared machinery for sparse rational combinations of symbols."""

    __slots__ = ("_raw", "_canon", "_hash")
    _rewrite = staticmethod(lambda sym: [(sym, 1)])

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        raw: dict = {}
        for sym, coeff in items:
            coeff = _to_fraction(coeff)
            if coeff:
                raw[sym] = raw.get(sym, 0) + coeff
        self._raw = {k: v for k, v in raw.items() if v}
        canon: dict = {}
        for sym, coeff in self._raw.items():
            for base, factor in self._rewrite(sym):
                canon[base] = canon.get(base, 0) + coeff * factor
        self._canon = {k: v for k, v in canon.items() if v}
        self._hash = None

    @classmethod
    def _from_canonical(cls, canon: dict):
        obj = cls.__new__(cls)
        obj._raw = canon
        obj._canon = canon
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        """Terms as constructed, before canonical rewriting."""
        return dict(self._raw)

    def canonical(self):
        return self._from_canonical(dict(self._canon))

    def items(self) -> list:
        return sorted(self._canon.items(), key=lambda kv: symbol_key(kv[0]))

    def coeff(self, sym) -> Fraction:
        return self._canon.get(sym, Fraction(0))

    def is_zero(self) -> bool:
        return not self._canon

    def __bool__(self):
        return bool(self._canon)

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self._canon)
        for k, v in other._canon.items():
            new = out.get(k, 0) + v
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return self._from_canonical(out)

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._from_canonical({k: -v for k, v in self._canon.items()})

    def __mul__(self, scalar):
        scalar = _to_fraction(scalar)
        if not scalar:
            return self._from_canonical({})
        return self._from_canonical({k: v * scalar for k, v in self._canon.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._canon.items()))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({format_terms(self.items())})"


class Weight(_Linear):
    """Sparse rational weight over the omega/epsilon basis symbols."""

    __slots__ = ()
    _rewrite = staticmethod(_canonical_weight_terms)

    def pair(self, coroot: "Coroot") -> Fraction:
        return pairing(self, coroot)


class Coroot(_Linear):
    """Sparse rational coroot over alpha coroots, derivations and h symbols."""

    __slots__ = ()
    _rewrite = staticmethod(_canonical_coroot_terms)


ZERO = Weight()


def symbol_name(sym) -> str:
    kind = sym[-1]
    if kind == "omega":
        return "w"
    if kind == "tomega":
        return f"w^t{sym.tail}"
    if kind == "hfw":
        return f"w[{sym.head}]"
    if kind == "tfw":
        return f"w[t{sym.tail}:{sym.index}]"
    if kind == "eps":
        return f"e[t{sym.tail}:{sym.index}]"
    if kind == "aux":
        return f"aux{sym.slot}"
    if kind == "coroot":
        return f"a[{sym.vertex}]"
    if kind == "d":
        return f"d^{sym.tail}"
    if kind == "h":
        return f"h[t{sym.tail}:{sym.index}]"
    return f"auxc{sym.slot}"


def format_terms(items: Sequence) -> str:
    if not items:
        return "0"
    parts = []
    for sym, coeff in items:
        name = symbol_name(sym)
        if coeff == 1:
            parts.append(f"+{name}")
        elif coeff == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'}{abs(coeff)}*{name}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


# --- pairing --------------------------------------------------------------

def _pair_symbols(wsym, csym) -> int:
    wk, ck = wsym[-1], csym[-1]
    if ck == "coroot":
        vertex = csym.vertex
        if wk == "hfw":
            return int(wsym.head == vertex)
        if wk in ("tfw", "eps"):
            parsed = parse_tail_vertex(vertex)
            if parsed is None or parsed[0] != wsym.tail:
                return 0
            s = parsed[1]
            m = wsym.index
            if wk == "tfw":
                return int(s == m)
            if s == -2:
                return int(m == -2) + int(m == 1)
            return (-1) ** s * (int(m == s) + int(m == s + 1))
        return 0
    if ck == "d":
        if wk == "tomega":
            return int(wsym.tail == csym.tail)
        if wk == "tfw":
            return -1 if wsym.tail == csym.tail else 0
        if wk == "eps":
            return -1 if (wsym.tail == csym.tail and wsym.index == -2) else 0
        return 0
    if ck == "auxc":
        return int(wk == "aux" and wsym.slot == csym.slot)
    raise CoordinateError(f"cannot pair with {csym!r}")


def pairing(weight: Weight, coroot: Coroot) -> Fraction:
    """Evaluate the weight on the coroot."""
    total = Fraction(0)
    for wsym, wc in weight._canon.items():
        for csym, cc in coroot._canon.items():
            value = _pair_symbols(wsym, csym)
            if value:
                total += wc * cc * value
    return total


# --- named expansions -----------------------------------------------------

def eps_to_omega(tail: int, index: int) -> Weight:
    """epsilon_r written in tail fundamental weights (index = 2r)."""
    check_tail_index(index)
    if index == -2:
        return Weight({TailFw(tail, -2): 1})
    if index == 1:
        return Weight({TailFw(tail, 1): -1, TailFw(tail, -2): 1})
    sign = (-1) ** index
    return Weight({TailFw(tail, index): sign, TailFw(tail, index - 1): -sign})


def h_to_coroot(tail: int, index: int) -> Coroot:
    """h_r written in alpha coroots and the derivation (index = 2r)."""
    return Coroot(_h_expansion(tail, index))


def eps(tail: int, index: int) -> Weight:
    check_tail_index(index)
    return Weight({Eps(tail, index): 1})


def omega(tail: int = 0) -> Weight:
    return Weight({TailOmega(tail): 1})


def head_fw(head: str) -> Weight:
    return Weight({HeadFw(head): 1})


def tail_fw(tail: int, index: int) -> Weight:
    check_tail_index(index)
    return Weight({TailFw(tail, index): 1})


def varpi(index: int, tail: int = 0) -> Weight:
    """Fundamental weight of the even tail chain (index = 2j)."""
    check_tail_index(index)
    if index == -2:
        return tail_fw(tail, -2)
    if index % 2 == 0:
        out = tail_fw(tail, -2)
        for k in range(2, index + 1, 2):
            out = out + eps(tail, k)
        return out
    out = Weight()
    for k in range(1, index + 1, 2):
        out = out - eps(tail, k)
    return out


# --- partitions in tail coordinates --------------------------------------

def conjugate_parts(parts: Sequence[int]) -> tuple[int, ...]:
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def frobenius_theta(mu: Sequence[int]) -> tuple[int, ...]:
    """Interleaved Frobenius-type coordinates, position k holds index k+1."""
    mu = tuple(p for p in mu if p > 0)
    conj = conjugate_parts(mu)
    out = []
    length = 2 * (len(mu) + len(conj)) + 2
    for m in range(1, length + 1):
        j = (m + 1) // 2
        if m % 2:
            col = conj[j - 1] if j <= len(conj) else 0
            out.append(max(col - (j - 1), 0))
        else:
            row = mu[j - 1] if j <= len(mu) else 0
            out.append(max(row - j, 0))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def theta_inverse(theta: Sequence[int]) -> tuple[int, ...] | None:
    """Partition with the given interleaved coordinates, or None."""
    theta = list(theta)
    odd = [theta[m - 1] for m in range(1, len(theta) + 1, 2)]
    durfee = 0
    while durfee < len(odd) and odd[durfee] > 0:
        durfee += 1
    if any(x < 0 for x in theta):
        return None
    arms = [theta[2 * j - 1] if 2 * j - 1 < len(theta) else 0 for j in range(1, durfee + 1)]
    legs = [odd[j - 1] - 1 for j in range(1, durfee + 1)]
    rows = [arms[j - 1] + j for j in range(1, durfee + 1)]
    tail_rows = []
    r = durfee + 1
    while True:
        count = sum(1 for i in range(1, durfee + 1) if legs[i - 1] >= r - i)
        if count == 0:
            break
        tail_rows.append(count)
        r += 1
    mu = tuple(rows + tail_rows)
    if any(a < b for a, b in zip(mu, mu[1:])):
        return None
    if frobenius_theta(mu) != tuple(_strip(theta)):
        return None
    return mu


def _strip(seq: Sequence[int]) -> list:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return seq


def tail_ids(weight: Weight) -> list[int]:
    tails = set()
    for sym in weight._canon:
        if sym[-1] in ("eps", "tfw", "tomega"):
            tails.add(sym.tail)
    return sorted(tails)


def eps_coefficients(weight: Weight, tail: int) -> dict[int, Fraction]:
    """Epsilon coefficients of one tail by doubled index (index >= 1 only)."""
    return {sym.index: c for sym, c in weight._canon.items()
            if sym[-1] == "eps" and sym.tail == tail}


def _as_partition(values: dict[int, Fraction], indices: Sequence[int]) -> tuple[int, ...] | None:
    """Read a partition from coefficients at the given ordered indices."""
    extra = set(values) - set(indices)
    if extra:
        return None
    parts = []
    for idx in indices:
        parts.append(values.get(idx, Fraction(0)))
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p.denominator != 1 or p <= 0 for p in parts):
        return None
    parts = [int(p) for p in parts]
    if any(a < b for a, b in zip(parts, parts[1:])):
        return None
    return tuple(parts)


def _index_window(values: dict) -> int:
    return max(values, default=0) + 2


def tail_partition(weight: Weight, tail: int = 0) -> tuple[int, ...]:
    """Partition on integer-indexed epsilons; DomainError if there is none."""
    values = eps_coefficients(weight, tail)
    top = _index_window(values)
    part = _as_partition(values, list(range(2, top + 1, 2)))
    if part is None:
        raise DomainError(f"epsilon coefficients of tail {tail} do not form a partition")
    return part


def half_partition(weight: Weight, tail: int = 0) -> tuple[int, ...]:
    """Partition on half-integer-indexed epsilons; DomainError if there is none."""
    values = eps_coefficients(weight, tail)
    top = _index_window(values)
    part = _as_partition(values, list(range(1, top + 1, 2)))
    if part is None:
        raise DomainError(f"half-integer epsilon coefficients of tail {tail} do not form a partition")
    return part


def theta_sequence(weight: Weight, tail: int = 0) -> tuple[int, ...]:
    values = eps_coefficients(weight, tail)
    top = max(values, default=0)
    seq = []
    for m in range(1, top + 1):
        c = values.get(m, Fraction(0))
        if c.denominator != 1:
            raise DomainError("non-integral epsilon coefficient")
        seq.append(int(c))
    return tuple(_strip(seq))


def _without_eps(weight: Weight, tail: int) -> Weight:
    return Weight._from_canonical({k: v for k, v in weight._canon.items()
                                   if not (k[-1] == "eps" and k.tail == tail)})


def _tails_for(weight: Weight, tails) -> list[int]:
    if tails is None:
        return sorted({s.tail for s in weight._canon if s[-1] == "eps"})
    return [tails] if isinstance(tails, int) else list(tails)


def natural_map(weight: Weight, tails=None) -> Weight:
    """Replace the tail partition by its conjugate on half-integer indices."""
    out = weight
    for t in _tails_for(weight, tails):
        part = tail_partition(weight, t)
        out = _without_eps(out, t)
        for j, c in enumerate(conjugate_parts(part), start=1):
            out = out + c * eps(t, 2 * j - 1)
    return out


def theta_map(weight: Weight, tails=None) -> Weight:
    """Replace the tail partition by its interleaved Frobenius coordinates."""
    out = weight
    for t in _tails_for(weight, tails):
        part = tail_partition(weight, t)
        out = _without_eps(out, t)
        for m, c in enumerate(frobenius_theta(part), start=1):
            if c:
                out = out + c * eps(t, m)
    return out


def natural_inverse(weight: Weight, tails=None) -> Weight:
    out = weight
    for t in _tails_for(weight, tails):
        part = half_partition(weight, t)
        out = _without_eps(out, t)
        for n, c in enumerate(conjugate_parts(part), start=1):
            out = out + c * eps(t, 2 * n)
    return out


def theta_inverse_weight(weight: Weight, tails=None) -> Weight:
    out = weight
    for t in _tails_for(weight, tails):
        part = theta_inverse(theta_sequence(weight, t))
        if part is None:
            raise DomainError(f"tail {t} coordinates are not in the image of theta")
        out = _without_eps(out, t)
        for n, c in enumerate(part, start=1):
            out = out + c * eps(t, 2 * n)
    return out


# --- membership tests -----------------------------------------------------

def _integral(c: Fraction) -> bool:
    return c.denominator == 1


def in_lattice_P(weight: Weight) -> bool:
    """Integral, with epsilons only at integer indices."""
    for sym, c in weight._canon.items():
        if not _integral(c):
            return False
        if sym[-1] == "eps" and sym.index % 2:
            return False
        if sym[-1] == "aux":
            return False
    return True


def in_P_plus(weight: Weight, levi: Iterable[str] = (), odd: Iterable[str] = ()) -> bool:
    """Dominance for the Levi J: partitions per tail and kappa conditions on J."""
    if not in_lattice_P(weight):
        return False
    odd = set(odd)
    for head in levi:
        k = weight.coeff(HeadFw(head))
        if k < 0 or (head in odd and k % 2):
            return False
    for t in tail_ids(weight):
        try:
            tail_partition(weight, t)
        except DomainError:
            return False
    return True


def in_P_plusplus_G(weight: Weight, heads: Iterable[str] = (), odd: Iterable[str] = ()) -> bool:
    """Integrability on the even side: the sequence from epsilon_{-1} on is a partition."""
    if not in_P_plus(weight, heads, odd):
        return False
    for t in tail_ids(weight):
        first = weight.coeff(TailFw(t, -2))
        part = tail_partition(weight, t)
        if first < 0 or (part and first < part[0]):
            return False
    return True


def in_P_plusplus_script(weight: Weight, heads: Iterable[str] = (), odd: Iterable[str] = ()) -> bool:
    """Integrability for the head algebra with epsilon_{-1}, epsilon_{1/2} coordinates."""
    odd = set(odd)
    for sym, c in weight._canon.items():
        if not _integral(c):
            return False
        kind = sym[-1]
        if kind == "eps" and sym.index != 1:
            return False
        if kind in ("tomega", "aux"):
            return False
    for head in heads:
        k = weight.coeff(HeadFw(head))
        if k < 0 or (head in odd and k % 2):
            return False
    for t in tail_ids(weight):
        first = weight.coeff(TailFw(t, -2))
        second = weight.coeff(Eps(t, 1))
        if first < 0 or second < 0 or (second and not first):
            return False
    return True


def support_bound(flavor: str, n: int) -> int:
    """Largest doubled epsilon index allowed at rank n."""
    if flavor not in ("dg", "g", "sg"):
        raise DomainError(f"unknown flavor {flavor!r}")
    if n < -1:
        raise DomainError(f"rank {n} below -1")
    return max(2 * n + 1, 1)


def omega_expansion(n: int, tail: int = 0, flavor: str = "dg") -> Weight:
    """The finite epsilon sum standing for omega at rank n.

    On the even and mixed sides the epsilons of the other parity vanish on
    the Cartan subalgebra, so they are dropped from the sum.
    """
    top = support_bound(flavor, n)
    out = -eps(tail, -2)
    for m in range(1, top + 1):
        if flavor == "g" and m % 2:
            continue
        if flavor == "sg" and m % 2 == 0:
            continue
        sign = 1 if flavor == "sg" else (-1 if flavor == "g" else (-1) ** (m + 1))
        out = out + sign * eps(tail, m)
    return out


def truncate_weight(weight: Weight, flavor: str, n: int) -> Weight | None:
    """Restrict to rank n, or None when epsilon support exceeds n + 1/2."""
    bound = support_bound(flavor, n)
    for sym in weight._canon:
        if sym[-1] == "eps" and sym.index > bound:
            return None
    out = {}
    for sym, c in weight._canon.items():
        if sym[-1] == "tomega":
            for base, v in omega_expansion(n, sym.tail, flavor)._canon.items():
                out[base] = out.get(base, 0) + c * v
        else:
            out[sym] = out.get(sym, 0) + c
    return Weight._from_canonical({k: v for k, v in out.items() if v})


# --- JSON -------------------------------------------------------------------

def weight_to_json(weight: Weight) -> dict:
    terms = []
    for sym, c in weight.items():
        kind = sym[-1]
        term: dict = {"basis": kind, "coeff": str(c)}
        if kind in ("tomega", "tfw", "eps"):
            term["tail"] = sym.tail
        if kind in ("tfw", "eps"):
            term["index"] = sym.index
        if kind == "hfw":
            term["head"] = sym.head
        if kind == "aux":
            term["slot"] = sym.slot
        terms.append(term)
    return {"terms": terms}


def weight_from_json(data) -> Weight:
    if isinstance(data, str):
        data = json.loads(data)
    terms = []
    try:
        for term in data["terms"]:
            kind = term["basis"]
            coeff = Fraction(str(term["coeff"]))
            if kind == "omega":
                sym = GlobalOmega()
            elif kind == "tomega":
                sym = TailOmega(int(term.get("tail", 0)))
            elif kind == "hfw":
                sym = HeadFw(str(term["head"]))
            elif kind == "tfw":
                sym = TailFw(int(term.get("tail", 0)), int(term["index"]))
            elif kind == "eps":
                sym = Eps(int(term.get("tail", 0)), int(term["index"]))
            elif kind == "aux":
                sym = AuxWeight(int(term["slot"]))
            else:
                raise DomainError(f"unknown basis {kind!r}")
            terms.append((sym, coeff))
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed weight document: {exc}") from exc
    return Weight(terms)


# --- type A heads: partitions as highest weights -------------------------

def gl_partition_weight(nu: Sequence[int], m: int, tail: int = 0) -> Weight:
    """Highest weight on the even side for a gl(m|1)-type head with vertices 1..m-1.

    Rows 1..m give the head labels and the epsilon_{-1} coefficient, later
    rows the integer-indexed epsilons. The omega coefficient sum(nu_i, i >= m)
    keeps the assignment additive modulo roots.
    """
    nu = [p for p in nu if p > 0]
    if any(a < b for a, b in zip(nu, nu[1:])):
        raise DomainError(f"{nu} is not a partition")
    rows = nu + [0] * max(0, m + 1 - len(nu))
    out = Weight()
    for k in range(1, m):
        out = out + (rows[k - 1] - rows[k]) * head_fw(str(k))
    out = out + rows[m - 1] * eps(tail, -2)
    for j, part in enumerate(rows[m:], start=1):
        if part:
            out = out + part * eps(tail, 2 * j)
    out = out + sum(rows[m - 1:]) * omega(tail)
    return out


def gl_weight_partition(weight: Weight, m: int, tail: int = 0, flavor: str = "g") -> tuple[int, ...] | None:
    """Invert gl_partition_weight (flavor g) or its natural image (flavor sg)."""
    canon = weight._canon
    allowed = {HeadFw(str(k)) for k in range(1, m)} | {TailFw(tail, -2), TailOmega(tail)}
    for sym in canon:
        if sym not in allowed and not (sym[-1] == "eps" and sym.tail == tail):
            return None
    kappa = [weight.coeff(HeadFw(str(k))) for k in range(1, m)]
    base = weight.coeff(TailFw(tail, -2))
    try:
        if flavor == "g":
            rest = tail_partition(weight, tail)
        else:
            rest = conjugate_parts(half_partition(weight, tail))
    except DomainError:
        return None
    rows = [base]
    for k in reversed(kappa):
        rows.insert(0, rows[0] + k)
    rows = rows + list(rest)
    if any(Fraction(r).denominator != 1 for r in rows):
        return None
    rows = [int(r) for r in rows]
    if any(r < 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
        return None
    if weight.coeff(TailOmega(tail)) != sum(rows[m - 1:]):
        return None
    return tuple(r for r in rows if r > 0)
