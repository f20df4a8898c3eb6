"""Exact sparse multivariate polynomial arithmetic over Q.

Coefficients are `fractions.Fraction` values (exposed as ``ExactScalar``):
always in lowest terms, positive denominator, zero is 0/1.  Monomials are
plain exponent tuples, one entry per ring variable, used directly as keys of
a sparse term map.  Everything here is an immutable value; operations return
new polynomials.

The module also carries the fraction-free integer-coefficient helpers
(`_z*` functions) that the Groebner engine and the resultant code build on:
those work on raw ``dict[mono, int]`` term maps to avoid per-operation
Fraction normalisation in hot loops.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionError,
    OrderError,
    ParseError,
    UnknownVariableError,
    ZeroPolynomialError,
)

ExactScalar = Fraction
Monomial = tuple  # exponent vector; length equals the VarSet size
Scalarish = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


@dataclass(frozen=True)
class VarSet:
    """Ordered list of distinct variable names; index order fixes the ring.

    The first name is the largest variable under lex, matching the
    elimination convention "x1 > x2 > ... > xn".
    """

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise DimensionError("a VarSet needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise DimensionError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not _NAME_RE.fullmatch(name):
                raise UnknownVariableError(f"bad variable name {name!r}")

    @classmethod
    def of(cls, *names: str) -> "VarSet":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(f"{name!r} is not one of {self.names}") from None

    def unit(self) -> Monomial:
        return (0,) * len(self.names)

    def mono(self, name: str, power: int = 1) -> Monomial:
        exps = [0] * len(self.names)
        exps[self.index(name)] = power
        return tuple(exps)


# -- monomial helpers (exponent tuples) -------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller is responsible for divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """A total, multiplicative monomial order with minimal unit.

    kind is one of lex / grlex / grevlex / block.  Block orders carry a
    partition of the exponent vector into contiguous segments, each with its
    own non-block kind; earlier segments dominate.
    """

    kind: str = "lex"
    blocks: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex", "block"):
            raise OrderError(f"unknown order kind {self.kind!r}")
        if self.kind == "block":
            if not self.blocks:
                raise OrderError("block order needs at least one block")
            for size, sub in self.blocks:
                if size <= 0 or sub not in ("lex", "grlex", "grevlex"):
                    raise OrderError(f"bad block ({size}, {sub!r})")
        elif self.blocks:
            raise OrderError("blocks are only meaningful for kind='block'")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grlex(cls) -> "MonomialOrder":
        return cls("grlex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def block(cls, *blocks: tuple[int, str]) -> "MonomialOrder":
        return cls("block", tuple(blocks))

    def key(self, m: Monomial):
        """Sort key; key(a) < key(b) iff a < b in this order."""
        kind = self.kind
        if kind == "lex":
            return m
        if kind == "grlex":
            return (sum(m), m)
        if kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        parts = []
        pos = 0
        for size, sub in self.blocks:
            seg = m[pos:pos + size]
            pos += size
            if sub == "lex":
                parts.append(seg)
            elif sub == "grlex":
                parts.append((sum(seg), seg))
            else:
                parts.append((sum(seg), tuple(-e for e in reversed(seg))))
        if pos != len(m):
            raise DimensionError(
                f"block sizes sum to {pos}, monomial has {len(m)} entries")
        return tuple(parts)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or +1 as a <, =, > b."""
        if len(a) != len(b):
            raise DimensionError(f"monomials of lengths {len(a)} and {len(b)}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def describe(self) -> str:
        if self.kind != "block":
            return self.kind
        return "block(" + ",".join(f"{sub}:{size}" for size, sub in self.blocks) + ")"


LEX = MonomialOrder.lex()


def _as_fraction(value: Scalarish) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value)!r}")


class MultiPoly:
    """Sparse exact multivariate polynomial: {exponent tuple: Fraction}.

    Zero coefficients are never stored; the zero polynomial has an empty
    term map.  Instances are value-like: never mutate `terms` after
    construction.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: VarSet, terms: Union[Mapping, Iterable] = ()):
        data: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        width = len(ring)
        for mono, coeff in items:
            if len(mono) != width:
                raise DimensionError(
                    f"monomial {mono} has {len(mono)} exponents, ring has {width}")
            c = _as_fraction(coeff)
            if not c:
                continue
            mono = tuple(mono)
            acc = data.get(mono)
            if acc is None:
                data[mono] = c
            else:
                acc += c
                if acc:
                    data[mono] = acc
                else:
                    del data[mono]
        self.ring = ring
        self.terms = data

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring: VarSet) -> "MultiPoly":
        return cls(ring)

    @classmethod
    def const(cls, ring: VarSet, value: Scalarish) -> "MultiPoly":
        return cls(ring, {ring.unit(): value})

    @classmethod
    def var(cls, ring: VarSet, name: str, power: int = 1) -> "MultiPoly":
        return cls(ring, {ring.mono(name, power): 1})

    # -- basics ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.names, frozenset(self.terms.items())))

    def _check_ring(self, other: "MultiPoly"):
        if self.ring.names != other.ring.names:
            raise DimensionError(
                f"mixing rings {self.ring.names} and {other.ring.names}")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.ring, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        data = dict(self.terms)
        for mono, c in other.terms.items():
            acc = data.get(mono)
            if acc is None:
                data[mono] = c
            else:
                acc += c
                if acc:
                    data[mono] = acc
                else:
                    del data[mono]
        out = MultiPoly.__new__(MultiPoly)
        out.ring = self.ring
        out.terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.ring = self.ring
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.ring, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return MultiPoly.zero(self.ring)
            out = MultiPoly.__new__(MultiPoly)
            out.ring = self.ring
            out.terms = {m: v * c for m, v in self.terms.items()}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        data: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                acc = data.get(mono)
                if acc is None:
                    data[mono] = ca * cb
                else:
                    acc += ca * cb
                    if acc:
                        data[mono] = acc
                    else:
                        del data[mono]
        out = MultiPoly.__new__(MultiPoly)
        out.ring = self.ring
        out.terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- leading data ----------------------------------------------------------

    def leading_term(self, order: MonomialOrder = LEX) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def leading_monomial(self, order: MonomialOrder = LEX) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder = LEX) -> Fraction:
        return self.leading_term(order)[1]

    def multidegree(self, order: MonomialOrder = LEX) -> Monomial:
        return self.leading_term(order)[0]

    # -- structure -------------------------------------------------------------

    def degree_in(self, var: str):
        """Highest exponent of `var`; -inf for the zero polynomial."""
        idx = self.ring.index(var)
        if not self.terms:
            return -inf
        return max(m[idx] for m in self.terms)

    def total_degree(self):
        if not self.terms:
            return -inf
        return max(sum(m) for m in self.terms)

    def variables(self) -> tuple[str, ...]:
        """Names actually occurring with positive exponent."""
        used = [False] * len(self.ring)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def coeffs_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Split by powers of `var`: {exponent: coefficient polynomial}.

        Coefficients live in the same ring with the `var` exponent zeroed.
        """
        idx = self.ring.index(var)
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            e = m[idx]
            stripped = m[:idx] + (0,) + m[idx + 1:]
            buckets.setdefault(e, {})[stripped] = c
        return {e: MultiPoly(self.ring, d) for e, d in sorted(buckets.items())}

    def substitute(self, bindings: Mapping[str, Union["MultiPoly", Scalarish]]) -> "MultiPoly":
        """Exact simultaneous substitution of variables by polynomials/scalars."""
        for name in bindings:
            self.ring.index(name)  # raises UnknownVariableError
        repl: dict[int, MultiPoly] = {}
        for name, value in bindings.items():
            if isinstance(value, MultiPoly):
                self._check_ring(value)
                repl[self.ring.index(name)] = value
            else:
                repl[self.ring.index(name)] = MultiPoly.const(self.ring, value)
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power_of(idx: int, e: int) -> MultiPoly:
            cached = powers.get((idx, e))
            if cached is None:
                cached = repl[idx] ** e
                powers[(idx, e)] = cached
            return cached

        total = MultiPoly.zero(self.ring)
        for m, c in self.terms.items():
            kept = tuple(0 if i in repl else e for i, e in enumerate(m))
            piece = MultiPoly(self.ring, {kept: c})
            for i, e in enumerate(m):
                if e and i in repl:
                    piece = piece * power_of(i, e)
            total = total + piece
        return total

    def evaluate(self, point: Mapping[str, complex]) -> complex:
        """Floating-point evaluation; every ring variable must be bound."""
        vals = []
        for name in self.ring.names:
            if name not in point:
                raise UnknownVariableError(f"no value supplied for {name!r}")
            vals.append(complex(point[name]))
        total = 0j
        for m, c in self.terms.items():
            term = complex(c)
            for v, e in zip(vals, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def content_primitive(self, order: MonomialOrder = LEX) -> tuple[Fraction, "MultiPoly"]:
        """Split f = content * primitive with primitive integer, gcd 1, positive LC."""
        if not self.terms:
            raise ZeroPolynomialError("content of the zero polynomial is undefined")
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        content = Fraction(num, den)
        prim_terms = {m: c / content for m, c in self.terms.items()}
        lead = max(prim_terms, key=order.key)
        if prim_terms[lead] < 0:
            content = -content
            prim_terms = {m: -c for m, c in prim_terms.items()}
        return content, MultiPoly(self.ring, prim_terms)

    def primitive(self, order: MonomialOrder = LEX) -> "MultiPoly":
        return self.content_primitive(order)[1]

    def project(self, new_ring: VarSet) -> "MultiPoly":
        """Rewrite over `new_ring` (a permutation, sub- or super-set by name).

        Dropping a variable that actually occurs raises UnknownVariableError.
        """
        mapping = []
        for i, name in enumerate(self.ring.names):
            mapping.append(new_ring.names.index(name) if name in new_ring.names else None)
        out: dict[Monomial, Fraction] = {}
        width = len(new_ring)
        for m, c in self.terms.items():
            exps = [0] * width
            for i, e in enumerate(m):
                if not e:
                    continue
                if mapping[i] is None:
                    raise UnknownVariableError(
                        f"cannot drop {self.ring.names[i]!r}: it occurs in the polynomial")
                exps[mapping[i]] = e
            out[tuple(exps)] = c
        return MultiPoly(new_ring, out)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self.ring.names}, {format_poly(self)!r})"


# -- division ----------------------------------------------------------------

def divide_multi(f: MultiPoly, divisors: Sequence[MultiPoly],
                 order: MonomialOrder = LEX) -> tuple[list[MultiPoly], MultiPoly]:
    """Multivariate division: f = sum(q_i d_i) + r.

    No term of r is divisible by any leading term of the divisors; the result
    is deterministic for a fixed divisor order.
    """
    if not divisors:
        raise ZeroPolynomialError("need at least one divisor")
    for d in divisors:
        f._check_ring(d)
        if d.is_zero:
            raise ZeroPolynomialError("zero divisor in division")
    key = order.key
    div_data = []
    for d in divisors:
        lm, lc = d.leading_term(order)
        div_data.append((lm, lc, d.terms))
    p = dict(f.terms)
    rem: dict[Monomial, Fraction] = {}
    quots: list[dict[Monomial, Fraction]] = [{} for _ in divisors]
    while p:
        lm_p = max(p, key=key)
        lc_p = p[lm_p]
        for qd, (lm_d, lc_d, td) in zip(quots, div_data):
            if mono_divides(lm_d, lm_p):
                qm = mono_div(lm_p, lm_d)
                qc = lc_p / lc_d
                qd[qm] = qd.get(qm, Fraction(0)) + qc
                for m, c in td.items():
                    k = mono_mul(qm, m)
                    acc = p.get(k, Fraction(0)) - qc * c
                    if acc:
                        p[k] = acc
                    else:
                        p.pop(k, None)
                break
        else:
            rem[lm_p] = lc_p
            del p[lm_p]
    return [MultiPoly(f.ring, q) for q in quots], MultiPoly(f.ring, rem)


def exact_div(f: MultiPoly, g: MultiPoly, order: MonomialOrder = LEX) -> MultiPoly:
    """Quotient f/g when g divides f exactly; raises ValueError otherwise."""
    if g.is_zero:
        raise ZeroPolynomialError("division by the zero polynomial")
    quots, rem = divide_multi(f, [g], order)
    if not rem.is_zero:
        raise ValueError("exact_div: division left a remainder")
    return quots[0]


def divides(g: MultiPoly, f: MultiPoly, order: MonomialOrder = LEX) -> bool:
    """True iff g | f exactly."""
    if g.is_zero:
        return f.is_zero
    return divide_multi(f, [g], order)[1].is_zero


# -- integer term-map helpers -------------------------------------------------
#
# The Groebner engine, the resultant and the gcd all work on raw
# dict[mono, int] maps.  Scalars are irrelevant there, so inputs are cleared
# of denominators and stripped of integer content at the boundaries.

def zterms(f: MultiPoly) -> dict[Monomial, int]:
    """Primitive integer term map of f (content discarded); {} for zero."""
    if not f.terms:
        return {}
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    raw = {m: int(c * den) for m, c in f.terms.items()}
    return zprimitive(raw)


def zcontent(d: Mapping[Monomial, int]) -> int:
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def zprimitive(d: Mapping[Monomial, int]) -> dict[Monomial, int]:
    g = zcontent(d)
    if g in (0, 1):
        return dict(d)
    return {m: c // g for m, c in d.items()}


def zmul(a: Mapping[Monomial, int], b: Mapping[Monomial, int]) -> dict[Monomial, int]:
    if len(a) > len(b):
        a, b = b, a
    out: dict[Monomial, int] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            acc = out.get(mono, 0) + ca * cb
            if acc:
                out[mono] = acc
            else:
                del out[mono]
    return out


def zscale(a: Mapping[Monomial, int], c: int) -> dict[Monomial, int]:
    if c == 0:
        return {}
    return {m: v * c for m, v in a.items()}


def zsub(a: Mapping[Monomial, int], b: Mapping[Monomial, int]) -> dict[Monomial, int]:
    out = dict(a)
    for m, c in b.items():
        acc = out.get(m, 0) - c
        if acc:
            out[m] = acc
        else:
            out.pop(m, None)
    return out


def zdiv_exact(a: Mapping[Monomial, int], b: Mapping[Monomial, int],
               order: MonomialOrder = LEX) -> dict[Monomial, int]:
    """Exact quotient a/b over Z[x]; raises ValueError if not divisible.

    When b | a, every intermediate leading-coefficient division is exact,
    so the computation never leaves Z.
    """
    if not b:
        raise ZeroPolynomialError("zdiv_exact by zero")
    if not a:
        return {}
    key = order.key
    lm_b = max(b, key=key)
    lc_b = b[lm_b]
    p = dict(a)
    q: dict[Monomial, int] = {}
    while p:
        lm_p = max(p, key=key)
        lc_p = p[lm_p]
        if not mono_divides(lm_b, lm_p):
            raise ValueError("zdiv_exact: not divisible (monomial obstruction)")
        qc, r = divmod(lc_p, lc_b)
        if r:
            raise ValueError("zdiv_exact: not divisible (coefficient obstruction)")
        qm = mono_div(lm_p, lm_b)
        q[qm] = qc
        for m, c in b.items():
            k = mono_mul(qm, m)
            acc = p.get(k, 0) - qc * c
            if acc:
                p[k] = acc
            else:
                p.pop(k, None)
    return q


def _zdeg_in(d: Mapping[Monomial, int], idx: int) -> int:
    return max((m[idx] for m in d), default=-1)


def _zsplit_by(d: Mapping[Monomial, int], idx: int) -> dict[int, dict[Monomial, int]]:
    buckets: dict[int, dict[Monomial, int]] = {}
    for m, c in d.items():
        stripped = m[:idx] + (0,) + m[idx + 1:]
        buckets.setdefault(m[idx], {})[stripped] = c
    return buckets


def _zshift(d: Mapping[Monomial, int], idx: int, e: int) -> dict[Monomial, int]:
    return {m[:idx] + (m[idx] + e,) + m[idx + 1:]: c for m, c in d.items()}


def _zcontent_in(d: Mapping[Monomial, int], idx: int) -> dict[Monomial, int]:
    """gcd of the coefficient polynomials of the powers of variable idx."""
    acc: dict[Monomial, int] = {}
    for part in _zsplit_by(d, idx).values():
        acc = _zgcd(acc, part)
    return acc


def _zprem(a: dict[Monomial, int], b: dict[Monomial, int], idx: int) -> dict[Monomial, int]:
    """Pseudo-remainder of a by b with respect to variable idx."""
    db = _zdeg_in(b, idx)
    lc_b = _zsplit_by(b, idx)[db]
    while a:
        da = _zdeg_in(a, idx)
        if da < db:
            break
        lc_a = _zsplit_by(a, idx)[da]
        a = zsub(zmul(a, lc_b), zmul(_zshift(lc_a, idx, da - db), b))
    return a


def _zgcd(a: dict[Monomial, int], b: dict[Monomial, int]) -> dict[Monomial, int]:
    """gcd over Z[x1..xn] via primitive PRS; result primitive up to sign."""
    if not a:
        return zprimitive(b)
    if not b:
        return zprimitive(a)
    width = len(next(iter(a)))
    idx = next((i for i in range(width)
                if _zdeg_in(a, i) > 0 or _zdeg_in(b, i) > 0), None)
    if idx is None:
        unit = next(iter(a))
        return {unit: gcd(a[unit], b[unit])}
    da, db = _zdeg_in(a, idx), _zdeg_in(b, idx)
    if da == 0:
        return _zgcd(a, _zcontent_in(b, idx))
    if db == 0:
        return _zgcd(_zcontent_in(a, idx), b)
    cont_a = _zcontent_in(a, idx)
    cont_b = _zcontent_in(b, idx)
    scalar = _zgcd(cont_a, cont_b)
    f = zdiv_exact(a, cont_a)
    g = zdiv_exact(b, cont_b)
    if _zdeg_in(f, idx) < _zdeg_in(g, idx):
        f, g = g, f
    while True:
        r = _zprem(f, g, idx)
        if not r:
            result = g
            break
        if _zdeg_in(r, idx) == 0:
            width_unit = (0,) * width
            result = {width_unit: 1}
            break
        f, g = g, zdiv_exact(r, _zcontent_in(r, idx))
    return zmul(scalar, zprimitive(result))


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """gcd over Q[x1..xn], normalised primitive with positive leading coefficient."""
    f._check_ring(g)
    if f.is_zero and g.is_zero:
        return MultiPoly.zero(f.ring)
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    raw = _zgcd(zterms(f), zterms(g))
    return MultiPoly(f.ring, raw).primitive()


def from_zterms(ring: VarSet, d: Mapping[Monomial, int]) -> MultiPoly:
    return MultiPoly(ring, {m: Fraction(c) for m, c in d.items()})


# -- text format ----------------------------------------------------------------
#
# Terms joined by +/-, coefficients as integers or p/q, monomials like
# u^3*v^2.  The parser ignores all whitespace; printing uses the canonical
# decreasing term order, so print/parse round-trips exactly.

def format_poly(f: MultiPoly, order: MonomialOrder = LEX) -> str:
    if f.is_zero:
        return "0"
    key = order.key
    chunks: list[str] = []
    for mono in sorted(f.terms, key=key, reverse=True):
        coeff = f.terms[mono]
        parts = [f"{n}^{e}" if e > 1 else n
                 for n, e in zip(f.ring.names, mono) if e]
        mag = abs(coeff)
        if not parts:
            body = str(mag)
        elif mag == 1:
            body = "*".join(parts)
        else:
            body = str(mag) + "*" + "*".join(parts)
        if not chunks:
            chunks.append(("-" if coeff < 0 else "") + body)
        else:
            chunks.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(chunks)


_NUM_RE = re.compile(r"\d+(?:/\d+)?")
_VAR_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?")


def parse_poly(text: str, ring: VarSet) -> MultiPoly:
    """Parse the text polynomial format; inverse of format_poly."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty polynomial text")
    terms: list[tuple[Monomial, Fraction]] = []
    pos = 0
    sign = 1
    if compact[0] in "+-":
        sign = -1 if compact[0] == "-" else 1
        pos = 1
    while pos < len(compact):
        end = pos
        while end < len(compact) and compact[end] not in "+-":
            end += 1
        token = compact[pos:end]
        if not token:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * len(ring)
        for factor in token.split("*"):
            if not factor:
                raise ParseError(f"empty factor in term {token!r}")
            if _NUM_RE.fullmatch(factor):
                coeff *= Fraction(factor)
                continue
            m = _VAR_RE.fullmatch(factor)
            if not m:
                raise ParseError(f"cannot parse factor {factor!r}")
            exps[ring.index(m.group(1))] += int(m.group(2) or 1)
        terms.append((tuple(exps), coeff))
        if end < len(compact):
            sign = -1 if compact[end] == "-" else 1
        pos = end + 1
    return MultiPoly(ring, terms)
