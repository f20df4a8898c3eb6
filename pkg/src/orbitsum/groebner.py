"""Buchberger's algorithm, elimination, extension analysis and the resultant oracle.

The engine keeps polynomials as content-stripped integer term maps while it
works (fraction-free reduction), and only converts back to rational
`MultiPoly` values when a result is published.  Published bases are reduced
and canonical: primitive integer coefficients, positive leading coefficient,
elements sorted by increasing leading monomial.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    BudgetExceededError,
    DimensionError,
    OrderError,
    ZeroPolynomialError,
)
from .ring import (
    LEX,
    MonomialOrder,
    MultiPoly,
    VarSet,
    from_zterms,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    zdiv_exact,
    zmul,
    zprimitive,
    zsub,
    zterms,
)

DEFAULT_PAIR_BUDGET = 200_000

# Strip integer content from a working polynomial once its coefficients pass
# this bit size; keeps fraction-free reduction from ballooning.
_CONTENT_STRIP_BITS = 4096


@dataclass(frozen=True)
class IdealBasis:
    """A finite generating set of an ideal in Q[vars]."""

    ring: VarSet
    generators: tuple[MultiPoly, ...]

    def __post_init__(self):
        if not self.generators:
            raise ZeroPolynomialError("an ideal basis needs at least one generator")
        for g in self.generators:
            if g.ring.names != self.ring.names:
                raise DimensionError("generator ring differs from the ideal ring")
            if g.is_zero:
                raise ZeroPolynomialError("zero generator in ideal basis")

    @classmethod
    def of(cls, *generators: MultiPoly) -> "IdealBasis":
        return cls(generators[0].ring, tuple(generators))


@dataclass(frozen=True)
class PairStats:
    pairs_formed: int = 0
    skipped_coprime: int = 0
    skipped_chain: int = 0
    reductions: int = 0
    reductions_to_zero: int = 0

    def as_dict(self) -> dict:
        return {
            "pairs_formed": self.pairs_formed,
            "skipped_coprime": self.skipped_coprime,
            "skipped_chain": self.skipped_chain,
            "reductions": self.reductions,
            "reductions_to_zero": self.reductions_to_zero,
        }


@dataclass(frozen=True)
class GroebnerResult:
    """Reduced Groebner basis plus bookkeeping.

    trace records how every working-basis element arose: ("generator", i)
    for inputs, ("spoly", i, j) for surviving S-polynomial reductions, so
    each element is a certified combination of the original generators.
    """

    ring: VarSet
    order: MonomialOrder
    basis: tuple[MultiPoly, ...]
    generators: tuple[MultiPoly, ...]
    pair_stats: PairStats
    trace: tuple[tuple, ...]


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder = LEX) -> MultiPoly:
    """S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g; the leading terms cancel."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    f._check_ring(g)
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    lcm = mono_lcm(lm_f, lm_g)
    a = MultiPoly(f.ring, {mono_div(lcm, lm_f): Fraction(1) / lc_f})
    b = MultiPoly(f.ring, {mono_div(lcm, lm_g): Fraction(1) / lc_g})
    return a * f - b * g


# -- fraction-free reduction over integer term maps ---------------------------

def _znormal_form(p: dict, reducers, key) -> dict:
    """Full normal form of p modulo reducers [(lm, lc, terms)]; content-stripped.

    Scales p (and the partial remainder) by integer factors as needed, so the
    result equals the rational normal form up to a positive scalar.
    """
    p = dict(p)
    rem: dict = {}
    scale_bits = 0
    while p:
        lm_p = max(p, key=key)
        lc_p = p[lm_p]
        for lm_g, lc_g, terms_g in reducers:
            if mono_divides(lm_g, lm_p):
                g0 = gcd(lc_p, lc_g)
                a = lc_g // g0
                b = lc_p // g0
                if a != 1:
                    for k in p:
                        p[k] *= a
                    for k in rem:
                        rem[k] *= a
                    scale_bits += a.bit_length()
                shift = mono_div(lm_p, lm_g)
                for m, c in terms_g.items():
                    k = mono_mul(shift, m)
                    acc = p.get(k, 0) - b * c
                    if acc:
                        p[k] = acc
                    else:
                        p.pop(k, None)
                if scale_bits > _CONTENT_STRIP_BITS:
                    g_all = 0
                    for c in p.values():
                        g_all = gcd(g_all, c)
                        if g_all == 1:
                            break
                    if g_all != 1:
                        for c in rem.values():
                            g_all = gcd(g_all, c)
                            if g_all == 1:
                                break
                    if g_all > 1:
                        p = {m: c // g_all for m, c in p.items()}
                        rem = {m: c // g_all for m, c in rem.items()}
                    scale_bits = 0
                break
        else:
            rem[lm_p] = lc_p
            del p[lm_p]
    return zprimitive(rem)


def _zspoly(fa, fb, key) -> dict:
    """Integer S-polynomial of (lm, lc, terms) records."""
    lm_a, lc_a, ta = fa
    lm_b, lc_b, tb = fb
    lcm = mono_lcm(lm_a, lm_b)
    g0 = gcd(lc_a, lc_b)
    ca, cb = lc_b // g0, lc_a // g0
    sa = mono_div(lcm, lm_a)
    sb = mono_div(lcm, lm_b)
    out: dict = {}
    for m, c in ta.items():
        out[mono_mul(sa, m)] = ca * c
    for m, c in tb.items():
        k = mono_mul(sb, m)
        acc = out.get(k, 0) - cb * c
        if acc:
            out[k] = acc
        else:
            out.pop(k, None)
    return out


def _canonical(ring: VarSet, raw: dict, order: MonomialOrder) -> MultiPoly:
    """Primitive integer form with positive leading coefficient."""
    stripped = zprimitive(raw)
    if stripped and stripped[max(stripped, key=order.key)] < 0:
        stripped = {m: -c for m, c in stripped.items()}
    return from_zterms(ring, stripped)


def buchberger(ideal: IdealBasis, order: MonomialOrder = LEX,
               pair_budget: int = DEFAULT_PAIR_BUDGET) -> GroebnerResult:
    """Reduced Groebner basis of the ideal via Buchberger's algorithm.

    Pair selection is the normal strategy (smallest lcm under the order);
    the coprime-leading-monomial and chain criteria prune pairs.  Exceeding
    `pair_budget` S-polynomial reductions raises BudgetExceededError.
    """
    key = order.key
    basis: list[tuple] = []  # (lm, lc, terms) integer records
    trace: list[tuple] = []
    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()
    stats = {"pairs_formed": 0, "skipped_coprime": 0, "skipped_chain": 0,
             "reductions": 0, "reductions_to_zero": 0}

    def push_pairs(new_index: int):
        lm_new = basis[new_index][0]
        for i in range(new_index):
            lcm = mono_lcm(basis[i][0], lm_new)
            heapq.heappush(heap, (key(lcm), i, new_index, lcm))
            pending.add((i, new_index))
            stats["pairs_formed"] += 1

    def add_element(raw: dict, origin: tuple):
        record = max(raw, key=key)
        basis.append((record, raw[record], raw))
        trace.append(origin)
        push_pairs(len(basis) - 1)

    for gi, g in enumerate(ideal.generators):
        nf = _znormal_form(zterms(g), basis, key)
        if nf:
            add_element(nf, ("generator", gi))

    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lm_i, lm_j = basis[i][0], basis[j][0]
        if mono_lcm(lm_i, lm_j) == mono_mul(lm_i, lm_j):
            stats["skipped_coprime"] += 1
            continue
        chained = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (mono_divides(basis[k][0], lcm)
                    and (min(i, k), max(i, k)) not in pending
                    and (min(j, k), max(j, k)) not in pending):
                chained = True
                break
        if chained:
            stats["skipped_chain"] += 1
            continue
        if stats["reductions"] >= pair_budget:
            raise BudgetExceededError(
                f"Groebner pair budget of {pair_budget} reductions exhausted "
                f"({stats['pairs_formed']} pairs formed, basis size {len(basis)})")
        stats["reductions"] += 1
        nf = _znormal_form(_zspoly(basis[i], basis[j], key), basis, key)
        if nf:
            add_element(nf, ("spoly", i, j))
        else:
            stats["reductions_to_zero"] += 1

    # Minimalise: drop elements whose leading monomial another one divides.
    order_idx = sorted(range(len(basis)), key=lambda i: key(basis[i][0]))
    kept: list[int] = []
    for i in order_idx:
        if not any(mono_divides(basis[k][0], basis[i][0]) for k in kept):
            kept.append(i)

    # Interreduce to the unique reduced basis (up to scalars).
    reduced = [basis[i][2] for i in kept]
    changed = True
    while changed:
        changed = False
        for i in range(len(reduced)):
            others = []
            for j, r in enumerate(reduced):
                if j != i:
                    lm = max(r, key=key)
                    others.append((lm, r[lm], r))
            nf = _znormal_form(reduced[i], others, key)
            if not nf:
                raise ZeroPolynomialError("interreduction killed a minimal element")
            if nf != zprimitive(reduced[i]):
                changed = True
            reduced[i] = nf

    final = sorted((_canonical(ideal.ring, r, order) for r in reduced),
                   key=lambda p: key(p.leading_monomial(order)))
    return GroebnerResult(
        ring=ideal.ring,
        order=order,
        basis=tuple(final),
        generators=ideal.generators,
        pair_stats=PairStats(**stats),
        trace=tuple(trace),
    )


def normal_form(f: MultiPoly, basis, order: MonomialOrder = LEX) -> MultiPoly:
    """Remainder of f under division by the basis (canonical up to scalar)."""
    polys = list(basis)
    key = order.key
    reducers = []
    for b in polys:
        t = zterms(b)
        lm = max(t, key=key)
        reducers.append((lm, t[lm], t))
    nf = _znormal_form(zterms(f), reducers, key)
    return _canonical(f.ring, nf, order)


def reduces_to_zero(f: MultiPoly, basis, order: MonomialOrder = LEX) -> bool:
    return normal_form(f, basis, order).is_zero


def certify(result: GroebnerResult) -> bool:
    """Full Buchberger certificate: every pairwise S-polynomial reduces to 0.

    Also checks that every original generator reduces to zero modulo the
    basis.  Raises AssertionError on the first failure.
    """
    basis = result.basis
    for f, g in itertools.combinations(basis, 2):
        s = s_polynomial(f, g, result.order)
        if s.is_zero:
            continue
        if not reduces_to_zero(s, basis, result.order):
            raise AssertionError(
                f"S-polynomial of {f} and {g} does not reduce to zero")
    for g in result.generators:
        if not reduces_to_zero(g, basis, result.order):
            raise AssertionError(f"generator {g} is not in <basis>")
    return True


def is_elimination_order(order: MonomialOrder, ring: VarSet, keep: tuple[str, ...]) -> bool:
    """True when `order` ranks every dropped variable above the kept ones."""
    if order.kind == "lex":
        return True
    if order.kind == "block":
        cut = len(ring) - len(keep)
        pos = 0
        for size, _ in order.blocks:
            if pos == cut:
                return True
            pos += size
        return pos == cut
    return False


def eliminate(result: GroebnerResult, keep: tuple[str, ...]) -> list[MultiPoly]:
    """Basis of the elimination ideal: elements using only the kept variables.

    `keep` must be a suffix of the ring's variable chain and the order an
    elimination order for the split (lex always qualifies).
    """
    names = result.ring.names
    if tuple(keep) != names[len(names) - len(keep):]:
        raise OrderError(f"{keep!r} is not a suffix of the variable chain {names}")
    if not is_elimination_order(result.order, result.ring, tuple(keep)):
        raise OrderError(
            f"{result.order.describe()} does not eliminate the leading variables")
    kept_set = set(keep)
    out = []
    for p in result.basis:
        if all(v in kept_set for v in p.variables()):
            out.append(p)
    return out


# -- extension theorem --------------------------------------------------------

@dataclass(frozen=True)
class ExtensionReport:
    """Leading-coefficient data for lifting partial solutions.

    For each generator f_i, written as g_i(rest) * var^N_i + lower order in
    var, we record (index, g_i, N_i).  A partial solution outside
    V(g_1,...,g_s) extends to a full solution.
    """

    ring: VarSet
    eliminated_var: str
    leading_coeffs: tuple[tuple[int, MultiPoly, int], ...]
    obstruction_variety: tuple[MultiPoly, ...]

    def remaining_names(self) -> tuple[str, ...]:
        return tuple(n for n in self.ring.names if n != self.eliminated_var)

    def obstruction_is_empty(self) -> bool:
        """True when some g_i is a nonzero constant (the variety is empty)."""
        return any(g.variables() == () and not g.is_zero
                   for g in self.obstruction_variety)

    def obstruction_points(self):
        """Exact description of the obstruction locus when it is computable.

        Returns (roots, complete): if every g_i depends on one shared
        variable, `roots` are the exact rational roots of their univariate
        gcd, and `complete` says whether that gcd factors entirely into the
        rational linear factors found (so the locus is exactly those roots,
        with all other variables free).  Returns (None, False) if the locus
        is not of that shape.
        """
        if self.obstruction_is_empty():
            return (), True
        used = set()
        for g in self.obstruction_variety:
            used.update(g.variables())
        if len(used) != 1:
            return None, False
        var = used.pop()
        acc = MultiPoly.zero(self.ring)
        from .ring import poly_gcd  # local import: cycle-free but keeps header tidy
        for g in self.obstruction_variety:
            acc = poly_gcd(acc, g)
        coeffs = _univariate_int_coeffs(acc, var)
        roots, complete = rational_roots(coeffs)
        return tuple(roots), complete


def _univariate_int_coeffs(f: MultiPoly, var: str) -> list[int]:
    """Dense integer coefficient list (low to high) of a univariate polynomial."""
    idx = f.ring.index(var)
    prim = zterms(f)
    out = [0] * (max((m[idx] for m in prim), default=0) + 1)
    for m, c in prim.items():
        if any(e for i, e in enumerate(m) if i != idx and e):
            raise DimensionError(f"{f} is not univariate in {var!r}")
        out[m[idx]] = c
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            large.append(n // d)
    return small + large[::-1]


def rational_roots(coeffs: list[int]) -> tuple[list[Fraction], bool]:
    """All rational roots of an integer polynomial (low-to-high coeffs).

    Returns (roots with multiplicity collapsed, fully_factored) where
    fully_factored means the polynomial splits into the rational linear
    factors found (times a constant), so there are no other roots at all.
    """
    work = list(coeffs)
    while work and work[-1] == 0:
        work.pop()
    if not work:
        raise ZeroPolynomialError("rational_roots of the zero polynomial")
    roots: list[Fraction] = []
    while len(work) > 1 and work[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        work = work[1:]

    def try_divide(r: Fraction) -> bool:
        # synthetic division; True (and commits) iff r is a root
        nonlocal work
        q = []
        acc = Fraction(0)
        for c in reversed(work):
            acc = acc * r + c
            q.append(acc)
        if q[-1] != 0:
            return False
        work = [int(x) if x.denominator == 1 else x for x in q[-2::-1]]
        # renormalise to integers for further candidate generation
        den = 1
        for x in work:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        work = [int(x * den) for x in work]
        return True

    progress = True
    while len(work) > 1 and progress:
        progress = False
        a0, ad = work[0], work[-1]
        if a0 == 0:
            if Fraction(0) not in roots:
                roots.append(Fraction(0))
            work = work[1:]
            progress = True
            continue
        for p in _divisors(a0):
            for q in _divisors(ad):
                if gcd(p, q) != 1:
                    continue
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if try_divide(cand):
                        if cand not in roots:
                            roots.append(cand)
                        progress = True
                        break
                if progress:
                    break
            if progress:
                break
    return sorted(roots), len(work) == 1


def extension_report(ideal: IdealBasis, var: str) -> ExtensionReport:
    """Degrees and leading coefficients of the generators in `var`.

    Generators free of `var` get N_i = 0 with g_i the generator itself
    (documented behaviour, not an error).
    """
    ideal.ring.index(var)
    records = []
    for i, f in enumerate(ideal.generators):
        split = f.coeffs_in(var)
        n_i = max(split)
        records.append((i, split[n_i], n_i))
    return ExtensionReport(
        ring=ideal.ring,
        eliminated_var=var,
        leading_coeffs=tuple(records),
        obstruction_variety=tuple(g for _, g, _ in records),
    )


def check_extends(report: ExtensionReport, partial_point, tol: float = 1e-9) -> bool:
    """True iff the partial solution is guaranteed to lift.

    `partial_point` holds complex values for the non-eliminated variables in
    ring order.  The guarantee is |g_i(point)| > tol for some i, i.e. the
    point avoids the obstruction variety.
    """
    names = report.remaining_names()
    if len(partial_point) != len(names):
        raise DimensionError(
            f"point has {len(partial_point)} coordinates, expected {len(names)}")
    values = dict(zip(names, partial_point))
    values[report.eliminated_var] = 0.0  # never occurs in the g_i
    return any(abs(g.evaluate(values)) > tol for g in report.obstruction_variety)


# -- resultant oracle ----------------------------------------------------------

def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> list[list[MultiPoly]]:
    f._check_ring(g)
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    m = f.degree_in(var)
    n = g.degree_in(var)
    if m <= 0 and n <= 0:
        raise DimensionError(f"neither input contains {var!r}")
    zero = MultiPoly.zero(f.ring)
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    size = m + n
    rows = []
    for shift in range(n):
        row = [zero] * size
        for e, c in fc.items():
            row[shift + (m - e)] = c
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for e, c in gc.items():
            row[shift + (n - e)] = c
        rows.append(row)
    return rows


def sylvester_resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Res_var(f, g) by fraction-free Bareiss elimination of the Sylvester matrix.

    The result is a polynomial in the remaining variables vanishing on the
    projection of V(f, g); computed independently of any Groebner machinery,
    so it serves as an elimination oracle.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    m = f.degree_in(var)
    n = g.degree_in(var)
    if m <= 0 and n <= 0:
        raise DimensionError(f"neither input contains {var!r}")
    if m <= 0:
        return f ** n
    if n <= 0:
        return g ** m
    df = _common_denominator(f)
    dg = _common_denominator(g)
    rows = sylvester_matrix(f * df, g * dg, var)
    size = len(rows)
    mat = [[_zexact(entry) for entry in row] for row in rows]
    sign = 1
    prev: dict = {f.ring.unit(): 1}
    for k in range(size - 1):
        if not mat[k][k]:
            pivot = next((r for r in range(k + 1, size) if mat[r][k]), None)
            if pivot is None:
                return MultiPoly.zero(f.ring)
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = zsub(zmul(mat[i][j], mat[k][k]), zmul(mat[i][k], mat[k][j]))
                mat[i][j] = zdiv_exact(num, prev) if num else {}
            mat[i][k] = {}
        prev = mat[k][k]
    det = mat[size - 1][size - 1]
    if sign < 0:
        det = {mo: -c for mo, c in det.items()}
    return from_zterms(f.ring, det) * Fraction(1, df ** n * dg ** m)


def _common_denominator(f: MultiPoly) -> int:
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return den


def _zexact(f: MultiPoly) -> dict:
    """Integer term map of denominator-cleared f (content preserved)."""
    if not f.terms:
        return {}
    den = _common_denominator(f)
    return {m: int(c * den) for m, c in f.terms.items()}


def trial_factor(f: MultiPoly, candidates) -> tuple[MultiPoly, list[int]]:
    """Divide out each candidate with maximal exact multiplicity.

    Returns (cofactor, multiplicities) with f = prod(cand_i^mult_i) * cofactor.
    """
    from .ring import exact_div

    cofactor = f
    mults = []
    for cand in candidates:
        if cand.is_zero:
            raise ZeroPolynomialError("zero candidate factor")
        count = 0
        while not cofactor.is_zero:
            try:
                cofactor = exact_div(cofactor, cand)
            except ValueError:
                break
            count += 1
        mults.append(count)
    return cofactor, mults
