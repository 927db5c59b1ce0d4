"""Independent ground-truth factorization over the rationals.

Kronecker's method, end to end: a bivariate input is mapped to a
univariate integer polynomial by the substitution y -> x^D with
D = 1 + max partial degree (injective on the relevant exponent boxes);
the univariate polynomial is factored by the classical evaluation /
divisor-tuple / interpolation search; factor combinations are mapped
back through the substitution and verified by exact division.

Exponential but exact, and deliberately independent of every
valuation-theoretic code path in this package: this is the oracle the
certificates are cross-checked against, at desk scale only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceLimitExceeded
from .multipoly import MultiPoly, grlex_key

DEFAULT_GUARD = 10 ** 6
MAX_VARS = 2
MAX_TOTAL_DEGREE = 8


@dataclass
class FactorizationResult:
    """scalar * prod factors^multiplicities equals the input exactly."""

    scalar: Fraction
    factors: list  # (primitive MultiPoly with positive grlex lead, mult)

    @property
    def irreducible(self) -> bool:
        return (
            len(self.factors) == 1
            and self.factors[0][1] == 1
            and self.factors[0][0].degree() >= 1
        )

    def reconstruct(self, nvars: int) -> MultiPoly:
        f = MultiPoly.constant(nvars, self.scalar)
        for g, mult in self.factors:
            f = f * g ** mult
        return f


def brute_factor(f: MultiPoly, guard: int = DEFAULT_GUARD) -> FactorizationResult:
    """Exact factorization into rational irreducibles (desk scale)."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.nvars > MAX_VARS:
        raise ResourceLimitExceeded("oracle variable count", MAX_VARS, f.nvars)
    if f.degree() > MAX_TOTAL_DEGREE:
        raise ResourceLimitExceeded(
            "oracle total degree", MAX_TOTAL_DEGREE, f.degree()
        )

    primitive, scalar = _primitive_part(f)
    if primitive.degree() == 0:
        return FactorizationResult(scalar * primitive.constant_value(), [])

    raw = _factor_primitive(primitive, guard)
    raw.sort(key=lambda g: (g.degree(), sorted(g.terms, key=grlex_key)))
    grouped = []
    for g in raw:
        if grouped and grouped[-1][0] == g:
            grouped[-1][1] += 1
        else:
            grouped.append([g, 1])
    result = FactorizationResult(scalar, [(g, m) for g, m in grouped])
    assert result.reconstruct(f.nvars) == f
    return result


# ---------------------------------------------------------------------
# primitive parts and exact multivariate division


def _primitive_part(f: MultiPoly):
    """Integer-primitive form with positive graded-lex leading
    coefficient; returns (primitive, scalar) with f = scalar * primitive."""
    denom = 1
    for c in f.terms.values():
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    nums = [c.numerator * (denom // c.denominator) for c in f.terms.values()]
    content = 0
    for n in nums:
        content = _gcd(content, abs(n))
    lead_exps = max(f.terms, key=grlex_key)
    sign = -1 if f.terms[lead_exps] < 0 else 1
    scalar = Fraction(sign * content, denom)
    return f.scale(1 / scalar), scalar


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def exact_divide(f: MultiPoly, g: MultiPoly):
    """Quotient f/g if g divides f exactly over the rationals, else None."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    g_lead = max(g.terms)
    g_c = g.terms[g_lead]
    r = f
    q = MultiPoly.zero(f.nvars)
    while not r.is_zero:
        r_lead = max(r.terms)
        if any(a < b for a, b in zip(r_lead, g_lead)):
            return None
        shift = tuple(a - b for a, b in zip(r_lead, g_lead))
        term = MultiPoly(f.nvars, {shift: r.terms[r_lead] / g_c})
        q = q + term
        r = r - term * g
    return q


# ---------------------------------------------------------------------
# Kronecker substitution


def _kron_to_univariate(f: MultiPoly, d_base: int):
    coeffs = {}
    for exps, c in f.terms.items():
        k = exps[0] if f.nvars >= 1 else 0
        if f.nvars == 2:
            k = exps[0] + d_base * exps[1]
        assert c.denominator == 1
        coeffs[k] = c.numerator
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return out


def _kron_from_univariate(coeffs, d_base: int, nvars: int) -> MultiPoly:
    terms = {}
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if nvars == 1:
            terms[(k,)] = Fraction(c)
        else:
            terms[(k % d_base, k // d_base)] = Fraction(c)
    return MultiPoly(nvars, terms)


def _factor_primitive(f: MultiPoly, guard: int):
    """Irreducible primitive factors (with repetition) of a primitive
    polynomial with positive graded-lex leading coefficient."""
    n = f.nvars
    d_base = 1 + max(f.degree_in(i) for i in range(n))
    uni = _kron_to_univariate(f, d_base)
    uni_factors = _factor_univariate_int(uni, guard)
    if n == 1:
        return [MultiPoly.from_univariate(1, 0, g) for g in uni_factors]

    factors = []
    remaining = f
    pool = list(uni_factors)
    while pool:
        found = False
        for size in range(1, len(pool) + 1):
            for subset in itertools.combinations(range(len(pool)), size):
                prod = [1]
                for idx in subset:
                    prod = _int_mul(prod, pool[idx])
                candidate = _kron_from_univariate(prod, d_base, n)
                candidate, _ = _primitive_part(candidate)
                if candidate.degree() < 1:
                    continue
                quotient = exact_divide(remaining, candidate)
                if quotient is not None:
                    factors.append(candidate)
                    remaining = quotient
                    pool = [g for i, g in enumerate(pool) if i not in subset]
                    found = True
                    break
            if found:
                break
        if not found:
            # full pool is one irreducible image; remaining is that factor
            primitive, _ = _primitive_part(remaining)
            factors.append(primitive)
            remaining = exact_divide(remaining, primitive)
            pool = []
    assert remaining.degree() == 0
    return factors


# ---------------------------------------------------------------------
# univariate factorization over the integers (Kronecker search)


def _int_normalize(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _int_eval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def _int_content(a):
    c = 0
    for k in a:
        c = _gcd(c, abs(k))
    return c or 1


def _int_primitive(a):
    a = _int_normalize(a)
    c = _int_content(a)
    a = [k // c for k in a]
    if a and a[-1] < 0:
        a = [-k for k in a]
    return a


def _int_exact_divide(a, b):
    """a / b over the integers if exact, else None."""
    a = _int_normalize(a)
    b = _int_normalize(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        if r[-1] % b[-1] != 0:
            return None
        c = r[-1] // b[-1]
        d = len(r) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            r[i + d] -= c * cb
        r = _int_normalize(r)
    if r:
        return None
    return _int_normalize(q)


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _eval_points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _factor_univariate_int(u, guard: int):
    """Full factorization of a primitive integer polynomial with
    positive leading coefficient into primitive irreducibles."""
    u = _int_primitive(u)
    factors = []

    # monomial part
    while len(u) > 1 and u[0] == 0:
        factors.append([0, 1])
        u = u[1:]

    # all rational roots a/b -> primitive linear factors (b x - a)
    changed = True
    while changed and len(u) > 2:
        changed = False
        for b in _divisors(u[-1]):
            for a0 in _divisors(u[0]):
                for a in (a0, -a0):
                    if _gcd(abs(a), b) != 1:
                        continue
                    if _int_eval(u, Fraction(a, b)) == 0:
                        lin = _int_primitive([-a, b])
                        quotient = _int_exact_divide(u, lin)
                        assert quotient is not None
                        factors.append(lin)
                        u = quotient
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    if len(u) == 2:
        factors.append(_int_primitive(u))
        return factors
    if len(u) <= 1:
        assert u == [] or u == [1]
        return factors

    # Kronecker search for factors of degree 2 .. deg/2; a quotient has
    # no rational roots either, so the search simply continues
    nodes = [0]
    while len(u) - 1 >= 4:
        d = len(u) - 1
        found = None
        for r in range(2, d // 2 + 1):
            found = _has_degree_factor(u, r, guard, nodes)
            if found:
                break
        if not found:
            break
        factors.append(found)
        u = _int_exact_divide(u, found)
    if len(u) > 1:
        factors.append(_int_primitive(u))
    return factors


def _has_degree_factor(u, r, guard, nodes):
    """First primitive degree-r factor of u in canonical search order,
    or None.  Newton divided differences prune the divisor tuples."""
    pts = []
    vals = []
    for m in _eval_points():
        v = _int_eval(u, m)
        if v == 0:
            continue  # roots were extracted already; be safe anyway
        pts.append(m)
        vals.append(v)
        if len(pts) == r + 1:
            break

    columns = []  # columns[j] = divided differences ending at point j

    def candidates(j):
        base = _divisors(vals[j])
        if j == 0:
            return base  # fix the sign at the first point
        return [s * d for d in base for s in (1, -1)]

    def rec(j):
        if j == r + 1:
            lead = columns[r][r]
            if lead == 0 or u[-1] % lead != 0:
                return None
            g = _int_primitive(_newton_to_coeffs(columns, pts))
            if len(g) - 1 != r:
                return None
            if _int_exact_divide(u, g) is None:
                return None
            return g
        for d in candidates(j):
            nodes[0] += 1
            if nodes[0] > guard:
                raise ResourceLimitExceeded(
                    "divisor-tuple candidates", guard, nodes[0]
                )
            col = [d]
            ok = True
            for i in range(1, j + 1):
                num = col[i - 1] - columns[j - 1][i - 1]
                den = pts[j] - pts[j - i]
                if num % den != 0:
                    ok = False
                    break
                col.append(num // den)
            if not ok:
                continue
            columns.append(col)
            result = rec(j + 1)
            columns.pop()
            if result is not None:
                return result
        return None

    return rec(0)


def _newton_to_coeffs(columns, pts):
    """Expand Newton-form coefficients into a dense coefficient list."""
    coeffs = [0]
    basis = [1]  # prod_{k<j} (x - pts[k])
    for j, col in enumerate(columns):
        c = col[j]
        if len(coeffs) < len(basis):
            coeffs += [0] * (len(basis) - len(coeffs))
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        new_basis = [0] * (len(basis) + 1)
        for i, b in enumerate(basis):
            new_basis[i + 1] += b
            new_basis[i] -= pts[j] * b
        basis = new_basis
    return _int_normalize(coeffs)
