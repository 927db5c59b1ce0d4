"""Sparse exact multivariate polynomials over the rationals.

A polynomial in n variables is a map from exponent vectors (tuples of n
nonnegative integers) to nonzero rational coefficients.  The module also
provides the canonical phi-adic expansion

    f = sum_I  a_I * phi_1^{i_1} * ... * phi_n^{i_n}

with deg_{x_j}(a_I) < deg(phi_j), computed by iterated Euclidean
division, and the Gauss content valuation min_coeff vp(c).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LiftcertError
from .exactnum import INFINITY, Val, val_min, vp


class VariableMismatch(LiftcertError):
    """Operands disagree on the number of variables."""


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def grlex_key(exps):
    """Sort key for graded-lexicographic order (total degree, then lex)."""
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = _as_fraction(c)
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise VariableMismatch(
                        f"bad exponent vector {exps} for {nvars} variables"
                    )
                clean[exps] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: _as_fraction(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def from_univariate(cls, nvars: int, i: int, coeffs) -> "MultiPoly":
        """Embed a univariate polynomial (coeffs low-to-high) in variable i."""
        terms = {}
        for k, c in enumerate(coeffs):
            c = _as_fraction(c)
            if c == 0:
                continue
            exps = [0] * nvars
            exps[i] = k
            terms[tuple(exps)] = c
        return cls(nvars, terms)

    # -- queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.degree() > 0:
            raise ValueError("polynomial is not constant")
        return self.coeff((0,) * self.nvars)

    def univariate_coeffs(self, i: int):
        """Coefficient list (low-to-high) in x_i; requires all other vars absent."""
        coeffs = [Fraction(0)] * (max(self.degree_in(i), 0) + 1)
        for exps, c in self.terms.items():
            if any(e != 0 for j, e in enumerate(exps) if j != i):
                raise ValueError(f"polynomial is not univariate in variable {i}")
            coeffs[exps[i]] = c
        return coeffs

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise VariableMismatch(
                f"{self.nvars} variables vs {other.nvars} variables"
            )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return MultiPoly(self.nvars, terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return MultiPoly(self.nvars, terms)

    def scale(self, c) -> "MultiPoly":
        c = _as_fraction(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly(self.nvars, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def substitute(self, i: int, value: "MultiPoly") -> "MultiPoly":
        """Replace variable i by a polynomial (or constant) in the same ring."""
        self._check(value)
        result = MultiPoly.zero(self.nvars)
        powers = {0: MultiPoly.constant(self.nvars, 1)}
        for exps, c in self.terms.items():
            k = exps[i]
            if k not in powers:
                powers[k] = value ** k
            rest = list(exps)
            rest[i] = 0
            result = result + powers[k].scale(c) * MultiPoly(
                self.nvars, {tuple(rest): Fraction(1)}
            )
        return result

    def shift(self, i: int, a) -> "MultiPoly":
        """x_i -> x_i + a."""
        a = _as_fraction(a)
        if a == 0:
            return self
        xa = MultiPoly.variable(self.nvars, i) + MultiPoly.constant(self.nvars, a)
        return self.substitute(i, xa)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- printing ------------------------------------------------------

    def to_str(self, names=None) -> str:
        """Canonical text form: graded-lex descending, explicit * and ^."""
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for exps in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.to_str()})"


def divmod_in_var(f: MultiPoly, i: int, phi_coeffs):
    """Euclidean division of f by a monic univariate phi(x_i).

    Returns (q, r) with f = q*phi + r and deg_{x_i}(r) < deg(phi).
    """
    m = len(phi_coeffs) - 1
    if m < 1 or phi_coeffs[-1] != 1:
        raise ValueError("phi must be monic of degree >= 1")
    phi = MultiPoly.from_univariate(f.nvars, i, phi_coeffs)
    q = MultiPoly.zero(f.nvars)
    r = f
    while r.degree_in(i) >= m:
        d = r.degree_in(i)
        lead_terms = {}
        for exps, c in r.terms.items():
            if exps[i] == d:
                e = list(exps)
                e[i] = d - m
                lead_terms[tuple(e)] = c
        qt = MultiPoly(f.nvars, lead_terms)
        q = q + qt
        r = r - qt * phi
    return q, r


class PhiExpansion:
    """The unique representation f = sum_I a_I prod_j phi_j^{i_j}."""

    __slots__ = ("nvars", "phis", "terms")

    def __init__(self, nvars, phis, terms):
        self.nvars = nvars
        self.phis = [list(p) for p in phis]  # univariate coeffs, low-to-high
        self.terms = dict(terms)  # index vector -> MultiPoly digit

    def indices(self):
        return sorted(self.terms, key=grlex_key)


def phi_expand(f: MultiPoly, phis) -> PhiExpansion:
    """Expand f in base (phi_1, ..., phi_n) by iterated division.

    phis is one monic univariate coefficient list (low-to-high) per
    variable; phi_j is a polynomial in x_j alone.
    """
    n = f.nvars
    if len(phis) != n:
        raise VariableMismatch(f"{len(phis)} phis for {n} variables")
    for coeffs in phis:
        if len(coeffs) < 2 or _as_fraction(coeffs[-1]) != 1:
            raise ValueError("each phi must be monic of degree >= 1")

    def digits(g: MultiPoly, i: int):
        out = []
        while not g.is_zero:
            g, r = divmod_in_var(g, i, phis[i])
            out.append(r)
        return out

    def expand(g: MultiPoly, var: int):
        if g.is_zero:
            return {}
        if var == n:
            return {(): g}
        result = {}
        for k, digit in enumerate(digits(g, var)):
            for idx, a in expand(digit, var + 1).items():
                result[(k,) + idx] = a
        return result

    return PhiExpansion(n, phis, expand(f, 0))


def reconstruct(expansion: PhiExpansion) -> MultiPoly:
    """Sum a_I * prod phi_j^{i_j}, exactly."""
    n = expansion.nvars
    f = MultiPoly.zero(n)
    for idx, a in expansion.terms.items():
        term = a
        for j, k in enumerate(idx):
            if k:
                phi = MultiPoly.from_univariate(n, j, expansion.phis[j])
                term = term * phi ** k
        f = f + term
    return f


def content_valuation(f: MultiPoly, p: int) -> Val:
    """Gauss content: min vp over coefficients; Infinity for zero."""
    if f.is_zero:
        return INFINITY
    return val_min(*(vp(c, p) for c in f.terms.values()))
