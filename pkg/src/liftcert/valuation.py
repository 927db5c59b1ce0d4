"""Minimal pairs, their derived invariants, and the induced valuation.

A pair configuration fixes, per variable, either a rational center with
a distance delta >= 0, or an "inert" working polynomial (monic over the
integers, irreducible mod p) with delta > 0.  From each pair we derive:

  * the working polynomial phi_i and its degree m_i,
  * lambda_i, the value of phi_i under the pair valuation,
  * e_i, the denominator of lambda_i, and N_i = e_i * lambda_i,
    so the normalizer h_i is the constant p^{N_i}.

The valuation of a polynomial f is computed from its phi-adic expansion:

    w(f) = min_I ( v(a_I at the centers) + sum_j i_j * lambda_j )

where the coefficient value is the Gauss content of the (recentred)
digit; this content rule is exact because inert extensions are
unramified with pairwise coprime degrees, a constraint the residue
field construction enforces.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, LiftcertError
from .exactnum import INFINITY, Val, check_prime, vp, vp_int
from .finitefield import (
    DEFAULT_CANDIDATE_LIMIT,
    ResidueField,
    ResiduePoly,
    is_irreducible_univariate,
)
from .multipoly import MultiPoly, content_valuation, phi_expand


class NotNormalized(LiftcertError):
    """w(f) does not match the target sum of e_i * t_i * lambda_i."""

    def __init__(self, actual: Val, expected: Fraction):
        self.actual = actual
        self.expected = expected
        super().__init__(
            f"w(f) = {actual} but the declared t requires {expected}"
        )


class NonDivisibleIndex(LiftcertError):
    """A contributing expansion index i_j is not divisible by e_j.

    Impossible in supported configurations; kept as a hard assertion.
    """


class FractionalPPower(LiftcertError):
    """Residue p-power bookkeeping did not land in the integers.

    Impossible in supported configurations; kept as a hard assertion.
    """


# ---------------------------------------------------------------------
# pair specifications


@dataclass(frozen=True)
class RationalCenter:
    center: Fraction
    delta: Fraction  # >= 0; (0, 0) is the Gauss pair

    def validate(self, p):
        if self.delta < 0:
            raise ConfigError("rational-center delta must be >= 0")


@dataclass(frozen=True)
class Inert:
    phi: tuple  # integer coefficients, low-to-high, monic
    delta: Fraction  # > 0: minimality holds only for positive delta

    def validate(self, p):
        phi = self.phi
        if len(phi) < 3 or phi[-1] != 1:
            raise ConfigError(
                "inert phi must be monic with integer coefficients and degree >= 2"
            )
        if any(not isinstance(c, int) for c in phi):
            raise ConfigError("inert phi must have integer coefficients")
        if self.delta <= 0:
            raise ConfigError("inert delta must be > 0")
        if not is_irreducible_univariate([c % p for c in phi], p):
            raise ConfigError(
                f"inert phi {list(phi)} is reducible mod {p}"
            )


def compute_lambda(pair, p: int) -> Fraction:
    """lambda = w(phi) under the pair valuation.

    Rational center: phi = x - center has the single Taylor digit 1
    above the root, so lambda = delta.  Inert: minimize
    v(phi^(k)(alpha)/k!) + k*delta over k >= 1, where the Taylor
    coefficient is the integer polynomial sum_j C(j,k) a_j alpha^(j-k)
    and its value is its content (exact in the unramified case).
    """
    check_prime(p)
    pair.validate(p)
    if isinstance(pair, RationalCenter):
        return Fraction(pair.delta)
    phi = pair.phi
    m = len(phi) - 1
    best = None
    for k in range(1, m + 1):
        coeffs = [math.comb(j, k) * phi[j] for j in range(k, m + 1)]
        nonzero = [c for c in coeffs if c]
        # c_m = 1, so k = m always yields a finite candidate
        if not nonzero:
            continue
        content = min(vp_int(c, p).finite_value for c in nonzero)
        candidate = content + k * Fraction(pair.delta)
        if best is None or candidate < best:
            best = candidate
    return best


def compute_e_h(lam: Fraction, p: int):
    """Smallest e with e*lambda integral, and N = e*lambda (h = p^N)."""
    lam = Fraction(lam)
    e = lam.denominator
    n = lam.numerator
    return e, n


@dataclass(frozen=True)
class PairData:
    spec: object  # RationalCenter or Inert
    phi: tuple  # working polynomial coefficients, low-to-high (Fractions)
    m: int
    lam: Fraction
    e: int
    N: int
    y_index: object  # position among inert generators, or None

    def h_of(self, p: int) -> Fraction:
        return Fraction(p) ** self.N


class PairConfig:
    """A validated pair configuration: derived pair data plus the
    composite residue field determined by the inert generators."""

    def __init__(self, specs, p, limit=DEFAULT_CANDIDATE_LIMIT):
        check_prime(p)
        self.p = p
        self.specs = list(specs)
        pairs = []
        inert_gens = []
        for spec in self.specs:
            spec.validate(p)
            lam = compute_lambda(spec, p)
            e, n = compute_e_h(lam, p)
            if isinstance(spec, RationalCenter):
                phi = (Fraction(-spec.center), Fraction(1))
                y_index = None
            else:
                phi = tuple(Fraction(c) for c in spec.phi)
                y_index = len(inert_gens)
                inert_gens.append([c % p for c in spec.phi])
            pairs.append(
                PairData(
                    spec=spec,
                    phi=phi,
                    m=len(phi) - 1,
                    lam=lam,
                    e=e,
                    N=n,
                    y_index=y_index,
                )
            )
        self.pairs = pairs
        self.field = ResidueField(p, inert_gens, limit)

    @property
    def nvars(self) -> int:
        return len(self.pairs)

    def _check_arity(self, f: MultiPoly):
        if f.nvars != self.nvars:
            raise ConfigError(
                f"polynomial has {f.nvars} variables, configuration has "
                f"{self.nvars} pairs"
            )

    # -- phi-adic machinery -------------------------------------------

    def expansion_table(self, f: MultiPoly):
        """Map from expansion index I to (digit a_I, content value of a_I).

        Rational-center variables are recentred first and expanded with
        phi = x, so the digit's degree-0 part in those variables is the
        evaluation at the center; inert variables keep their phi.
        """
        self._check_arity(f)
        g = f
        phis = []
        for j, pair in enumerate(self.pairs):
            if isinstance(pair.spec, RationalCenter):
                g = g.shift(j, pair.spec.center)
                phis.append([Fraction(0), Fraction(1)])
            else:
                phis.append(list(pair.phi))
        expansion = phi_expand(g, phis)
        return {
            idx: (a, content_valuation(a, self.p))
            for idx, a in expansion.terms.items()
        }

    def coefficient_value(self, a: MultiPoly) -> Val:
        """Value of a recentred expansion digit at the pair centers.

        The content rule: min vp over the digit's coefficients.  Exact
        because deg_{x_j}(a) < m_j and the inert degrees are coprime,
        so a nonzero reduction cannot vanish at the residue generators.
        """
        self._check_arity(a)
        return content_valuation(a, self.p)

    def _value_of_index(self, idx, cv: Val) -> Val:
        shift = sum(
            (i * pair.lam for i, pair in zip(idx, self.pairs)),
            Fraction(0),
        )
        return cv + Val.finite(shift)

    def w_value(self, f: MultiPoly):
        """w(f) together with the contributing (argmin) index set."""
        table = self.expansion_table(f)
        return self._w_from_table(table)

    def _w_from_table(self, table):
        best = INFINITY
        contributing = []
        for idx in sorted(table):
            _, cv = table[idx]
            value = self._value_of_index(idx, cv)
            if value < best:
                best = value
                contributing = [idx]
            elif value == best and not best.is_infinite:
                contributing.append(idx)
        return best, contributing

    def w_marginal(self, f: MultiPoly, i: int) -> Val:
        """Per-variable value: only variable i's lambda contributes;
        the other variables are evaluated at their centers inside the
        coefficient value (they are normalized to cross-value 0)."""
        table = self.expansion_table(f)
        return self._marginal_from_table(table, i)

    def _marginal_from_table(self, table, i):
        best = INFINITY
        lam = self.pairs[i].lam
        for idx, (_, cv) in table.items():
            value = cv + Val.finite(idx[i] * lam)
            if value < best:
                best = value
        return best

    # -- residue extraction ---------------------------------------------

    def lifting_target(self, t) -> Fraction:
        return sum(
            (pair.e * ti * pair.lam for pair, ti in zip(self.pairs, t)),
            Fraction(0),
        )

    def residue_normalized(self, f: MultiPoly, t) -> ResiduePoly:
        """The w-residue of f / prod_i p^(N_i t_i), as a polynomial in
        the Z_i, given w(f) equals the target sum of e_i t_i lambda_i."""
        table = self.expansion_table(f)
        return self._residue_from_table(table, t)

    def _residue_from_table(self, table, t):
        expected = self.lifting_target(t)
        w, contributing = self._w_from_table(table)
        if w != Val.finite(expected):
            raise NotNormalized(w, expected)
        terms = {}
        for idx in contributing:
            a, cv = table[idx]
            z_exp = []
            for i_j, pair in zip(idx, self.pairs):
                if i_j % pair.e != 0:
                    raise NonDivisibleIndex(
                        f"contributing index {idx} has {i_j} not divisible "
                        f"by e = {pair.e}"
                    )
                z_exp.append(i_j // pair.e)
            c = cv.finite_value
            if c.denominator != 1:
                raise FractionalPPower(
                    f"content {c} of contributing digit {idx} is fractional"
                )
            depleted = a.scale(Fraction(1, 1) / Fraction(self.p) ** int(c))
            terms[tuple(z_exp)] = self._residue_element(depleted)
        return ResiduePoly(self.field, self.nvars, terms)

    def _residue_element(self, a: MultiPoly):
        """Image of a content-0 digit in the residue field: reduce the
        coefficients mod p and send each inert x_j to its generator y_j."""
        p = self.p
        coeffs = {}
        for exps, c in a.terms.items():
            y_exp = [0] * self.field.nyvars
            for e, pair in zip(exps, self.pairs):
                if pair.y_index is None:
                    # recentred digits are constant in rational-center vars
                    assert e == 0
                else:
                    y_exp[pair.y_index] = e
            num = c.numerator % p
            den = c.denominator % p
            if den == 0:
                raise FractionalPPower(f"coefficient {c} not p-integral")
            r = (num * pow(den, -1, p)) % p
            if r:
                y_exp = tuple(y_exp)
                coeffs[y_exp] = (coeffs.get(y_exp, 0) + r) % p
        return self.field.element(coeffs)


# convenience module-level forms matching the operation names


def w_value(f, config: PairConfig):
    return config.w_value(f)


def w_marginal(f, config: PairConfig, i: int):
    return config.w_marginal(f, i)


def coefficient_value(a, config: PairConfig):
    return config.coefficient_value(a)


def residue_normalized(f, config: PairConfig, t):
    return config.residue_normalized(f, t)


# ---------------------------------------------------------------------
# pair-spec JSON


def pair_specs_to_json(specs, p) -> dict:
    pairs = []
    for spec in specs:
        if isinstance(spec, RationalCenter):
            pairs.append(
                {
                    "kind": "rational_center",
                    "center": str(spec.center),
                    "delta": str(spec.delta),
                }
            )
        else:
            pairs.append(
                {
                    "kind": "inert",
                    "phi": [int(c) for c in spec.phi],
                    "delta": str(spec.delta),
                }
            )
    return {"prime": p, "pairs": pairs}


def pair_specs_from_json(doc: dict):
    """Returns (specs, prime). phi is listed low-to-high degree."""
    try:
        p = doc["prime"]
        specs = []
        for entry in doc["pairs"]:
            kind = entry["kind"]
            if kind == "rational_center":
                specs.append(
                    RationalCenter(
                        center=Fraction(entry["center"]),
                        delta=Fraction(entry["delta"]),
                    )
                )
            elif kind == "inert":
                specs.append(
                    Inert(
                        phi=tuple(int(c) for c in entry["phi"]),
                        delta=Fraction(entry["delta"]),
                    )
                )
            else:
                raise ConfigError(f"unknown pair kind {kind!r}")
        return specs, p
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed pair-spec document: {exc}") from exc


def load_pair_specs(path):
    with open(path, "r", encoding="utf-8") as fh:
        return pair_specs_from_json(json.load(fh))
