"""Minimal pairs, derived invariants, the valuation w, and residues."""

import math
from fractions import Fraction

import pytest

from liftcert import (
    Inert,
    MultiPoly,
    PairConfig,
    RationalCenter,
    compute_e_h,
    compute_lambda,
)
from liftcert.errors import ConfigError
from liftcert.exactnum import INFINITY, Val
from liftcert.valuation import (
    NotNormalized,
    load_pair_specs,
    pair_specs_from_json,
    pair_specs_to_json,
)

from conftest import P, gauss_config, random_poly, rc_config


class TestLambda:
    def test_rational_center_is_delta(self):
        assert compute_lambda(RationalCenter(Fraction(0), Fraction(0)), 3) == 0
        assert compute_lambda(
            RationalCenter(Fraction(2), Fraction(5, 7)), 3
        ) == Fraction(5, 7)

    def test_inert_x2_plus_1(self):
        # [DERIVED] phi = x^2+1 at p=3: the k=1 Taylor digit is 2x with
        # content 0, so lambda = min(delta, 1 + 2*delta) = delta here
        assert compute_lambda(Inert((1, 0, 1), Fraction(1, 2)), 3) == Fraction(
            1, 2
        )
        assert compute_lambda(Inert((1, 0, 1), Fraction(3)), 3) == 3

    def test_inert_x2_plus_x_plus_1(self):
        assert compute_lambda(
            Inert((1, 1, 1), Fraction(1, 3)), 2
        ) == Fraction(1, 3)

    def test_inert_lambda_equals_delta(self):
        # for phi irreducible mod p the derivative digit is a unit
        # (otherwise phi mod p would be a p-th power), so the k=1 branch
        # of the minimum always wins and lambda = delta
        for spec, p in [
            (Inert((1, 3, 1), Fraction(10)), 3),
            (Inert((1, 1, 0, 1), Fraction(7, 3)), 2),
            (Inert((2, 1, 1), Fraction(5, 2)), 3),
        ]:
            assert compute_lambda(spec, p) == spec.delta

    def test_validation(self):
        with pytest.raises(ConfigError):
            compute_lambda(RationalCenter(Fraction(0), Fraction(-1)), 3)
        with pytest.raises(ConfigError):
            compute_lambda(Inert((1, 0, 1), Fraction(0)), 3)
        with pytest.raises(ConfigError):
            # x^2+1 = (x+1)^2 mod 2
            compute_lambda(Inert((1, 0, 1), Fraction(1, 2)), 2)
        with pytest.raises(ConfigError):
            compute_lambda(Inert((1, 0), Fraction(1)), 3)  # degree 1


class TestEH:
    def test_examples(self):
        assert compute_e_h(Fraction(0), 3) == (1, 0)
        assert compute_e_h(Fraction(1, 2), 2) == (2, 1)
        assert compute_e_h(Fraction(3, 2), 5) == (2, 3)
        assert compute_e_h(Fraction(4), 3) == (1, 4)

    def test_h_is_p_power(self):
        config = rc_config(2, [Fraction(1, 2)])
        pair = config.pairs[0]
        assert pair.h_of(2) == 2  # p^(e*lambda) = 2^1
        assert pair.e * pair.lam == pair.N


class TestWValue:
    def test_worked_example(self):
        # f = x^2y^2 + 3xy + 6x + 3y + 1 at p=3, Gauss pairs
        config = gauss_config(3, 2)
        f = P("x^2*y^2 + 3*x*y + 6*x + 3*y + 1")
        w, contributing = config.w_value(f)
        assert w == Val.finite(0)
        assert contributing == [(0, 0), (2, 2)]

    def test_gauss_specializes_to_content(self, rng):
        # with all-Gauss pairs, w is exactly the Gauss content
        from liftcert import content_valuation

        config = gauss_config(5, 2)
        for _ in range(200):
            f = random_poly(rng, 2, 4, allow_fractions=True)
            w, _ = config.w_value(f)
            assert w == content_valuation(f, 5)

    def test_eisenstein_value(self):
        config = rc_config(2, [Fraction(1, 2)])
        f = P("x^2 + 2", ("x",))
        w, contributing = config.w_value(f)
        assert w == Val.finite(1)
        assert contributing == [(0,), (2,)]

    def test_zero_polynomial(self):
        config = gauss_config(3, 1)
        w, contributing = config.w_value(MultiPoly.zero(1))
        assert w is INFINITY
        assert contributing == []

    def test_marginal(self):
        config = rc_config(3, [Fraction(1), Fraction(0)])
        f = P("3*x + y")
        assert config.w_marginal(f, 0) == Val.finite(0)  # the y digit wins
        assert config.w_marginal(f, 1) == Val.finite(0)
        g = P("3*x + 9*y")
        assert config.w_marginal(g, 0) == Val.finite(2)
        # for x: min(v(3) + 1*1, v(9) + 0) = 2

    def test_arity_mismatch(self):
        config = gauss_config(3, 2)
        with pytest.raises(ConfigError):
            config.w_value(P("x", ("x",)))


class TestValuationLaws:
    CONFIGS = [
        ("gauss", lambda: gauss_config(3, 2)),
        ("ramified", lambda: rc_config(2, [Fraction(1, 2), Fraction(1, 3)])),
        ("inert", lambda: PairConfig(
            [Inert((1, 0, 1), Fraction(1, 2)),
             RationalCenter(Fraction(0), Fraction(1))], 3)),
    ]

    @pytest.mark.parametrize("label,make", CONFIGS, ids=[c[0] for c in CONFIGS])
    def test_multiplicative(self, label, make, rng):
        config = make()
        for _ in range(300):
            g = random_poly(rng, 2, 3)
            h = random_poly(rng, 2, 3)
            wg, _ = config.w_value(g)
            wh, _ = config.w_value(h)
            wgh, _ = config.w_value(g * h)
            assert wgh == wg + wh

    @pytest.mark.parametrize("label,make", CONFIGS, ids=[c[0] for c in CONFIGS])
    def test_ultrametric(self, label, make, rng):
        config = make()
        for _ in range(300):
            g = random_poly(rng, 2, 3)
            h = random_poly(rng, 2, 3)
            wg, _ = config.w_value(g)
            wh, _ = config.w_value(h)
            ws, _ = config.w_value(g + h)
            assert ws >= min(wg, wh)

    @pytest.mark.parametrize("label,make", CONFIGS, ids=[c[0] for c in CONFIGS])
    def test_value_group_denominators(self, label, make, rng):
        config = make()
        lcm_e = math.lcm(*(pair.e for pair in config.pairs))
        for _ in range(200):
            f = random_poly(rng, 2, 4)
            w, _ = config.w_value(f)
            assert w.finite_value.denominator in (
                d for d in range(1, lcm_e + 1) if lcm_e % d == 0
            )


class TestResidue:
    def test_worked_example(self):
        config = gauss_config(3, 2)
        f = P("x^2*y^2 + 3*x*y + 6*x + 3*y + 1")
        residue = config.residue_normalized(f, (2, 2))
        assert residue.to_str() == "Z1^2*Z2^2 + 1"

    def test_eisenstein_residue(self):
        config = rc_config(2, [Fraction(1, 2)])
        f = P("x^2 + 2", ("x",))
        residue = config.residue_normalized(f, (1,))
        assert residue.to_str() == "Z1 + 1"

    def test_not_normalized(self):
        config = rc_config(2, [Fraction(1, 2)])
        f = P("2*x", ("x",))
        with pytest.raises(NotNormalized) as exc:
            config.residue_normalized(f, (1,))
        assert exc.value.actual == Val.finite(Fraction(3, 2))
        assert exc.value.expected == 1

    def test_inert_residue_carries_generator(self):
        # phi = x^2+1 at p=3 with delta = 1/2, so e = 2 and t = 1 reads
        # the phi^2 digit; f = phi^2 + 3x puts the image of x (the
        # generator y1) in the constant slot of the residue
        config = PairConfig([Inert((1, 0, 1), Fraction(1, 2))], 3)
        f = P("x^4 + 2*x^2 + 3*x + 1", ("x",))
        residue = config.residue_normalized(f, (1,))
        assert residue.to_str() == "Z1 + y1"

    def test_residue_multiplicative_on_liftings(self):
        # the residue of a product of liftings is the product of the
        # residues (valuation-graded multiplicativity)
        config = gauss_config(3, 2)
        f = P("x*y + 1")
        g = P("x*y + 2")
        rf = config.residue_normalized(f, (1, 1))
        rg = config.residue_normalized(g, (1, 1))
        rfg = config.residue_normalized(f * g, (2, 2))
        assert rfg == rf * rg


class TestPairJson:
    def test_round_trip(self):
        specs = [
            RationalCenter(Fraction(1, 2), Fraction(0)),
            Inert((1, 0, 1), Fraction(1, 3)),
        ]
        doc = pair_specs_to_json(specs, 3)
        back, p = pair_specs_from_json(doc)
        assert p == 3
        assert back == specs

    def test_document_shape(self):
        doc = pair_specs_to_json(
            [RationalCenter(Fraction(0), Fraction(0))], 3
        )
        assert doc == {
            "prime": 3,
            "pairs": [
                {"kind": "rational_center", "center": "0", "delta": "0"}
            ],
        }

    def test_malformed(self):
        with pytest.raises(ConfigError):
            pair_specs_from_json({"prime": 3, "pairs": [{"kind": "nope"}]})
        with pytest.raises(ConfigError):
            pair_specs_from_json({"pairs": []})

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "pairs.json"
        path.write_text(
            '{"prime": 2, "pairs": [{"kind": "rational_center", '
            '"center": "0", "delta": "1/2"}]}'
        )
        specs, p = load_pair_specs(path)
        assert p == 2
        assert specs == [RationalCenter(Fraction(0), Fraction(1, 2))]
