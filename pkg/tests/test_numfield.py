import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from cmfields.classifier import Category
from cmfields.numfield import (
    FieldError,
    GaloisAmbiguityError,
    ResolventError,
    ambiguity_table,
    block_system_count,
    classify_field,
    cubic_subfield_signature,
    cubic_subfields,
    frobenius_patterns,
    identify_galois,
    is_irreducible,
    pair_orbit_sizes,
    quadratic_subfields,
    resolvent_factor_degrees,
    signature,
    tschirnhaus,
    two_set_resolvent,
)
from cmfields.permgroup import CycleType
from cmfields.polynomial import IntegerPolynomial, discriminant, parse_polynomial
from cmfields.transitive import all_labels, reference_group

P = IntegerPolynomial
CYCLO7 = P((1,) * 7)
CYCLO5 = P((1,) * 5)


def power_sums(f: IntegerPolynomial, k_max: int) -> list[Fraction]:
    """Newton's identities: power sums of the roots of monic f."""
    n = f.degree
    e = [Fraction((-1) ** i * f.coeffs[n - i], f.lc) for i in range(n + 1)]
    p = [Fraction(n)]
    for k in range(1, k_max + 1):
        s = (-1) ** (k - 1) * k * e[k] if k <= n else Fraction(0)
        for i in range(1, min(k, n + 1)):
            s += (-1) ** (i - 1) * e[i] * p[k - i]
        p.append(s)
    return p


class TestSignature:
    @pytest.mark.parametrize(
        "text, sig", [("x^2+1", (0, 1)), ("x^4-x+1", (0, 2)), ("x^3-x-1", (1, 1)), ("x^3-3x+1", (3, 0))]
    )
    def test_examples(self, text, sig):
        assert signature(text).as_tuple() == sig

    def test_non_squarefree(self):
        with pytest.raises(FieldError):
            signature("x^2+2x+1")

    @settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    @given(st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
    def test_sign_of_discriminant(self, coeffs):
        f = P(tuple(coeffs))
        d = discriminant(f)
        assume(d != 0)
        s = signature(f)
        assert s.r1 + 2 * s.r2 == f.degree
        assert (d > 0) == (s.r2 % 2 == 0)


class TestIrreducible:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x^2+1", True),
            ("x^6-1", False),
            ("x^4-x+1", True),
            ("x^4+4", False),  # Sophie Germain: (x^2+2x+2)(x^2-2x+2)
            ("x^4+1", True),  # reducible mod every prime
            ("x^4-10x^2+1", True),
            ("x^6+x^3+1", True),
            ("x^2+x+1", True),
            ("x^6+x^4+3x^3+2x+2", False),  # (x^3 + 2)(x^3 + x + 1)
            ("x", True),
        ],
    )
    def test_examples(self, text, expected):
        assert is_irreducible(text) is expected

    def test_product_of_irreducibles(self):
        f = P((1, 0, 1)) * P((-2, 0, 0, 1)) * P((3, 1))
        assert not is_irreducible(f)

    def test_products_with_no_modular_witness(self):
        # both factors of x^4+1-type behaviour: every reduction splits
        f = P((1, 0, 0, 0, 1)) * P((-3, 0, 1))
        assert not is_irreducible(f)

    def test_constant(self):
        with pytest.raises(FieldError):
            is_irreducible("5")


class TestFrobenius:
    def test_patterns_x2_plus_1(self):
        pats = frobenius_patterns("x^2+1", prime_budget=5)
        assert {ct.parts for ct in pats} == {(2,), (1, 1)}
        assert CycleType((2,), "odd") in pats

    def test_primes_dividing_disc_skipped(self):
        # x^2 - 3 at p = 2, 3 would be degenerate; the stream starts at 5
        from cmfields.numfield import frobenius_stream

        first = next(frobenius_stream(P((-3, 0, 1))))
        assert first[0] == 5

    def test_patterns_realized_by_label(self):
        for text in ("x^4-x+1", "x^6-x+1", "1,-1,1,-2,1,0,1"):
            gal = identify_galois(text)
            types = set(reference_group(gal.label).cycle_type_counts())
            for ct in frobenius_patterns(text, 200):
                assert ct.parts in types


class TestGalois:
    @pytest.mark.parametrize(
        "text, code",
        [
            ("x^4-x+1", "4T5"),
            ("x^4+x^3+x^2+x+1", "4T1"),
            ("x^4+1", "4T2"),
            ("x^4-2", "4T3"),
            ("x^4+8x+12", "4T4"),
            ("x^6+x^5+x^4+x^3+x^2+x+1", "6T1"),
            ("x^6-x+1", "6T16"),
            ("1,-1,1,-2,1,0,1", "6T3"),
            ("1,-1,3,-1,3,-1,1", "6T11"),
            ("21,12,19,-5,-6,1,1", "6T3"),
        ],
    )
    def test_examples(self, text, code):
        assert identify_galois(text).label.code == code

    def test_parity_matches_discriminant(self):
        for text in ("x^4+8x+12", "x^4-x+1", "x^6+x^5+x^4+x^3+x^2+x+1"):
            gal = identify_galois(text)
            assert gal.discriminant_is_square == reference_group(gal.label).is_even()

    def test_resolvent_fallback(self):
        # one prime leaves C4, D4 and S4; only S4 acts transitively on pairs
        gal = identify_galois("x^4-x+1", prime_budget=1, min_primes=1)
        assert gal.method == "sieve+resolvent" and gal.label.code == "4T5"
        assert gal.resolvent_degrees == (6,)

    def test_unresolvable_is_reported(self):
        # C6 and D6 share the pair-orbit pattern (6, 6, 3); three primes cannot split them
        assert pair_orbit_sizes("6T1") == pair_orbit_sizes("6T3")
        with pytest.raises(GaloisAmbiguityError):
            identify_galois(CYCLO7, prime_budget=3, min_primes=1)

    def test_reducible(self):
        with pytest.raises(FieldError):
            identify_galois("x^4-1")

    def test_wrong_degree(self):
        with pytest.raises(FieldError):
            identify_galois("x^5-x+1")

    def test_ambiguity_table(self):
        rows = ambiguity_table(6)
        assert rows and not any(r["needs_resolvent"] for r in rows)
        finite = [r["kl"] for r in rows if r["kl"] is not None]
        assert min(finite) > 0.25


class TestResolvent:
    def test_cubic(self):
        rep = two_set_resolvent("x^3-2")
        assert rep.resolvent == P((2, 0, 0, 1)) and rep.shift_used == 0

    def test_quadratic(self):
        assert two_set_resolvent("x^2+1").resolvent == P((0, 1))

    @pytest.mark.parametrize("text", ["x^6-x+1", "x^6+x^5+x^4+x^3+x^2+x+1", "x^4-x+1", "3x^4+x+7", "1,-1,1,-2,1,0,1"])
    def test_degree_and_power_sums(self, text):
        rep = two_set_resolvent(text)
        n = rep.base.degree
        assert rep.resolvent.degree == n * (n - 1) // 2
        ps = power_sums(rep.base, 2 * n)
        for k in range(1, 2 * n):
            expected = Fraction(sum(comb(k, m) * ps[m] * ps[k - m] for m in range(k + 1)) - 2**k * ps[k], 2)
            assert power_sums(rep.resolvent, k)[k] == expected

    def test_trace_relation(self):
        rep = two_set_resolvent("x^6-3x^5+x+1")
        n = rep.base.degree
        assert -rep.resolvent.coeffs[-2] == (n - 1) * -rep.base.coeffs[-2]

    def test_tschirnhaus_needed_for_even_sextic(self):
        # x^6 + ... in x^2: pair sums x + (-x) coincide, so a change of variable is required
        rep = two_set_resolvent("x^6+x^4+2x^2+1")
        assert rep.shift_used > 0
        assert discriminant(rep.resolvent) != 0

    def test_tschirnhaus_preserves_field_degree(self):
        g = tschirnhaus(CYCLO7, 2)
        assert g.degree == 6 and is_irreducible(g)

    def test_bad_input(self):
        with pytest.raises(ResolventError):
            two_set_resolvent("x^2+2x+1")
        with pytest.raises(ResolventError):
            two_set_resolvent("x^7+1")


class TestSubfields:
    def test_cyclotomic_cubic(self):
        cubics = cubic_subfields(CYCLO7)
        assert [str(p) for p, _ in cubics] == ["x^3 + x^2 - 2*x - 1"]
        assert cubic_subfield_signature(CYCLO7) == "totally_real"

    def test_s6_has_none(self):
        assert cubic_subfield_signature("x^6-x+1") == "none"

    def test_quartic_rejected(self):
        with pytest.raises(FieldError):
            cubic_subfield_signature("x^4-x+1")

    def test_not_totally_imaginary(self):
        with pytest.raises(FieldError):
            cubic_subfield_signature("x^6-2")

    def test_quadratic_subfields(self):
        quads = quadratic_subfields(CYCLO5)
        assert [str(p) for p, _ in quads] == ["x^2 + x - 1"]
        assert len(quadratic_subfields("x^4+1")) == 3

    def test_block_counts(self):
        expected = {1: 1, 2: 3, 3: 1, 5: 0, 6: 1, 8: 1, 9: 0, 11: 1, 13: 0, 14: 0, 16: 0}
        assert {k: block_system_count(f"6T{k}") for k in expected} == expected

    def test_resolvent_factorization_matches_orbits(self):
        assert resolvent_factor_degrees(CYCLO7) == pair_orbit_sizes("6T1")
        assert resolvent_factor_degrees("x^6-x+1") == (15,)


class TestClassify:
    def test_x4_minus_x_plus_1(self):
        r = classify_field("x^4-x+1")
        assert (r.signature.as_tuple(), r.label.code, r.category) == ((0, 2), "4T5", Category.TR_TYPE)
        assert r.discriminant == 229

    def test_seventh_cyclotomic(self):
        r = classify_field(CYCLO7)
        assert (r.signature.as_tuple(), r.label.code, r.category) == ((0, 3), "6T1", Category.CM_FIELD)

    @pytest.mark.parametrize(
        "coeffs, code, cat",
        [
            ((1, -1, 1, -2, 1, 0, 1), "6T3", Category.CM_TYPE_NOT_CM),
            ((1, -1, 3, -1, 3, -1, 1), "6T11", Category.TR_TYPE),
            ((21, 12, 19, -5, -6, 1, 1), "6T3", Category.CM_FIELD),
        ],
    )
    def test_sextic_examples(self, coeffs, code, cat):
        r = classify_field(P(coeffs))
        assert (r.label.code, r.category) == (code, cat)

    def test_quartic_refinement(self):
        assert classify_field("x^4+x^3+x^2+x+1").category is Category.CM_FIELD
        # Q(i, 2^(1/4) * zeta_8)-type D4 quartic with imaginary quadratic subfield only
        r = classify_field("x^4+2")
        assert r.label.code == "4T3" and r.category is Category.CM_TYPE_NOT_CM

    @pytest.mark.parametrize("text", ["x^3-x-1", "x^4-2", "x^4-1", "x^5+x+3"])
    def test_rejects(self, text):
        with pytest.raises(FieldError):
            classify_field(text)

    def test_invariant_under_scaling_and_rationals(self):
        a = classify_field("x^4-x+1")
        b = classify_field("1/2x^4 - 1/2x + 1/2")
        assert (a.label, a.category) == (b.label, b.category)

    def test_to_dict(self):
        d = classify_field("x^4-x+1").to_dict()
        assert d["category"] == "TR_TYPE" and d["galois"]["label"] == "4T5"


def test_random_ti_sextics_consistent():
    """Every random totally imaginary sextic gets a label whose reference realizes its Frobenius types."""
    rng = random.Random(7)
    seen = 0
    while seen < 15:
        coeffs = tuple(rng.randint(-4, 4) for _ in range(6)) + (1,)
        f = P(coeffs)
        if discriminant(f) == 0 or signature(f).r1 or not is_irreducible(f):
            continue
        seen += 1
        r = classify_field(f)
        types = set(reference_group(r.label).cycle_type_counts())
        assert all(ct.parts in types for ct in frobenius_patterns(f, 100))
        assert r.label in all_labels(6)
