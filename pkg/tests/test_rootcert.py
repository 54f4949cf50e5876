"""Root isolation, interlacing and concavity certification."""

import math
from fractions import Fraction

import pytest

from clawgenus.errors import (
    ConsistencyError,
    InterlacingUndecided,
    StructureViolation,
)
from clawgenus.formulas import GenusPolynomial, genus_recurrence
from clawgenus.polynomials import IntPoly, poly_gcd
from clawgenus.rootcert import (
    Interval,
    RootCertificate,
    SturmChain,
    certify_interlacing,
    concavity_report,
    is_squarefree,
    isolate_roots,
    normalize,
    normalized_recurrence,
    root_bound,
    sign_pattern_check,
    sturm_count,
)


def P(*coeffs):
    return IntPoly(coeffs)


def F(a, b=1):
    return Fraction(a, b)


def contains(iv: Interval, x: float) -> bool:
    return float(iv.lo) < x <= float(iv.hi) or abs(float(iv.hi) - x) < 1e-12


class TestNormalize:
    def test_seed_rows(self):
        assert normalize(genus_recurrence(0)).w == P(2, 2)
        assert normalize(genus_recurrence(1)).w == P(40, 24)
        assert normalize(genus_recurrence(2)).w == P(48, 720, 256)

    def test_rejects_low_order_garbage(self):
        g = GenusPolynomial(3, P(0, 1, 1920, 11648, 2816))
        with pytest.raises(StructureViolation):
            normalize(g)

    def test_degree_formula(self):
        for n in range(12):
            w = normalize(genus_recurrence(n))
            assert w.degree == w.w.degree == (n + 2) // 2


class TestNormalizedRecurrence:
    @pytest.mark.parametrize(
        "n,coeffs",
        [
            (2, (48, 720, 256)),
            (3, (1920, 11648, 2816)),  # odd rule
            (4, (1152, 52608, 177664, 30720)),  # even rule
        ],
    )
    def test_known_rows(self, n, coeffs):
        assert normalized_recurrence(n).w == P(*coeffs)

    def test_agrees_with_normalizing_for_a_range(self):
        for n in range(25):
            assert normalized_recurrence(n).w == normalize(genus_recurrence(n)).w

    def test_mismatch_detection(self):
        import clawgenus.rootcert as rc

        saved = rc._w_cache[:]
        rc._w_cache[2] = P(48, 720, 255)
        try:
            with pytest.raises((ConsistencyError, StructureViolation)):
                normalized_recurrence(2)
        finally:
            rc._w_cache[:] = saved


class TestSturm:
    def test_linear_root_counting(self):
        assert sturm_count(P(2, 2), F(-2), F(0)) == 1
        assert sturm_count(P(2, 2), F(-1, 2), F(0)) == 0

    def test_half_open_semantics(self):
        # root at the upper endpoint is counted, at the lower it is not
        assert sturm_count(P(2, 2), F(-2), F(-1)) == 1
        assert sturm_count(P(2, 2), F(-1), F(0)) == 0

    def test_quadratic(self):
        assert sturm_count(P(48, 720, 256), F(-3), F(0)) == 2
        assert sturm_count(P(48, 720, 256), F(-1), F(0)) == 1

    def test_counts_distinct_roots_despite_multiplicity(self):
        squared = P(1, 1) * P(1, 1)  # double root at -1
        assert sturm_count(squared, F(-2), F(0)) == 1

    def test_no_real_roots(self):
        assert sturm_count(P(1, 1, 1), F(-10), F(10)) == 0

    def test_constant_poly(self):
        assert sturm_count(P(5), F(-1), F(1)) == 0

    def test_rejects_zero_poly_and_bad_interval(self):
        with pytest.raises(ValueError):
            SturmChain(P())
        with pytest.raises(ValueError):
            sturm_count(P(1, 1), F(1), F(0))


class TestIsolation:
    def test_w0_single_interval_around_minus_one(self):
        cert = isolate_roots(normalized_recurrence(0))
        assert cert.complete and cert.degree == 1
        assert len(cert.intervals) == 1
        assert contains(cert.intervals[0], -1.0)

    def test_w1_root_at_minus_five_thirds(self):
        cert = isolate_roots(normalized_recurrence(1))
        assert cert.complete and len(cert.intervals) == 1
        assert contains(cert.intervals[0], -5 / 3)

    def test_w2_against_quadratic_formula(self):
        cert = isolate_roots(normalized_recurrence(2))
        assert cert.complete and len(cert.intervals) == 2
        lo_root = (-45 - math.sqrt(1833)) / 32
        hi_root = (-45 + math.sqrt(1833)) / 32
        assert contains(cert.intervals[0], lo_root)
        assert contains(cert.intervals[1], hi_root)

    def test_w5_has_three_intervals(self):
        cert = isolate_roots(normalized_recurrence(5))
        assert cert.complete
        assert len(cert.intervals) == 3  # ceil(6/2)

    def test_all_roots_negative(self):
        for n in range(10):
            cert = isolate_roots(normalized_recurrence(n))
            assert all(iv.hi <= 0 for iv in cert.intervals)
            assert cert.poly[0] > 0

    def test_intervals_disjoint_and_increasing(self):
        cert = isolate_roots(normalized_recurrence(9))
        ivs = cert.intervals
        assert all(a.hi <= b.lo for a, b in zip(ivs, ivs[1:]))

    def test_each_interval_has_exactly_one_root(self):
        cert = isolate_roots(normalized_recurrence(7))
        for iv in cert.intervals:
            assert cert.chain.count(iv.lo, iv.hi) == 1

    def test_incomplete_certificate_for_non_real_rooted_input(self):
        from clawgenus.rootcert import NormalizedPoly

        fake = NormalizedPoly(2, P(1, 1, 1))  # complex conjugate roots
        cert = isolate_roots(fake)
        assert not cert.complete
        assert cert.intervals == ()

    def test_root_bound(self):
        assert root_bound(P(2, 2)) == 2
        assert root_bound(P(48, 720, 256)) == 1 + Fraction(720, 256)

    def test_json_shape(self):
        cert = isolate_roots(normalized_recurrence(2))
        d = cert.to_json_dict()
        assert sorted(d) == ["complete", "degree", "intervals", "n"]
        assert d["n"] == 2 and d["degree"] == 2 and d["complete"] is True
        assert all(
            len(q) == 4 and all(isinstance(x, int) for x in q)
            for q in d["intervals"]
        )


def cert(n: int) -> RootCertificate:
    return isolate_roots(normalized_recurrence(n))


class TestInterlacing:
    def test_skip_pair_two_zero(self):
        ic = certify_interlacing(cert(2), cert(0), "skip")
        owners = [o for o, _ in ic.merged]
        assert owners == [2, 0, 2]
        mids = [float(iv.midpoint) for _, iv in ic.merged]
        assert mids[0] < -1 < mids[2]

    def test_consecutive_odd_equal_counts(self):
        ic = certify_interlacing(cert(1), cert(0), "consecutive")
        owners = [o for o, _ in ic.merged]
        assert owners == [1, 0]  # root of index 0 is rightmost for odd n

    def test_consecutive_even_one_extra(self):
        ic = certify_interlacing(cert(2), cert(1), "consecutive")
        owners = [o for o, _ in ic.merged]
        assert owners == [2, 1, 2]

    def test_merged_intervals_strictly_ordered(self):
        ic = certify_interlacing(cert(8), cert(7), "consecutive")
        ivs = [iv for _, iv in ic.merged]
        assert all(a.hi <= b.lo for a, b in zip(ivs, ivs[1:]))

    def test_parity_patterns_over_a_range(self):
        for n in range(1, 16):
            owners = [
                o for o, _ in certify_interlacing(cert(n), cert(n - 1), "consecutive").merged
            ]
            assert owners[0] == n
            assert owners[-1] == (n if n % 2 == 0 else n - 1)
        for n in range(2, 16):
            owners = [
                o for o, _ in certify_interlacing(cert(n), cert(n - 2), "skip").merged
            ]
            assert owners[0] == owners[-1] == n

    def test_mode_validation(self):
        with pytest.raises(ValueError):
            certify_interlacing(cert(2), cert(0), "consecutive")
        with pytest.raises(ValueError):
            certify_interlacing(cert(2), cert(1), "skip")
        with pytest.raises(ValueError):
            certify_interlacing(cert(2), cert(1), "sideways")

    def test_shared_root_reports_undecided(self):
        p = P(4, 5, 1)  # roots -4, -1
        q = P(2, 3, 1)  # roots -2, -1
        a = RootCertificate(
            n=1,
            degree=2,
            intervals=(Interval(F(-5), F(-2)), Interval(F(-2), F(0))),
            complete=True,
            poly=p,
            chain=SturmChain(p),
        )
        b = RootCertificate(
            n=0,
            degree=2,
            intervals=(Interval(F(-3), F(-3, 2)), Interval(F(-3, 2), F(0))),
            complete=True,
            poly=q,
            chain=SturmChain(q),
        )
        with pytest.raises(InterlacingUndecided):
            certify_interlacing(a, b, "consecutive", max_refine=16)

    def test_json_shape(self):
        d = certify_interlacing(cert(2), cert(0), "skip").to_json_dict()
        assert sorted(d) == ["m", "merged", "mode", "n"]
        assert d["mode"] == "skip" and (d["n"], d["m"]) == (2, 0)
        assert [e["index"] for e in d["merged"]] == [2, 0, 2]


class TestSignPatterns:
    def test_pair_one_zero_by_hand(self):
        # value of the n=1 polynomial at -1 is 16; of the n=0 one at -5/3
        # is -4/3; both match the alternating pattern
        assert P(40, 24).eval(-1) == 16
        assert P(2, 2).eval(F(-5, 3)) == F(-4, 3)
        rep = sign_pattern_check(cert(1), cert(0))
        assert rep.ok and rep.hypothesis_ok

    def test_pair_two_one(self):
        rep = sign_pattern_check(cert(2), cert(1))
        assert rep.ok

    def test_all_small_pairs(self):
        for n in range(1, 12):
            assert sign_pattern_check(cert(n), cert(n - 1)).ok
        for n in range(2, 12):
            assert sign_pattern_check(cert(n), cert(n - 2)).ok

    def test_hypothesis_violation_is_reported_not_raised(self):
        # swapped roles: q's root comes first, so the hypothesis fails
        rep = sign_pattern_check(cert(0), cert(1))
        assert not rep.ok and not rep.hypothesis_ok

    def test_vacuous_pass_when_a_side_has_no_roots(self):
        p = P(1, 1, 1)  # no real roots at all
        a = RootCertificate(
            n=1, degree=2, intervals=(), complete=False, poly=p, chain=SturmChain(p)
        )
        rep = sign_pattern_check(a, cert(0))
        assert rep.ok and rep.hypothesis_ok  # nothing to evaluate at


class TestConcavity:
    def test_row_one(self):
        rep = concavity_report(genus_recurrence(1))
        assert rep.ok and rep.log_concave

    def test_row_four_interior_inequality(self):
        assert 177664 ** 2 >= 52608 * 30720
        assert concavity_report(genus_recurrence(4)).ok

    def test_constant_is_trivially_log_concave(self):
        rep = concavity_report(GenusPolynomial(0, P(2, 2)))
        assert rep.log_concave and rep.unimodal

    def test_detects_violation(self):
        bad = GenusPolynomial(2, P(0, 100, 1, 100))
        rep = concavity_report(bad)
        assert not rep.log_concave and not rep.unimodal
        assert rep.first_failure == 2

    def test_detects_internal_zero(self):
        rep = concavity_report(GenusPolynomial(2, P(0, 1, 0, 1)))
        assert not rep.no_internal_zeros

    def test_strictness_reported(self):
        assert concavity_report(genus_recurrence(3)).all_strict
        flat = concavity_report(GenusPolynomial(2, P(1, 1, 1)))
        assert flat.log_concave and not flat.all_strict  # 1*1 == 1^2 at k=1


class TestSquarefree:
    def test_normalized_polys_are_squarefree(self):
        for n in range(15):
            w = normalized_recurrence(n).w
            assert is_squarefree(w)
            assert poly_gcd(w, w.derivative()).degree == 0

    def test_detects_squares(self):
        assert not is_squarefree(P(1, 2, 1))
