"""Financial mathematics: sequences, interest, redemption, pensions,
depreciation, and the master formula."""

import math

import numpy as np
import pytest

from ecomath import finmath
from ecomath.finmath import FinanceError, SequenceSpec

rng = np.random.default_rng(987)


class TestSequences:
    def test_arith_explicit(self):
        assert finmath.seq_term(SequenceSpec("arith", 2, 3), 4) == 11.0

    def test_geom_first_element(self):
        assert finmath.seq_term(SequenceSpec("geom", 1, 2), 1) == 1.0

    def test_geom_explicit(self):
        assert finmath.seq_term(SequenceSpec("geom", 5, 0.5), 3) == 1.25

    def test_explicit_matches_recursion(self):
        for spec in (SequenceSpec("arith", 2.5, -1.5), SequenceSpec("geom", 3, 1.07)):
            a = spec.a1
            for n in range(2, 30):
                a = a + spec.step if spec.kind == "arith" else a * spec.step
                assert finmath.seq_term(spec, n) == pytest.approx(a, abs=1e-9)

    def test_gauss_identity_sum(self):
        assert finmath.series_sum(SequenceSpec("arith", 1, 1), 100) == 5050.0

    def test_geom_sum(self):
        assert finmath.series_sum(SequenceSpec("geom", 1, 2), 3) == pytest.approx(7.0)

    def test_single_term_sum(self):
        assert finmath.series_sum(SequenceSpec("arith", 4.5, 2), 1) == 4.5

    def test_sum_matches_brute_force(self):
        spec = SequenceSpec("geom", 2, 1.05)
        for n in (1, 5, 50, 200):
            brute = sum(finmath.seq_term(spec, k) for k in range(1, n + 1))
            assert finmath.series_sum(spec, n) == pytest.approx(brute, rel=1e-8)

    def test_means(self):
        arith = SequenceSpec("arith", 3, 4)
        assert finmath.seq_term(arith, 5) == 0.5 * (
            finmath.seq_term(arith, 4) + finmath.seq_term(arith, 6)
        )
        geom = SequenceSpec("geom", 2, 1.5)
        assert abs(finmath.seq_term(geom, 5)) == pytest.approx(
            math.sqrt(finmath.seq_term(geom, 4) * finmath.seq_term(geom, 6))
        )

    def test_invalid_specs(self):
        with pytest.raises(FinanceError):
            SequenceSpec("arith", 1, 0)
        with pytest.raises(FinanceError):
            SequenceSpec("geom", 1, 1.0)


class TestCompound:
    def test_two_years(self):
        assert finmath.compound_solve(K0=100, q=1.05, n=2) == pytest.approx(110.25)

    def test_present_value(self):
        assert finmath.compound_solve(Kn=110.25, q=1.05, n=2) == pytest.approx(100.0)

    def test_doubling_time(self):
        n = finmath.compound_solve(K0=100, Kn=200, q=1.05)
        assert n == pytest.approx(math.log(2) / math.log(1.05))

    def test_under_and_over_determined(self):
        with pytest.raises(FinanceError):
            finmath.compound_solve(K0=1, Kn=2)
        with pytest.raises(FinanceError):
            finmath.compound_solve(K0=1, Kn=2, q=1.05, n=3)

    def test_closed_form_matches_recursion(self):
        for _ in range(100):
            K0 = float(rng.uniform(10, 1e5))
            q = float(rng.uniform(1.001, 1.2))
            n = int(rng.integers(1, 50))
            K = K0
            for _ in range(n):
                K *= q
            assert finmath.compound_solve(K0=K0, q=q, n=n) == pytest.approx(K, rel=1e-8)


class TestEffectiveRate:
    def test_monthly(self):
        _, p_eff = finmath.effective_rate(12, 12)
        assert p_eff == pytest.approx(100 * (1.01 ** 12 - 1))

    def test_single_period_is_nominal(self):
        _, p_eff = finmath.effective_rate(5, 1)
        assert p_eff == pytest.approx(5.0)

    def test_semiannual(self):
        _, p_eff = finmath.effective_rate(10, 2)
        assert p_eff == pytest.approx(10.25)


class TestInstallment:
    def test_two_years(self):
        assert finmath.installment_solve(E=100, q=1.05, n=2) == pytest.approx(215.25)

    def test_inverse_for_E(self):
        assert finmath.installment_solve(Kn=215.25, q=1.05, n=2) == pytest.approx(100.0)

    def test_inverse_for_n(self):
        assert finmath.installment_solve(E=100, q=1.05, Kn=215.25) == pytest.approx(2.0)

    def test_present_value(self):
        # B0 discounts the final balance n times: B0 = Kn / q^n
        b0 = finmath.installment_present_value(100, 1.05, 2)
        assert b0 == pytest.approx(215.25 / 1.05 ** 2)

    def test_closed_form_matches_recursion(self):
        for _ in range(100):
            E = float(rng.uniform(10, 1000))
            q = float(rng.uniform(1.001, 1.15))
            n = int(rng.integers(1, 50))
            K = 0.0
            for _ in range(n):
                K = (K + E) * q
            assert finmath.installment_solve(E=E, q=q, n=n) == pytest.approx(K, rel=1e-8)


class TestRedemption:
    def test_first_year_balance(self):
        plan = finmath.redemption_plan(100000, 5, t=5)
        assert plan.meta["A"] == pytest.approx(10000.0)
        assert plan.rows[0].balance == pytest.approx(95000.0)

    def test_duration_formula(self):
        n = finmath.redemption_duration(5, 5)
        assert n == pytest.approx(math.log(2) / math.log(1.05))
        assert n == pytest.approx(14.2067, abs=1e-4)

    def test_duration_independent_of_R0(self):
        base = finmath.redemption_plan(100000, 5, t=5).meta["duration_exact"]
        for factor in (0.5, 2.0, 10.0):
            scaled = finmath.redemption_plan(100000 * factor, 5, t=5).meta["duration_exact"]
            assert abs(scaled - base) < 1e-12

    def test_explicit_matches_recursive_balances(self):
        plan = finmath.redemption_plan(100000, 5, t=5)
        q, A, R0 = plan.meta["q"], plan.meta["A"], 100000
        for row in plan.rows[:-1]:  # final year uses the reduced annuity
            explicit = finmath.remaining_debt(R0, q, A, row.year)
            assert row.balance == pytest.approx(explicit, abs=1e-6)

    def test_final_year_closes_exactly(self):
        plan = finmath.redemption_plan(100000, 5, t=5)
        assert plan.rows[-1].balance == pytest.approx(0.0, abs=1e-9)
        assert plan.rows[-1].payment < plan.meta["A"]

    def test_interest_only_rejected(self):
        with pytest.raises(FinanceError):
            finmath.redemption_plan(100000, 5, A=5000.0)  # exactly the interest

    def test_solve_annuity(self):
        A = finmath.redemption_solve(R0=100000, q=1.05, n=10, Rn=0)
        assert A == pytest.approx(12950.46, abs=0.005)

    def test_solve_round_trips(self):
        quintuple = dict(R0=100000.0, q=1.05, n=10.0, A=12950.4574965456)
        Rn = finmath.redemption_solve(**quintuple)
        for missing in ("R0", "q", "n", "A"):
            known = {k: v for k, v in quintuple.items() if k != missing}
            got = finmath.redemption_solve(Rn=Rn, **known)
            assert got == pytest.approx(quintuple[missing], rel=1e-7)

    def test_one_shot_payoff(self):
        A = finmath.redemption_solve(R0=100.0, q=1.05, n=1, Rn=0)
        assert A == pytest.approx(105.0)

    def test_closed_form_matches_recursion(self):
        for _ in range(100):
            R0 = float(rng.uniform(1e4, 1e6))
            q = float(rng.uniform(1.01, 1.1))
            A = R0 * (q - 1.0) * float(rng.uniform(1.1, 3.0))
            n = int(rng.integers(1, 50))
            R = R0
            for _ in range(n):
                R = R * q - A
            assert finmath.remaining_debt(R0, q, A, n) == pytest.approx(
                R, rel=1e-8, abs=1e-6
            )


class TestPension:
    def test_worked_first_year(self):
        plan = finmath.pension_plan(100000, 5, 12, 500)
        assert plan.rows[0].interest == pytest.approx(4837.50)
        assert plan.rows[0].balance == pytest.approx(98837.50)

    def test_explicit_matches_recursion(self):
        for _ in range(100):
            K0 = float(rng.uniform(1e4, 1e6))
            q = float(rng.uniform(1.01, 1.1))
            m = int(rng.integers(1, 13))
            a = float(rng.uniform(10, K0 / (20 * m)))
            n = int(rng.integers(1, 50))
            K = K0
            for _ in range(n):
                Z = (K - 0.5 * (m + 1) * a) * (q - 1.0)
                K = K - m * a + Z
            assert finmath.pension_balance(K0, q, m, a, n) == pytest.approx(
                K, rel=1e-8, abs=1e-6
            )

    def test_everlasting_amount_keeps_balance(self):
        K0, q, m = 100000.0, 1.05, 12
        a = finmath.everlasting_pension(K0, q, m)
        assert a == pytest.approx(405.68, abs=0.005)
        for n in (1, 7, 30):
            assert finmath.pension_balance(K0, q, m, a, n) == pytest.approx(K0, rel=1e-9)

    def test_everlasting_plan_flagged(self):
        a = finmath.everlasting_pension(100000, 1.05, 12)
        plan = finmath.pension_plan(100000, 5, 12, a)
        assert plan.meta["everlasting_capable"]

    def test_zero_withdrawal_rejected(self):
        with pytest.raises(FinanceError):
            finmath.pension_plan(100000, 5, 1, 0)

    def test_present_value_funds_the_scheme(self):
        q, m, a, n = 1.05, 12, 500.0, 10
        B0 = finmath.pension_present_value(q, m, a, n)
        assert finmath.pension_balance(B0, q, m, a, n) == pytest.approx(0.0, abs=1e-6)


class TestDepreciation:
    def test_linear(self):
        rn, schedule = finmath.depreciation_linear(1000, 5, n=2)
        assert rn == pytest.approx(600.0)
        diffs = [r.payment for r in schedule.rows]
        assert diffs == pytest.approx([200.0, 200.0])

    def test_linear_out_of_range(self):
        with pytest.raises(FinanceError):
            finmath.depreciation_linear(1000, 5, n=6)

    def test_declining(self):
        rn, schedule = finmath.depreciation_declining(1000, p=20, n=3)
        assert rn == pytest.approx(512.0)
        ratios = [
            schedule.rows[i + 1].balance / schedule.rows[i].balance
            for i in range(len(schedule.rows) - 1)
        ]
        assert ratios == pytest.approx([0.8, 0.8])

    def test_declining_solve_p(self):
        assert finmath.depreciation_declining(1000, Rn=512, n=3) == pytest.approx(20.0)

    def test_declining_solve_n(self):
        assert finmath.depreciation_declining(1000, p=20, Rn=512) == pytest.approx(3.0)

    def test_bad_rate(self):
        with pytest.raises(FinanceError):
            finmath.depreciation_declining(1000, p=120, n=3)


class TestSchedulesSerialization:
    def test_csv_header_and_rounding(self):
        plan = finmath.pension_plan(100000, 5, 12, 500, horizon=1)
        lines = plan.to_csv().splitlines()
        assert lines[0] == "year,interest,payment,balance"
        assert lines[1] == "1,4837.50,6000.00,98837.50"

    def test_json_full_precision_round_trip(self):
        import json

        plan = finmath.redemption_plan(100000, 5, t=5)
        doc = json.loads(plan.to_json())
        assert doc["rows"][0]["balance"] == plan.rows[0].balance  # bit-exact


class TestMasterFormula:
    def test_compound_case(self):
        for _ in range(50):
            K0 = float(rng.uniform(1, 1e5))
            q = float(rng.uniform(1.001, 1.3))
            n = int(rng.integers(0, 50))
            assert finmath.master_formula(K0, q, 0.0, n) == pytest.approx(
                K0 * q ** n, rel=1e-9
            )

    def test_installment_case(self):
        for _ in range(50):
            E = float(rng.uniform(1, 1e3))
            q = float(rng.uniform(1.001, 1.3))
            n = int(rng.integers(1, 50))
            assert finmath.master_formula(0.0, q, E * q, n) == pytest.approx(
                finmath.installment_solve(E=E, q=q, n=n), rel=1e-9
            )

    def test_redemption_case(self):
        for _ in range(50):
            R0 = float(rng.uniform(1e3, 1e6))
            q = float(rng.uniform(1.001, 1.2))
            A = R0 * (q - 1.0) * float(rng.uniform(1.05, 4.0))
            n = int(rng.integers(1, 50))
            assert finmath.master_formula(-R0, q, A, n) == pytest.approx(
                -finmath.remaining_debt(R0, q, A, n), rel=1e-9, abs=1e-9
            )

    def test_pension_case(self):
        for _ in range(50):
            K0 = float(rng.uniform(1e4, 1e6))
            q = float(rng.uniform(1.001, 1.2))
            m = int(rng.integers(1, 13))
            a = float(rng.uniform(1, 500))
            n = int(rng.integers(1, 50))
            R = -(m + 0.5 * (m + 1) * (q - 1.0)) * a
            assert finmath.master_formula(K0, q, R, n) == pytest.approx(
                finmath.pension_balance(K0, q, m, a, n), rel=1e-9, abs=1e-6
            )

    def test_declining_depreciation_case(self):
        for _ in range(50):
            K0 = float(rng.uniform(10, 1e5))
            p = float(rng.uniform(1, 99))
            n = int(rng.integers(1, 30))
            rn, _ = finmath.depreciation_declining(K0, p=p, n=n)
            assert finmath.master_formula(K0, 1 - p / 100.0, 0.0, n) == pytest.approx(
                rn, rel=1e-9
            )

    def test_q_one_rejected(self):
        with pytest.raises(FinanceError):
            finmath.master_formula(1.0, 1.0, 1.0, 1)
