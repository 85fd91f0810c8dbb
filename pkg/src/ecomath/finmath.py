"""Sequences, compound interest, annuities, redemption and pension plans,
depreciation, and the single master formula unifying all of them.

Conventions: p is a percentage per year, q = 1 + p/100 the dimensionless
interest factor (0 < q < 1 only in depreciation contexts).  Schedules carry
full-precision balances; rounding to two decimals happens only at
serialization.  Solve-for-n operations return a real-valued n and leave
rounding policy to the caller.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from scipy.optimize import brentq


class FinanceError(ValueError):
    pass


def _require_exactly_one_missing(**known):
    missing = [k for k, v in known.items() if v is None]
    if len(missing) != 1:
        raise FinanceError(
            f"exactly one of {tuple(known)} must be left open, got missing={missing}"
        )
    return missing[0]


# ---------------------------------------------------------------------------
# Sequences and series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SequenceSpec:
    """Arithmetical (constant difference d != 0) or geometrical sequence
    (constant quotient q not in {0, 1})."""

    kind: str  # "arith" or "geom"
    a1: float
    step: float

    def __post_init__(self):
        if self.kind not in ("arith", "geom"):
            raise FinanceError(f"kind must be 'arith' or 'geom', not {self.kind!r}")
        if self.kind == "arith" and self.step == 0:
            raise FinanceError("arithmetical sequence needs d != 0")
        if self.kind == "geom" and self.step in (0.0, 1.0):
            raise FinanceError("geometrical sequence needs q not in {0, 1}")


def seq_term(s: SequenceSpec, n: int) -> float:
    """Explicit n-th element: a1 + (n-1) d, or a1 * q^(n-1)."""
    if n < 1:
        raise FinanceError("element index n must be >= 1")
    if s.kind == "arith":
        return s.a1 + (n - 1) * s.step
    return s.a1 * s.step ** (n - 1)


def series_sum(s: SequenceSpec, n: int) -> float:
    """Closed-form partial sum of the first n elements."""
    if n < 1:
        raise FinanceError("series length n must be >= 1")
    if s.kind == "arith":
        return n * s.a1 + s.step / 2.0 * (n - 1) * n
    q = s.step
    return s.a1 * (q ** n - 1.0) / (q - 1.0)


# ---------------------------------------------------------------------------
# Compound interest and installment savings
# ---------------------------------------------------------------------------

def interest_factor(p: float) -> float:
    return 1.0 + p / 100.0


def compound_solve(K0=None, Kn=None, q=None, n=None) -> float:
    """Solve K_n = K_0 q^n for whichever of the four quantities is None."""
    missing = _require_exactly_one_missing(K0=K0, Kn=Kn, q=q, n=n)
    for name, v in (("K0", K0), ("Kn", Kn), ("q", q), ("n", n)):
        if v is not None and v <= 0:
            raise FinanceError(f"{name} must be positive")
    if missing == "Kn":
        return K0 * q ** n
    if missing == "K0":
        return Kn / q ** n  # present value
    if missing == "q":
        return (Kn / K0) ** (1.0 / n)
    if q == 1.0:
        raise FinanceError("cannot solve for n at q = 1")
    return math.log(Kn / K0) / math.log(q)


def effective_rate(p_nom: float, m: int) -> tuple[float, float]:
    """Effective annual factor and rate for m compounding periods per year."""
    if p_nom <= 0 or m < 1:
        raise FinanceError("need p_nom > 0 and m >= 1")
    q_eff = (1.0 + p_nom / (100.0 * m)) ** m
    return q_eff, 100.0 * (q_eff - 1.0)


def installment_solve(Kn=None, E=None, q=None, n=None) -> float:
    """Solve K_n = E q (q^n - 1)/(q - 1) for the missing quantity."""
    missing = _require_exactly_one_missing(Kn=Kn, E=E, q=q, n=n)
    if q is not None and q <= 1.0:
        raise FinanceError("installment savings need q > 1")
    for name, v in (("Kn", Kn), ("E", E), ("n", n)):
        if v is not None and v <= 0:
            raise FinanceError(f"{name} must be positive")
    if missing == "Kn":
        return E * q * (q ** n - 1.0) / (q - 1.0)
    if missing == "E":
        return Kn * (q - 1.0) / (q * (q ** n - 1.0))
    if missing == "n":
        return math.log(1.0 + (q - 1.0) * Kn / (E * q)) / math.log(q)
    return brentq(
        lambda qq: E * qq * (qq ** n - 1.0) / (qq - 1.0) - Kn, 1.0 + 1e-12, 1e3
    )


def installment_present_value(E: float, q: float, n: float) -> float:
    """B0 = E (q^n - 1) / (q^(n-1) (q - 1))."""
    if q <= 1.0 or E <= 0 or n <= 0:
        raise FinanceError("need E > 0, q > 1, n > 0")
    return E * (q ** n - 1.0) / (q ** (n - 1) * (q - 1.0))


# ---------------------------------------------------------------------------
# Schedules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScheduleRow:
    year: int
    interest: float
    payment: float
    balance: float


@dataclass(frozen=True)
class Schedule:
    rows: tuple[ScheduleRow, ...]
    meta: dict

    def to_csv(self) -> str:
        """CSV with 2-decimal display values; full precision lives in JSON."""
        lines = ["year,interest,payment,balance"]
        for r in self.rows:
            lines.append(f"{r.year},{r.interest:.2f},{r.payment:.2f},{r.balance:.2f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "meta": self.meta,
                "rows": [
                    {
                        "year": r.year,
                        "interest": r.interest,
                        "payment": r.payment,
                        "balance": r.balance,
                    }
                    for r in self.rows
                ],
            },
            indent=2,
        )


# ---------------------------------------------------------------------------
# Redemption payments in constant annuities
# ---------------------------------------------------------------------------

def annuity_from_rates(R0: float, p: float, t: float) -> float:
    """First-year annuity A = R0 (p + t)/100."""
    return R0 * (p + t) / 100.0


def remaining_debt(R0: float, q: float, A: float, n: float) -> float:
    """Explicit remaining debt R_n = R0 q^n - A (q^n - 1)/(q - 1)."""
    return R0 * q ** n - A * (q ** n - 1.0) / (q - 1.0)


def redemption_duration(p: float, t: float) -> float:
    """Contract period n = ln(1 + p/t) / ln(q); independent of R0."""
    if p <= 0 or t <= 0:
        raise FinanceError("need p > 0 and t > 0")
    return math.log(1.0 + p / t) / math.log(interest_factor(p))


def redemption_plan(
    R0: float,
    p: float,
    t: Optional[float] = None,
    A: Optional[float] = None,
    horizon: Optional[int] = None,
) -> Schedule:
    """Full redemption payment plan from either the initial redemption rate t
    or the annuity A directly.

    Rows follow Z_n = R_{n-1}(q-1), T_n = A - Z_n, R_n = R_{n-1} q - A; the
    final year's annuity is reduced so the balance lands exactly at 0.  The
    fractional analytic duration is reported in the metadata.
    """
    if R0 <= 0 or p <= 0:
        raise FinanceError("need R0 > 0 and p > 0")
    if (t is None) == (A is None):
        raise FinanceError("give exactly one of t (percent) or A (CU)")
    q = interest_factor(p)
    if t is not None:
        if t <= 0:
            raise FinanceError("redemption rate t must be positive")
        A = annuity_from_rates(R0, p, t)
    if A <= R0 * (q - 1.0):
        raise FinanceError("annuity does not exceed the interest; debt never shrinks")

    n_exact = math.log(A / (A - R0 * (q - 1.0))) / math.log(q)
    rows = []
    balance = R0
    year = 0
    while balance > 1e-9:
        year += 1
        if horizon is not None and year > horizon:
            break
        interest = balance * (q - 1.0)
        payment = A
        if balance * q - A < 0.0:
            payment = balance * q  # reduced final annuity closes the debt
        balance = balance * q - payment
        rows.append(ScheduleRow(year, interest, payment, balance))
    meta = {
        "kind": "redemption",
        "R0": R0,
        "p": p,
        "q": q,
        "A": A,
        "t": t if t is not None else 100.0 * (A / R0 - (q - 1.0)),
        "duration_exact": n_exact,
        "duration_full_years": math.ceil(n_exact - 1e-12),
    }
    return Schedule(tuple(rows), meta)


def redemption_solve(Rn=None, R0=None, q=None, n=None, A=None) -> float:
    """Solve the explicit remaining-debt relation for whichever of the five
    quantities (Rn, R0, q, n, A) is None."""
    missing = _require_exactly_one_missing(Rn=Rn, R0=R0, q=q, n=n, A=A)
    if q is not None and q <= 1.0:
        raise FinanceError("need interest factor q > 1")
    if missing == "Rn":
        return remaining_debt(R0, q, A, n)
    if missing == "A":
        return (R0 * q ** n - Rn) * (q - 1.0) / (q ** n - 1.0)
    if missing == "R0":
        return (Rn + A * (q ** n - 1.0) / (q - 1.0)) / q ** n
    if missing == "n":
        share = A / (q - 1.0)
        num = Rn - share
        den = R0 - share
        if num == 0 or den == 0 or num / den <= 0:
            raise FinanceError("inconsistent redemption quantities; no real n")
        return math.log(num / den) / math.log(q)
    return brentq(lambda qq: remaining_debt(R0, qq, A, n) - Rn, 1.0 + 1e-12, 1e3)


# ---------------------------------------------------------------------------
# Pension payments
# ---------------------------------------------------------------------------

def _pension_bracket(m: int, q: float) -> float:
    return m + 0.5 * (m + 1) * (q - 1.0)


def pension_balance(K0: float, q: float, m: int, a: float, n: float) -> float:
    """Explicit balance K_n = K0 q^n - [m + (m+1)(q-1)/2] a (q^n - 1)/(q - 1)."""
    return K0 * q ** n - _pension_bracket(m, q) * a * (q ** n - 1.0) / (q - 1.0)


def pension_duration(K0: float, q: float, m: int, a: float) -> float:
    """Full years until the account is exhausted (requires a finite scheme)."""
    br = _pension_bracket(m, q)
    denom = br * a - K0 * (q - 1.0)
    if denom <= 0:
        raise FinanceError("withdrawals never exhaust the account (everlasting-capable)")
    return math.log(br * a / denom) / math.log(q)


def pension_present_value(q: float, m: int, a: float, n: float) -> float:
    """B0 needed to fund m withdrawals of a per year for n full years."""
    return _pension_bracket(m, q) * a * (q ** n - 1.0) / (q ** n * (q - 1.0))


def everlasting_pension(K0: float, q: float, m: int) -> float:
    """Withdrawal amount keeping the balance constant: imposing K_n = K0 on
    the explicit balance gives a = K0 (q-1) / [m + (m+1)(q-1)/2]."""
    if K0 <= 0 or q <= 1.0 or m < 1:
        raise FinanceError("need K0 > 0, q > 1, m >= 1")
    return K0 * (q - 1.0) / _pension_bracket(m, q)


def pension_plan(
    K0: float, p: float, m: int, a: float, horizon: Optional[int] = None
) -> Schedule:
    """Year-by-year pension account: m withdrawals of amount a per year,
    pro-rata interest within the year (no intra-year compounding).

    Z_n = [K_{n-1} - (m+1)a/2](q-1) and K_n = K_{n-1} - m a + Z_n.  The
    metadata reports the analytic duration, or flags the scheme as
    everlasting-capable when withdrawals never exhaust the account.
    """
    if K0 <= 0 or p <= 0 or a <= 0 or m < 1:
        raise FinanceError("need K0 > 0, p > 0, a > 0, m >= 1")
    q = interest_factor(p)
    meta = {"kind": "pension", "K0": K0, "p": p, "q": q, "m": m, "a": a}
    try:
        n_exact = pension_duration(K0, q, m, a)
        meta["duration_exact"] = n_exact
        meta["duration_full_years"] = math.floor(n_exact + 1e-12)
        meta["everlasting_capable"] = False
        n_rows = math.ceil(n_exact - 1e-12)
    except FinanceError:
        meta["everlasting_capable"] = True
        meta["everlasting_amount"] = everlasting_pension(K0, q, m)
        n_rows = 50
    if horizon is not None:
        n_rows = min(n_rows, horizon)
    rows = []
    balance = K0
    for year in range(1, n_rows + 1):
        interest = (balance - 0.5 * (m + 1) * a) * (q - 1.0)
        balance = balance - m * a + interest
        rows.append(ScheduleRow(year, interest, m * a, balance))
        if balance <= 0:
            break
    return Schedule(tuple(rows), meta)


# ---------------------------------------------------------------------------
# Depreciation
# ---------------------------------------------------------------------------

def depreciation_linear(K0: float, N: int, n: Optional[int] = None):
    """Straight-line write-off to zero over N years.

    Returns (R_n, schedule); the yearly differences form an arithmetical
    sequence with constant d = -K0/N.
    """
    if K0 <= 0 or N < 1:
        raise FinanceError("need K0 > 0 and N >= 1")
    if n is None:
        n = N
    if not 1 <= n <= N:
        raise FinanceError(f"year n must lie in 1..{N}")
    d = K0 / N
    rows = [ScheduleRow(k, 0.0, d, K0 - k * d) for k in range(1, n + 1)]
    meta = {"kind": "depreciation-linear", "K0": K0, "N": N, "annual": d}
    return K0 - n * d, Schedule(tuple(rows), meta)


def depreciation_declining(
    K0: float, p: Optional[float] = None, n: Optional[int] = None, Rn: Optional[float] = None
):
    """Declining-balance depreciation R_n = K0 q^n with q = 1 - p/100.

    Given (p, n) returns (R_n, schedule).  Given (Rn, n) solves for p; given
    (p, Rn) solves for the period n.  The yearly values form a geometrical
    sequence with quotient q in (0, 1).
    """
    if K0 <= 0:
        raise FinanceError("need K0 > 0")
    known = sum(v is not None for v in (p, n, Rn))
    if known < 2:
        raise FinanceError("give two of p, n, Rn")
    if p is not None and not 0.0 < p < 100.0:
        raise FinanceError("declining rate p must lie in (0, 100)")
    if p is None:
        q = (Rn / K0) ** (1.0 / n)
        return 100.0 * (1.0 - q)
    q = 1.0 - p / 100.0
    if n is None:
        return math.log(Rn / K0) / math.log(q)
    rows = []
    balance = K0
    for year in range(1, n + 1):
        write_off = balance * (1.0 - q)
        balance *= q
        rows.append(ScheduleRow(year, 0.0, write_off, balance))
    meta = {"kind": "depreciation-declining", "K0": K0, "p": p, "q": q}
    return K0 * q ** n, Schedule(tuple(rows), meta)


# ---------------------------------------------------------------------------
# Master formula
# ---------------------------------------------------------------------------

def master_formula(K0: float, q: float, R: float, n: float) -> float:
    """K_n = K0 q^n + R (q^n - 1)/(q - 1) for q > 0, q != 1.

    Special cases: R=0, q>1 compound interest; K0=0, R=Eq installment
    savings; K0=-R0, R=A the negative of the remaining debt; q>1 and
    R = -[m + (m+1)(q-1)/2] a the pension balance; R=0, 0<q<1 the
    declining-balance remaining value.
    """
    if q <= 0 or q == 1.0:
        raise FinanceError("master formula needs q > 0 and q != 1")
    if n < 0:
        raise FinanceError("n must be >= 0")
    return K0 * q ** n + R * (q ** n - 1.0) / (q - 1.0)
