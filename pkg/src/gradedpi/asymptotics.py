"""Log-space asymptotics for c_k(n) and p_k(n), compared against exact counts."""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from .codimension import m_formula

WORKING_PREC = 128  # bits


def _log(x) -> mpmath.mpf:
    return mpmath.log(mpmath.mpf(x))


def log_leading_constant(k: int) -> mpmath.mpf:
    """ln( k^(k/2+1) / (4 pi)^((k-1)/2) )."""
    with mpmath.workprec(WORKING_PREC):
        return (mpmath.mpf(k) / 2 + 1) * _log(k) - mpmath.mpf(k - 1) / 2 * mpmath.log(4 * mpmath.pi)


def log_intro_constant(k: int) -> mpmath.mpf:
    """ln( (2 pi)^(-(k-1)/2) * 2^(-(k-1)/2) * k^(k/2+1) ), the same constant written differently."""
    with mpmath.workprec(WORKING_PREC):
        h = mpmath.mpf(k - 1) / 2
        return -h * mpmath.log(2 * mpmath.pi) - h * mpmath.log(2) + (mpmath.mpf(k) / 2 + 1) * _log(k)


def asymptotic_value(k: int, n: int) -> mpmath.mpf:
    """ln of k^(k/2+1) (4 pi)^(-(k-1)/2) n^(-(k-1)/2) k^(2n)."""
    if n < 1:
        raise ValueError("asymptotics need n >= 1")
    with mpmath.workprec(WORKING_PREC):
        return log_leading_constant(k) - mpmath.mpf(k - 1) / 2 * _log(n) + 2 * n * _log(k)


def c2_asymptotic(n: int) -> mpmath.mpf:
    """ln of pi^(-1/2) n^(-1/2) 2^(2n+1)."""
    if n < 1:
        raise ValueError("asymptotics need n >= 1")
    with mpmath.workprec(WORKING_PREC):
        return -mpmath.log(mpmath.pi) / 2 - _log(n) / 2 + (2 * n + 1) * mpmath.log(2)


def richmond_shallit(k: int, n: int) -> mpmath.mpf:
    """ln of k^(2n + k/2) (4 pi n)^((1-k)/2), the balanced-count asymptotic."""
    if n < 1:
        raise ValueError("asymptotics need n >= 1")
    with mpmath.workprec(WORKING_PREC):
        return (2 * n + mpmath.mpf(k) / 2) * _log(k) + mpmath.mpf(1 - k) / 2 * mpmath.log(4 * mpmath.pi * n)


def relative_deviation(log_exact, log_approx) -> mpmath.mpf:
    """exact/approx - 1, computed as expm1 of the log difference."""
    with mpmath.workprec(WORKING_PREC):
        return mpmath.expm1(log_exact - log_approx)


@dataclass
class AsymptoticRow:
    n: int
    exact: int
    log_exact: mpmath.mpf
    log_asymptotic: mpmath.mpf
    deviation: mpmath.mpf

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "exact": str(self.exact),
            "log_exact": mpmath.nstr(self.log_exact, 25),
            "log_asymptotic": mpmath.nstr(self.log_asymptotic, 25),
            "deviation": mpmath.nstr(self.deviation, 15),
        }


@dataclass
class AsymptoticReport:
    k: int
    rows: list[AsymptoticRow] = field(default_factory=list)

    def deviation_at(self, n: int) -> mpmath.mpf:
        for r in self.rows:
            if r.n == n:
                return r.deviation
        raise KeyError(n)

    def to_dict(self) -> dict:
        return {"k": self.k, "rows": [r.to_dict() for r in self.rows]}


def ratio_report(k: int, ns) -> AsymptoticReport:
    rep = AsymptoticReport(k)
    with mpmath.workprec(WORKING_PREC):
        for n in ns:
            exact = m_formula(k, n)
            le = _log(exact)
            la = asymptotic_value(k, n)
            rep.rows.append(AsymptoticRow(n, exact, le, la, relative_deviation(le, la)))
    return rep


def constants_agree(k: int, tol_bits: int = 100) -> bool:
    with mpmath.workprec(WORKING_PREC):
        return abs(log_leading_constant(k) - log_intro_constant(k)) < mpmath.mpf(2) ** -tol_bits
