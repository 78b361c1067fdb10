"""Riemann zeta, Hurwitz zeta, completed xi, Dirichlet L, and Euler products.

Evaluation is Euler-Maclaurin summation: a lattice head of M terms plus the
standard correction terms with 8 Bernoulli coefficients.  The cut M starts at
the policy value max(48, |Im s| + 10) rounded up to a power of two, and is
doubled until the remainder bound (first omitted Bernoulli term, safety
factor 2) meets the requested absolute tolerance.  The bound is trusted only
while the term-decay ratio ((|t|+16)/(2 pi a))^2 stays below 1/4, which the
policy cut guarantees with a wide margin.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .errors import (BadAlpha, FactorSingular, PoleAtOne, PoleAtZero,
                     ToleranceUnreachable)
from .primes import moebius_up_to, primes_up_to

# B_{2k}/(2k)! for k = 1..9; the k=9 entry only feeds the remainder bound.
_B2K = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
        Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
        Fraction(-3617, 510), Fraction(43867, 798)]
_FACT = [1]
for _i in range(1, 19):
    _FACT.append(_FACT[-1] * _i)
BCOEF = tuple(float(b / _FACT[2 * k]) for k, b in enumerate(_B2K, start=1))
# B_{2k}/(2k), the digamma tail coefficients
_PSI_COEF = tuple(float(b / (2 * k)) for k, b in enumerate(_B2K[:8], start=1))


@dataclass(frozen=True)
class EvalOptions:
    """Evaluation budget: target absolute error and lattice-term cap."""
    abs_tol: float = 1e-12
    max_terms: int = 1 << 20

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise ValueError("abs_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


_DEFAULT_OPTS = EvalOptions()


def pow2ceil(x):
    """Smallest power of two >= x (at least 1)."""
    n = 1
    while n < x:
        n <<= 1
    return n


def policy_cut(t_abs):
    """Default lattice cut for |Im s| = t_abs: pow2ceil(max(48, t_abs+10))."""
    return pow2ceil(max(48.0, t_abs + 10.0))


def em_remainder_bound(s, m_cut, alpha):
    """2 * |B18/18!| * prod_{j=0}^{16} |s+j| * a^(-sigma-17), a = m_cut+alpha.

    First omitted Bernoulli term times the safety factor 2.
    """
    a = m_cut + alpha
    prod = 1.0
    for j in range(17):
        prod *= abs(s + j)
    return 2.0 * abs(BCOEF[8]) * prod * a ** (-s.real - 17.0)


def _em_eval(s, alpha, m_cut):
    """One Euler-Maclaurin pass at a fixed cut; no remainder decision.

    Returns (value, mass) where mass is the sum of the absolute values of
    every summand, the conditioning of the evaluation.  For sigma < 0 the
    head terms grow while the result stays O(1), so cancellation can cost
    mass * eps in the last place; the caller folds that into the bound.
    """
    lat = np.arange(m_cut, dtype=np.float64) + alpha
    head_terms = np.exp(-s * np.log(lat))
    head = complex(np.sum(head_terms))
    mass = float(np.sum(np.abs(head_terms)))
    a = m_cut + alpha
    ln_a = math.log(a)
    apow = np.exp((1.0 - s) * ln_a)
    t0, t1 = apow / (s - 1.0), apow / (2.0 * a)
    tail = t0 + t1
    mass += abs(t0) + abs(t1)
    poch = s
    apk = apow / (a * a)
    for k in range(1, 9):
        term = BCOEF[k - 1] * apk * poch
        tail += term
        mass += abs(term)
        poch *= (s + (2 * k - 1)) * (s + 2 * k)
        apk /= a * a
    return head + tail, mass


_EPS = float(np.finfo(np.float64).eps)


def _hurwitz_core(s, alpha, opts):
    """(value, certified bound) with cut doubling until the bound holds.

    The truncation remainder is driven below opts.abs_tol; the returned
    bound additionally carries a rounding allowance proportional to the
    absolute mass of the summation, so it stays honest when sigma < 0
    makes the head terms large and mutually cancelling.
    """
    s = complex(s)
    if s == 1:
        raise PoleAtOne("zeta has its pole at s = 1")
    m = min(policy_cut(abs(s.imag)), pow2ceil(opts.max_terms))
    while True:
        a = m + alpha
        bound = em_remainder_bound(s, m, alpha)
        ratio = ((abs(s.imag) + 16.0) / (2.0 * math.pi * a)) ** 2
        if bound <= opts.abs_tol and ratio <= 0.25:
            value, mass = _em_eval(s, alpha, m)
            rounding = 4.0 * _EPS * (math.log2(m) + 8.0) * mass
            return value, bound + rounding
        if m * 2 > opts.max_terms:
            raise ToleranceUnreachable(
                f"cannot certify abs_tol={opts.abs_tol:g} within "
                f"max_terms={opts.max_terms} (needs cut > {m})")
        m *= 2


def zeta(s, opts=None):
    """Riemann zeta at s != 1; truncation certified below opts.abs_tol."""
    return _hurwitz_core(s, 1.0, opts or _DEFAULT_OPTS)[0]


def zeta_with_error(s, opts=None):
    """(zeta(s), certified bound: truncation plus rounding allowance)."""
    return _hurwitz_core(s, 1.0, opts or _DEFAULT_OPTS)


def hurwitz_zeta(s, alpha, opts=None):
    """Hurwitz zeta(s, alpha) for alpha in (0, 1], s != 1."""
    return hurwitz_with_error(s, alpha, opts)[0]


def hurwitz_with_error(s, alpha, opts=None):
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise BadAlpha(f"alpha={alpha:g} outside (0, 1]")
    return _hurwitz_core(s, alpha, opts or _DEFAULT_OPTS)


def hurwitz_finite_part_at_1(alpha):
    """lim_{s->1} (zeta(s, alpha) - 1/(s-1)), which equals -psi(alpha)."""
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise BadAlpha(f"alpha={alpha:g} outside (0, 1]")
    return -digamma(alpha)


def digamma(x):
    """psi(x) for real x > 0 via recurrence into the asymptotic regime."""
    x = float(x)
    if x <= 0.0:
        raise ValueError("digamma defined here for x > 0 only")
    m = max(0, 48 - int(x))
    rec = sum(1.0 / (x + j) for j in range(m))
    a = x + m
    val = math.log(a) - 0.5 / a
    apk = 1.0 / (a * a)
    for coef in _PSI_COEF:
        val -= coef * apk
        apk /= a * a
    return val - rec


# Lanczos approximation, g = 7, 9 coefficients; relative error ~1e-13 over
# the right half plane after reflection.
_LANCZOS_G = 7.0
_LANCZOS = (0.99999999999980993, 676.5203681218851, -1259.1392167224028,
            771.32342877765313, -176.61502916214059, 12.507343278686905,
            -0.13857109526572012, 9.9843695780195716e-6,
            1.5056327351493116e-7)


def gamma(z):
    """Complex gamma function (Lanczos; reflection for Re z < 0.5)."""
    z = complex(z)
    if z.real < 0.5:
        # poles at nonpositive integers surface as a zero sine here
        sin_piz = np.sin(np.pi * z)
        if sin_piz == 0:
            raise ValueError(f"gamma pole at z={z}")
        return np.pi / (sin_piz * gamma(1.0 - z))
    z -= 1.0
    x = _LANCZOS[0]
    for i in range(1, 9):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * np.exp(-t) * x


def _zeta_derivative(s, h=1e-6):
    # central difference; fine for the trivial-zero limits where s is real
    return (zeta(s + h) - zeta(s - h)) / (2.0 * h)


def completed_xi(s, opts=None):
    """pi^(-s/2) Gamma(s/2) zeta(s); symmetric under s -> 1-s.

    At the trivial zeros s = -2n the Gamma pole cancels the zeta zero; the
    finite limit 2 (-1)^n / n! * pi^n * zeta'(-2n) is returned when s is
    within 1e-8 of -2n.
    """
    s = complex(s)
    if s == 0:
        raise PoleAtZero("completed zeta is singular at s = 0")
    if s == 1:
        raise PoleAtOne("completed zeta is singular at s = 1")
    n = round(-s.real / 2.0)
    if n >= 1 and abs(s + 2.0 * n) < 1e-8:
        # zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2^(2n+1) pi^(2n)), from
        # differentiating the functional equation at the trivial zero
        dz = ((-1.0) ** n * math.factorial(2 * n)
              * zeta(2.0 * n + 1.0, opts).real
              / (2.0 ** (2 * n + 1) * math.pi ** (2 * n)))
        lim = 2.0 * (-1.0) ** n / math.factorial(n) * dz
        return math.pi ** n * lim
    opts = opts or _DEFAULT_OPTS
    return np.exp(-s / 2.0 * math.log(math.pi)) * gamma(s / 2.0) * zeta(s, opts)


def euler_product_truncated(s, n_max):
    """prod_{p <= n_max} (1 - p^{-s})^{-1} as an exact finite product."""
    s = complex(s)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ps = primes_up_to(n_max).astype(np.float64)
    if ps.size == 0:
        return 1.0 + 0.0j
    factors = 1.0 - np.exp(-s * np.log(ps))
    if np.any(factors == 0):
        p = int(ps[np.nonzero(factors == 0)[0][0]])
        raise FactorSingular(f"Euler factor at p={p} has p^(-s) = 1")
    return complex(1.0 / np.prod(factors))


@dataclass(frozen=True)
class DirichletCharacter:
    """Explicit value table chi(0..q-1); values are roots of unity or zero."""
    q: int
    values: tuple

    def __post_init__(self):
        q = self.q
        if q < 1 or len(self.values) != q:
            raise ValueError("values must list chi at residues 0..q-1")
        vals = tuple(complex(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for n, v in enumerate(vals):
            if math.gcd(n, q) > 1:
                if v != 0:
                    raise ValueError(f"chi({n}) must vanish (gcd({n},{q})>1)")
            else:
                if abs(abs(v) - 1.0) > 1e-12:
                    raise ValueError(f"chi({n}) must be a root of unity")
        for a in range(q):
            for b in range(a, q):
                if math.gcd(a * b, q) == 1:
                    if abs(vals[(a * b) % q] - vals[a] * vals[b]) > 1e-12:
                        raise ValueError("character table not multiplicative")

    @property
    def is_principal(self):
        return all(abs(v - 1.0) <= 1e-12
                   for n, v in enumerate(self.values)
                   if math.gcd(n, self.q) == 1)

    @classmethod
    def principal(cls, q):
        return cls(q, tuple(1.0 + 0.0j if math.gcd(n, q) == 1 else 0.0j
                            for n in range(q)))

    @classmethod
    def mod4_nontrivial(cls):
        """The odd character mod 4: chi(1)=1, chi(3)=-1."""
        return cls(4, (0.0j, 1.0 + 0.0j, 0.0j, -1.0 + 0.0j))


def dirichlet_l(s, chi, opts=None):
    """L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q).

    For a nonprincipal character the Hurwitz poles at s=1 cancel; the value
    there is assembled from the finite parts lim (zeta(s,a/q) - 1/(s-1)).
    """
    s = complex(s)
    opts = opts or _DEFAULT_OPTS
    q = chi.q
    if chi.is_principal:
        if s == 1:
            raise PoleAtOne("principal character L-series has the zeta pole")
        total = 0.0j
        for a in range(1, q + 1):
            v = chi.values[a % q]
            if v != 0:
                total += v * hurwitz_zeta(s, a / q, opts)
        return np.exp(-s * math.log(q)) * total if q > 1 else total
    if s == 1:
        total = 0.0j
        for a in range(1, q + 1):
            v = chi.values[a % q]
            if v != 0:
                total += v * hurwitz_finite_part_at_1(a / q)
        return total / q
    total = 0.0j
    for a in range(1, q + 1):
        v = chi.values[a % q]
        if v != 0:
            total += v * hurwitz_zeta(s, a / q, opts)
    return np.exp(-s * math.log(q)) * total if q > 1 else total


def inverse_zeta_series(s, n_max):
    """sum_{j <= n_max} mu(j) j^{-s}; a plain finite sum, no claims."""
    s = complex(s)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    mu = moebius_up_to(n_max)
    j = np.nonzero(mu)[0].astype(np.float64)  # squarefree indices only
    return complex(np.sum(mu[mu != 0] * np.exp(-s * np.log(j))))
