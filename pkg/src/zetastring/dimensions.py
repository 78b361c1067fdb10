"""Complex dimensions and truncated explicit formulas.

Pole families of the closed-form geometric zetas, their residues (symbolic,
with a contour-quadrature cross-check), and the level-1 residue expansions
approximating the geometric and spectral counting functions.  Only
simple-pole families are handled; window sums combine conjugate pairs in
ascending |k| so the result is real and the summation order deterministic.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .zeta import zeta as zeta_fn
from .errors import (AssumptionViolated, PoleHit, TruncationTooShort,
                     UnsupportedKind)
from .strings import ClosedFormZeta, counting_function, spectral_counting, \
    spectral_measure_atoms

_ZETA0 = -0.5


@dataclass(frozen=True)
class ComplexDimension:
    omega: complex
    residue: complex


def _pole_family(cf):
    """(base real part D, vertical period P or None, residue) of cf's poles."""
    if cf.kind == "self_similar":
        r, m = cf.params
        ell = math.log(1.0 / r)
        return math.log(m) / ell, 2.0 * math.pi / ell, 1.0 / (m * ell)
    if cf.kind == "prime_harmonic":
        (p,) = cf.params
        lp = math.log(p)
        return 0.0, 2.0 * math.pi / lp, 1.0 / lp
    if cf.kind == "harmonic":
        return 1.0, None, 1.0
    if cf.kind == "unit":
        return None, None, None
    raise UnsupportedKind(
        f"pole set of {cf.kind} is not computed (zeta zeros involved)")


def complex_dimensions(cf, k_max):
    """Poles omega_k with residues, ascending imaginary part, |k| <= k_max."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    d, period, res = _pole_family(cf)
    if d is None:
        return []
    if period is None:
        return [ComplexDimension(complex(d), complex(res))]
    return [ComplexDimension(complex(d, k * period), complex(res))
            for k in range(-k_max, k_max + 1)]


def residue_contour(cf, omega, n_points=64):
    """Residue of zeta_eta at omega by circle quadrature.

    Radius min(1e-2, half the distance to the nearest other pole); midpoint
    rule, spectrally accurate for the analytic integrand.
    """
    _, period, _ = _pole_family(cf)
    radius = 1e-2 if period is None else min(1e-2, period / 2.0)
    th = (np.arange(n_points) + 0.5) * (2.0 * np.pi / n_points)
    ring = radius * np.exp(1j * th)
    vals = np.array([cf.zeta_at(omega + z) for z in ring])
    return complex(np.mean(vals * ring))


@lru_cache(maxsize=4096)
def _zeta_at_pole(omega):
    return zeta_fn(omega)


def _window_sum(cf, x, k_max, weight):
    """Re of sum over the pole window of res * weight(omega); k=0 first,
    conjugate pairs combined before accumulation."""
    d, period, res = _pole_family(cf)
    if d is None:
        return 0.0
    lx = math.log(x)
    if period is None:
        k_range = (0,)
    else:
        k_range = range(0, k_max + 1)
    total = 0.0
    for k in k_range:
        om = complex(d, k * (period or 0.0))
        term = res * weight(om) * np.exp(om * lx)
        total += term.real if k == 0 else 2.0 * term.real
    return total


def _check_simple_window(cf, k_max, forbid, level_name):
    d, period, _ = _pole_family(cf)
    if d is None:
        return
    ks = (0,) if period is None else range(0, k_max + 1)
    for k in ks:
        om = complex(d, k * (period or 0.0))
        for bad in forbid:
            if abs(om - bad) < 1e-12:
                raise AssumptionViolated(
                    f"{level_name} formula assumes no dimension at {bad:g}; "
                    f"{cf.kind} has a pole there")


def density_geometric_states(cf, x, k_max):
    """Truncated density of geometric states: Re sum res * x^(omega-1)."""
    x = float(x)
    if x <= 0:
        raise ValueError("x must be positive")
    _check_simple_window(cf, k_max, (1.0,), "geometric density")
    return _window_sum(cf, x, k_max, lambda om: 1.0) / x


def density_spectral_states(cf, x, k_max):
    """zeta_eta(1) + Re sum res * zeta(omega) * x^(omega-1)."""
    x = float(x)
    if x <= 0:
        raise ValueError("x must be positive")
    const = cf.zeta_at(1.0).real
    _check_simple_window(cf, k_max, (1.0,), "spectral density")
    return const + _window_sum(cf, x, k_max,
                               lambda om: _zeta_at_pole(om)) / x


def counting_from_dimensions(cf, x, k_max, level="geometric"):
    """Level-1 truncated explicit formula for N_eta (or N_nu).

    geometric: zeta_eta(0) + sum res * x^omega / omega
    spectral:  zeta_eta(1)*x + zeta_eta(0)*zeta(0)
                             + sum res * zeta(omega) * x^omega / omega
    Poles at 0 or 1 inside the window violate the simple-pole bookkeeping.
    """
    x = float(x)
    if x <= 0:
        raise ValueError("x must be positive")
    if level not in ("geometric", "spectral"):
        raise ValueError(f"unknown level {level!r}")
    _check_simple_window(cf, k_max, (0.0, 1.0), level)
    z0 = cf.zeta_at(0.0).real
    if level == "geometric":
        return z0 + _window_sum(cf, x, k_max, lambda om: 1.0 / om)
    z1 = cf.zeta_at(1.0).real
    return z1 * x + z0 * _ZETA0 + _window_sum(
        cf, x, k_max, lambda om: _zeta_at_pole(om) / om)


def jump_midpoints(eta, lo, hi, count, level="geometric"):
    """count log-uniform candidates in [lo, hi], each snapped to the nearest
    (in log) geometric midpoint of a pair of consecutive jumps.

    Midpoints sit strictly between consecutive jump abscissae inside
    [lo, hi], where the oscillatory series converges pointwise without jump
    ambiguity.  The jumps are the atoms (geometric level) or the spectral
    atoms (spectral level).
    """
    if level == "spectral":
        jumps = spectral_measure_atoms(eta, hi).atoms_x
    else:
        jumps = eta.atoms_x
        if eta.coverage < hi:
            raise TruncationTooShort(
                f"atoms certified to {eta.coverage:g} < {hi:g}")
    inner = jumps[(jumps >= lo) & (jumps <= hi)]
    if inner.size < 2:
        raise ValueError("need at least two jumps inside [lo, hi]")
    mids = np.sqrt(inner[:-1] * inner[1:])
    log_mids = np.log(mids)
    cands = np.geomspace(lo, hi, count)
    idx = [int(np.argmin(np.abs(math.log(c) - log_mids))) for c in cands]
    return mids[np.array(idx)]


@dataclass(frozen=True)
class ExplicitCompareReport:
    rows: tuple            # (x, direct, explicit, error) per point
    max_error: float
    mean_error: float
    half_jump_points: tuple  # xs that sit exactly on an atom


def compare_explicit_vs_direct(eta, xs, k_max, level="geometric"):
    """Direct counting vs the truncated explicit formula at each x."""
    if eta.closed_form is None:
        raise ValueError("comparison needs a closed form")
    xs = np.asarray(xs, dtype=np.float64).ravel()
    if xs.size == 0:
        return ExplicitCompareReport((), 0.0, 0.0, ())
    count = counting_function if level == "geometric" else spectral_counting
    atoms = (eta.atoms_x if level == "geometric"
             else spectral_measure_atoms(eta, float(np.max(xs))).atoms_x)
    rows, flagged = [], []
    for x in xs:
        direct = count(eta, x)
        explicit = counting_from_dimensions(eta.closed_form, x, k_max, level)
        rows.append((float(x), float(direct), float(explicit),
                     abs(float(direct) - float(explicit))))
        if np.any(atoms == x):
            flagged.append(float(x))
    errs = [r[3] for r in rows]
    return ExplicitCompareReport(tuple(rows), max(errs),
                                 float(np.mean(errs)), tuple(flagged))
