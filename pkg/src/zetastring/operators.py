"""Weighted-space model of the shift semigroup and the spectral operator.

Functions live on a uniform grid as SampledFunction values.  Operators act
two ways, matching how the theory uses them:

* on samples: shift / apply_spectral_operator / apply_euler_factor move and
  sum grid values directly (translation by log n etc.); every norm lost off
  the right window edge is accumulated in window_loss, never dropped
  silently;
* through the spectrum: a truncated shift is the pair (c, T) and any norm of
  psi(shift) is the exact sup of |psi| over the vertical segment, computed
  by branch-and-bound refinement rather than by discretizing the operator.
"""

import heapq
import math
from dataclasses import dataclass

import numpy as np

from ._kernel import eval_rows
from .errors import (DivergentTail, PoleAtOne, PoleHit, ToleranceUnreachable,
                     UnboundedOnSegment, WindowTooSmall)

OVERFLOW_GUARD = 1e12
MAX_TERMS = 1 << 26


@dataclass(frozen=True, eq=False)
class SampledFunction:
    t_min: float
    t_max: float
    step: float
    values: np.ndarray
    c: float
    window_loss: float = 0.0

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.complex128)
        n = int(math.floor((self.t_max - self.t_min) / self.step + 0.5)) + 1
        if vals.size != n:
            raise ValueError(
                f"grid holds {n} points, got {vals.size} values")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def grid(self):
        return self.t_min + self.step * np.arange(self.values.size)

    def boundary_decay_ok(self, threshold=1e-9):
        """Both window ends have |f(t)| e^(-ct) below threshold."""
        ends = np.array([self.values[0], self.values[-1]])
        ts = np.array([self.t_min, self.t_max])
        return bool(np.all(np.abs(ends) * np.exp(-self.c * ts) <= threshold))


def sampled_from_callable(fn, t_min, t_max, step, c):
    t = t_min + step * np.arange(int(math.floor((t_max - t_min) / step + 0.5)) + 1)
    return SampledFunction(t_min, t_max, step, fn(t), c)


def gaussian_packet(c, tau, sigma, t_min, t_max, step, weight_c=None):
    """e^((c+i tau) t) * e^(-t^2/(2 sigma^2)) on the grid."""
    lam = complex(c, tau)
    return sampled_from_callable(
        lambda t: np.exp(lam * t - t * t / (2.0 * sigma * sigma)),
        t_min, t_max, step, c if weight_c is None else weight_c)


def hc_norm(f):
    """(integral |f(t)|^2 e^(-2ct) dt)^(1/2), composite trapezoid.

    The weight is folded in before squaring so e^(-2ct) never underflows
    independently of |f|^2 overflowing.
    """
    w = np.abs(f.values) * np.exp(-f.c * f.grid)
    return float(np.sqrt(np.trapezoid(w * w, dx=f.step)))


def _suffix_mass(f):
    """suffix_mass[j] = hc-norm of f restricted to [t_j, t_max]."""
    w = np.abs(f.values) * np.exp(-f.c * f.grid)
    cells = 0.5 * (w[:-1] ** 2 + w[1:] ** 2) * f.step
    acc = np.concatenate((np.cumsum(cells[::-1])[::-1], [0.0]))
    return np.sqrt(acc)


def shift(f, t):
    """u -> f(u - t): zero-fill from the left, values leaving the window on
    the right are dropped with their hc-mass added to window_loss.

    t within 1e-9 steps of a grid multiple is moved exactly; otherwise the
    samples are linearly interpolated and the rounding is in the result's
    grid position error O(step^2), not hidden.
    """
    if t < 0:
        raise ValueError("only forward shifts")
    if t == 0:
        return f
    ratio = t / f.step
    k = round(ratio)
    n = f.values.size
    if abs(ratio - k) < 1e-9:
        k = int(k)
        lost_idx = max(n - k, 0)
    else:
        lost_idx = max(n - int(math.ceil(ratio)), 0)
    lost = _suffix_mass(f)[lost_idx] * math.exp(-f.c * t)
    if abs(ratio - k) < 1e-9:
        out = np.zeros(n, dtype=np.complex128)
        if k < n:
            out[k:] = f.values[:n - k]
    else:
        g = f.grid
        out = np.interp(g - t, g, f.values.real, left=0.0, right=0.0) \
            + 1j * np.interp(g - t, g, f.values.imag, left=0.0, right=0.0)
    return SampledFunction(f.t_min, f.t_max, f.step, out, f.c,
                           f.window_loss + lost)


def _tap_array(shifts, weights, step):
    """Offsets summed into a tap array; fractional offsets split linearly
    across the two neighboring integer offsets."""
    shifts = np.asarray(shifts, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    ratio = shifts / step
    kmax = int(np.ceil(np.max(ratio))) if ratio.size else 0
    h = np.zeros(kmax + 2, dtype=np.float64)
    k = np.floor(ratio).astype(np.int64)
    theta = ratio - k
    snap = (theta < 1e-9) | (theta > 1.0 - 1e-9)
    np.add.at(h, np.round(ratio[snap]).astype(np.int64), weights[snap])
    np.add.at(h, k[~snap], weights[~snap] * (1.0 - theta[~snap]))
    np.add.at(h, k[~snap] + 1, weights[~snap] * theta[~snap])
    return np.trim_zeros(h, "b") if h.any() else h[:1]


def _convolve_taps(f, h):
    # direct convolution only: FFT would smear eps*peak noise into the far
    # tails, which the e^(-2ct) weight then amplifies by e^(2c|t_min|)
    n = f.values.size
    if h.size == 1:
        return f.values * h[0] if h[0] != 1.0 else f.values.copy()
    return np.convolve(f.values, h)[:n]


def spectral_tail_cut(f, tail_tol):
    """Smallest N with ||f||_c * sum_{n>N} n^(-c) <= tail_tol (c > 1)."""
    if f.c <= 1.0:
        raise DivergentTail(
            f"tail bound needs c > 1 (weight sum diverges at c={f.c:g})")
    norm = hc_norm(f)
    if norm == 0.0:
        return 1
    # integral bound: sum_{n>N} n^-c <= N^(1-c)/(c-1); size the cut in log
    # space first so a hopeless tolerance cannot overflow the power
    log_n = math.log(norm / (tail_tol * (f.c - 1.0))) / (f.c - 1.0)
    if not log_n < math.log(MAX_TERMS):
        raise ToleranceUnreachable(
            f"tail bound {tail_tol:g} needs e^{log_n:.3g} translates "
            f"(cap {MAX_TERMS}); loosen the tolerance or raise c")
    n = (norm / (tail_tol * (f.c - 1.0))) ** (1.0 / (f.c - 1.0))
    return max(1, int(math.ceil(n)))


def apply_spectral_operator(f, n_max=None, tail_tol=None):
    """sum_{n=1}^{N} f(. - log n) with N = n_max or from the tail bound.

    Translations enter as a tap array (same linear split as shift) applied
    in one convolution; n=1 contributes the untouched f, so n_max=1 is the
    identity exactly.
    """
    if (n_max is None) == (tail_tol is None):
        raise ValueError("exactly one of n_max / tail_tol")
    if n_max is None:
        n_max = spectral_tail_cut(f, tail_tol)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > MAX_TERMS:
        raise ToleranceUnreachable(f"n_max {n_max} beyond cap {MAX_TERMS}")
    log_n = np.log(np.arange(1, n_max + 1, dtype=np.float64))
    h = _tap_array(log_n, np.ones(n_max), f.step)
    out = _convolve_taps(f, h)
    suffix = _suffix_mass(f)
    n = f.values.size
    j = np.maximum(n - np.ceil(log_n[1:] / f.step).astype(np.int64), 0)
    lost = float(np.sum(suffix[j] * np.exp(-f.c * log_n[1:])))
    return SampledFunction(f.t_min, f.t_max, f.step, out, f.c,
                           f.window_loss + lost)


def apply_euler_factor(f, p, m_max):
    """sum_{m=0}^{m_max} f(. - m log p)."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    if m_max == 0:
        return f
    out = f.values.copy()
    lost = 0.0
    for m in range(1, m_max + 1):
        g = shift(f, m * math.log(p))
        out = out + g.values
        lost += g.window_loss - f.window_loss
    return SampledFunction(f.t_min, f.t_max, f.step, out, f.c,
                           f.window_loss + lost)


@dataclass(frozen=True)
class SpectralSegment:
    c: float
    tau_lo: float
    tau_hi: float

    def __post_init__(self):
        if self.tau_lo > self.tau_hi:
            raise ValueError("tau_lo above tau_hi")


@dataclass(frozen=True)
class TruncatedShift:
    c: float
    T: float
    cutoff: str = "clamp"

    def __post_init__(self):
        if self.T < 0:
            raise ValueError("T must be >= 0")
        if self.cutoff not in ("clamp", "arctan"):
            raise ValueError(f"unknown cutoff {self.cutoff!r}")
        if self.cutoff == "arctan" and self.c != 1.0:
            raise ValueError("arctan cutoff is the c=1 construction")
        if self.cutoff == "clamp" and self.c == 1.0:
            raise ValueError("clamp cutoff needs c != 1")


def cutoff_value(sh, tau):
    """The odd cutoff carrying tau into [-T, T]."""
    if sh.cutoff == "clamp":
        return max(-sh.T, min(float(tau), sh.T))
    return (2.0 * sh.T / math.pi) * math.atan(float(tau))


def segment_spectrum(sh):
    """Spectrum of the truncated shift: the closed segment c + i[-T, T]."""
    return SpectralSegment(sh.c, -sh.T, sh.T)


def _psi_abs(psi, c, tau):
    try:
        v = psi(complex(c, tau))
    except (PoleAtOne, PoleHit, ZeroDivisionError):
        raise UnboundedOnSegment(
            f"pole of the symbol on the segment at tau={tau:g}")
    a = abs(v)
    if not math.isfinite(a) or a > OVERFLOW_GUARD:
        raise UnboundedOnSegment(
            f"|psi({c:g}+{tau:g}i)| beyond the overflow guard")
    return a


def op_function_norm(sh, psi, refine_tol=1e-8):
    """sup of |psi| over the segment, with its arg-sup.

    Branch and bound: symmetric 129-point start grid, Lipschitz constant
    estimated from the samples with safety factor 2, worst-interval-first
    refinement until every upper bound is within refine_tol of the best
    sample.  Returns (norm, tau_star).
    """
    seg = segment_spectrum(sh)
    c, lo, hi = seg.c, seg.tau_lo, seg.tau_hi
    if hi == lo:
        return _psi_abs(psi, c, lo), lo
    taus = np.linspace(lo, hi, 129)
    vals = [_psi_abs(psi, c, t) for t in taus]
    slopes = [abs(vals[i + 1] - vals[i]) / (taus[i + 1] - taus[i])
              for i in range(len(vals) - 1)]
    lip = 2.0 * max(max(slopes), 1e-12)
    best, bi = max((v, i) for i, v in enumerate(vals))
    tau_star = float(taus[bi])
    heap = []
    tick = 0
    for i in range(len(taus) - 1):
        a, b, fa, fb = float(taus[i]), float(taus[i + 1]), vals[i], vals[i + 1]
        ub = max(fa, fb) + lip * (b - a) / 2.0
        heapq.heappush(heap, (-ub, tick, a, b, fa, fb))
        tick += 1
    while heap:
        neg_ub, _, a, b, fa, fb = heapq.heappop(heap)
        if -neg_ub <= best + refine_tol:
            break
        mid = 0.5 * (a + b)
        fm = _psi_abs(psi, c, mid)
        if fm > best:
            best, tau_star = fm, mid
        for (x, y, fx, fy) in ((a, mid, fa, fm), (mid, b, fm, fb)):
            ub = max(fx, fy) + lip * (y - x) / 2.0
            if ub > best + refine_tol:
                heapq.heappush(heap, (-ub, tick, x, y, fx, fy))
                tick += 1
    return best, tau_star


def adjoint_norm_check(sh, psi, refine_tol=1e-8):
    """(norm of psi(shift), norm of psi(2c - shift)).

    2c - (c + i tau) = c - i tau: the adjoint's segment is the reflection,
    so the second value is the same sup with tau negated.
    """
    direct, _ = op_function_norm(sh, psi, refine_tol)
    two_c = 2.0 * sh.c
    reflected, _ = op_function_norm(sh, lambda s: psi(two_c - s), refine_tol)
    return direct, reflected


def approx_eigenfunction(c, tau, sigma, t_min=None, t_max=None, step=1e-3):
    """Gaussian-windowed exponential with its Weyl-sequence residual.

    Returns (psi, residual) where residual = ||psi' - (c+i tau) psi|| / ||psi||
    with the derivative by centered differences.  The analytic value is
    1/(sigma sqrt 2); the window must contain [-6 sigma, 6 sigma].
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if t_min is None:
        t_min = -8.0 * sigma
    if t_max is None:
        t_max = 8.0 * sigma
    if t_min > -6.0 * sigma or t_max < 6.0 * sigma:
        raise WindowTooSmall(
            f"window [{t_min:g},{t_max:g}] misses [-6,6]*sigma")
    psi = gaussian_packet(c, tau, sigma, t_min, t_max, step)
    lam = complex(c, tau)
    d = np.empty_like(psi.values)
    d[1:-1] = (psi.values[2:] - psi.values[:-2]) / (2.0 * step)
    d[0] = (psi.values[1] - psi.values[0]) / step
    d[-1] = (psi.values[-1] - psi.values[-2]) / step
    num = SampledFunction(t_min, t_max, step, d - lam * psi.values, c)
    return psi, hc_norm(num) / hc_norm(psi)


def zeta_range_sample(c, tau_max, step, workers=None):
    """zeta(c + i tau) for tau = step, 2*step, ... <= tau_max.

    The grid starts one step above 0, which doubles as the pole-exclusion
    band when c = 1.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    n = int(math.floor(tau_max / step))
    taus = step * np.arange(1, n + 1)
    if taus.size == 0:
        return np.empty(0, dtype=np.complex128)
    return eval_rows(np.array([c]), taus, workers=workers)[:, 0]


def nearest_sample_distance(samples, targets):
    """min |sample - target| per target."""
    samples = np.asarray(samples)
    return np.array([float(np.min(np.abs(samples - t))) for t in targets])
