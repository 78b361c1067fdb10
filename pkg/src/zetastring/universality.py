"""Shift searches: how well do vertical translates of zeta (and relatives)
approximate a target on a compact box?

All tau sweeps go through the row kernel, so every J value is a pure
function of its own tau and the box; scans agree bitwise with each other at
shared tau values and are independent of the worker count.  Scans report
grid minima plus golden-section polished local minima, and empirical
qualifying fractions per epsilon; nothing here extrapolates to the
asymptotic densities the theory is about.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .zeta import dirichlet_l, hurwitz_zeta
from .zeta import zeta as zeta_fn
from ._kernel import eval_rows, resolve_workers
from .errors import (PoleHit, ProfileDiscontinuous, RadiusTooSmall,
                     VanishingTarget)
from .operators import TruncatedShift, op_function_norm

_POLISH_CANDIDATES = 64
_GOLDEN_ITERS = 80


@dataclass(frozen=True)
class CompactBox:
    """K = [c_lo, c_hi] x [-t0, t0] with its evaluation grid.

    strip_guard keeps the box inside the right critical strip, the
    universality domain; relax it for bases that allow more.  profile, when
    present, samples a vertically convex height T(c) at grid_c points and
    replaces the constant t0.
    """
    c_lo: float
    c_hi: float
    t0: float
    grid_c: int = 64
    grid_t: int = 64
    profile: tuple | None = None
    strip_guard: bool = True

    def __post_init__(self):
        if not self.c_lo <= self.c_hi:
            raise ValueError("c_lo above c_hi")
        if self.t0 < 0:
            raise ValueError("t0 must be >= 0")
        if self.grid_c < 1 or self.grid_t < 1:
            raise ValueError("grid sizes must be >= 1")
        if self.strip_guard and not (0.5 < self.c_lo and self.c_hi < 1.0):
            raise ValueError(
                f"box [{self.c_lo:g}, {self.c_hi:g}] leaves the open strip "
                "(1/2, 1); pass strip_guard=False only for bases that allow it")
        if self.profile is not None:
            prof = tuple(float(T) for T in self.profile)
            if len(prof) != self.grid_c:
                raise ValueError("profile must hold grid_c samples")
            if any(T < 0 for T in prof):
                raise ValueError("profile heights must be >= 0")
            object.__setattr__(self, "profile", prof)

    def c_samples(self):
        if self.grid_c == 1:
            return np.array([0.5 * (self.c_lo + self.c_hi)])
        return np.linspace(self.c_lo, self.c_hi, self.grid_c)

    def t_samples(self):
        if self.grid_t == 1 or self.t0 == 0.0:
            return np.zeros(1)
        return np.linspace(-self.t0, self.t0, self.grid_t)

    def svals(self):
        """Box grid flattened c-major; profile boxes mask points above T(c)
        to the segment top so the grid stays rectangular."""
        cs, ts = self.c_samples(), self.t_samples()
        if self.profile is None:
            return (cs[:, None] + 1j * ts[None, :]).ravel()
        rows = []
        for c, T in zip(cs, self.profile):
            rows.append(c + 1j * np.clip(ts, -T, T))
        return np.concatenate(rows)

    def grid_spacing(self):
        dc = (self.c_hi - self.c_lo) / max(self.grid_c - 1, 1)
        dt = 2.0 * self.t0 / max(self.grid_t - 1, 1)
        return dc, dt


def check_profile_continuity(box):
    """Adjacent profile jumps limited to 8 * T-span / grid_c + 1e-12."""
    prof = box.profile
    if prof is None:
        return
    span = max(prof) - min(prof)
    allowed = 8.0 * span / box.grid_c + 1e-12
    for a, b in zip(prof[:-1], prof[1:]):
        if abs(b - a) > allowed:
            raise ProfileDiscontinuous(
                f"profile jump {abs(b - a):g} above the sampled-continuity "
                f"bound {allowed:g}")


def base_rows(base, svals, taus, workers=None):
    """Values of the base function at svals + i*tau, one row per tau."""
    svals = np.asarray(svals, dtype=np.complex128)
    taus = np.asarray(taus, dtype=np.float64)
    if base == "zeta":
        return eval_rows(svals, taus, workers=workers)
    kind = base[0]
    if kind == "hurwitz":
        return eval_rows(svals, taus, alpha=float(base[1]), workers=workers)
    if kind == "dirichlet":
        chi = base[1]
        q = chi.q
        acc = None
        for a in range(1, q + 1):
            if chi.values[a % q] == 0:
                continue
            rows = eval_rows(svals, taus, alpha=a / q, workers=workers)
            term = chi.values[a % q] * rows
            acc = term if acc is None else acc + term
        scale = np.exp(-np.log(q) * (svals[None, :] + 1j * taus[:, None]))
        return acc * scale
    if kind == "coeffs":
        coeffs = np.asarray(base[1], dtype=np.complex128)
        n = np.arange(1, coeffs.size + 1, dtype=np.float64)
        ln = np.log(n)
        mat = coeffs[:, None] * np.exp(-np.outer(ln, svals))
        out = np.empty((taus.size, svals.size), dtype=np.complex128)
        for i, tau in enumerate(taus):
            out[i] = np.exp(-1j * tau * ln) @ mat
        return out
    raise ValueError(f"unknown base {base!r}")


def base_scalar(base, s):
    """Scalar evaluation of the base at one point."""
    if base == "zeta":
        return zeta_fn(s)
    kind = base[0]
    if kind == "hurwitz":
        return hurwitz_zeta(s, float(base[1]))
    if kind == "dirichlet":
        return dirichlet_l(s, base[1])
    if kind == "coeffs":
        coeffs = np.asarray(base[1], dtype=np.complex128)
        n = np.arange(1, coeffs.size + 1, dtype=np.float64)
        return complex(np.sum(coeffs * np.exp(-complex(s) * np.log(n))))
    raise ValueError(f"unknown base {base!r}")


def target_values(g, box, base="zeta", workers=None):
    """Target samples over the box grid.

    g is a complex constant, "self" (the base at tau=0), ("translate", a)
    (the base at tau=a), a callable on complex points, or a ready array.
    The self/translate targets are sampled through the same row kernel as
    the scans, so a scan row at the matching tau is bitwise identical.
    """
    svals = box.svals()
    if isinstance(g, str) and g == "self":
        return base_rows(base, svals, np.array([0.0]), workers)[0]
    if isinstance(g, tuple) and len(g) == 2 and g[0] == "translate":
        return base_rows(base, svals, np.array([float(g[1])]), workers)[0]
    if isinstance(g, np.ndarray):
        if g.shape != svals.shape:
            raise ValueError(f"target grid {g.shape} != box grid {svals.shape}")
        return g.astype(np.complex128)
    if callable(g):
        return np.array([g(s) for s in svals], dtype=np.complex128)
    return np.full(svals.size, complex(g))


def require_nonvanishing(gvals):
    m = float(np.min(np.abs(gvals)))
    if m == 0.0:
        raise VanishingTarget(
            "target vanishes on the box grid; universality targets in the "
            "strip must be zero-free")


@dataclass(frozen=True)
class ScanResult:
    taus: np.ndarray
    J: np.ndarray
    tau_star: float
    J_star: float
    density: dict
    polished_tau: float | None = None
    polished_J: float | None = None
    meta: dict = field(default_factory=dict)


def _density_map(J, eps_list, strict=False):
    out = {}
    for eps in eps_list or ():
        eps = float(eps)
        hits = np.sum(J < eps) if strict else np.sum(J <= eps)
        out[eps] = float(hits) / J.size
    return out


def density_estimate(result, eps):
    """Fraction of scanned tau values with J <= eps."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return float(np.sum(result.J <= eps)) / result.J.size


def _golden_minimize(fn, lo, hi):
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - inv * (b - a)
    x2 = a + inv * (b - a)
    f1, f2 = fn(x1), fn(x2)
    for _ in range(_GOLDEN_ITERS):
        if f1 < f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv * (b - a)
            f1 = fn(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv * (b - a)
            f2 = fn(x2)
    xm = 0.5 * (a + b)
    return xm, fn(xm)


def _polish(J, taus, j_of_tau):
    """Golden-section descent from every interior local minimum strictly
    below 2*J_star; at a perfect grid hit (J_star = 0) nothing qualifies
    and the grid minimum stands."""
    j_star = float(np.min(J))
    interior = ((J[1:-1] <= J[:-2]) & (J[1:-1] <= J[2:])
                & (J[1:-1] < 2.0 * j_star))
    idx = np.nonzero(interior)[0] + 1
    if idx.size > _POLISH_CANDIDATES:
        keep = np.sort(np.argsort(J[idx], kind="stable")[:_POLISH_CANDIDATES])
        idx = idx[keep]
    best_tau, best_j = float(taus[int(np.argmin(J))]), j_star
    for i in idx:
        t, j = _golden_minimize(j_of_tau, float(taus[i - 1]),
                                float(taus[i + 1]))
        if j < best_j:
            best_tau, best_j = t, j
    return best_tau, best_j


def _base_label(base):
    if base == "zeta":
        return "zeta"
    kind = base[0]
    if kind == "hurwitz":
        return f"hurwitz({base[1]!r})"
    if kind == "dirichlet":
        return f"dirichlet(mod {base[1].q})"
    return f"coeffs({len(base[1])})"


def _scan(gvals, box, base, taus, eps_list, workers, strict_density,
          polish, meta):
    rows = base_rows(base, box.svals(), taus, workers)
    J = np.max(np.abs(gvals[None, :] - rows), axis=1)
    i_star = int(np.argmin(J))
    result_meta = dict(meta)
    result_meta["base"] = _base_label(base)
    polished_tau = polished_J = None
    if polish and taus.size > 2:

        def j_of_tau(tau):
            row = base_rows(base, box.svals(), np.array([tau]), workers)[0]
            return float(np.max(np.abs(gvals - row)))

        polished_tau, polished_J = _polish(J, taus, j_of_tau)
    taus.setflags(write=False)
    J.setflags(write=False)
    return ScanResult(
        taus=taus, J=J, tau_star=float(taus[i_star]), J_star=float(J[i_star]),
        density=_density_map(J, eps_list, strict=strict_density),
        polished_tau=polished_tau, polished_J=polished_J, meta=result_meta)


def sup_distance(g, tau, box, base="zeta", refine_tol=None, workers=None):
    """max over the box grid of |g(s) - base(s + i tau)|.

    With refine_tol the grid is doubled (both directions) until the sup
    changes by less than refine_tol; the refined value is returned.
    """
    gvals = target_values(g, box, base, workers)
    row = base_rows(base, box.svals(), np.array([float(tau)]), workers)[0]
    val = float(np.max(np.abs(gvals - row)))
    if refine_tol is None:
        return val
    cur_box, cur = box, val
    for _ in range(6):
        cur_box = CompactBox(cur_box.c_lo, cur_box.c_hi, cur_box.t0,
                             cur_box.grid_c * 2 - 1, cur_box.grid_t * 2 - 1,
                             None, cur_box.strip_guard)
        gv = target_values(g, cur_box, base, workers)
        row = base_rows(base, cur_box.svals(), np.array([float(tau)]),
                        workers)[0]
        nxt = float(np.max(np.abs(gv - row)))
        done = abs(nxt - cur) < refine_tol
        cur = max(cur, nxt)
        if done:
            return cur
    return cur


def scan_continuous(g, box, tau_max, tau_step, eps_list=(), base="zeta",
                    check_nonvanishing=True, workers=None, polish=True):
    """J on the grid tau = 0, step, ..., <= tau_max, with minima and the
    per-epsilon qualifying fractions."""
    if tau_step <= 0:
        raise ValueError("tau_step must be positive")
    gvals = target_values(g, box, base, workers)
    if check_nonvanishing and box.strip_guard:
        require_nonvanishing(gvals)
    n = int(math.floor(tau_max / tau_step + 1e-12))
    taus = tau_step * np.arange(0, n + 1)
    return _scan(gvals, box, base, taus, eps_list, workers,
                 strict_density=False, polish=polish,
                 meta={"kind": "continuous", "tau_max": float(tau_max),
                       "tau_step": float(tau_step)})


def scan_discrete(g, box, delta, n_max, eps_list=(), base="zeta",
                  check_nonvanishing=True, workers=None):
    """Scan over tau = n*delta, 1 <= n <= n_max; the qualifying fraction
    uses the strict counting normalization #{n : J < eps}/n_max."""
    if delta == 0:
        raise ValueError("delta must be nonzero")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    gvals = target_values(g, box, base, workers)
    if check_nonvanishing and box.strip_guard:
        require_nonvanishing(gvals)
    taus = delta * np.arange(1, n_max + 1)
    return _scan(gvals, box, base, taus, eps_list, workers,
                 strict_density=True, polish=False,
                 meta={"kind": "discrete", "delta": float(delta),
                       "n_max": int(n_max)})


def hurwitz_scan(g, alpha, box, tau_max, tau_step, eps_list=(),
                 workers=None):
    """Continuous scan against zeta(., alpha); vanishing targets allowed.

    alpha = 1 is the plain zeta base and alpha in {1/2, 1} fall outside the
    strong-universality hypothesis; both are flagged in meta, not refused.
    """
    alpha = float(alpha)
    res = scan_continuous(g, box, tau_max, tau_step, eps_list,
                          base=("hurwitz", alpha), check_nonvanishing=False,
                          workers=workers)
    meta = dict(res.meta)
    meta["alpha"] = alpha
    if alpha in (0.5, 1.0):
        meta["alpha_flag"] = ("reduces to a zeta variant; outside the "
                              "strong-universality hypothesis")
    return ScanResult(res.taus, res.J, res.tau_star, res.J_star, res.density,
                      res.polished_tau, res.polished_J, meta)


def quantized_sup(g, tau, calK, T0, refine_tol=1e-8, grid_c=16,
                  profile=None):
    """sup over sampled c of the segment norm of phi = g - base(. + i tau).

    The sup over truncation heights 0 < T <= T0 is the T0 value by segment
    nesting, so only the top segment is refined.  g must be evaluable at
    arbitrary points (constant, "self", or callable).
    """
    c_lo, c_hi = float(calK[0]), float(calK[1])
    if not 0.5 < c_lo <= c_hi < 1.0:
        raise ValueError("calK must sit inside (1/2, 1)")
    if isinstance(g, str) and g == "self":
        g_fn = zeta_fn
    elif callable(g):
        g_fn = g
    else:
        g_val = complex(g)
        g_fn = lambda s: g_val
    cs = (np.array([0.5 * (c_lo + c_hi)]) if grid_c == 1
          else np.linspace(c_lo, c_hi, grid_c))
    if profile is not None:
        prof = tuple(float(T) for T in profile)
        if len(prof) != grid_c:
            raise ValueError("profile must hold grid_c samples")
    best = 0.0
    tau = float(tau)
    for i, c in enumerate(cs):
        T = T0 if profile is None else prof[i]

        def phi(s):
            return g_fn(s) - zeta_fn(s + 1j * tau)

        if T == 0.0:
            val = abs(phi(complex(c)))
        else:
            val, _ = op_function_norm(TruncatedShift(float(c), float(T)),
                                      phi, refine_tol)
        best = max(best, float(val))
    return best


def quantized_sup_general(g, box, tau, refine_tol=1e-8):
    """Profile variant: sup over sampled c of the segment norm at height
    T(c); the profile must pass the sampled-continuity check."""
    if box.profile is None:
        raise ValueError("box carries no profile")
    check_profile_continuity(box)
    return quantized_sup(g, tau, (box.c_lo, box.c_hi), max(box.profile),
                         refine_tol, box.grid_c, profile=box.profile)


def taylor_coefficients(center, n, n_points=128):
    """Taylor coefficients of zeta at center, by Cauchy-circle quadrature
    of radius half the distance to the pole at 1."""
    center = complex(center)
    rho = abs(center - 1.0) / 2.0
    if rho == 0.0:
        raise PoleHit("expansion center is the pole")
    th = (np.arange(n_points) + 0.5) * (2.0 * math.pi / n_points)
    ring = rho * np.exp(1j * th)
    vals = np.array([zeta_fn(center + z) for z in ring])
    ks = np.arange(n + 1)
    # a_k = mean over the circle of f(z) * e^(-i k theta) / rho^k
    phases = np.exp(-1j * np.outer(ks, th))
    return (phases @ vals) / (n_points * rho ** ks)


def taylor_translate_scan(g, box, z0, n, tau_max, tau_step, eps_list=(),
                          workers=None):
    """Scan of sup_box |g(z) - T_n(z)| where T_n is the degree-n Taylor
    polynomial of zeta at z0 + i tau, translated back to the box."""
    if n < 0 or n > 30:
        raise ValueError("Taylor depth n must be in 0..30")
    if tau_step <= 0:
        raise ValueError("tau_step must be positive")
    z0 = complex(z0)
    svals = box.svals()
    gvals = target_values(g, box, "zeta", workers)
    dz = svals - z0
    r_box = float(np.max(np.abs(dz)))
    m = int(math.floor(tau_max / tau_step + 1e-12))
    taus = tau_step * np.arange(0, m + 1)
    J = np.empty(taus.size)
    powers = dz[None, :] ** np.arange(n + 1)[:, None]
    for i, tau in enumerate(taus):
        center = z0 + 1j * float(tau)
        rho = abs(center - 1.0) / 2.0
        if r_box >= rho:
            raise RadiusTooSmall(
                f"box radius {r_box:g} around z0 leaves the convergence "
                f"proxy disk (rho={rho:g}) at tau={tau:g}")
        coeffs = taylor_coefficients(center, n)
        approx = coeffs @ powers
        J[i] = float(np.max(np.abs(gvals - approx)))
    i_star = int(np.argmin(J))
    return ScanResult(
        taus=taus, J=J, tau_star=float(taus[i_star]), J_star=float(J[i_star]),
        density=_density_map(J, eps_list),
        meta={"kind": "taylor", "z0": (z0.real, z0.imag), "n": int(n)})


@dataclass(frozen=True)
class AlmostPeriodReport:
    qualifiers: tuple
    windows: tuple          # (lo, hi, hit count) per window
    empty_windows: tuple    # (lo, hi) of windows with no qualifier
    eps: float
    ell: float

    def __iter__(self):
        return iter(self.qualifiers)

    def __len__(self):
        return len(self.qualifiers)


def almost_period_scan(base, strip, y_window, eps, ell, tau_max, tau_step,
                       grid_c=5, grid_t=5, workers=None):
    """eps-translation numbers of the base on strip x [-y, y].

    Scans tau = 0, step, ..., <= tau_max and collects tau with
    sup |f(s + i tau) - f(s)| < eps over the grid_c x grid_t strip grid,
    grouped into length-ell windows [k*ell, (k+1)*ell) (the last window
    keeps its right edge).  Windows without a find are reported, never an
    error.  The grid defaults match the shipped window-length calibration.
    """
    lo, hi = float(strip[0]), float(strip[1])
    if not lo <= hi:
        raise ValueError("empty strip")
    if base == "zeta" or (isinstance(base, tuple) and base[0] == "dirichlet"
                          and base[1].is_principal):
        if lo <= 1.0:
            raise ValueError(
                "zeta is almost periodic only on Re(s) > 1; move the strip")
    elif isinstance(base, tuple) and base[0] == "dirichlet":
        if lo <= 0.0:
            raise ValueError("strip must sit in Re(s) > 0")
    if eps <= 0 or ell <= 0 or tau_step <= 0:
        raise ValueError("eps, ell and tau_step must be positive")
    cs = np.linspace(lo, hi, grid_c) if grid_c > 1 else np.array([lo])
    ts = (np.linspace(-y_window, y_window, grid_t)
          if y_window > 0 and grid_t > 1 else np.zeros(1))
    svals = (cs[:, None] + 1j * ts[None, :]).ravel()
    n = int(math.floor(tau_max / tau_step + 1e-12))
    taus = tau_step * np.arange(0, n + 1)
    ref = base_rows(base, svals, np.array([0.0]), workers)[0]
    rows = base_rows(base, svals, taus, workers)
    J = np.max(np.abs(rows - ref[None, :]), axis=1)
    qual = taus[J < eps]
    n_windows = max(int(math.ceil(tau_max / ell)), 1)
    windows, empties = [], []
    for k in range(n_windows):
        w_lo, w_hi = k * ell, min((k + 1) * ell, tau_max)
        if k == n_windows - 1:
            hits = qual[(qual >= w_lo) & (qual <= w_hi)]
        else:
            hits = qual[(qual >= w_lo) & (qual < w_hi)]
        windows.append((w_lo, w_hi, int(hits.size)))
        if hits.size == 0:
            empties.append((w_lo, w_hi))
    return AlmostPeriodReport(tuple(float(t) for t in qual), tuple(windows),
                              tuple(empties), float(eps), float(ell))
