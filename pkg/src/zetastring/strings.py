"""Generalized strings: atomic measures on (0, inf).

A string is a finite ascending list of atoms (reciprocal scale x, complex
multiplicity w) together with the guaranteed measure-free bound x0 and a
coverage bound: the atom list is certified complete for x <= coverage.
Counting and spectral operations refuse to answer beyond coverage rather
than silently under-count.  Families with an exact Mellin transform carry a
ClosedFormZeta descriptor.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .zeta import _zeta_derivative
from .zeta import zeta as zeta_fn
from .errors import (EmptyTruncation, InsufficientAtoms, PoleAtOne, PoleHit,
                     TruncationTooShort, UnsupportedKind)
from .primes import moebius_up_to, primes_up_to

MERGE_RTOL = 1e-12

_KINDS = ("cantor", "self_similar", "harmonic", "prime_harmonic",
          "prime_string", "moebius_string", "unit")


@dataclass(frozen=True)
class ClosedFormZeta:
    """Exact geometric zeta of a builtin family.

    kind one of: self_similar (params r, m), harmonic, prime_harmonic
    (params p), prime_string, moebius_string, unit.
    """
    kind: str
    params: tuple = ()

    def zeta_at(self, s, opts=None):
        s = complex(s)
        if self.kind == "self_similar":
            r, m = self.params
            rs = np.exp(-s * math.log(1.0 / r))
            denom = 1.0 - m * rs
            if abs(denom) < 1e-10:
                raise PoleHit(f"geometric zeta pole near s={s}")
            return complex(rs / denom)
        if self.kind == "harmonic":
            try:
                return zeta_fn(s, opts)
            except PoleAtOne:
                raise PoleHit("harmonic-string zeta has its pole at s=1")
        if self.kind == "prime_harmonic":
            (p,) = self.params
            denom = np.exp(s * math.log(p)) - 1.0
            if abs(denom) < 1e-10:
                raise PoleHit(f"prime-harmonic zeta pole near s={s}")
            return complex(1.0 / denom)
        if self.kind == "prime_string":
            # -zeta'/zeta; poles at s=1 and at zeta zeros
            if abs(s - 1.0) < 1e-8:
                raise PoleHit("log-derivative pole at s=1")
            z = zeta_fn(s, opts)
            if abs(z) < 1e-10:
                raise PoleHit(f"zeta zero near s={s}")
            return -_zeta_derivative(s) / z
        if self.kind == "moebius_string":
            if s == 1:
                return 0.0 + 0.0j
            z = zeta_fn(s, opts)
            if abs(z) < 1e-10:
                raise PoleHit(f"1/zeta pole (zeta zero) near s={s}")
            return 1.0 / z
        if self.kind == "unit":
            return 1.0 + 0.0j
        raise UnsupportedKind(self.kind)

    def dimension(self):
        """Abscissa of convergence of the total-variation Dirichlet sum."""
        if self.kind == "self_similar":
            r, m = self.params
            return math.log(m) / math.log(1.0 / r)
        if self.kind in ("harmonic", "prime_string", "moebius_string"):
            return 1.0
        if self.kind == "prime_harmonic":
            return 0.0
        if self.kind == "unit":
            return float("-inf")
        raise UnsupportedKind(self.kind)


@dataclass(frozen=True, eq=False)
class GeneralizedString:
    atoms_x: np.ndarray
    atoms_w: np.ndarray
    x0: float
    coverage: float
    closed_form: ClosedFormZeta | None = None

    def __post_init__(self):
        x = np.asarray(self.atoms_x, dtype=np.float64).ravel()
        w = np.asarray(self.atoms_w).ravel()
        w = w.astype(np.complex128 if np.iscomplexobj(w) else np.float64)
        keep = w != 0
        x, w = x[keep], w[keep]
        if x.size and not (x[0] > 0 and np.all(np.diff(x) > 0)):
            raise ValueError("atoms must be strictly ascending with x > 0")
        if not self.x0 > 0:
            raise ValueError("x0 must be positive")
        if x.size and x[0] < self.x0:
            raise ValueError("atom below the measure-free bound x0")
        if x.size and self.coverage < x[-1]:
            raise ValueError("coverage below the last atom")
        x.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "atoms_x", x)
        object.__setattr__(self, "atoms_w", w)
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "coverage", float(self.coverage))

    @property
    def is_positive(self):
        return (not np.iscomplexobj(self.atoms_w)) and np.all(self.atoms_w > 0)

    def __len__(self):
        return int(self.atoms_x.size)


def string_from_atoms(atoms, x0=None, coverage=None):
    """String from an explicit (x, w) list.

    Without better information x0 defaults to the smallest atom (the maximal
    valid choice) and coverage to the largest.
    """
    atoms = sorted(atoms, key=lambda a: a[0])
    x = np.array([a[0] for a in atoms], dtype=np.float64)
    w = np.array([a[1] for a in atoms])
    if np.iscomplexobj(w) and not np.any(w.imag):
        w = w.real
    if x.size == 0:
        raise EmptyTruncation("no atoms")
    if x0 is None:
        x0 = float(x[0])
    if coverage is None:
        coverage = float(x[-1])
    return GeneralizedString(x, w, x0, coverage)


def _merge_atoms(x, w):
    """Sort and merge coincident atoms (relative 1e-12), drop exact zeros."""
    order = np.argsort(x, kind="stable")
    x, w = x[order], w[order]
    out_x, out_w = [], []
    i = 0
    while i < x.size:
        j = i + 1
        acc = w[i]
        while j < x.size and x[j] - x[i] <= MERGE_RTOL * x[j]:
            acc = acc + w[j]
            j += 1
        if acc != 0:
            out_x.append(x[i])
            out_w.append(acc)
        i = j
    dt = np.complex128 if np.iscomplexobj(w) else np.float64
    return np.array(out_x, dtype=np.float64), np.array(out_w, dtype=dt)


def builtin_string(kind, X, r=None, m=None, p=None):
    """All atoms of a builtin family with x <= X, exact multiplicities."""
    X = float(X)
    if kind not in _KINDS:
        raise ValueError(f"unknown string kind {kind!r}")
    if kind == "cantor":
        kind, r, m = "self_similar", 1.0 / 3.0, 2.0
    if kind == "self_similar":
        if not (r and m) or not 0 < r < 1 or m <= 0:
            raise ValueError("self_similar needs r in (0,1) and m > 0")
        base = 1.0 / r
        if X < base:
            raise EmptyTruncation(f"truncation {X:g} below first atom {base:g}")
        xs, ws, xj, wj = [], [], base, 1.0
        while xj <= X * (1 + 1e-15):
            xs.append(xj)
            ws.append(wj)
            xj, wj = xj * base, wj * m
        return GeneralizedString(np.array(xs), np.array(ws), base, X,
                                 ClosedFormZeta("self_similar", (r, m)))
    if kind == "harmonic":
        n = int(X)
        if n < 1:
            raise EmptyTruncation(f"truncation {X:g} below first atom 1")
        xs = np.arange(1, n + 1, dtype=np.float64)
        return GeneralizedString(xs, np.ones(n), 1.0, X,
                                 ClosedFormZeta("harmonic"))
    if kind == "prime_harmonic":
        if p is None or not _is_prime_small(p):
            raise ValueError("prime_harmonic needs a prime p")
        if X < p:
            raise EmptyTruncation(f"truncation {X:g} below first atom {p}")
        xs, xj = [], float(p)
        while xj <= X * (1 + 1e-15):
            xs.append(xj)
            xj *= p
        xs = np.array(xs)
        return GeneralizedString(xs, np.ones(xs.size), float(p), X,
                                 ClosedFormZeta("prime_harmonic", (int(p),)))
    if kind == "prime_string":
        if X < 2:
            raise EmptyTruncation(f"truncation {X:g} below first atom 2")
        xs, ws = [], []
        for q in primes_up_to(int(X)):
            lq, xj = math.log(q), float(q)
            while xj <= X * (1 + 1e-15):
                xs.append(xj)
                ws.append(lq)
                xj *= q
        x, w = _merge_atoms(np.array(xs), np.array(ws))
        return GeneralizedString(x, w, 2.0, X, ClosedFormZeta("prime_string"))
    if kind == "moebius_string":
        n = int(X)
        if n < 1:
            raise EmptyTruncation(f"truncation {X:g} below first atom 1")
        mu = moebius_up_to(n)
        xs = np.arange(1, n + 1, dtype=np.float64)
        return GeneralizedString(xs, mu[1:].astype(np.float64), 1.0, X,
                                 ClosedFormZeta("moebius_string"))
    # unit: a single mass at 1; the list is complete for every X
    if X < 1:
        raise EmptyTruncation(f"truncation {X:g} below first atom 1")
    return GeneralizedString(np.array([1.0]), np.array([1.0]), 1.0,
                             float("inf"), ClosedFormZeta("unit"))


def _is_prime_small(p):
    from .primes import is_prime
    return isinstance(p, (int, np.integer)) and is_prime(int(p))


def counting_function(eta, x):
    """Half-jump count: full weight strictly below x, half of an atom at x."""
    x = float(x)
    if x <= 0:
        raise ValueError("x must be positive")
    if x < eta.x0:
        return 0.0
    if x > eta.coverage:
        raise TruncationTooShort(
            f"atom list certified only to {eta.coverage:g} < {x:g}")
    lo = np.searchsorted(eta.atoms_x, x, side="left")
    hi = np.searchsorted(eta.atoms_x, x, side="right")
    val = np.sum(eta.atoms_w[:lo]) + 0.5 * np.sum(eta.atoms_w[lo:hi])
    return complex(val) if np.iscomplexobj(eta.atoms_w) else float(val)


def spectral_measure_atoms(eta, X):
    """Atoms of nu(A) = sum_k eta(A/k) with reciprocal scale <= X."""
    X = float(X)
    if X > eta.coverage:
        raise TruncationTooShort(
            f"spectral atoms to {X:g} need geometric atoms to {X:g}, "
            f"covered only to {eta.coverage:g}")
    if X < eta.x0:
        return GeneralizedString(np.array([]), np.array([]), eta.x0, X)
    k_max = int(X / eta.x0)
    xs, ws = [], []
    for k in range(1, k_max + 1):
        n = np.searchsorted(eta.atoms_x, X / k, side="right")
        if n == 0:
            break
        xs.append(k * eta.atoms_x[:n])
        ws.append(eta.atoms_w[:n])
    if not xs:
        return GeneralizedString(np.array([]), np.array([]), eta.x0, X)
    x, w = _merge_atoms(np.concatenate(xs), np.concatenate(ws))
    # k*x_j can land a hair above X in floating point
    n = np.searchsorted(x, X * (1 + 1e-15), side="right")
    return GeneralizedString(x[:n], w[:n], eta.x0, X)


def spectral_counting(eta, x):
    """N_nu(x); equals counting the spectral atoms by construction."""
    return counting_function(spectral_measure_atoms(eta, x), x)


def geometric_zeta(eta, s, mode="closed_form", n_max=None, opts=None):
    """Mellin transform: atom partial sum or the exact closed form."""
    if mode == "closed_form":
        if eta.closed_form is None:
            raise ValueError("string has no closed form")
        return eta.closed_form.zeta_at(s, opts)
    if mode != "atoms":
        raise ValueError(f"unknown mode {mode!r}")
    n = eta.atoms_x.size if n_max is None else min(int(n_max), eta.atoms_x.size)
    s = complex(s)
    val = np.sum(eta.atoms_w[:n] * np.exp(-s * np.log(eta.atoms_x[:n])))
    return complex(val)


def spectral_zeta(eta, s, opts=None):
    """zeta_nu(s) = zeta_eta(s) * zeta(s)."""
    s = complex(s)
    mode = "closed_form" if eta.closed_form is not None else "atoms"
    try:
        z = zeta_fn(s, opts)
    except PoleAtOne:
        raise PoleHit("spectral zeta inherits the pole at s=1")
    return geometric_zeta(eta, s, mode) * z


@dataclass(frozen=True)
class SpectralZetaCheck:
    product: complex
    direct: complex
    discrepancy: float
    tail_bound: float


def spectral_zeta_check(eta, s, X, opts=None):
    """Product form vs direct Dirichlet sum over spectral atoms to X.

    For positive strings the discrepancy is certified: the dropped tail has
    positive terms at sigma = Re(s), so |tail(s)| <= zeta_nu(sigma) minus the
    partial sum at sigma, which is the reported bound.
    """
    s = complex(s)
    nu = spectral_measure_atoms(eta, X)
    product = spectral_zeta(eta, s, opts)
    direct = geometric_zeta(nu, s, mode="atoms")
    if eta.is_positive:
        sigma = s.real
        tail = spectral_zeta(eta, sigma, opts).real - \
            geometric_zeta(nu, sigma, mode="atoms").real
        tail_bound = max(float(tail), 0.0)
    else:
        tail_bound = float("nan")
    return SpectralZetaCheck(product, direct, abs(product - direct),
                             tail_bound)


def mult_convolve(a, b, X):
    """Atoms of the multiplicative convolution at x_a*x_b <= X."""
    X = float(X)
    if a.coverage < X / b.x0 and a.atoms_x.size and b.atoms_x.size:
        raise TruncationTooShort(
            f"left factor covered to {a.coverage:g}, needs {X / b.x0:g}")
    if b.coverage < X / a.x0 and a.atoms_x.size and b.atoms_x.size:
        raise TruncationTooShort(
            f"right factor covered to {b.coverage:g}, needs {X / a.x0:g}")
    prod_x = np.multiply.outer(a.atoms_x, b.atoms_x).ravel()
    prod_w = np.multiply.outer(a.atoms_w, b.atoms_w).ravel()
    keep = prod_x <= X * (1 + 1e-15)
    x, w = _merge_atoms(prod_x[keep], prod_w[keep])
    return GeneralizedString(x, w, a.x0 * b.x0, X)


def dimension(eta, with_method=False):
    """Abscissa of convergence: exact from a closed form, else a top-decade
    least-squares slope of log N(x) vs log x, flagged as an estimate."""
    if eta.closed_form is not None:
        d = eta.closed_form.dimension()
        return (d, "closed_form") if with_method else d
    if len(eta) < 50:
        raise InsufficientAtoms(
            f"{len(eta)} atoms; need a closed form or >= 50 for the estimate")
    if not eta.is_positive:
        raise InsufficientAtoms("slope estimate needs positive multiplicities")
    counts = np.cumsum(eta.atoms_w)
    top = eta.atoms_x >= eta.atoms_x[-1] / 10.0
    lx = np.log(eta.atoms_x[top])
    ln = np.log(counts[top])
    if np.unique(lx).size < 2:
        raise InsufficientAtoms("top decade holds fewer than two scales")
    slope = np.polyfit(lx, ln, 1)[0]
    return (float(slope), "estimate") if with_method else float(slope)
