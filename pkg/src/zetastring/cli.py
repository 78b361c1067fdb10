"""Command line front end.

Commands read flags plus small JSON/CSV files and write CSV (header row,
'.' decimal separator, '\\n' line endings, 17 significant digits) or JSON.
Exit codes: 0 ok, 2 bad input, 3 computation refused (the error class name
goes to stderr), 4 nonvanishing-guard rejection.  A fixed invocation
produces byte-identical output whatever --workers says.
"""

import argparse
import csv
import json
import sys

import numpy as np

from . import dimensions as dm
from . import operators as ops
from . import strings as st
from . import universality as uv
from .zeta import (DirichletCharacter, completed_xi, dirichlet_l,
                   euler_product_truncated, hurwitz_with_error,
                   zeta_with_error)
from .zeta import zeta as zeta_fn
from .errors import ComputationError, VanishingTarget


def _g(v):
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


def _emit(out, header, rows):
    text = "\n".join([header] + [",".join(_g(v) for v in row)
                                 for row in rows]) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parse_complex(text):
    t = text.strip()
    if t.lower() in ("inf", "-inf", "nan"):
        return complex(float(t))
    t = t.replace("i", "j").replace("I", "j")
    try:
        return complex(t)
    except ValueError:
        raise ValueError(f"cannot parse complex number {text!r}")


def _parse_floats(text, n, what):
    parts = text.split(":")
    if len(parts) != n:
        raise ValueError(f"{what} must be {n} colon-separated numbers, "
                         f"got {text!r}")
    return [float(p) for p in parts]


def _num(v, where):
    # definition files carry numbers as decimal strings; raw JSON numbers
    # are accepted on read
    if isinstance(v, str) or isinstance(v, (int, float)):
        try:
            return float(v)
        except ValueError:
            pass
    raise ValueError(f"bad number {v!r} in {where}")


def load_string_def(path, needed=None):
    """String from a JSON definition: {"kind", "params"} or {"atoms"}.

    A builtin definition without params.coverage is materialized out to
    `needed`, the horizon of the calling command.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})")
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: definition must be a JSON object")
    if "atoms" in doc:
        atoms = []
        for row in doc["atoms"]:
            if len(row) == 2:
                x, wr, wi = row[0], row[1], 0.0
            elif len(row) == 3:
                x, wr, wi = row
            else:
                raise ValueError(f"{path}: atom rows are [x, w_re, w_im]")
            w = complex(_num(wr, path), _num(wi, path))
            atoms.append((_num(x, path), w.real if w.imag == 0 else w))
        x0 = _num(doc["x0"], path) if "x0" in doc else None
        cov = _num(doc["coverage"], path) if "coverage" in doc else None
        return st.string_from_atoms(atoms, x0, cov)
    if "kind" not in doc:
        raise ValueError(f"{path}: definition needs 'kind' or 'atoms'")
    params = doc.get("params", {})
    if not isinstance(params, dict):
        raise ValueError(f"{path}: params must be an object")
    kw = {}
    for key in ("r", "m"):
        if key in params:
            kw[key] = _num(params[key], path)
    if "p" in params:
        kw["p"] = int(_num(params["p"], path))
    if "coverage" in params:
        X = _num(params["coverage"], path)
    elif needed is not None:
        X = needed
    else:
        raise ValueError(f"{path}: definition lacks params.coverage and the "
                         "command implies no horizon")
    return st.builtin_string(doc["kind"], X, **kw)


def write_string_def(eta, path):
    """Persist a string as an atoms-form definition; re-parses to an equal
    string (closed-form tag excepted)."""
    ws = eta.atoms_w.astype(np.complex128)
    doc = {
        "atoms": [[_g(x), _g(w.real), _g(w.imag)]
                  for x, w in zip(eta.atoms_x, ws)],
        "x0": _g(eta.x0),
        "coverage": _g(eta.coverage),
    }
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(doc, fh, sort_keys=True)
        fh.write("\n")


def _parse_target(text):
    if text == "self":
        return "self"
    if text.startswith("const:"):
        return _parse_complex(text[len("const:"):])
    if text.startswith("translate:"):
        return ("translate", float(text[len("translate:"):]))
    if text.startswith("file:"):
        return _load_target_grid(text[len("file:"):])
    raise ValueError(f"unknown target {text!r}; use self, const:<z>, "
                     "translate:<a>, or file:<grid.csv>")


def _load_target_grid(path):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != ["re", "im"]:
        raise ValueError(f"{path}: target grid needs a re,im header")
    try:
        vals = [complex(float(r[0]), float(r[1])) for r in rows[1:]]
    except (ValueError, IndexError):
        raise ValueError(f"{path}: malformed target grid row")
    return np.array(vals, dtype=np.complex128)


def _parse_base(text):
    if text == "zeta":
        return "zeta"
    if text.startswith("hurwitz:"):
        return ("hurwitz", float(text[len("hurwitz:"):]))
    raise ValueError(f"unknown base {text!r}; use zeta or hurwitz:<alpha>")


def _box_from_args(args):
    c_lo, c_hi, t0 = _parse_floats(args.box, 3, "--box")
    profile = None
    if getattr(args, "profile", None):
        profile = tuple(float(p) for p in args.profile.split(","))
    return uv.CompactBox(c_lo, c_hi, t0, args.grid_c, args.grid_t,
                         profile=profile,
                         strip_guard=not args.no_strip_guard)


def _write_scan(res, out_base):
    doc = {
        "tau_star": res.tau_star,
        "J_star": res.J_star,
        "polished_tau": res.polished_tau,
        "polished_J": res.polished_J,
        "density": {repr(float(k)): v for k, v in sorted(res.density.items())},
        "taus": [float(t) for t in res.taus],
        "J": [float(j) for j in res.J],
        "meta": res.meta,
    }
    with open(out_base + ".json", "w", encoding="utf-8", newline="") as fh:
        json.dump(doc, fh, sort_keys=True)
        fh.write("\n")
    _emit(out_base + ".csv", "tau,J", zip(res.taus, res.J))


# ---------------------------------------------------------------- zeta

def _chi_from_arg(text):
    vals = tuple(_parse_complex(tok) for tok in text.split(","))
    return DirichletCharacter(len(vals), vals)


def cmd_zeta_eval(args):
    rows = []
    for stext in args.s:
        s = _parse_complex(stext)
        err = float("nan")
        if args.fn == "zeta":
            v, err = zeta_with_error(s)
        elif args.fn == "xi":
            v = completed_xi(s)
        elif args.fn == "hurwitz":
            if args.alpha is None:
                raise ValueError("--fn hurwitz needs --alpha")
            v, err = hurwitz_with_error(s, args.alpha)
        elif args.fn == "dirichlet-l":
            if args.chi is None:
                raise ValueError("--fn dirichlet-l needs --chi")
            v = dirichlet_l(s, _chi_from_arg(args.chi))
        else:
            if args.n_max is None:
                raise ValueError("--fn euler-product needs --n-max")
            v = euler_product_truncated(s, args.n_max)
        rows.append((s.real, s.imag, v.real, v.imag, err))
    _emit(args.out, "re_s,im_s,re_val,im_val,est_err", rows)


def cmd_zeta_xi(args):
    if not args.check_functional_equation:
        raise ValueError("zeta xi does only --check-functional-equation")
    rng = np.random.default_rng(args.seed)
    re = rng.uniform(0.05, 0.95, args.n)
    im = rng.uniform(-30.0, 30.0, args.n)
    worst = 0.0
    for sr, si in zip(re, im):
        s = complex(sr, si)
        worst = max(worst, abs(completed_xi(s) - completed_xi(1 - s)))
    _emit(args.out, "n,seed,max_residual", [(args.n, args.seed, worst)])


# ---------------------------------------------------------------- string

def cmd_string_counting(args):
    eta = load_string_def(args.definition, needed=args.x)
    _emit(args.out, "x,count", [(args.x, st.counting_function(eta, args.x))])


def cmd_string_zeta(args):
    # closed-form evaluation never consumes atoms, so the lenient horizon
    # for coverage-free builtin definitions can stay tiny; atom sums need
    # the definition itself to say how far its list goes
    needed = None if args.mode == "atoms" else 10.0
    eta = load_string_def(args.definition, needed=needed)
    n_max = None if args.n_max is None else int(args.n_max)
    rows = []
    for stext in args.s:
        s = _parse_complex(stext)
        v = st.geometric_zeta(eta, s, mode=args.mode.replace("-", "_"),
                              n_max=n_max)
        rows.append((s.real, s.imag, v.real, v.imag))
    _emit(args.out, "re_s,im_s,re_val,im_val", rows)


def cmd_string_dimension(args):
    eta = load_string_def(args.definition, needed=1000.0)
    value, method = st.dimension(eta, with_method=True)
    _emit(args.out, "dimension,method", [(value, method)])


def cmd_string_spectral(args):
    if (args.x is None) == (args.s is None):
        raise ValueError("exactly one of --x / --s")
    if args.x is not None:
        eta = load_string_def(args.definition, needed=args.x)
        _emit(args.out, "x,count",
              [(args.x, st.spectral_counting(eta, args.x))])
        return
    s = _parse_complex(args.s)
    eta = load_string_def(args.definition, needed=10.0)
    v = st.spectral_zeta(eta, s)
    _emit(args.out, "re_s,im_s,re_val,im_val", [(s.real, s.imag, v.real,
                                                 v.imag)])


def cmd_string_dimensions(args):
    eta = load_string_def(args.definition, needed=10.0)
    if eta.closed_form is None:
        raise ValueError("definition has no closed form; complex dimensions "
                         "need one of the builtin kinds")
    dims = dm.complex_dimensions(eta.closed_form, args.k_max)
    _emit(args.out, "re_omega,im_omega,re_residue,im_residue",
          [(d.omega.real, d.omega.imag, d.residue.real, d.residue.imag)
           for d in dims])


def cmd_string_explicit_compare(args):
    eta = load_string_def(args.definition, needed=args.hi * 1.5)
    xs = dm.jump_midpoints(eta, args.lo, args.hi, args.midpoints,
                           level=args.level)
    rep = dm.compare_explicit_vs_direct(eta, xs, args.k_max, level=args.level)
    _emit(args.out, "x,direct,explicit,abs_error", rep.rows)


# ---------------------------------------------------------------- operator

def _shift_from_args(args):
    cutoff = "arctan" if args.c == 1.0 else "clamp"
    return ops.TruncatedShift(args.c, args.T, cutoff)


def cmd_operator_segment(args):
    seg = ops.segment_spectrum(_shift_from_args(args))
    _emit(args.out, "c,tau_lo,tau_hi", [(seg.c, seg.tau_lo, seg.tau_hi)])


def cmd_operator_norm(args):
    psi = zeta_fn if args.psi == "zeta" else (lambda s: s)
    norm, tau_star = ops.op_function_norm(_shift_from_args(args), psi,
                                          refine_tol=args.refine_tol)
    _emit(args.out, "norm,tau_star", [(norm, tau_star)])


def cmd_operator_eigen_residual(args):
    _, residual = ops.approx_eigenfunction(args.c, args.tau, args.sigma,
                                           step=args.step)
    _emit(args.out, "c,tau,sigma,residual",
          [(args.c, args.tau, args.sigma, residual)])


def cmd_operator_range_sample(args):
    vals = ops.zeta_range_sample(args.c, args.tau_max, args.step,
                                 workers=args.workers)
    taus = args.step * np.arange(1, vals.size + 1)
    _emit(args.out, "tau,re_val,im_val",
          zip(taus, vals.real, vals.imag))


def _read_grid_file(path, c):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [h.strip() for h in rows[0]] != ["t", "re", "im"]:
        raise ValueError(f"{path}: grid file needs a t,re,im header")
    try:
        t = np.array([float(r[0]) for r in rows[1:]])
        v = np.array([complex(float(r[1]), float(r[2])) for r in rows[1:]])
    except (ValueError, IndexError):
        raise ValueError(f"{path}: malformed grid row")
    if t.size < 2:
        raise ValueError(f"{path}: need at least two samples")
    step = (t[-1] - t[0]) / (t.size - 1)
    if step <= 0 or np.max(np.abs(np.diff(t) - step)) > 1e-9 * max(step, 1.0):
        raise ValueError(f"{path}: t column is not a uniform ascending grid")
    return ops.SampledFunction(float(t[0]), float(t[-1]), float(step), v, c)


def cmd_operator_apply(args):
    if (args.n_max is None) == (args.tail_tol is None):
        raise ValueError("exactly one of --n-max / --tail-tol")
    f = _read_grid_file(args.f, args.c)
    g = ops.apply_spectral_operator(f, n_max=args.n_max,
                                    tail_tol=args.tail_tol)
    print(f"window_loss,{_g(g.window_loss)}", file=sys.stderr)
    _emit(args.out, "t,re,im", zip(g.grid, g.values.real, g.values.imag))


# ------------------------------------------------------------ universality

def cmd_univ_scan(args):
    box = _box_from_args(args)
    res = uv.scan_continuous(_parse_target(args.target), box, args.tau_max,
                             args.tau_step, eps_list=tuple(args.eps or ()),
                             base=_parse_base(args.base),
                             workers=args.workers,
                             polish=not args.no_polish)
    _write_scan(res, args.out)


def cmd_univ_scan_discrete(args):
    box = _box_from_args(args)
    res = uv.scan_discrete(_parse_target(args.target), box, args.delta,
                           args.n_max, eps_list=tuple(args.eps or ()),
                           base=_parse_base(args.base), workers=args.workers)
    _write_scan(res, args.out)


def cmd_univ_quantized(args):
    target = _parse_target(args.target)
    if isinstance(target, (np.ndarray, tuple)):
        raise ValueError("quantized needs a functional target "
                         "(self or const:<z>)")
    c_lo, c_hi = _parse_floats(args.calK, 2, "--calK")
    profile = None
    if args.profile:
        profile = tuple(float(p) for p in args.profile.split(","))
    value = uv.quantized_sup(target, args.tau, (c_lo, c_hi), args.T0,
                             refine_tol=args.refine_tol, grid_c=args.grid_c,
                             profile=profile)
    _emit(args.out, "tau,value", [(args.tau, value)])


def cmd_univ_hurwitz(args):
    box = _box_from_args(args)
    res = uv.hurwitz_scan(_parse_target(args.target), args.alpha, box,
                          args.tau_max, args.tau_step,
                          eps_list=tuple(args.eps or ()),
                          workers=args.workers)
    _write_scan(res, args.out)


def cmd_univ_taylor(args):
    box = _box_from_args(args)
    res = uv.taylor_translate_scan(_parse_target(args.target), box,
                                   _parse_complex(args.z0), args.n,
                                   args.tau_max, args.tau_step,
                                   eps_list=tuple(args.eps or ()),
                                   workers=args.workers)
    _write_scan(res, args.out)


def cmd_univ_almost_period(args):
    lo, hi = _parse_floats(args.strip, 2, "--strip")
    rep = uv.almost_period_scan(_parse_base(args.base), (lo, hi),
                                args.y_window, args.eps, args.ell,
                                args.tau_max, args.tau_step,
                                grid_c=args.grid_c, grid_t=args.grid_t,
                                workers=args.workers)
    if args.out is not None:
        doc = {
            "eps": rep.eps,
            "ell": rep.ell,
            "qualifiers": list(rep.qualifiers),
            "windows": [list(w) for w in rep.windows],
            "empty_windows": [list(w) for w in rep.empty_windows],
        }
        with open(args.out + ".json", "w", encoding="utf-8",
                  newline="") as fh:
            json.dump(doc, fh, sort_keys=True)
            fh.write("\n")
        _emit(args.out + ".csv", "tau", [(q,) for q in rep.qualifiers])
    else:
        _emit(None, "tau", [(q,) for q in rep.qualifiers])


def cmd_univ_density(args):
    with open(args.scan, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    J = np.asarray(doc["J"], dtype=np.float64)
    if J.size == 0:
        raise ValueError(f"{args.scan}: empty scan")
    if args.eps <= 0:
        raise ValueError("eps must be positive")
    frac = float(np.sum(J <= args.eps)) / J.size
    _emit(args.out, "eps,density", [(args.eps, frac)])


# ---------------------------------------------------------------- parser

def _add_out(p):
    p.add_argument("--out", help="output file (default: stdout)")


def _add_workers(p):
    p.add_argument("--workers", type=int,
                   help="worker threads (default: ZS_WORKERS or 4); "
                        "the output bytes do not depend on it")


def _add_box(p):
    p.add_argument("--box", required=True,
                   help="c_lo:c_hi:t0, e.g. 0.6:0.9:1.0")
    p.add_argument("--grid-c", type=int, default=64)
    p.add_argument("--grid-t", type=int, default=64)
    p.add_argument("--no-strip-guard", action="store_true",
                   help="allow boxes outside the open strip (1/2, 1)")


def _add_scan_common(p):
    p.add_argument("--target", required=True,
                   help="self | const:<z> | translate:<a> | file:<grid.csv>")
    p.add_argument("--eps", type=float, action="append",
                   help="report the qualifying fraction at this epsilon "
                        "(repeatable)")
    p.add_argument("--out", required=True,
                   help="basename; writes <out>.json and <out>.csv")
    _add_workers(p)


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="zetastring",
        description="Fractal strings, spectral operators, and "
                    "zeta-universality scans.")
    groups = ap.add_subparsers(dest="group", metavar="GROUP")

    gz = groups.add_parser("zeta", help="direct special-function evaluation")
    sz = gz.add_subparsers(dest="cmd", metavar="CMD")
    p = sz.add_parser("eval", help="evaluate at points")
    p.add_argument("--fn", default="zeta",
                   choices=["zeta", "xi", "hurwitz", "dirichlet-l",
                            "euler-product"])
    p.add_argument("--s", nargs="+", required=True, metavar="S",
                   help="points, e.g. 2+0i")
    p.add_argument("--alpha", type=float)
    p.add_argument("--chi", help="character values chi(0),...,chi(q-1)")
    p.add_argument("--n-max", type=int)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_zeta_eval)
    p = sz.add_parser("xi", help="functional-equation residual check")
    p.add_argument("--check-functional-equation", action="store_true")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_zeta_xi)

    gs = groups.add_parser("string", help="generalized fractal strings")
    ss = gs.add_subparsers(dest="cmd", metavar="CMD")
    for name, fn, extra in (
            ("counting", cmd_string_counting, "geometric counting at --x"),
            ("zeta", cmd_string_zeta, "geometric zeta at --s"),
            ("dimension", cmd_string_dimension, "Minkowski dimension"),
            ("spectral", cmd_string_spectral,
             "spectral counting (--x) or spectral zeta (--s)"),
            ("dimensions", cmd_string_dimensions,
             "complex dimensions with residues"),
            ("explicit-compare", cmd_string_explicit_compare,
             "explicit formula vs direct counting")):
        p = ss.add_parser(name, help=extra)
        p.add_argument("--def", dest="definition", required=True,
                       metavar="FILE", help="string definition JSON")
        if name in ("counting",):
            p.add_argument("--x", type=float, required=True)
        if name == "zeta":
            p.add_argument("--s", nargs="+", required=True)
            p.add_argument("--mode", default="closed-form",
                           choices=["closed-form", "atoms"])
            p.add_argument("--n-max", type=float)
        if name == "spectral":
            p.add_argument("--x", type=float)
            p.add_argument("--s")
        if name == "dimensions":
            p.add_argument("--k-max", type=int, required=True)
        if name == "explicit-compare":
            p.add_argument("--k-max", type=int, required=True)
            p.add_argument("--midpoints", type=int, required=True)
            p.add_argument("--lo", type=float, default=2.0)
            p.add_argument("--hi", type=float, default=100.0)
            p.add_argument("--level", default="geometric",
                           choices=["geometric", "spectral"])
        _add_out(p)
        p.set_defaults(fn_impl=fn)

    go = groups.add_parser("operator", help="truncated shifts and the "
                                            "spectral operator")
    so = go.add_subparsers(dest="cmd", metavar="CMD")
    p = so.add_parser("segment", help="spectrum endpoints")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_operator_segment)
    p = so.add_parser("norm", help="sup of |psi| over the segment")
    p.add_argument("--psi", required=True, choices=["zeta", "identity"])
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--refine-tol", type=float, default=1e-8)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_operator_norm)
    p = so.add_parser("eigen-residual",
                      help="Weyl-sequence residual of a Gaussian packet")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--step", type=float, default=1e-3)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_operator_eigen_residual)
    p = so.add_parser("range-sample",
                      help="zeta on the vertical line Re = c")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    _add_workers(p)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_operator_range_sample)
    p = so.add_parser("apply", help="apply the truncated spectral operator "
                                    "to a sampled function")
    p.add_argument("--f", required=True, metavar="FILE",
                   help="grid CSV with t,re,im header")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--tail-tol", type=float)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_operator_apply)

    gu = groups.add_parser("universality", help="shift searches")
    su = gu.add_subparsers(dest="cmd", metavar="CMD")
    p = su.add_parser("scan", help="continuous tau grid")
    _add_scan_common(p)
    _add_box(p)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--tau-step", type=float, default=0.05)
    p.add_argument("--base", default="zeta", help="zeta | hurwitz:<alpha>")
    p.add_argument("--no-polish", action="store_true")
    p.set_defaults(fn_impl=cmd_univ_scan)
    p = su.add_parser("scan-discrete", help="arithmetic progression of tau")
    _add_scan_common(p)
    _add_box(p)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--base", default="zeta")
    p.set_defaults(fn_impl=cmd_univ_scan_discrete)
    p = su.add_parser("quantized",
                      help="segment-norm sup over sampled c")
    p.add_argument("--target", required=True)
    p.add_argument("--calK", required=True, help="c_lo:c_hi")
    p.add_argument("--T0", type=float, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--grid-c", type=int, default=16)
    p.add_argument("--refine-tol", type=float, default=1e-8)
    p.add_argument("--profile",
                   help="comma list of grid-c truncation heights")
    _add_out(p)
    p.set_defaults(fn_impl=cmd_univ_quantized)
    p = su.add_parser("hurwitz", help="scan against a Hurwitz base")
    _add_scan_common(p)
    _add_box(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--tau-step", type=float, default=0.05)
    p.set_defaults(fn_impl=cmd_univ_hurwitz)
    p = su.add_parser("taylor", help="Taylor-polynomial translates")
    _add_scan_common(p)
    _add_box(p)
    p.add_argument("--z0", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--tau-step", type=float, default=0.05)
    p.set_defaults(fn_impl=cmd_univ_taylor)
    p = su.add_parser("almost-period", help="epsilon-translation numbers")
    p.add_argument("--strip", required=True, help="sigma_lo:sigma_hi")
    p.add_argument("--y-window", type=float, default=1.0)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--ell", type=float, required=True)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--tau-step", type=float, default=0.05)
    p.add_argument("--grid-c", type=int, default=5)
    p.add_argument("--grid-t", type=int, default=5)
    p.add_argument("--base", default="zeta")
    p.add_argument("--out", help="basename; writes <out>.json and <out>.csv "
                                 "(default: qualifiers to stdout)")
    _add_workers(p)
    p.set_defaults(fn_impl=cmd_univ_almost_period)
    p = su.add_parser("density", help="qualifying fraction of a saved scan")
    p.add_argument("--scan", required=True, metavar="FILE",
                   help="<out>.json from a scan command")
    p.add_argument("--eps", type=float, required=True)
    _add_out(p)
    p.set_defaults(fn_impl=cmd_univ_density)

    return ap


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code in (0, 2) else 2
    if not hasattr(args, "fn_impl"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        args.fn_impl(args)
        return 0
    except VanishingTarget as exc:
        _diag(exc)
        return 4
    except ComputationError as exc:
        _diag(exc)
        return 3
    except (ValueError, OSError) as exc:
        _diag(exc)
        return 2


def _diag(exc):
    print(type(exc).__name__, file=sys.stderr)
    msg = str(exc)
    if msg:
        print(msg, file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
