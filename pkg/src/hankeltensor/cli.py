"""Command-line front end: ``hankel <command> ...``.

Exit codes: 0 success, 1 reproduction mismatch, 2 rejected input (not PSD,
bad structure or dimensions), 3 numerical failure.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import io
from .core import hilbert_tensor, poly_eval, tvp_fft, tvp_naive
from .errors import NumericalError, StructureError
from .generate import planted_tensor, random_strong
from .linalg import RANK_TOL
from .repro import REPRO
from .sos import render_term, sos_decompose
from .spectra import (DEFAULT_STARTS, check_first_inheritance,
                      check_second_inheritance, heig_multistart)
from .vandermonde import avd_decompose

EXIT_MISMATCH = 1
EXIT_REJECTED = 2
EXIT_NUMERIC = 3


def resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get("HANKEL_SEED")
    return int(env) if env else 0


def _emit(args, payload, text):
    if args.json:
        print(io.dumps(payload))
    else:
        print(text)


def _fmt_vec(v, digits=6):
    return "[" + ", ".join(f"{x:.{digits}g}" for x in v) + "]"


# -- commands ---------------------------------------------------------------

def cmd_gen(args):
    seed = resolve_seed(args.seed)
    if args.kind == "hilbert":
        tf = io.TensorFile.from_tensor(hilbert_tensor(args.m, args.n), name="hilbert")
    elif args.kind == "planted-vandermonde":
        if args.poles is None:
            rng = np.random.default_rng(seed)
            poles = rng.uniform(-1, 1, args.rank)
        else:
            poles = np.array(args.poles, dtype=float)
        alphas = np.ones_like(poles) if args.alphas is None else np.array(args.alphas, dtype=float)
        if alphas.shape != poles.shape:
            raise StructureError("--alphas must match --poles in length")
        T = planted_tensor(args.m, args.n, poles, alphas, args.corner)
        tf = io.TensorFile.from_tensor(T, name="planted-vandermonde", seed=seed,
                                       poles=poles.tolist(), alphas=alphas.tolist(),
                                       alpha_inf=args.corner)
    elif args.kind == "random-strong":
        rng = np.random.default_rng(seed)
        T, poles, alphas, ainf = random_strong(args.m, args.n, args.rank, rng,
                                               corner=args.corner > 0)
        tf = io.TensorFile.from_tensor(T, name="random-strong", seed=seed,
                                       poles=poles.tolist(), alphas=alphas.tolist(),
                                       alpha_inf=ainf)
    else:
        if not args.file:
            raise StructureError("from-file needs --file")
        tf = io.load(args.file)
        tf.tensor()
    if args.output:
        io.save(args.output, tf)
    else:
        print(io.dumps(tf.to_dict()))
    return 0


def cmd_eval(args):
    T = io.load(args.file).tensor()
    x = np.array(args.x, dtype=float)
    methods = {
        "naive": lambda: tvp_naive(T, [x] * T.order),
        "fft": lambda: tvp_fft(T, [x] * T.order),
        "conv": lambda: poly_eval(T, x),
    }
    if not args.verify:
        val = methods[args.method]()
        _emit(args, {"method": args.method, "value": val}, f"{val:.17g}")
        return 0
    vals = {k: f() for k, f in methods.items()}
    ref = max(abs(v) for v in vals.values())
    spread = max(vals.values()) - min(vals.values())
    rel = spread / ref if ref else spread
    ok = rel <= 1e-10
    text = "\n".join(f"{k:6s} {v:.17g}" for k, v in vals.items())
    text += f"\nmax relative disagreement {rel:.3g} ({'ok' if ok else 'MISMATCH'})"
    _emit(args, {"values": vals, "relative_disagreement": rel, "agree": ok}, text)
    return 0 if ok else EXIT_NUMERIC


def cmd_sos(args):
    T = io.load(args.file).tensor()
    dec = sos_decompose(T, args.tol)
    lines = [f"{dec.rank} squared terms of order-{dec.q} forms:"]
    for k, t in enumerate(dec.terms):
        lines.append(f"  ({render_term(t, dec.q, T.dim)})^2")
        lines.append(f"      generator {_fmt_vec(t)}")
    _emit(args, dec.to_json(), "\n".join(lines))
    return 0


def cmd_avd(args):
    T = io.load(args.file).tensor()
    dec = avd_decompose(T, args.tol, args.gamma)
    lines = [f"{'k':>3s} {'xi_k':>12s} {'alpha_k':>12s}"]
    for k, (p, a) in enumerate(zip(dec.poles, dec.alphas)):
        lines.append(f"{k + 1:3d} {p:12.4f} {a:12.4f}")
    lines.append(f"alpha_inf = {dec.alpha_inf:.6g}")
    _emit(args, dec.to_json(), "\n".join(lines))
    return 0


def cmd_heig(args):
    T = io.load(args.file).tensor()
    seed = resolve_seed(args.seed)
    res = heig_multistart(T, args.starts, seed)
    out = res.to_json()
    lines = [f"{res.converged} of {res.starts} starts converged (seed {seed})",
             f"distinct H-eigenvalues: {_fmt_vec(out['eigenvalues'], 10)}"]
    if res.pairs:
        lines.append(f"min {res.min_pair.value:.10g} at {_fmt_vec(res.min_pair.vector)}")
        lines.append(f"max {res.max_pair.value:.10g} at {_fmt_vec(res.max_pair.vector)}")
    else:
        lines.append("none found")
    _emit(args, out, "\n".join(lines))
    return 0 if res.pairs or T.order % 2 else EXIT_NUMERIC


def _table(d, keys):
    return "\n".join(f"  {k:22s} {d[k]}" for k in keys if k in d)


def cmd_verify(args):
    T = io.load(args.file).tensor()
    seed = resolve_seed(args.seed)
    if args.property == "first":
        rep = check_first_inheritance(T, args.q, seed=seed, starts=args.starts).to_json()
        text = "first inheritance\n" + _table(rep, [
            "q", "high_order", "high_dim", "identity_max_rel_err", "low_min", "low_max",
            "high_min", "high_max", "high_psd", "lower_c", "lower_bound", "lower_holds",
            "upper_c", "upper_bound", "upper_holds"])
        ok = rep["identity_max_rel_err"] <= 1e-12 and rep["lower_holds"] is not False \
            and rep["upper_holds"] is not False
    else:
        rep = check_second_inheritance(T, args.starts, seed).to_json()
        text = "second inheritance\n" + _table(rep, [
            "matrix_class", "strong", "lam_min", "lam_max", "none_found",
            "no_negative", "c", "bound", "bound_holds", "nsd_bound", "nsd_bound_holds"])
        ok = rep["no_negative"] is not False and rep["bound_holds"] is not False \
            and rep["nsd_bound_holds"] is not False
    rep["holds"] = bool(ok)
    _emit(args, rep, text + f"\n  {'holds':22s} {ok}")
    return 0 if ok else EXIT_NUMERIC


def cmd_repro(args):
    ex = int(args.example)
    kwargs = {}
    if ex == 2 and args.gamma is not None:
        kwargs["gamma"] = args.gamma
    if ex == 3:
        kwargs = {"trials": args.trials, "seed": resolve_seed(args.seed)}
    rep = REPRO[ex](**kwargs)
    lines = [f"example {ex}: {'pass' if rep['passed'] else 'FAIL'}"]
    if ex == 1:
        lines += [f"  d = {rep['d']}"] + [f"  ({r})^2" for r in rep["rendered"]]
    elif ex == 2 and "poles" in rep:
        lines += [f"  {k + 1:2d} {p:8.4f} {a:8.4f}" for k, (p, a) in
                  enumerate(zip(rep["poles"], rep["alphas"]))]
    elif ex == 3:
        lines.append(f"  mean relative pole error {rep['mean_error']:.4e} over "
                     f"{rep['trials']} trials (reference {rep['reference_mean']:.4e})")
    lines += [f"  diff: {d}" for d in rep["diffs"]]
    _emit(args, rep, "\n".join(lines))
    return 0 if rep["passed"] else EXIT_MISMATCH


# -- parser -------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="hankel", description="Hankel tensor toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    g = add("gen", cmd_gen, "write a tensor file")
    g.add_argument("kind", choices=["hilbert", "planted-vandermonde", "random-strong", "from-file"])
    g.add_argument("--m", type=int, default=4)
    g.add_argument("--n", type=int, default=5)
    g.add_argument("--poles", type=float, nargs="*")
    g.add_argument("--alphas", type=float, nargs="*")
    g.add_argument("--rank", type=int, default=3)
    g.add_argument("--corner", type=float, default=0.0, help="weight of the e_n corner term")
    g.add_argument("--seed", type=int)
    g.add_argument("--file")
    g.add_argument("-o", "--output")

    e = add("eval", cmd_eval, "evaluate T x^m")
    e.add_argument("file")
    e.add_argument("--x", type=float, nargs="+", required=True)
    e.add_argument("--method", choices=["naive", "fft", "conv"], default="fft")
    e.add_argument("--verify", action="store_true", help="cross-check all three methods")

    s = add("sos", cmd_sos, "SOS decomposition of an even-order strong tensor")
    s.add_argument("file")
    s.add_argument("--tol", type=float, default=RANK_TOL)

    a = add("avd", cmd_avd, "augmented Vandermonde decomposition")
    a.add_argument("file")
    a.add_argument("--tol", type=float, default=RANK_TOL)
    a.add_argument("--gamma", type=float)

    h = add("heig", cmd_heig, "multi-start H-eigenvalue search")
    h.add_argument("file")
    h.add_argument("--starts", type=int, default=DEFAULT_STARTS)
    h.add_argument("--seed", type=int)

    v = add("verify", cmd_verify, "check an inheritance property")
    v.add_argument("file")
    v.add_argument("--property", choices=["first", "second"], required=True)
    v.add_argument("--q", type=int, default=2)
    v.add_argument("--starts", type=int, default=DEFAULT_STARTS)
    v.add_argument("--seed", type=int)

    r = add("repro", cmd_repro, "rerun a worked example against golden values")
    r.add_argument("example", choices=["1", "2", "3"])
    r.add_argument("--gamma", type=float)
    r.add_argument("--trials", type=int, default=100)
    r.add_argument("--seed", type=int)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
