"""Command-line front end: machine-readable reports for construction,
classification, and verification runs.

One JSON config file describes the context, algebra, and map parameters;
flags override the run mode, seed, caps, and iteration bound.  Exit codes:
0 success/valid, 1 mathematically invalid, 2 usage or schema error,
3 resource cap exceeded.
"""

import argparse
import json
import sys

from .ground import (AutMap, CapExceeded, DEFAULT_CAP, frobenius_context,
                     function_field_context)
from .petit import PetitAlgebra
from . import gencyclic as gc
from . import laurent as la
from . import morphism as mo

DEFAULT_SEED = 0xC0FFEE
DEFAULT_BOUND = 8

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class SchemaError(Exception):
    pass


def _require(cfg, key):
    if key not in cfg:
        raise SchemaError("missing config key: %s" % key)
    return cfg[key]


def load_context(desc, cap):
    backend = _require(desc, "backend")
    if backend == "ff":
        return frobenius_context(_require(desc, "p"), _require(desc, "d"),
                                 _require(desc, "n"), cap=cap)
    if backend == "rf":
        q = _require(desc, "q")
        return function_field_context(q, _require(desc, "zeta"),
                                      _require(desc, "n"))
    raise SchemaError("unknown backend %r" % backend)


def load_elem(spec, ctx):
    K = ctx.field
    if ctx.backend == "ff":
        if isinstance(spec, int):
            return K.from_idx(spec)
        if isinstance(spec, list):
            return K.from_coeffs(spec)
        raise SchemaError("bad element spec %r" % (spec,))
    cf = K.cfield
    if isinstance(spec, int):
        return K.from_const(cf.from_idx(spec))
    if isinstance(spec, dict) and "monomial" in spec:
        mspec = spec["monomial"]
        return K.monomial(cf.from_idx(_require(mspec, "c")),
                          _require(mspec, "j"))
    if isinstance(spec, dict) and "num" in spec:
        num = [cf.from_idx(i) for i in spec["num"]]
        den = [cf.from_idx(i) for i in spec.get("den", [1])]
        return K.from_polys(num, den)
    raise SchemaError("bad element spec %r" % (spec,))


def load_tau(spec, ctx):
    if not isinstance(spec, dict):
        raise SchemaError("tau spec must be an object")
    exp = spec.get("exp", 0)
    if ctx.backend == "ff":
        return AutMap("ff", ctx.field, exp)
    action = spec.get("action", "scale")
    c = ctx.field.cfield.from_idx(spec.get("c", 1))
    tau = AutMap("rf", ctx.field, exp, action, c)
    return ctx.register_tau(spec.get("name", "tau"), tau)


def elem_json(e):
    return repr(e)


# --- subcommands --------------------------------------------------------------

def cmd_info(cfg, opts):
    ctx = load_context(_require(cfg, "context"), opts.cap)
    m = _require(cfg, "m")
    a = load_elem(_require(cfg, "a"), ctx)
    A = PetitAlgebra(ctx, m, a)
    report = {"command": "info", "algebra": {"m": m, "a": elem_json(a),
                                             "context": ctx.describe()},
              "associative": A.is_associative(),
              "two_sided": A.is_two_sided(),
              "opposite_constant": elem_json(a.inverse())}
    if ctx.backend == "ff":
        report["semifield"] = A.is_semifield(cap=opts.cap)
        try:
            report["nucleus_dims"] = list(A.nucleus_dims())
        except CapExceeded:
            report["nucleus_dims"] = None
    return report, EXIT_OK


def cmd_classify(cfg, opts):
    ctx = load_context(_require(cfg, "context"), opts.cap)
    m = _require(cfg, "m")
    a = load_elem(_require(cfg, "a"), ctx)
    tau = load_tau(_require(cfg, "tau"), ctx)
    A = PetitAlgebra(ctx, m, a)
    result = mo.classify(A, tau, max_deg=opts.bound)
    report = {"command": "classify", "note": result.note,
              "count": len(result),
              "maps": [{"map": mm.describe(), "certificate": cert.to_json()}
                       for mm, cert in result]}
    return report, EXIT_OK


def cmd_verify(cfg, opts):
    ctx = load_context(_require(cfg, "context"), opts.cap)
    if "D" in cfg:
        return _verify_gen(cfg, ctx, opts)
    m = _require(cfg, "m")
    a = load_elem(_require(cfg, "a"), ctx)
    mspec = _require(cfg, "map")
    tau = load_tau(_require(mspec, "tau"), ctx)
    alpha = load_elem(_require(mspec, "alpha"), ctx)
    k = mspec.get("k", 1)
    role = mspec.get("role", mo.ANTI_ENDO)
    A = PetitAlgebra(ctx, m, a)
    target_b = (load_elem(mspec["b"], ctx) if role == mo.ISO_BETWEEN
                else None)
    mm = mo.MonomialMap(tau, alpha, k, role, A, target_b=target_b)
    cond_cert = mo.check_conditions(mm)
    mode = opts.mode or ("exhaustive" if ctx.backend == "ff" else "sampled")
    direct_cert = mo.verify_map(mm, mode=mode, cap=opts.cap,
                                count=opts.count, seed=opts.seed)
    report = {"command": "verify", "map": mm.describe(),
              "conditions": cond_cert.to_json(),
              "direct": direct_cert.to_json(),
              "agree": cond_cert.valid == direct_cert.valid}
    return report, EXIT_OK if direct_cert.valid else EXIT_INVALID


def _verify_gen(cfg, ctx, opts):
    D = gc.build_csa({"builtin": _require(cfg["D"], "builtin"),
                      "cfield": ctx.field})
    sigma_D = gc.entrywise_map(D, ctx.sigma)
    d = tuple(load_elem(s, ctx) for s in _require(cfg, "d"))
    A = gc.GenCyclicAlgebra(ctx, D, sigma_D, _require(cfg, "m"), d)
    mspec = _require(cfg, "map")
    kind = mspec.get("tau_kind", "transpose_frobenius")
    phi = AutMap("ff", ctx.field, mspec.get("exp", 0))
    if kind == "transpose_frobenius":
        tau = gc.transpose_map(D, phi)
    elif kind == "entrywise":
        tau = gc.entrywise_map(D, phi, "anti")
    else:
        raise SchemaError("unknown tau_kind %r" % kind)
    alpha = load_elem(_require(mspec, "alpha"), ctx)
    k = mspec.get("k", 1)
    cond = gc.check_gen_anti_conditions(tau, alpha, k, A)
    direct = gc.verify_gen_map(tau, alpha, k, A,
                               mode="basis" if (opts.mode or "exhaustive")
                               == "exhaustive" else "sampled",
                               count=opts.count, seed=opts.seed)
    report = {"command": "verify", "algebra": A.describe(),
              "conditions": cond.to_json(), "direct": direct.to_json(),
              "agree": cond.valid == direct.valid}
    return report, EXIT_OK if direct.valid else EXIT_INVALID


def cmd_laurent(cfg, opts):
    ctx = load_context(_require(cfg, "context"), opts.cap)
    tau = load_tau(_require(cfg, "tau"), ctx)
    alpha1 = load_elem(_require(cfg, "alpha1"), ctx)
    op = cfg.get("op", "verify")
    try:
        handle = la.build_laurent_anti(tau, alpha1, ctx,
                                       require_norm=cfg.get("require_norm", False))
    except ValueError as e:
        return {"command": "laurent", "error": str(e)}, EXIT_INVALID
    if op == "witness":
        degrees = la.infinite_order_witness(handle, bound=opts.bound)
        report = {"command": "laurent", "op": "witness",
                  "map": handle.describe(),
                  "degrees": degrees, "bound": opts.bound,
                  "strictly_increasing": True}
        return report, EXIT_OK
    cert = la.verify_laurent_anti(handle, samples=opts.count, seed=opts.seed)
    report = {"command": "laurent", "op": "verify", "map": handle.describe(),
              "certificate": cert.to_json()}
    return report, EXIT_OK if cert.valid else EXIT_INVALID


def cmd_gen(cfg, opts):
    ctx = load_context(_require(cfg, "context"), opts.cap)
    return _verify_gen(cfg, ctx, opts)


COMMANDS = {"info": cmd_info, "classify": cmd_classify, "verify": cmd_verify,
            "laurent": cmd_laurent, "gen": cmd_gen}


def build_parser():
    p = argparse.ArgumentParser(prog="skewalg",
                                description="skew polynomial quotient algebra "
                                            "reports")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", required=True, help="path to the JSON config")
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default=None)
    p.add_argument("--seed", default=None,
                   help="sampling seed (decimal or 0x-hex)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--count", type=int, default=200,
                   help="sample count for sampled verification")
    p.add_argument("--out", default=None, help="write the report here")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if opts.seed is None:
        opts.seed = DEFAULT_SEED
    else:
        try:
            opts.seed = int(str(opts.seed), 0)
        except ValueError:
            print("bad --seed value", file=sys.stderr)
            return EXIT_USAGE
    try:
        with open(opts.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        print("config error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    try:
        report, code = COMMANDS[opts.command](cfg, opts)
    except SchemaError as e:
        print("schema error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print("cap exceeded: %s" % e, file=sys.stderr)
        return EXIT_CAP
    except (KeyError, TypeError, ValueError) as e:
        print("config error: %r" % e, file=sys.stderr)
        return EXIT_USAGE
    report["settings"] = {"mode": opts.mode, "seed": opts.seed,
                          "cap": opts.cap, "bound": opts.bound}
    text = json.dumps(report, indent=2, sort_keys=True)
    if opts.out:
        with open(opts.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
