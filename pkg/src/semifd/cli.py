"""Batch front end: read a JSON config, run one computation family with its
attached invariant checks, and emit a deterministic JSON report.

Exit status: 0 all checks pass, 1 an invariant check failed, 2 config error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import coaction as coact
from . import fdapprox, funcalg
from .enumeration import EnumerationTable, abelianization, enumerate_monoid, length_map
from .errors import PresentationError, ResourceLimitError, SemifdError
from .funcalg import KernelSpec, Polynomial
from .linrep import operator_norm
from .presentations import MonoidPresentation, builtin, parse_presentation


class ConfigError(Exception):
    pass


def _load_presentation(cfg) -> MonoidPresentation:
    if not isinstance(cfg, dict):
        raise ConfigError('"presentation" must be an object')
    if "builtin" in cfg:
        params = {k: v for k, v in cfg.items() if k != "builtin"}
        try:
            return builtin(cfg["builtin"], **params)
        except (PresentationError, KeyError, TypeError) as exc:
            raise ConfigError("bad builtin presentation: %s" % exc)
    if "path" in cfg:
        try:
            with open(cfg["path"], "r", encoding="utf-8") as fh:
                return parse_presentation(fh.read())
        except (OSError, PresentationError) as exc:
            raise ConfigError("cannot load presentation: %s" % exc)
    if "generators" in cfg:
        try:
            return parse_presentation(json.dumps(cfg))
        except PresentationError as exc:
            raise ConfigError(str(exc))
    raise ConfigError('"presentation" needs "builtin", "path" or inline "generators"')


def _parse_F(table: EnumerationTable, raw) -> list:
    out = []
    for item in raw:
        if isinstance(item, int):
            if item < 0:
                raise ConfigError("negative length in F")
            word = (0,) * item
        elif isinstance(item, str):
            word = table.presentation.parse_word(item)
        else:
            raise ConfigError("F entries must be words or nonnegative integers")
        out.append(table.element_from_word(word))
    return out


def _load_kernel(cfg) -> KernelSpec:
    if isinstance(cfg, str):
        cfg = {"name": cfg}
    if not isinstance(cfg, dict) or "name" not in cfg:
        raise ConfigError('"kernel" must be a name or an object with "name"')
    name = cfg["name"]
    d = cfg.get("d", 1)
    try:
        if name == "custom":
            return KernelSpec(d, "custom", tuple(float(c) for c in cfg["coefficients"]))
        return KernelSpec(d, name)
    except (SemifdError, KeyError, ValueError) as exc:
        raise ConfigError("bad kernel: %s" % exc)


def _load_polynomial(cfg, d: int) -> Polynomial:
    if not isinstance(cfg, list):
        raise ConfigError('"phi" must be a list of {"exponents", "re", "im"} terms')
    try:
        return Polynomial.parse_terms(d, cfg)
    except (SemifdError, KeyError, TypeError) as exc:
        raise ConfigError("bad polynomial: %s" % exc)


class CheckRunner:
    def __init__(self):
        self.checks = []
        self.failed = False

    def run(self, name: str, fn):
        try:
            witness = fn()
            self.checks.append({"name": name, "status": "pass", "witness": witness})
        except SemifdError as exc:
            self.failed = True
            self.checks.append({"name": name, "status": "fail", "witness": str(exc)})


# -- command implementations ---------------------------------------------------


def _cmd_enumerate(cfg, max_words):
    pres = _load_presentation(cfg.get("presentation"))
    L = int(cfg.get("L", 8))
    table = enumerate_monoid(pres, L, max_words=max_words)
    runner = CheckRunner()
    runner.run("cancellation", lambda: table.check_cancellation() or "exact")
    runner.run("associativity", lambda: table.check_associativity() or "exact")
    tables = {"counts": table.counts()}
    return runner, tables


def _cmd_divisors(cfg, max_words):
    pres = _load_presentation(cfg.get("presentation"))
    L = int(cfg.get("L", 4))
    table = enumerate_monoid(pres, L, max_words=max_words)
    runner = CheckRunner()
    sizes = []
    for p in table.elements_up_to(L):
        R = table.right_divisors(p)
        Lp = table.left_divisors(p)
        sizes.append([table.str_of(p), len(R), len(Lp)])

    def bijection():
        for word, r, l in sizes:
            if r != l:
                raise SemifdError("|R_p| != |L_p| at p=%s" % word)
        return "all equal"

    def nesting():
        for p in table.elements_up_to(L):
            Rp = table.right_divisors(p)
            for r in Rp:
                if not table.right_divisors(r) <= Rp:
                    raise SemifdError(
                        "R_r not inside R_p for r=%s, p=%s" % (table.str_of(r), table.str_of(p))
                    )
        return "nested"

    runner.run("divisor-bijection", bijection)
    runner.run("divisor-nesting", nesting)
    return runner, {"sizes": sizes}


def _cmd_fdapprox(cfg, max_words, norm_tol):
    pres = _load_presentation(cfg.get("presentation"))
    L = int(cfg.get("L", 5))
    if "F" not in cfg:
        raise ConfigError('fdapprox needs "F"')
    bound = max(L, max((len(w) if isinstance(w, str) else int(w)) for w in cfg["F"]) if cfg["F"] else L)
    table = enumerate_monoid(pres, max(L, bound + L), max_words=max_words)
    F = _parse_F(table, cfg["F"])
    runner = CheckRunner()
    sub = fdapprox.build_Y(table, F)
    state = {}

    def kernel():
        ks = fdapprox.kernel_set(table, F, L)
        state["kernel"] = sorted(table.str_of(s) for s in ks)
        return {"size": len(ks)}

    def contractivity():
        for s in table.elements_up_to(L):
            nrm = operator_norm(sub.compress(s), tol=norm_tol)
            if nrm > 1 + 1e-12:
                raise SemifdError("compression norm %r > 1 at s=%s" % (nrm, table.str_of(s)))
        return "all <= 1"

    def coinvariance():
        for s in table.elements_up_to(L):
            sub.check_coinvariance(s)
        return "exact"

    runner.run("kernel-formula", kernel)
    runner.run("contractivity", contractivity)
    runner.run("coinvariance", coinvariance)
    tables = {"dim_Y_F": sub.dim, "kernel_set": state.get("kernel", [])}
    return runner, tables


def _cmd_coaction(cfg, max_words):
    pres = _load_presentation(cfg.get("presentation"))
    L_P = int(cfg.get("L_P", 3))
    L_Q = int(cfg.get("L_Q", 4))
    map_kind = cfg.get("map", "length")
    F_raw = cfg.get("F", [])
    maxF = max((len(w) if isinstance(w, str) else int(w)) for w in F_raw) if F_raw else 0
    src_bound = max(L_P + 1, maxF, 2)
    source = enumerate_monoid(pres, src_bound, max_words=max_words)
    if map_kind == "length":
        from .presentations import free as free_pres

        target = enumerate_monoid(free_pres(1), src_bound + L_Q + 1, max_words=max_words)
        phi = length_map(source, target)
    elif map_kind == "abelianization":
        from .presentations import nat as nat_pres

        target = enumerate_monoid(
            nat_pres(len(pres.generators)), src_bound + L_Q + 1, max_words=max_words
        )
        phi = abelianization(source, target)
    else:
        raise ConfigError('"map" must be "length" or "abelianization"')
    spec = coact.CoactionSpec(phi)
    runner = CheckRunner()
    tables = {}

    def fell():
        _, report = coact.fell_intertwiner(spec, L_P, L_Q)
        return report

    def reconstruction():
        elems = source.elements_up_to(2)
        a = coact.AlgebraElement(source, {p: 1.0 + p.index for p in elems})
        coact.character_reconstruction(spec, a)
        return {"support": len(elems), "character": coact.apply_character(a).real}

    runner.run("fell-absorption", fell)
    runner.run("character-reconstruction", reconstruction)
    if F_raw:
        F = _parse_F(target, F_raw)

        def spanning():
            span, count = coact.qf_spanning_set(spec, F)
            tables["qf_spanning_cardinality"] = count
            return {"cardinality": count}

        runner.run("qf-spanning-set", spanning)
    return runner, tables


def _cmd_funcalg(cfg, norm_tol):
    kernel = _load_kernel(cfg.get("kernel", "hardy"))
    phi = _load_polynomial(cfg.get("phi", []), kernel.d)
    D = int(cfg.get("D", 8))
    runner = CheckRunner()
    tables = {}

    def norm_ladder():
        ladder = sorted({max(1, D // 4), max(1, D // 2), D})
        values = [funcalg.multiplier_norm_lower(kernel, phi, dd, tol=norm_tol) for dd in ladder]
        for lo, hi in zip(values, values[1:]):
            if lo > hi + 1e-10:
                raise SemifdError("compression norms decreased along %r" % (ladder,))
        tables["norm_lower_bounds"] = [[dd, v] for dd, v in zip(ladder, values)]
        return {"D": D, "norm_lower": values[-1]}

    def covariance():
        Dc = min(D, 8)
        for k in range(8):
            zeta = complex(np.exp(2j * np.pi * k / 8))
            G_dom = funcalg.circle_action_matrix(kernel, Dc, zeta)
            G_cod = funcalg.circle_action_matrix(kernel, Dc + phi.degree, zeta)
            lhs = G_cod.adjoint() @ funcalg.mult_operator(kernel, phi, Dc) @ G_dom
            rhs = funcalg.mult_operator(kernel, funcalg.circle_action(phi, zeta.conjugate()), Dc)
            err = float(np.abs(lhs.to_dense() - rhs.to_dense()).max())
            if err > 1e-12:
                raise SemifdError("covariance violated at 8th root %d: err %r" % (k, err))
        return "within 1e-12"

    def grading():
        components, qdim = funcalg.n_coaction(phi, cfg.get("F", []))
        total = Polynomial(phi.d, {})
        for _, part in components:
            total = total + part
        if total != phi:
            raise SemifdError("homogeneous components do not sum back")
        tables["homogeneous_degrees"] = [n for n, _ in components]
        if cfg.get("F"):
            tables["quotient_dimension"] = qdim
        return "reconstructed"

    runner.run("norm-monotone", norm_ladder)
    runner.run("circle-covariance", covariance)
    runner.run("grading-reconstruction", grading)
    return runner, tables


_COMMANDS = {
    "enumerate": lambda cfg, a: _cmd_enumerate(cfg, a.max_words),
    "divisors": lambda cfg, a: _cmd_divisors(cfg, a.max_words),
    "fdapprox": lambda cfg, a: _cmd_fdapprox(cfg, a.max_words, a.norm_tol),
    "coaction": lambda cfg, a: _cmd_coaction(cfg, a.max_words),
    "funcalg": lambda cfg, a: _cmd_funcalg(cfg, a.norm_tol),
}


def _round_floats(obj):
    """12 significant digits, recursively, for byte-reproducible reports."""
    if isinstance(obj, float):
        return float("%.12g" % obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def execute(config: dict, args) -> tuple[dict, int]:
    command = config.get("command")
    if command not in _COMMANDS:
        raise ConfigError('"command" must be one of %s' % sorted(_COMMANDS))
    t0 = time.monotonic()
    runner, tables = _COMMANDS[command](config, args)
    ms = (time.monotonic() - t0) * 1000.0
    report = {
        "config": config,
        "checks": runner.checks,
        "tables": tables,
        "ms": ms if args.timing else 0.0,
    }
    return _round_floats(report), (1 if runner.failed else 0)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="semifd",
        description="finite-dimensional matrix models of semigroup operator algebras",
    )
    parser.add_argument("--config", required=True, help="path to JSON config, or - for stdin")
    parser.add_argument("--out", default=None, help="report path (default: stdout)")
    parser.add_argument("--max-words", type=int, default=10**6, dest="max_words")
    parser.add_argument("--norm-tol", type=float, default=1e-9, dest="norm_tol")
    parser.add_argument(
        "--timing",
        action="store_true",
        help="include wall-clock ms in the report (breaks byte-reproducibility)",
    )
    args = parser.parse_args(argv)
    try:
        if args.config == "-":
            config = json.load(sys.stdin)
        else:
            with open(args.config, "r", encoding="utf-8") as fh:
                config = json.load(fh)
        if not isinstance(config, dict):
            raise ConfigError("config must be a JSON object")
        report, status = execute(config, args)
    except (ConfigError, json.JSONDecodeError, OSError) as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return 3
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
