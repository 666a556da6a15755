"""Command line harness: compute Hilbert and Frobenius data, list bases,
and run the named verification checks with caching and structured reports.

Exit codes: 0 all pass, 1 a verification failed, 2 usage error, 3 a check
was refused for resource reasons (and nothing failed).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from . import __version__
from .combinatorics import (DEFAULT_OSP_CAP, OMP_STATISTICS, QZPolynomial,
                            ResourceRefused, SignedPartition, SubsetOfN,
                            all_translation_sequences, count_I, count_L,
                            count_osp, enumerate_artin, enumerate_I,
                            enumerate_signed_artin, fields1_formula, gale_leq,
                            j_of_signed, partitions, sequence_bound,
                            signed_partitions, subsets, TranslationSequence)
from .coinvariant import (CACHE_STATS, Caps, DEFAULT_CAPS, IntegrityError,
                          VerificationFailure, bosonic_ideal, epsilon_dims,
                          frobenius_reconstruct, ideal_component,
                          operator_closure, quotient_hilbert,
                          superspace_ideal, verify_artin_basis,
                          verify_colon_basis, verify_parabolic_basis)
from .doperators import (apply_D, ptj_determinant, verify_E_independence,
                         verify_h_invariance, verify_monomial_bound, weight,
                         enumerate_L)
from .exactalg import MPoly, _IntEchelon, _int_row
from .superspace import (SuperElement, antisymmetrize, coinvariant_generators,
                         f_J, odot, vandermonde, young_subgroup_order)
from .symfunc import SymFn, cnk_omp, cnk_syt, e1_perp, to_basis

CACHE_ENV = "SUPERCOINV_CACHE"


@dataclass
class RunContext:
    cache: str | None = None
    force: bool = False
    caps: Caps = field(default_factory=Caps)
    seed: int = 0
    osp_cap: int = DEFAULT_OSP_CAP


@dataclass(frozen=True)
class CheckSpec:
    name: str
    n: int
    options: dict = field(default_factory=dict)


@dataclass
class Report:
    check: str
    params: dict
    status: str  # pass, fail or skipped
    witness: str = ""
    seconds: float = 0.0
    version: str = __version__
    cache_hits: int = 0


# ---------------------------------------------------------------------------
# individual checks


def check_fields1(n, ctx):
    table = quotient_hilbert(superspace_ideal(n), cache_dir=ctx.cache,
                             force=ctx.force, caps=ctx.caps)
    expected = fields1_formula(n)
    got = table.as_qz()
    if got != expected:
        raise VerificationFailure(
            f"Hilbert series {got.render()} != formula {expected.render()}")
    if n <= ctx.osp_cap:
        osp = count_osp(n, cap=ctx.osp_cap)
        if table.total() != osp:
            raise VerificationFailure(
                f"total dimension {table.total()} != {osp} ordered set"
                " partitions")


def check_fields2(n, ctx):
    for lam in partitions(n):
        dims = epsilon_dims(lam.parts, n, caps=ctx.caps)
        expected = count_osp(n, mu=lam.parts, cap=ctx.osp_cap)
        if dims.total() != expected:
            raise VerificationFailure(
                f"antisymmetric slice for mu={lam.parts} has dimension"
                f" {dims.total()}, expected {expected} batch ordered set"
                " partitions")


def _cnk_sum(n):
    total = SymFn.build(n, "s", {})
    for k in range(1, n + 1):
        total = total.add(cnk_syt(n, k).scale(QZPolynomial.monomial(0, n - k)))
    return total


def check_fields3(n, ctx):
    got = frobenius_reconstruct(n, force=ctx.force, caps=ctx.caps)
    expected = _cnk_sum(n)
    if got != expected:
        raise VerificationFailure(
            f"Frobenius image {got.render()} != tableau formula"
            f" {expected.render()}")


def check_reiner(n, ctx):
    if n < 2:
        return
    for k in range(1, n + 1):
        lhs = e1_perp(cnk_syt(n, k))
        rhs = SymFn.build(n - 1, "s", {})
        if k - 1 >= 1:
            rhs = rhs.add(cnk_syt(n - 1, k - 1))
        if k <= n - 1:
            rhs = rhs.add(cnk_syt(n - 1, k))
        rhs = rhs.scale(QZPolynomial.q_int(k))
        if lhs != rhs:
            raise VerificationFailure(
                f"skewing identity fails at (n, k) = ({n}, {k}):"
                f" {lhs.render()} != {rhs.render()}")


def check_artin(n, ctx):
    verify_artin_basis(n, caps=ctx.caps)


def check_colon(n, ctx):
    for J in subsets(n):
        verify_colon_basis(J)


def check_parabolic(n, ctx):
    for lam in partitions(n):
        verify_parabolic_basis(lam.parts, n, caps=ctx.caps)
    for sp in signed_partitions(n):
        verify_monomial_bound(sp)
        verify_E_independence(sp)


def _admissible_sequences(n):
    for lam in partitions(n):
        for tt in all_translation_sequences(lam.parts):
            if 1 not in tt.sets[0]:
                yield tt


def check_dop_leading(n, ctx):
    delta = vandermonde(n)
    gens = coinvariant_generators(n)
    for tt in _admissible_sequences(n):
        mu = tt.mu
        v = apply_D(tt, delta)
        if v.is_zero():
            raise VerificationFailure(f"zero image for mu={mu}, T={tt.sets}")
        for g in gens:
            if not odot(g, v).is_zero():
                raise VerificationFailure(
                    f"image not harmonic for mu={mu}, T={tt.sets}")
        if antisymmetrize(mu, v) != v.scale(young_subgroup_order(mu)):
            raise VerificationFailure(
                f"image not antisymmetric for mu={mu}, T={tt.sets}")
        Jmax = j_of_signed(SignedPartition(mu, tt.gamma()))
        lead = v.theta_coefficient(Jmax.elems)
        target = odot(SuperElement.from_mpoly(
            weight(tt) * f_J(Jmax).as_mpoly()), delta).as_mpoly()
        if lead != target and lead != target.scale(-1):
            raise VerificationFailure(
                f"leading theta coefficient wrong for mu={mu}, T={tt.sets}")
    _check_ptj_worked_example()


def _check_ptj_worked_example():
    """The eight-variable determinant example: mu = (3,3,2),
    T = ({2}, {4,6}, {}), J = {3,5,6}."""
    mu = (3, 3, 2)
    tt = TranslationSequence(mu, ((2,), (4, 6), ()))
    J = j_of_signed(SignedPartition(mu, tt.gamma()))
    got = ptj_determinant(mu, tt, J)
    expected = weight(tt) * f_J(J).as_mpoly()
    if not _proportional(got, expected):
        raise VerificationFailure(
            "worked determinant example does not match weight * shift"
            " polynomial")


def _proportional(a, b):
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    exp, c = next(iter(a.terms.items()))
    d = b.terms.get(exp)
    return d is not None and a == b.scale(c / d)


def check_dop_gale(n, ctx):
    delta = vandermonde(n)
    for tt in _admissible_sequences(n):
        mu = tt.mu
        verify_h_invariance(mu, tt.union_set())
        v = apply_D(tt, delta)
        Jmax = j_of_signed(SignedPartition(mu, tt.gamma()))
        for (exps, thetas), c in v.terms.items():
            K = SubsetOfN(n, thetas)
            if len(thetas) != len(Jmax.elems) or not gale_leq(K, Jmax):
                raise VerificationFailure(
                    f"theta support {thetas} escapes the Gale cone of"
                    f" {Jmax.elems} for mu={mu}, T={tt.sets}")


def check_counting(n, ctx):
    for m in range(1, 9):
        for k in range(0, m + 1):
            for t in range(0, 6):
                a = count_L(m, k, t)
                b = count_I(m, k, t)
                c = len(enumerate_I(m, k, t))
                d = len(enumerate_L(m, k, t))
                if not a == b == c == d:
                    raise VerificationFailure(
                        f"counts disagree at (m,k,t)=({m},{k},{t}):"
                        f" {a}, {b}, {c}, {d}")
    if count_L(5, 2, 2) != 150:
        raise VerificationFailure("count at (5,2,2) is not 150")
    if sequence_bound(5, 2, 2) != (2, 3, 4, 4, 4):
        raise VerificationFailure("bound vector at (5,2,2) is wrong")


def check_omp_stats(n, ctx):
    for k in range(1, n + 1):
        reference = to_basis(cnk_syt(n, k), "m")
        for stat in OMP_STATISTICS:
            got = cnk_omp(n, k, stat, cap=ctx.osp_cap)
            if got != reference:
                raise VerificationFailure(
                    f"statistic {stat} disagrees with the tableau formula"
                    f" at (n, k) = ({n}, {k})")


def check_operator_closure(n, ctx):
    closure = operator_closure(n, caps=ctx.caps)
    table = quotient_hilbert(superspace_ideal(n), cache_dir=ctx.cache,
                             force=ctx.force, caps=ctx.caps)
    if closure != table:
        raise VerificationFailure(
            f"closure table {closure.nonzero()} != quotient table"
            f" {table.nonzero()}")


def check_steinberg(n, ctx):
    """Two routes to membership in the bosonic invariant ideal: rank
    computations against the generators versus annihilating the Vandermonde
    under the superderivative pairing."""
    from .coinvariant import monomials
    rng = random.Random(ctx.seed)
    delta = vandermonde(n)
    spec = bosonic_ideal(n)
    top = n * (n - 1) // 2
    for d in range(top + 2):
        mons = monomials(n, d)
        comp = ideal_component(spec, d, 0)
        ideal_rank = comp.rank()
        pair_rows = _IntEchelon()
        pair_rank = 0
        images = []
        for exp in mons:
            img = odot(SuperElement.from_mpoly(MPoly.monomial(exp)), delta)
            row = {}
            for (e, ts), c in img.terms.items():
                row[e] = c
            images.append(row)
            if row and pair_rows.add(_int_row(row)):
                pair_rank += 1
        if ideal_rank + pair_rank != len(mons):
            raise VerificationFailure(
                f"kernel of the Vandermonde pairing differs from the ideal"
                f" in degree {d}: {ideal_rank} + {pair_rank} != {len(mons)}")
        # random elements, checked by both routes
        ech = _IntEchelon()
        for row in comp.rows:
            if row:
                ech.add(_int_row(row))
        for _ in range(20):
            coeffs = [rng.randint(-3, 3) for _ in mons]
            row = {}
            pairing = {}
            for idx, (c, rim) in enumerate(zip(coeffs, images)):
                if not c:
                    continue
                row[idx] = c
                for e, v in rim.items():
                    pairing[e] = pairing.get(e, 0) + c * v
            pairing = {k: v for k, v in pairing.items() if v}
            in_kernel = not pairing
            if not row:
                continue
            probe = _IntEchelon()
            probe.pivots = dict(ech.pivots)
            in_ideal = not probe.add(_int_row(
                {k: v for k, v in row.items() if v}))
            if in_ideal != in_kernel:
                raise VerificationFailure(
                    f"membership routes disagree in degree {d}")


CHECKS = {
    "fields1": check_fields1,
    "fields2": check_fields2,
    "fields3": check_fields3,
    "reiner": check_reiner,
    "artin": check_artin,
    "colon": check_colon,
    "parabolic": check_parabolic,
    "dop-leading": check_dop_leading,
    "dop-gale": check_dop_gale,
    "counting": check_counting,
    "omp-stats": check_omp_stats,
    "operator-closure": check_operator_closure,
    "steinberg": check_steinberg,
}


def run(spec: CheckSpec, ctx: RunContext) -> Report:
    fn = CHECKS.get(spec.name)
    if fn is None:
        raise ValueError(f"unknown check {spec.name!r}")
    before = CACHE_STATS["hits"]
    start = time.perf_counter()
    params = {"n": spec.n, **spec.options}
    try:
        fn(spec.n, ctx)
        status, witness = "pass", ""
    except ResourceRefused as exc:
        status, witness = "skipped", str(exc)
    except (VerificationFailure, IntegrityError) as exc:
        status, witness = "fail", str(exc)
    return Report(spec.name, params, status, witness,
                  round(time.perf_counter() - start, 3),
                  cache_hits=CACHE_STATS["hits"] - before)


def _run_in_worker(args):
    name, n, ctx = args
    return run(CheckSpec(name, n), ctx)


# ---------------------------------------------------------------------------
# output formatting


def emit_rows(header, rows, fmt):
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2)
    if fmt == "tsv":
        lines = ["\t".join(header)]
        lines += ["\t".join(str(c) for c in r) for r in rows]
        return "\n".join(lines)
    if fmt == "latex":
        cols = "l" * len(header)
        lines = [f"\\begin{{tabular}}{{{cols}}}",
                 " & ".join(header) + r" \\ \hline"]
        lines += [" & ".join(str(c) for c in r) + r" \\" for r in rows]
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def emit_reports(reports, fmt):
    header = ["check", "params", "status", "seconds", "cache_hits",
              "version", "witness"]
    rows = [[r.check, json.dumps(r.params, sort_keys=True), r.status,
             r.seconds, r.cache_hits, r.version, r.witness]
            for r in reports]
    return emit_rows(header, rows, fmt)


# ---------------------------------------------------------------------------
# argument handling


def _load_config(path):
    values = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {line!r}")
            key, _, val = line.partition("=")
            values[key.strip()] = val.strip()
    return values


def _build_context(args):
    ctx = RunContext()
    config = {}
    if getattr(args, "config", None):
        config = _load_config(args.config)
    caps = {}
    for name in ("quotient", "quotient_forced", "frobenius",
                 "frobenius_forced", "closure", "cells_budget"):
        if name in config:
            caps[name] = int(config[name])
    ctx.caps = replace(DEFAULT_CAPS, **caps)
    if "osp_cap" in config:
        ctx.osp_cap = int(config["osp_cap"])
    ctx.cache = getattr(args, "cache", None) or os.environ.get(CACHE_ENV)
    ctx.force = bool(getattr(args, "force", False))
    ctx.seed = int(getattr(args, "seed", 0) or 0)
    return ctx


def _common_flags(p):
    p.add_argument("--format", choices=("json", "tsv", "latex"),
                   default="tsv")
    p.add_argument("--cache", metavar="DIR",
                   help=f"cache directory (default ${CACHE_ENV})")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true",
                   help="allow the larger forced caps")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized membership probes")
    p.add_argument("--config", metavar="FILE",
                   help="key=value file overriding caps and budgets")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="supercoinv",
        description="Exact verification of bigraded superspace coinvariant"
                    " rings.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("hilbert", help="bigraded Hilbert table of the"
                       " superspace coinvariant quotient")
    p.add_argument("n", type=int)
    _common_flags(p)

    p = sub.add_parser("frobenius", help="bigraded Frobenius image in the"
                       " Schur basis")
    p.add_argument("n", type=int)
    _common_flags(p)

    p = sub.add_parser("cnk", help="the fermionic-slice symmetric function"
                       " C_{n,k}")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--stat", choices=sorted(OMP_STATISTICS),
                   help="compute from multiset partitions with this"
                        " statistic instead of tableaux")
    _common_flags(p)

    p = sub.add_parser("basis", help="list a monomial basis")
    p.add_argument("kind", choices=("artin", "colon", "parabolic"))
    p.add_argument("n", type=int)
    p.add_argument("--j", metavar="SET",
                   help="comma separated subset for the colon basis")
    p.add_argument("--mu", metavar="PARTS",
                   help="comma separated partition for the parabolic basis")
    _common_flags(p)

    p = sub.add_parser("verify", help="run named checks")
    p.add_argument("check", choices=sorted(CHECKS) + ["all"])
    p.add_argument("--n", type=int, required=True)
    _common_flags(p)
    return parser


def _exps_render(exp):
    if not any(exp):
        return "1"
    return "*".join(f"x{i}^{a}" if a > 1 else f"x{i}"
                    for i, a in enumerate(exp, start=1) if a)


def _theta_render(elems):
    return "*".join(f"t{i}" for i in elems) or "1"


def cmd_hilbert(args, ctx):
    table = quotient_hilbert(superspace_ideal(args.n), cache_dir=ctx.cache,
                             force=ctx.force, caps=ctx.caps)
    rows = [[i, j, v] for (i, j), v in sorted(table.nonzero().items())]
    print(emit_rows(["bosonic", "fermionic", "dimension"], rows, args.format))
    return 0


def cmd_frobenius(args, ctx):
    f = frobenius_reconstruct(args.n, force=ctx.force, caps=ctx.caps)
    if args.format == "latex":
        print(f.latex())
        return 0
    rows = [[",".join(map(str, lam.parts)), c.render()]
            for lam, c in f.coeffs]
    print(emit_rows(["schur", "coefficient"], rows, args.format))
    return 0


def cmd_cnk(args, ctx):
    if args.stat:
        f = cnk_omp(args.n, args.k, args.stat, cap=ctx.osp_cap)
    else:
        f = cnk_syt(args.n, args.k)
    if args.format == "latex":
        print(f.latex())
        return 0
    rows = [[f.basis, ",".join(map(str, lam.parts)), c.render()]
            for lam, c in f.coeffs]
    print(emit_rows(["basis", "index", "coefficient"], rows, args.format))
    return 0


def _parse_ints(text):
    return tuple(int(p) for p in text.split(",") if p.strip())


def cmd_basis(args, ctx):
    n = args.n
    rows = []
    if args.kind == "artin":
        for J in subsets(n):
            for exp in enumerate_artin(J):
                rows.append([",".join(map(str, J.elems)) or "-",
                             _exps_render(exp), _theta_render(J.elems)])
        header = ["j_set", "monomial", "theta"]
    elif args.kind == "colon":
        if not args.j and args.j != "":
            raise SystemExit("the colon basis needs --j (use --j '' for the"
                             " empty subset)")
        J = SubsetOfN(n, _parse_ints(args.j or ""))
        for exp in enumerate_artin(J):
            rows.append([sum(exp), _exps_render(exp)])
        header = ["degree", "monomial"]
    else:
        if not args.mu:
            raise SystemExit("the parabolic basis needs --mu")
        mu = _parse_ints(args.mu)
        if sum(mu) != n:
            raise SystemExit("--mu must be a partition of n")
        for sp in signed_partitions(n):
            if sp.mu != mu:
                continue
            J = j_of_signed(sp)
            for exp in enumerate_signed_artin(sp):
                rows.append([",".join(map(str, sp.gamma)),
                             _exps_render(exp), _theta_render(J.elems)])
        header = ["gamma", "monomial", "theta"]
    print(emit_rows(header, rows, args.format))
    return 0


def cmd_verify(args, ctx):
    names = sorted(CHECKS) if args.check == "all" else [args.check]
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_in_worker,
                                    [(name, args.n, ctx) for name in names]))
    else:
        reports = [run(CheckSpec(name, args.n), ctx) for name in names]
    print(emit_reports(reports, args.format))
    if any(r.status == "fail" for r in reports):
        return 1
    if any(r.status == "skipped" for r in reports):
        return 3
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = _build_context(args)
    except (OSError, ValueError) as exc:
        parser.error(str(exc))
    dispatch = {"hilbert": cmd_hilbert, "frobenius": cmd_frobenius,
                "cnk": cmd_cnk, "basis": cmd_basis, "verify": cmd_verify}
    try:
        return dispatch[args.verb](args, ctx)
    except ResourceRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (VerificationFailure, IntegrityError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
