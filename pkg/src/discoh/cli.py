"""Command line interface: analyze, sweep, verify, generate.

Exit codes: 0 success, 1 usage error, 2 input validation error,
3 verification failure.  Machine outputs (JSON and CSV) are byte
deterministic for identical arguments.
"""

import argparse
import json
import sys

import numpy as np

from .coherence import OptimizerConfig, minimize_over_bases
from .discord import discord_ab_analytic, discord_ba_analytic
from .errors import DiscohError, MixedStateError, UnsupportedDimensionError
from .linalg import hermitian_eigen
from .nonlocality import chsh_violation, v_measures_analytic, v_measures_numeric
from .states import (
    DensityMatrix,
    PureState,
    load_state,
    make_bell,
    make_werner,
    random_mixed,
    random_pure,
    save_state,
)
from .entanglement import concurrence_mixed_2q, concurrence_pure, monogamy_check
from .verify import (
    MONOGAMY_DIMS,
    PURE_DISCORD_DIMS,
    class3_extrema_campaign,
    class3_sum_rule_campaign,
    discord_closed_form_campaign,
    mixed_state_bound_campaign,
    monogamy_campaign,
    pure_state_discord_campaign,
    werner_sweep,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3

MEASURES = ("d_ab", "d_ba", "d_sym", "d_tilde", "v", "v_tilde", "chsh", "concurrence", "monogamy")
SWEEP_COLUMNS = ("p", "d_ab", "d_ba", "d_sym", "v", "v_tilde", "horodecki_m", "chsh_violated")

SUITE_DEFAULTS = {
    "monogamy": (1000, 1e-10),
    "analytic-vs-numeric": (200, 1e-6),
    "corollary2": (100, 1e-6),
    "theorem5": (200, 1e-6),
    "eq64": (500, 1e-10),
    "corollary1": (200, 1e-9),
}

PURITY_PURE_TOL = 1e-8


class _Parser(argparse.ArgumentParser):
    """argparse maps its own errors to exit code 2; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_dims(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    try:
        m, n = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must look like 2x3, got {text!r}")
    if m < 1 or n < 1:
        raise argparse.ArgumentTypeError(f"dims must be positive, got {text!r}")
    return m, n


def _parse_dims_or_all(text: str):
    if text == "all":
        return "all"
    return _parse_dims(text)


def _parse_measures(text: str) -> list[str]:
    if text == "all":
        return ["all"]
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise argparse.ArgumentTypeError("measure list is empty")
    for name in names:
        if name not in MEASURES:
            raise argparse.ArgumentTypeError(
                f"unknown measure {name!r}; choose from {', '.join(MEASURES)}"
            )
    seen: list[str] = []
    for name in names:
        if name not in seen:
            seen.append(name)
    return seen


def _optimizer_config(args) -> OptimizerConfig:
    restarts = args.restarts
    if restarts is None:
        restarts = 8 if getattr(args, "fast", False) else 32
    return OptimizerConfig(
        restarts=restarts,
        max_iterations=args.max_iterations,
        objective_tolerance=args.objective_tolerance,
        seed=args.seed,
    )


def _dominant_pure(rho: DensityMatrix) -> PureState:
    purity = rho.purity()
    if purity < 1.0 - PURITY_PURE_TOL:
        raise MixedStateError(f"purity = {purity:.6f}; this measure needs a pure state")
    _, vectors = hermitian_eigen(rho.mat)
    amp = vectors[:, 0]
    k = int(np.argmax(np.abs(amp)))
    amp = amp / (amp[k] / abs(amp[k]))
    amp = amp / np.linalg.norm(amp)
    return PureState(rho.dims, amp)


def _record(measure, value, method, converged=None, detail=None):
    return {
        "measure": measure,
        "value": None if value is None else float(value),
        "method": method,
        "converged": converged,
        "detail": detail or {},
    }


def _analyze_records(rho: DensityMatrix, measures: list[str], method: str, cfg: OptimizerConfig):
    two_qubit = rho.dims == (2, 2)
    pure_enough = rho.purity() >= 1.0 - PURITY_PURE_TOL

    if measures == ["all"]:
        measures = [m for m in MEASURES if m not in ("concurrence", "monogamy")]
        if pure_enough or two_qubit:
            measures.append("concurrence")
        if pure_enough:
            measures.append("monogamy")

    if method == "auto":
        paths = ["analytic"] if two_qubit else ["numeric"]
    elif method == "both":
        paths = ["analytic", "numeric"]
    else:
        paths = [method]

    optimizer_measures = {"d_ab", "d_ba", "d_sym", "d_tilde", "v", "v_tilde"}
    if "analytic" in paths and not two_qubit:
        blocked = [m for m in measures if m in optimizer_measures]
        if blocked:
            raise UnsupportedDimensionError(
                f"analytic method needs dims (2, 2) for {', '.join(blocked)}; this state is "
                f"{rho.dims[0]}x{rho.dims[1]}"
            )
    if method == "analytic" and "d_tilde" in measures:
        raise UnsupportedDimensionError(
            "d_tilde has no analytic path; use --method numeric, both or auto"
        )

    exploratory = {} if two_qubit else {"note": "exploratory"}
    records = []
    for measure in measures:
        if measure in ("d_ab", "d_ba"):
            for path in paths:
                if path == "analytic":
                    fn = discord_ab_analytic if measure == "d_ab" else discord_ba_analytic
                    value, direction = fn(rho)
                    records.append(
                        _record(measure, value, path, detail={"direction": direction.p.tolist()})
                    )
                else:
                    objective = "class1" if measure == "d_ab" else "class2"
                    opt = minimize_over_bases(rho, objective, cfg)
                    records.append(_record(measure, opt.value, path, opt.converged, dict(exploratory)))
        elif measure == "d_sym":
            for path in paths:
                if path == "analytic":
                    value = discord_ab_analytic(rho)[0] + discord_ba_analytic(rho)[0]
                    records.append(_record(measure, value, path))
                else:
                    opt_a = minimize_over_bases(rho, "class1", cfg)
                    opt_b = minimize_over_bases(rho, "class2", cfg)
                    records.append(
                        _record(
                            measure,
                            opt_a.value + opt_b.value,
                            path,
                            opt_a.converged and opt_b.converged,
                            dict(exploratory),
                        )
                    )
        elif measure == "d_tilde":
            opt = minimize_over_bases(rho, "tilde_total", cfg)
            records.append(_record(measure, opt.value, "numeric", opt.converged, dict(exploratory)))
        elif measure in ("v", "v_tilde"):
            for path in paths:
                if path == "analytic":
                    v, vt = v_measures_analytic(rho)
                    records.append(_record(measure, v if measure == "v" else vt, path))
                else:
                    low, high = v_measures_numeric(rho, cfg)
                    opt = low if measure == "v" else high
                    records.append(_record(measure, opt.value, path, opt.converged, dict(exploratory)))
        elif measure == "chsh":
            if not two_qubit:
                raise UnsupportedDimensionError(f"chsh needs dims (2, 2), got {rho.dims}")
            violated, m = chsh_violation(rho)
            records.append(_record(measure, m, "analytic", detail={"violated": violated}))
        elif measure == "concurrence":
            if pure_enough:
                value = concurrence_pure(_dominant_pure(rho))
            elif two_qubit:
                value = concurrence_mixed_2q(rho)
            else:
                raise UnsupportedDimensionError(
                    f"concurrence for mixed states needs dims (2, 2), got {rho.dims}"
                )
            records.append(_record(measure, value, "analytic"))
        elif measure == "monogamy":
            report = monogamy_check(_dominant_pure(rho))
            records.append(
                _record(
                    measure,
                    report.residual,
                    "analytic",
                    detail={
                        "c_squared": report.c_squared,
                        "d_total": report.d_total,
                        "d_local_a": report.d_local_a,
                        "d_local_b": report.d_local_b,
                    },
                )
            )
    return records


def _detail_text(detail: dict) -> str:
    parts = []
    for key, value in detail.items():
        if isinstance(value, bool):
            text = _fmt_bool(value)
        elif isinstance(value, float):
            text = _fmt(value)
        elif isinstance(value, list):
            text = " ".join(_fmt(v) for v in value)
        else:
            text = str(value)
        parts.append(f"{key}={text}")
    return ";".join(parts)


def _render_records(records, fmt: str, dims) -> str:
    if fmt == "json":
        payload = {"dims": list(dims), "records": records}
        return json.dumps(payload) + "\n"
    if fmt == "csv":
        lines = ["measure,value,method,converged,detail"]
        for rec in records:
            conv = "" if rec["converged"] is None else _fmt_bool(rec["converged"])
            value = "" if rec["value"] is None else _fmt(rec["value"])
            lines.append(
                f"{rec['measure']},{value},{rec['method']},{conv},{_detail_text(rec['detail'])}"
            )
        return "\n".join(lines) + "\n"
    header = f"{'measure':<12} {'value':>18} {'method':<9} {'conv':<5} detail"
    lines = [header, "-" * len(header)]
    for rec in records:
        conv = "-" if rec["converged"] is None else ("yes" if rec["converged"] else "NO")
        value = "" if rec["value"] is None else _fmt(rec["value"])
        lines.append(
            f"{rec['measure']:<12} {value:>18} {rec['method']:<9} {conv:<5} "
            f"{_detail_text(rec['detail'])}"
        )
    return "\n".join(lines) + "\n"


def _emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    rho = load_state(args.state)
    cfg = _optimizer_config(args)
    records = _analyze_records(rho, args.measures, args.method, cfg)
    _emit(_render_records(records, args.format, rho.dims), args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.family != "werner":
        raise UnsupportedDimensionError(f"unknown sweep family {args.family!r}")
    rows = werner_sweep(args.lo, args.hi, args.steps)
    lines = [",".join(SWEEP_COLUMNS)]
    for row in rows:
        cells = []
        for col in SWEEP_COLUMNS:
            value = row[col]
            cells.append(_fmt_bool(value) if isinstance(value, bool) else _fmt(value))
        lines.append(",".join(cells))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    trials, tol = SUITE_DEFAULTS[args.suite]
    if args.trials is not None:
        trials = args.trials
    if args.tol is not None:
        tol = args.tol
    cfg = _optimizer_config(args)
    kw = {"trials": trials, "seed": args.seed, "tol": tol, "workers": args.workers}
    if args.suite == "monogamy":
        dims = MONOGAMY_DIMS if args.dims in (None, "all") else (args.dims,)
        result = monogamy_campaign(dims=dims, **kw)
    elif args.suite == "analytic-vs-numeric":
        result = discord_closed_form_campaign(config=cfg, **kw)
    elif args.suite == "corollary2":
        dims = PURE_DISCORD_DIMS if args.dims in (None, "all") else (args.dims,)
        result = pure_state_discord_campaign(dims=dims, config=cfg, **kw)
    elif args.suite == "theorem5":
        result = class3_extrema_campaign(config=cfg, **kw)
    elif args.suite == "eq64":
        result = class3_sum_rule_campaign(**kw)
    else:
        result = mixed_state_bound_campaign(samples=args.samples, **kw)
    print(result.summary())
    return EXIT_OK if result.passed else EXIT_VERIFY_FAILED


def cmd_generate(args) -> int:
    if args.kind == "bell":
        rho = make_bell(args.which).to_density()
    elif args.kind == "werner":
        if args.p is None:
            raise DiscohError("werner generation needs --p")
        rho = make_werner(args.p)
    elif args.kind == "random-pure":
        rho = random_pure(args.dims, args.seed).to_density()
    elif args.kind == "random-mixed":
        m, n = args.dims
        rank = args.rank if args.rank is not None else m * n
        rho = random_mixed(args.dims, rank, args.seed)
    else:  # product
        m, n = args.dims
        rng = np.random.default_rng(args.seed)
        a = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        amp = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
        rho = PureState(args.dims, amp).to_density()
    save_state(rho, args.output)
    return EXIT_OK


def _add_optimizer_flags(parser) -> None:
    parser.add_argument("--restarts", type=int, default=None, help="search restarts (default 32)")
    parser.add_argument(
        "--max-iterations", type=int, default=2000, help="iteration cap per restart"
    )
    parser.add_argument(
        "--objective-tolerance",
        type=float,
        default=1e-9,
        help="stop a restart when its objective spread drops below this",
    )
    parser.add_argument(
        "--fast",
        action="store_true",
        help="use 8 restarts; quicker, weaker global-search guarantee",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="discoh", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_an = sub.add_parser("analyze", help="measures of one state file")
    p_an.add_argument("state", help="input state JSON (dims plus re/im blocks)")
    p_an.add_argument("--measures", type=_parse_measures, default=["all"])
    p_an.add_argument(
        "--method", choices=("auto", "analytic", "numeric", "both"), default="auto"
    )
    p_an.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_an.add_argument("--output", "-o", default=None)
    p_an.add_argument("--seed", type=int, default=0)
    _add_optimizer_flags(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_sw = sub.add_parser("sweep", help="closed-form measure table over a state family")
    p_sw.add_argument("--family", choices=("werner",), default="werner")
    p_sw.add_argument("--lo", type=float, default=0.0)
    p_sw.add_argument("--hi", type=float, default=1.0)
    p_sw.add_argument("--steps", type=int, default=101)
    p_sw.add_argument("--output", "-o", default=None)
    p_sw.add_argument("--seed", type=int, default=0)
    p_sw.set_defaults(func=cmd_sweep)

    p_ve = sub.add_parser("verify", help="randomized verification campaigns")
    p_ve.add_argument("suite", choices=tuple(SUITE_DEFAULTS))
    p_ve.add_argument("--trials", type=int, default=None)
    p_ve.add_argument("--dims", type=_parse_dims_or_all, default=None)
    p_ve.add_argument("--samples", type=int, default=64, help="decompositions per trial")
    p_ve.add_argument("--seed", type=int, default=0)
    p_ve.add_argument("--tol", type=float, default=None)
    p_ve.add_argument("--workers", type=int, default=1)
    _add_optimizer_flags(p_ve)
    p_ve.set_defaults(func=cmd_verify)

    p_ge = sub.add_parser("generate", help="write a state file")
    p_ge.add_argument(
        "kind", choices=("bell", "werner", "random-pure", "random-mixed", "product")
    )
    p_ge.add_argument("--which", default="phi+", help="bell flavor: phi+ phi- psi+ psi-")
    p_ge.add_argument("--p", type=float, default=None, help="werner mixing parameter")
    p_ge.add_argument("--dims", type=_parse_dims, default=(2, 2))
    p_ge.add_argument("--rank", type=int, default=None)
    p_ge.add_argument("--seed", type=int, default=0)
    p_ge.add_argument("--output", "-o", required=True)
    p_ge.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except DiscohError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main_entry() -> None:
    sys.exit(main())
