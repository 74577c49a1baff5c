"""Command-line front end.

Subcommands:

* ``scan``   -- sweep a state family and write one CSV row per (n, parameter)
  grid point, optionally rendering a figure next to the CSV.
* ``check``  -- LSUR verdict for a single Dicke-basis state from a JSON file.
* ``oracle`` -- compare the analytic path against the brute-force register
  computation on random symmetric states.

Exit codes: 0 ok / relation satisfied, 1 violation detected (check mode),
2 any error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import numlin, oracle, sampling, states, tomo
from .errors import DomainError, LsurkitError, ResourceError
from .lsur import AxisAngle, chi_brute, chi_functional, lsur_verdict, werner_lsur_scan
from .spin import ID2, PAULIS

FAMILIES = ("werner", "ku", "wclass")
DEFAULT_GRIDS = {
    "werner": (0.0, 1.0, 101),
    "ku": (0.0, np.pi / 2, 201),
    "wclass": (0.001, 0.999, 201),
}
DEFAULT_N_LIST = {
    "werner": (1,),
    "ku": (1, 2, 3, 4, 5),
    "wclass": (1, 2, 3, 4, 5),
}
CSV_HEADER = "family,n,param,c_L,lhs,bound,violated"
ORACLE_TOL = 1e-9
VIOLATION_ATOL = 1e-10


@dataclass(frozen=True)
class ScanConfig:
    family: str
    n_list: tuple[int, ...]
    start: float
    stop: float
    points: int
    out: str
    seed: int = 0
    plot: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if not self.n_list or any(n < 1 for n in self.n_list):
            raise DomainError("n values must be positive integers")
        if self.points < 2:
            raise DomainError("grid needs at least 2 points")
        if not self.start < self.stop:
            raise DomainError("grid start must be below stop")
        if self.family in ("werner", "wclass") and not (
            0.0 <= self.start and self.stop <= 1.0
        ):
            raise DomainError(f"{self.family} parameter grid must stay within [0, 1]")


@dataclass(frozen=True)
class ScanRow:
    family: str
    n: int
    param: float
    c_least: float
    lhs: float
    bound: float
    violated: bool


def _sig(value: float) -> str:
    """12-significant-digit, locale-free formatting."""
    return format(float(value), ".12g")


def _werner_c_least(x: float) -> float:
    rho = states.werner(x)
    s = np.array([np.trace(rho @ np.kron(p, ID2)).real for p in PAULIS])
    t = np.array(
        [[np.trace(rho @ np.kron(pa, pb)).real for pb in PAULIS] for pa in PAULIS]
    )
    return float(np.linalg.eigvalsh(t - np.outer(s, s))[0])


def compute_scan(config: ScanConfig) -> list[ScanRow]:
    grid = np.linspace(config.start, config.stop, config.points)
    rows: list[ScanRow] = []
    if config.family == "werner":
        # inherently a two-qubit family: single n = 1 series against bound 4
        for x, lhs in werner_lsur_scan(grid):
            rows.append(
                ScanRow(
                    family="werner",
                    n=1,
                    param=x,
                    c_least=_werner_c_least(x),
                    lhs=lhs,
                    bound=4.0,
                    violated=bool(lhs < 4.0 - VIOLATION_ATOL),
                )
            )
        return rows
    for n in config.n_list:
        for value in grid:
            if config.family == "ku":
                bp = states.ku_bloch_analytic(2 * n, float(value))
                c_least = tomo.covariance(bp).c_least
            else:
                cov = states.wclass_covariance(2 * n, float(value))
                c_least = float(numlin.eig_hermitian(cov).eigenvalues[0])
            lhs = n * (1.0 + n * c_least)
            rows.append(
                ScanRow(
                    family=config.family,
                    n=n,
                    param=float(value),
                    c_least=c_least,
                    lhs=lhs,
                    bound=float(n),
                    violated=bool(lhs < n - VIOLATION_ATOL),
                )
            )
    return rows


def write_csv(rows: list[ScanRow], path: str) -> None:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.family},{r.n},{_sig(r.param)},{_sig(r.c_least)},"
            f"{_sig(r.lhs)},{_sig(r.bound)},{'true' if r.violated else 'false'}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def cmd_scan(config: ScanConfig) -> int:
    rows = compute_scan(config)
    write_csv(rows, config.out)
    print(f"wrote {len(rows)} rows to {config.out}")
    if config.plot:
        from . import plotting

        plotting.render_scan(rows, config.plot)
        print(f"wrote figure to {config.plot}")
    return 0


def _format_matrix(m: np.ndarray) -> str:
    return np.array2string(np.asarray(m), precision=12, suppress_small=False)


def cmd_check(path: str, as_json: bool = False) -> int:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return 2
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        print(
            f"error: invalid JSON in {path}: {exc.msg} "
            f"(line {exc.lineno}, column {exc.colno})",
            file=sys.stderr,
        )
        return 2
    psi = states.SymmetricState.from_json_obj(obj)
    if psi.n_qubits % 2:
        print(
            f"error: the LSUR verdict needs an even qubit count (got N = {psi.n_qubits}); "
            "the bipartition splits N = 2n qubits into two halves",
            file=sys.stderr,
        )
        return 2
    n = psi.n_qubits // 2
    bp = tomo.bloch_from_symmetric(psi)
    report = tomo.covariance(bp)
    verdict = lsur_verdict(bp, n)
    boundary = abs(verdict.lhs - verdict.bound) <= VIOLATION_ATOL
    if as_json:
        print(
            json.dumps(
                {
                    "n_qubits": psi.n_qubits,
                    "n": verdict.n,
                    "s": list(bp.s),
                    "T": [list(row) for row in bp.t],
                    "C": [list(row) for row in report.c],
                    "c_L": verdict.c_least,
                    "chi": verdict.chi_value,
                    "lhs": verdict.lhs,
                    "bound": verdict.bound,
                    "violated": verdict.violated,
                    "boundary": boundary,
                    "ppt_negative": verdict.ppt_negative,
                }
            )
        )
    else:
        print(f"n_qubits: {psi.n_qubits} (bipartition n = {verdict.n})")
        print(f"s: {np.array2string(bp.s, precision=12)}")
        print(f"T:\n{_format_matrix(bp.t)}")
        print(f"C:\n{_format_matrix(report.c)}")
        print(f"c_L: {_sig(verdict.c_least)}")
        print(f"lhs: {_sig(verdict.lhs)}")
        print(f"bound: {_sig(verdict.bound)}")
        print(f"violated: {'true' if verdict.violated else 'false'}"
              + (" (boundary)" if boundary else ""))
        print(f"ppt_negative: {'true' if verdict.ppt_negative else 'false'}")
    return 1 if verdict.violated else 0


def cmd_oracle(n_qubits: int, trials: int, seed: int) -> int:
    if n_qubits > oracle.QUBIT_CAP:
        raise ResourceError(
            f"{n_qubits} qubits exceeds the brute-force cap of {oracle.QUBIT_CAP}"
        )
    if n_qubits < 2 or n_qubits % 2:
        raise DomainError(f"oracle mode needs an even qubit count >= 2, got {n_qubits}")
    if trials < 1:
        raise DomainError("trials must be positive")
    n = n_qubits // 2
    rng = np.random.default_rng(seed)
    max_chi_dev = 0.0
    max_lhs_dev = 0.0
    for _ in range(trials):
        psi = sampling.random_symmetric_state(n_qubits, rng)
        aa = sampling.random_axis_angle(rng)
        bp = tomo.bloch_from_symmetric(psi)
        ts = oracle.embed_dicke(psi)
        max_chi_dev = max(max_chi_dev, abs(chi_functional(bp, aa) - chi_brute(ts, aa)))
        report = tomo.covariance(bp)
        lhs_closed = n * (1.0 + n * report.c_least)
        lhs_brute = oracle.lsur_lhs_brute(
            ts, AxisAngle(axis=report.axis_least, theta=np.pi)
        )
        max_lhs_dev = max(max_lhs_dev, abs(lhs_closed - lhs_brute))
    worst = max(max_chi_dev, max_lhs_dev)
    status = "PASS" if worst <= ORACLE_TOL else "FAIL"
    print(
        f"{status}: N={n_qubits}, trials={trials}, seed={seed}; "
        f"max chi deviation {max_chi_dev:.3e}, "
        f"max lhs deviation {max_lhs_dev:.3e} (tolerance {ORACLE_TOL:.1e})"
    )
    return 0 if status == "PASS" else 2


def parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must look like start:stop:points, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise DomainError(f"cannot parse grid {text!r}: {exc}") from None


def parse_n_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise DomainError(f"cannot parse n list {text!r}: {exc}") from None
    if not values:
        raise DomainError("empty n list")
    return values


def read_config_file(path: str) -> dict[str, str]:
    """Flat key=value config; '#' starts a comment, flags take precedence."""
    known = {"family", "n", "grid", "out", "seed", "plot"}
    out: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in known:
            raise DomainError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value.strip()
    return out


def build_scan_config(args: argparse.Namespace) -> ScanConfig:
    cfg = read_config_file(args.config) if args.config else {}
    family = args.family or cfg.get("family")
    if not family:
        raise DomainError("scan needs a --family (or family= in the config file)")
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; choose from {FAMILIES}")
    n_text = args.n if args.n is not None else cfg.get("n")
    n_list = parse_n_list(n_text) if n_text else DEFAULT_N_LIST[family]
    grid_text = args.grid if args.grid is not None else cfg.get("grid")
    start, stop, points = (
        parse_grid(grid_text) if grid_text else DEFAULT_GRIDS[family]
    )
    out = args.out if args.out is not None else cfg.get("out")
    if not out:
        raise DomainError("scan needs an --out CSV path (or out= in the config file)")
    seed = args.seed if args.seed is not None else int(cfg.get("seed", 0))
    plot = args.plot if args.plot is not None else cfg.get("plot")
    return ScanConfig(
        family=family,
        n_list=n_list,
        start=start,
        stop=stop,
        points=points,
        out=out,
        seed=seed,
        plot=plot,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsurkit",
        description="Pairwise-entanglement tests for symmetric multiqubit states "
        "via local sum uncertainty relation violation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="sweep a state family and write a CSV")
    p_scan.add_argument("--family", choices=FAMILIES, help="state family to sweep")
    p_scan.add_argument("--n", help="comma-separated bipartition sizes, e.g. 2,3,4")
    p_scan.add_argument("--grid", help="parameter grid as start:stop:points")
    p_scan.add_argument("--out", help="output CSV path")
    p_scan.add_argument("--seed", type=int, help="seed recorded for randomized checks")
    p_scan.add_argument("--plot", help="also render a figure to this file")
    p_scan.add_argument("--config", help="flat key=value config file; flags override")

    p_check = sub.add_parser("check", help="LSUR verdict for a JSON state file")
    p_check.add_argument("state_file", help="JSON file with n_qubits and dicke_amplitudes")
    p_check.add_argument("--json", action="store_true", help="machine-readable output")

    p_oracle = sub.add_parser(
        "oracle", help="compare analytic and brute-force paths on random states"
    )
    p_oracle.add_argument("--n-qubits", type=int, required=True, help="even qubit count <= 10")
    p_oracle.add_argument("--trials", type=int, default=50, help="number of random states")
    p_oracle.add_argument("--seed", type=int, default=0, help="random seed")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "scan":
            return cmd_scan(build_scan_config(args))
        if args.command == "check":
            return cmd_check(args.state_file, as_json=args.json)
        if args.command == "oracle":
            return cmd_oracle(args.n_qubits, args.trials, args.seed)
    except (LsurkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
