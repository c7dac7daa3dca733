"""Command-line front end: curve sweeps, figure presets and oracle checks.

Every command writes CSV: ``#``-prefixed header lines echoing the
configuration, one column-name row, then data with 17 significant digits.
Exit codes: 0 success, 1 failed oracle check, 2 domain/config error,
3 numerical non-convergence.
"""
import argparse
import io
import os
import sys
from dataclasses import dataclass, field
from math import exp, isclose

import numpy as np

from . import __version__
from .deformed import DeformationParams, ModeDispersion, Statistics, energy_bounds, invert_mode_energy
from .errors import ConvergenceError, QuasibosonError
from .hydrogen import delta_S, entropy_hydrogen_s
from .oracle import canonical_phi, fock_spectrum, spectrum_entropy, spectrum_purity, superposition_spectrum
from .specfun import QuadratureConfig
from .states import (
    CoherentParams,
    FockSuperposition,
    coherent_energy,
    coherent_entropy,
    coherent_purity,
    entropy_fock,
    entropy_fock_vs_energy,
    entropy_general,
    entropy_single_vs_energy,
    general_weight_total,
    per_mode_entropy_vs_energy,
    per_mode_occupation,
    per_mode_purity_vs_energy,
    purity_fock,
    purity_general,
    purity_single_vs_energy,
)

COMMANDS = ("single", "fock", "permode", "coherent", "hydrogen", "general", "oracle-check", "figure")
ORACLE_TOL = 1e-10
DEFAULT_POINTS = 200
DEFAULT_M_SWEEP = (1, 2, 3, 4)


class ConfigError(QuasibosonError, ValueError):
    """Bad or inconsistent command-line configuration."""


class OracleMismatch(QuasibosonError):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    grid: tuple = None
    output_path: str = None
    format: str = "csv"


@dataclass
class Table:
    columns: list
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)


# -- formatting ---------------------------------------------------------------


def _fmt(value):
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def render_csv(cfg, table):
    buf = io.StringIO()
    buf.write(f"# quasiboson {__version__}\n")
    buf.write(f"# command: {cfg.command}\n")
    for key in sorted(cfg.params):
        value = cfg.params[key]
        if value is None:
            continue
        if isinstance(value, (list, tuple)):
            value = ",".join(_fmt(v) for v in value)
        buf.write(f"# {key}={_fmt(value)}\n")
    if cfg.grid is not None:
        buf.write(f"# grid={':'.join(_fmt(v) for v in cfg.grid)}\n")
    for note in table.notes:
        buf.write(f"# {note}\n")
    buf.write(",".join(table.columns) + "\n")
    for row in table.rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


# -- parameter helpers --------------------------------------------------------


def _m_values(params, default):
    if params.get("m") is not None:
        return list(params["m"])
    if params.get("f") is not None:
        return [DeformationParams.from_f(f).m for f in params["f"]]
    return list(default)


def _eps(params, default=1):
    return Statistics.coerce(params.get("eps", default) if params.get("eps") is not None else default)


def _quad(params):
    tol = params.get("tol")
    return QuadratureConfig() if tol is None else QuadratureConfig(tol, tol)


def _points(params, grid_default=DEFAULT_POINTS):
    return int(params.get("points") or grid_default)


def _linspace(cfg, start, stop, points, open_start=False, open_stop=False):
    """Grid from --grid if given, else the preset range."""
    if cfg.grid is not None:
        start, stop, points = cfg.grid
        return np.linspace(start, stop, int(points)).tolist()
    if open_start and open_stop:
        return np.linspace(start, stop, points + 2)[1:-1].tolist()
    if open_start:
        return np.linspace(start, stop, points + 1)[1:].tolist()
    if open_stop:
        return np.linspace(start, stop, points + 1)[:-1].tolist()
    return np.linspace(start, stop, points).tolist()


def _dispersion(params):
    return ModeDispersion(
        float(params.get("omega0") if params.get("omega0") is not None else 1.0),
        float(params.get("delta_omega") if params.get("delta_omega") is not None else 0.1),
    )


# -- table builders -----------------------------------------------------------


def single_table(cfg, eps, m_values=None, with_purity=True):
    lo, hi = (0.5, 1.5) if eps == Statistics.FERMIONIC else (1.5, 2.5)
    grid = _linspace(cfg, lo, hi, _points(cfg.params), open_start=eps == -1, open_stop=eps == 1)
    cols = ["E_over_hbar_omega", "S_1_quasibos"] + (["P_pur_def"] if with_purity else [])
    blocks = [None] if m_values is None else m_values
    table = Table((["m"] if m_values is not None else []) + cols)
    for m in blocks:
        for e in grid:
            row = [e, entropy_single_vs_energy(e, eps)]
            if with_purity:
                row.append(purity_single_vs_energy(e, eps))
            table.rows.append(([m] if m is not None else []) + row)
    if m_values is not None:
        table.notes.append(
            "single-quasiboson energy per m: " + " ".join(f"m={m}:E={_fmt(1.5 - int(eps) / m)}" for m in m_values)
        )
    return table


def fock_occupation_table(params, eps, m_values, n_max):
    anchor = "S_ex1"
    table = Table(["m", "n", anchor, "P_Fock"])
    for m in m_values:
        p = DeformationParams(m, eps)
        top = min(m, n_max) if eps == 1 else n_max
        for n in range(top + 1):
            table.rows.append([m, n, entropy_fock(n, p), purity_fock(n, p)])
    return table


def fock_energy_table(cfg, eps, m_values, quantity):
    if eps == Statistics.FERMIONIC:
        names = {"S": "S_1quas_ferm", "P": "P_Fock_ferm"}
    else:
        names = {"S": "S_1quas_bos", "P": "P_Fock_bos"}
    cols = ["m", "branch", "E_over_hbar_omega", "n"]
    cols += [names[q] for q in quantity]
    table = Table(cols)
    for m in m_values:
        p = DeformationParams(m, eps)
        lo, hi = energy_bounds(p)
        grid = _linspace(cfg, lo, hi if hi is not None else 5.0, _points(cfg.params))
        for e in grid:
            roots = invert_mode_energy(e, p)
            for (branch, s), n in zip(entropy_fock_vs_energy(e, p), roots):
                row = [m, branch.value, e, n]
                for q in quantity:
                    row.append(s if q == "S" else exp(-s))
                table.rows.append(row)
    return table


def permode_table(cfg, eps, m_values, quantity, scaled):
    disp = _dispersion(cfg.params)
    omega = abs(disp.omega0 - 0.5 * disp.delta_omega)
    if scaled:
        if disp.delta_omega == 0 or omega == 0:
            raise ConfigError("scaled per-mode units need delta_omega != 0 and omega0 != delta_omega/2")
        e_unit = omega * omega / disp.delta_omega
        s_unit = omega / disp.delta_omega
        e_col = "E_over_hbar_omega2_per_delta_omega"
    else:
        e_unit = s_unit = 1.0
        e_col = "E_over_hbar"
    cols = ["m", e_col, "n"]
    cols += ["S_ex2" + ("_over_omega_per_delta_omega" if scaled else "") if q == "S" else "P_per_mode" for q in quantity]
    table = Table(cols)
    if scaled:
        table.notes.append(f"omega=|omega0-delta_omega/2|={_fmt(omega)}")
    grid = _linspace(cfg, 0.0, 2.0 if scaled else 20.0, _points(cfg.params))
    for m in m_values:
        p = DeformationParams(m, eps)
        for e in grid:
            energy = e * e_unit
            row = [m, e, per_mode_occupation(energy, disp, p)]
            for q in quantity:
                if q == "S":
                    row.append(per_mode_entropy_vs_energy(energy, disp, p) / s_unit)
                else:
                    row.append(per_mode_purity_vs_energy(energy, disp, p))
            table.rows.append(row)
    return table


def coherent_table(cfg, m_values):
    amp_max = float(cfg.params.get("amp_max") if cfg.params.get("amp_max") is not None else 3.0)
    grid = _linspace(cfg, 0.0, amp_max, _points(cfg.params))
    table = Table(["m", "amp", "E_coherent", "S_coherent", "P_coherent"])
    for m in m_values:
        for a in grid:
            cp = CoherentParams(a, m)
            table.rows.append([m, a, coherent_energy(cp), coherent_entropy(cp), coherent_purity(cp)])
    return table


def hydrogen_table(cfg):
    quad = _quad(cfg.params)
    n_max = cfg.params.get("n")
    if n_max is not None:
        vol = float(cfg.params.get("vol_ratio") or 1.0)
        table = Table(["n", "E_over_Ry", "delta_S_S_ent4", "S_ent3"])
        for n in range(1, int(n_max) + 1):
            table.rows.append([n, -1.0 / (n * n), delta_S(-1.0 / (n * n), quad), entropy_hydrogen_s(n, vol, quad)])
        return table
    grid = _linspace(cfg, -1.0, -0.01, _points(cfg.params))
    table = Table(["E_over_Ry", "delta_S_S_ent4"])
    for e in grid:
        table.rows.append([e, delta_S(e, quad)])
    return table


def general_table(cfg):
    params = cfg.params
    eps = _eps(params)
    m_values = _m_values(params, (3,))
    occupations = params.get("n_list") or [1, 2]
    table = Table(["m", "eps", "occupations", "S_mchar3", "S_oracle", "abs_diff", "P_closed", "P_oracle", "weight_total"])
    for m in m_values:
        p = DeformationParams(m, eps)
        fs = FockSuperposition.equal_superposition(occupations, p)
        spec = superposition_spectrum(fs)
        s_closed, s_oracle = entropy_general(fs), spectrum_entropy(spec)
        table.rows.append(
            [m, int(eps), " ".join(str(k) for k in occupations), s_closed, s_oracle, abs(s_closed - s_oracle),
             purity_general(fs), spectrum_purity(spec), general_weight_total(fs)]
        )
    return table


def oracle_check_table(cfg):
    params = cfg.params
    eps = _eps(params)
    m_values = _m_values(params, (4,))
    n_values = params.get("n_list") or [3]
    seed = params.get("seed")
    table = Table(["m", "n", "eps", "S_closed", "S_oracle", "abs_diff_S", "P_closed", "P_oracle", "abs_diff_P", "pass"])
    worst = 0.0
    for m in m_values:
        p = DeformationParams(m, eps)
        phi = canonical_phi(m, seed)
        for n in n_values:
            spec = fock_spectrum(m, n, eps, phi)
            s_c, s_o = entropy_fock(n, p), spectrum_entropy(spec)
            p_c, p_o = purity_fock(n, p), spectrum_purity(spec)
            d = max(abs(s_c - s_o), abs(p_c - p_o))
            worst = max(worst, d)
            table.rows.append([m, n, int(eps), s_c, s_o, abs(s_c - s_o), p_c, p_o, abs(p_c - p_o), d <= ORACLE_TOL])
    return table, worst


FIGURE_CAPTIONS = {
    1: "entropy vs energy, single quasiboson, fermionic constituents",
    2: "entropy vs energy, single quasiboson, bosonic constituents",
    3: "Delta S vs energy, hydrogen atom",
    4: "entropy vs occupation, one-mode Fock state, fermionic constituents",
    5: "entropy vs occupation, one-mode Fock state, bosonic constituents",
    6: "entropy vs energy, one-mode Fock state, fermionic constituents (two branches)",
    7: "entropy vs energy, one-mode Fock state, bosonic constituents",
    8: "entropy vs energy, one quasiboson per mode, fermionic constituents",
    9: "entropy vs energy, one quasiboson per mode, bosonic constituents",
    10: "entropy vs mean energy, coherent state",
    11: "purity vs energy, one-mode Fock state, fermionic constituents (two branches)",
    12: "purity vs energy, one-mode Fock state, bosonic constituents",
    13: "purity vs energy, one quasiboson per mode, fermionic constituents",
    14: "purity vs energy, one quasiboson per mode, bosonic constituents",
}


def figure_table(cfg):
    number = cfg.params.get("figure")
    if number not in FIGURE_CAPTIONS:
        raise ConfigError(f"unknown figure {number}; choose 1-14")
    params = cfg.params
    fermi, bose = Statistics.FERMIONIC, Statistics.BOSONIC
    if number in (1, 2):
        table = single_table(cfg, fermi if number == 1 else bose, _m_values(params, (2, 3, 5)), with_purity=False)
    elif number == 3:
        table = hydrogen_table(cfg)
    elif number in (4, 5):
        n_max = int(params.get("n") if params.get("n") is not None else 10)
        table = fock_occupation_table(params, fermi if number == 4 else bose, _m_values(params, DEFAULT_M_SWEEP), n_max)
    elif number in (6, 7):
        table = fock_energy_table(cfg, fermi if number == 6 else bose, _m_values(params, DEFAULT_M_SWEEP), ["S"])
    elif number in (11, 12):
        table = fock_energy_table(cfg, fermi if number == 11 else bose, _m_values(params, DEFAULT_M_SWEEP), ["P"])
    elif number in (8, 9):
        table = permode_table(cfg, fermi if number == 8 else bose, _m_values(params, DEFAULT_M_SWEEP), ["S"], True)
    elif number in (13, 14):
        table = permode_table(cfg, fermi if number == 13 else bose, _m_values(params, DEFAULT_M_SWEEP), ["P"], True)
    else:
        table = coherent_table(cfg, _m_values(params, (2, 3, 5)))
    table.notes.insert(0, f"figure {number}: {FIGURE_CAPTIONS[number]}")
    return table


def build_table(cfg):
    """Compute the full output table for a configuration (no I/O)."""
    params = cfg.params
    cmd = cfg.command
    if cmd == "single":
        return single_table(cfg, _eps(params))
    if cmd == "fock":
        eps = _eps(params)
        m_values = _m_values(params, (4,))
        if params.get("n") is not None and cfg.grid is None:
            return fock_occupation_table(params, eps, m_values, int(params["n"]))
        return fock_energy_table(cfg, eps, m_values, ["S", "P"])
    if cmd == "permode":
        return permode_table(cfg, _eps(params), _m_values(params, (2,)), ["S", "P"], False)
    if cmd == "coherent":
        return coherent_table(cfg, _m_values(params, (2,)))
    if cmd == "hydrogen":
        return hydrogen_table(cfg)
    if cmd == "general":
        return general_table(cfg)
    if cmd == "oracle-check":
        table, worst = oracle_check_table(cfg)
        if worst > ORACLE_TOL:
            raise OracleMismatch(f"closed form and oracle differ by {worst:.3g} > {ORACLE_TOL}", table)
        return table
    if cmd == "figure":
        return figure_table(cfg)
    raise ConfigError(f"unknown command {cmd!r}")


def _emit(cfg, text):
    if cfg.output_path:
        tmp = f"{cfg.output_path}.tmp{os.getpid()}"
        with open(tmp, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, cfg.output_path)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def run(cfg):
    """Execute one configuration; returns the process exit code."""
    try:
        table = build_table(cfg)
    except OracleMismatch as exc:
        _emit(cfg, render_csv(cfg, exc.args[1]))
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (QuasibosonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, render_csv(cfg, table))
    return 0


# -- argument parsing ---------------------------------------------------------


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _grid(text):
    parts = text.split(":")
    try:
        start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    except (ValueError, IndexError):
        raise argparse.ArgumentTypeError(f"grid must be start:stop:points, got {text!r}") from None
    if len(parts) != 3 or points < 2:
        raise argparse.ArgumentTypeError("grid needs exactly start:stop:points with points >= 2")
    return start, stop, points


def _eps_arg(text):
    try:
        return int(Statistics.coerce(text))
    except QuasibosonError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    deform = common.add_mutually_exclusive_group()
    deform.add_argument("--m", type=_int_list, help="deformation level(s) m, comma separated")
    deform.add_argument("--f", type=_float_list, help="deformation parameter(s) f = 2/m")
    common.add_argument("--eps", type=_eps_arg, help="constituent statistics: +1 fermionic, -1 bosonic")
    common.add_argument("--n", type=_int_list, help="occupation number(s) or maximum n")
    common.add_argument("--amp-max", type=float, help="largest coherent amplitude |A|")
    common.add_argument("--omega0", type=float, help="base mode frequency")
    common.add_argument("--delta-omega", type=float, help="frequency increment between modes")
    common.add_argument("--grid", type=_grid, help="sweep grid start:stop:points (inclusive)")
    common.add_argument("--points", type=int, help="number of sweep points for preset ranges")
    common.add_argument("--vol-ratio", type=float, help="confining volume V/a0^3 (hydrogen)")
    common.add_argument("--tol", type=float, help="quadrature tolerance (absolute and relative)")
    common.add_argument("--out", help="write CSV here instead of standard output")
    common.add_argument("--seed", type=int, help="seed for random local unitaries (oracle-check)")

    parser = argparse.ArgumentParser(prog="quasiboson", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "single": "single quasiboson: entropy and purity vs energy",
        "fock": "one-mode Fock states: entropy and purity vs energy (or vs n with --n)",
        "permode": "one quasiboson per mode: entropy and purity vs energy",
        "coherent": "coherent state: parametric entropy vs mean energy",
        "hydrogen": "hydrogen atom: Delta S vs E/Ry (or per n with --n)",
        "general": "equal superposition of Fock states: general formula vs oracle",
        "oracle-check": "compare Fock closed forms with the brute-force oracle",
        "figure": "figure presets 1-14",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "figure":
            p.add_argument("number", type=int, help="figure number 1-14")
    return parser


def config_from_args(args):
    params = {
        "m": args.m,
        "f": args.f,
        "eps": args.eps,
        "amp_max": args.amp_max,
        "omega0": args.omega0,
        "delta_omega": args.delta_omega,
        "points": args.points,
        "vol_ratio": args.vol_ratio,
        "tol": args.tol,
        "seed": args.seed,
    }
    if args.n is not None:
        if args.command in ("general", "oracle-check"):
            params["n_list"] = args.n
        else:
            if len(args.n) != 1:
                raise ConfigError("--n takes a single value for this command")
            params["n"] = args.n[0]
    if args.command == "figure":
        params["figure"] = args.number
    if args.points is not None and args.points < 2:
        raise ConfigError("--points must be >= 2")
    if args.f is not None:
        for f in args.f:
            m = round(2 / f) if f > 0 else 0
            if m < 1 or not isclose(2 / m, f, rel_tol=1e-12):
                raise ConfigError(f"--f {f} is not 2/m for an integer m")
    return RunConfig(args.command, params, args.grid, args.out)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except QuasibosonError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
