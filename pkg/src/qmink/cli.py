"""Command-line front end.

Subcommands: sweep1 and sweep2 write residual CSVs over a parameter grid,
info and witness report entropic and entanglement quantities, tomogram
prints one outcome distribution, and check runs the seeded random-state
property suite.  Exit codes: 0 on success, 1 on invalid input, 2 when
check finds a counterexample to an asserted invariant.

Grids use start:end:count syntax with inclusive endpoints (count 1 keeps
just the start), lists are comma-separated, and (p, q) pairs are written
p:q.  The QMINK_TOL environment variable overrides the default validation
tolerance; an explicit --tol flag wins over the environment.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
from dataclasses import dataclass

import numpy as np

from .errors import QminkError
from .linalg import (
    DEFAULT_TOL,
    BlockPartition,
    DensityMatrix,
    eig_hermitian,
    partial_trace_first,
    partial_transpose_second,
    validate_density,
    zero_pad,
)
from .matio import format_matrix, read_matrix
from .minkowski import (
    FixedStateFamily,
    WernerFamily,
    one_param_residual,
    quadratic_residual_p2,
    sign_changes,
    sweep,
    two_param_residual,
)
from .rng import uniforms
from .states import XStateParams, random_density, x_state
from .tomography import (
    GRID_N_DEFAULT,
    REFINE_DEFAULT,
    TWO_PI,
    TomographyAngles,
    delta_info,
    marginals,
    quantum_mutual_info,
    tomogram,
)
from .witnesses import witness_report

_LN2 = math.log(2.0)


class _InputError(Exception):
    """Bad flag combination or unusable input file; maps to exit code 1."""


def _fmt(x: float) -> str:
    # the +0.0 folds negative zero into plain zero
    return f"{float(x) + 0.0:.17g}"


def _parse_grid(text: str) -> tuple[float, ...]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return (float(parts[0]),)
        if len(parts) != 3:
            raise ValueError
        start, end, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a number or start:end:count, got {text!r}"
        ) from None
    if count < 1:
        raise argparse.ArgumentTypeError(f"grid count must be >= 1, got {count}")
    if count == 1:
        return (start,)
    return tuple(float(v) for v in np.linspace(start, end, count))


def _parse_float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated numbers, got {text!r}"
        ) from None
    for v in values:
        if not v > 0.0:
            raise argparse.ArgumentTypeError(f"exponents must be > 0, got {v!r}")
    return values


def _parse_pq_list(text: str) -> tuple[tuple[float, float], ...]:
    pairs = []
    for tok in text.split(","):
        parts = tok.split(":")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"expected p:q pairs, got {tok!r}")
        try:
            p, q = float(parts[0]), float(parts[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected p:q pairs, got {tok!r}") from None
        if not (p > 0.0 and q > 0.0):
            raise argparse.ArgumentTypeError(f"p and q must be > 0, got {tok!r}")
        pairs.append((p, q))
    return tuple(pairs)


def _parse_blocks(text: str) -> BlockPartition:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected n:m, got {text!r}")
    try:
        return BlockPartition(int(parts[0]), int(parts[1]))
    except (ValueError, QminkError):
        raise argparse.ArgumentTypeError(f"bad partition {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)
        # let grid values with a leading minus (e.g. -0.3333:1:201) parse as
        # arguments rather than unknown flags
        self._negative_number_matcher = re.compile(r"^-\d|^-\.\d")

    # invalid input is contractually exit code 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    """Resolved flags for one invocation."""

    command: str
    tol: float
    werner: bool = False
    file: str | None = None
    xfile: str | None = None
    r_grid: tuple[float, ...] | None = None
    p_list: tuple[float, ...] = ()
    pq_list: tuple[tuple[float, float], ...] = ()
    pad: int | None = None
    blocks: BlockPartition | None = None
    out: str | None = None
    emit_plot_script: bool = False
    bits: bool = False
    grid_n: int = GRID_N_DEFAULT
    refine: int = REFINE_DEFAULT
    dim: int = 4
    rank: int | None = None
    samples: int = 100
    seed: int = 0
    record_pq: tuple[tuple[float, float], ...] = ()
    angles: TomographyAngles | None = None


def _resolve_tol(args) -> float:
    tol = getattr(args, "tol", None)
    if tol is None:
        env = os.environ.get("QMINK_TOL")
        if env is not None:
            try:
                tol = float(env)
            except ValueError:
                raise _InputError(f"QMINK_TOL={env!r} is not a number") from None
    if tol is None:
        tol = DEFAULT_TOL
    if not tol > 0.0:
        raise _InputError(f"tolerance must be > 0, got {tol!r}")
    return tol


def _config_from_args(args) -> RunConfig:
    kwargs = {"command": args.command, "tol": _resolve_tol(args)}
    for name in ("werner", "file", "xfile", "r_grid", "p_list", "pq_list", "pad",
                 "blocks", "out", "emit_plot_script", "bits", "grid_n", "refine",
                 "dim", "rank", "samples", "seed", "record_pq"):
        if hasattr(args, name):
            kwargs[name] = getattr(args, name)
    if args.command == "tomogram":
        kwargs["angles"] = TomographyAngles(
            theta1=args.theta1, theta2=args.theta2, phi1=args.phi1,
            phi2=args.phi2, psi1=args.psi1, psi2=args.psi2)
    return RunConfig(**kwargs)


def _default_partition(dim: int) -> BlockPartition:
    if dim == 4:
        return BlockPartition(2, 2)
    if dim % 2 == 0:
        return BlockPartition(2, dim // 2)
    return BlockPartition(1, dim)


def _load_x_params(path: str, tol: float) -> XStateParams:
    m = read_matrix(path)
    if m.shape != (4, 4):
        raise _InputError(f"{path}: X-state file must hold a 4x4 matrix, got {m.shape}")
    x_positions = {(0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)}
    for i in range(4):
        for j in range(4):
            if (i, j) not in x_positions and abs(m[i, j]) > tol:
                raise _InputError(
                    f"{path}: entry ({i + 1},{j + 1})={m[i, j]!r} breaks the X pattern"
                )
    return XStateParams(
        d1=m[0, 0].real, d2=m[1, 1].real, d3=m[2, 2].real, d4=m[3, 3].real,
        c14=complex(m[0, 3]), c23=complex(m[1, 2]),
    )


def _load_fixed_state(cfg: RunConfig) -> tuple[DensityMatrix, BlockPartition]:
    if cfg.xfile is not None:
        rho = x_state(_load_x_params(cfg.xfile, cfg.tol), tol=cfg.tol)
    else:
        m = read_matrix(cfg.file)
        if cfg.pad is not None:
            m = zero_pad(m, cfg.pad)
        rho = validate_density(m, tol=cfg.tol)
    part = cfg.blocks if cfg.blocks is not None else _default_partition(rho.dim)
    part.check(rho.dim)
    return rho, part


def _resolve_family(cfg: RunConfig):
    """State source shared by the sweep/info/witness/tomogram commands.

    Returns (family, r_grid) where r_grid is (None,) for fixed files.
    """
    if cfg.werner:
        if cfg.r_grid is None:
            raise _InputError("--werner requires --r")
        if cfg.blocks is not None and cfg.blocks != BlockPartition(2, 2):
            raise _InputError("--werner states use the 2:2 partition")
        if cfg.pad is not None:
            raise _InputError("--pad applies to --file inputs only")
        return WernerFamily(), cfg.r_grid
    if cfg.r_grid is not None:
        raise _InputError("--r applies to --werner only")
    rho, part = _load_fixed_state(cfg)
    return FixedStateFamily(rho, part), (None,)


def _write_text(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _crossing_comment(tag: str, locations) -> str:
    body = ",".join(_fmt(x) for x in locations) if locations else "none"
    return f"# sign_change {tag} crossings={body}"


def _run_sweep(cfg: RunConfig, use_pairs: bool) -> int:
    family, r_grid = _resolve_family(cfg)
    if use_pairs:
        if not cfg.pq_list:
            raise _InputError("--pq must list at least one p:q pair")
        pq_list = list(cfg.pq_list)
    else:
        if not cfg.p_list:
            raise _InputError("--p must list at least one exponent")
        pq_list = [(p, None) for p in cfg.p_list]
    result = sweep(family, list(r_grid), pq_list, tol=cfg.tol)

    dim = family.partition.dim
    has_quad = (not use_pairs) and any(p == 2.0 for p, _ in pq_list) and dim == 4
    has_rev = (not use_pairs) and any(p < 1.0 for p, _ in pq_list)
    quads = None
    if has_quad:
        quads = [quadratic_residual_p2(family.state_at(r)) for r in r_grid]

    header = "r,p,q,lhs,rhs,residual"
    if has_quad:
        header += ",quad_p2"
    if has_rev:
        header += ",reversed"
    lines = [header]
    for idx, row in enumerate(result.rows):
        fields = [
            "" if row.r is None else _fmt(row.r),
            _fmt(row.p),
            "" if row.q is None else _fmt(row.q),
            _fmt(row.lhs),
            _fmt(row.rhs),
            _fmt(row.residual),
        ]
        if has_quad:
            fields.append(_fmt(quads[idx // len(pq_list)]) if row.p == 2.0 else "")
        if has_rev:
            fields.append("true" if row.p < 1.0 else "false")
        lines.append(",".join(fields))
    for p, q, locs in result.crossings:
        tag = f"p={_fmt(p)} q={'' if q is None else _fmt(q)}"
        lines.append(_crossing_comment(tag, locs))
    if has_quad:
        gridded = all(r is not None for r in r_grid) and len(r_grid) >= 2
        locs = sign_changes(list(r_grid), quads) if gridded else ()
        lines.append(_crossing_comment("quad_p2", locs))
    _write_text(cfg.out, "\n".join(lines) + "\n")
    if cfg.emit_plot_script:
        _emit_plot_script(cfg.out, "sweep")
    return 0


def _info_rows(cfg: RunConfig, family, r_grid):
    scale = 1.0 / _LN2 if cfg.bits else 1.0
    for r in r_grid:
        rho = family.state_at(r)
        if rho.dim != 4 or family.partition != BlockPartition(2, 2):
            raise _InputError("info requires a 4x4 state on the 2:2 partition")
        rep = delta_info(rho, grid_n=cfg.grid_n, refine_iters=cfg.refine, tol=cfg.tol)
        wit = witness_report(rho, tol=cfg.tol)
        yield r, rep, wit, scale


def _run_info(cfg: RunConfig) -> int:
    family, r_grid = _resolve_family(cfg)
    if len(r_grid) == 1 and cfg.out is None:
        _, rep, wit, scale = next(_info_rows(cfg, family, r_grid))
        lines = [
            f"s1={_fmt(rep.s1 * scale)}",
            f"s2={_fmt(rep.s2 * scale)}",
            f"s12={_fmt(rep.s12 * scale)}",
            f"i_q={_fmt(rep.i_q * scale)}",
            f"i_t={_fmt(rep.i_t * scale)}",
            f"delta_i={_fmt(rep.delta_i * scale)}",
            f"trace_norm_pt={_fmt(wit.trace_norm_pt)}",
            f"negativity={_fmt(wit.negativity)}",
            f"concurrence={_fmt(wit.concurrence)}",
            f"argmax_theta1={_fmt(rep.argmax_angles.theta1)}",
            f"argmax_theta2={_fmt(rep.argmax_angles.theta2)}",
            f"argmax_psi1={_fmt(rep.argmax_angles.psi1)}",
            f"argmax_psi2={_fmt(rep.argmax_angles.psi2)}",
        ]
        _write_text(None, "\n".join(lines) + "\n")
        return 0
    lines = ["r,s1,s2,s12,i_q,i_t,delta_i,N,C"]
    for r, rep, wit, scale in _info_rows(cfg, family, r_grid):
        lines.append(",".join([
            "" if r is None else _fmt(r),
            _fmt(rep.s1 * scale), _fmt(rep.s2 * scale), _fmt(rep.s12 * scale),
            _fmt(rep.i_q * scale), _fmt(rep.i_t * scale), _fmt(rep.delta_i * scale),
            _fmt(wit.trace_norm_pt), _fmt(wit.concurrence),
        ]))
    _write_text(cfg.out, "\n".join(lines) + "\n")
    if cfg.emit_plot_script:
        _emit_plot_script(cfg.out, "info")
    return 0


def _run_witness(cfg: RunConfig) -> int:
    family, r_grid = _resolve_family(cfg)
    reports = []
    for r in r_grid:
        rho = family.state_at(r)
        if rho.dim != 4:
            raise _InputError("witness requires a 4x4 state")
        reports.append((r, witness_report(rho, tol=cfg.tol)))
    if len(reports) == 1 and cfg.out is None:
        _, wit = reports[0]
        lines = [
            f"trace_norm_pt={_fmt(wit.trace_norm_pt)}",
            f"negativity={_fmt(wit.negativity)}",
            f"concurrence={_fmt(wit.concurrence)}",
        ]
        _write_text(None, "\n".join(lines) + "\n")
        return 0
    lines = ["r,trace_norm_pt,negativity,concurrence"]
    for r, wit in reports:
        lines.append(",".join([
            "" if r is None else _fmt(r),
            _fmt(wit.trace_norm_pt), _fmt(wit.negativity), _fmt(wit.concurrence),
        ]))
    _write_text(cfg.out, "\n".join(lines) + "\n")
    if cfg.emit_plot_script:
        _emit_plot_script(cfg.out, "witness")
    return 0


def _run_tomogram(cfg: RunConfig) -> int:
    family, r_grid = _resolve_family(cfg)
    if len(r_grid) != 1:
        raise _InputError("tomogram expects a single r value")
    rho = family.state_at(r_grid[0])
    if rho.dim != 4:
        raise _InputError("tomogram requires a 4x4 state")
    t = tomogram(rho, cfg.angles)
    w1, w2 = marginals(t)
    lines = [
        f"w_uu={_fmt(t.w_uu)}",
        f"w_ud={_fmt(t.w_ud)}",
        f"w_du={_fmt(t.w_du)}",
        f"w_dd={_fmt(t.w_dd)}",
        f"w1_up={_fmt(w1[0])}",
        f"w1_down={_fmt(w1[1])}",
        f"w2_up={_fmt(w2[0])}",
        f"w2_down={_fmt(w2[1])}",
    ]
    _write_text(cfg.out, "\n".join(lines) + "\n")
    return 0


def _run_check(cfg: RunConfig) -> int:
    if cfg.dim < 2:
        raise _InputError(f"--dim must be >= 2, got {cfg.dim}")
    if cfg.samples < 1:
        raise _InputError(f"--samples must be >= 1, got {cfg.samples}")
    if cfg.rank is not None and not (1 <= cfg.rank <= cfg.dim):
        raise _InputError(f"--rank must lie in 1..{cfg.dim}, got {cfg.rank}")
    if cfg.pad is not None and cfg.pad < cfg.dim:
        raise _InputError(f"--pad must be >= --dim, got {cfg.pad}")
    eff_dim = cfg.pad if cfg.pad is not None else cfg.dim
    part = cfg.blocks if cfg.blocks is not None else _default_partition(eff_dim)
    part.check(eff_dim)
    tol = cfg.tol
    two_qubit = eff_dim == 4 and part == BlockPartition(2, 2)

    assert_p = (1.0, 1.25, 1.5, 2.0)
    reversed_p = (0.5,)
    assert_pq = ((1.25, 1.0), (1.5, 1.0), (2.0, 1.0))
    record_p = (3.0, 5.0, 10.0, 15.0)
    degenerate_p = (0.7, 1.7)
    stride = max(1, math.ceil(cfg.samples / 50))

    order: list[tuple[str, float]] = []
    for p in assert_p:
        order.append((f"one_param_p={_fmt(p)}", 1e-9))
    for p in reversed_p:
        order.append((f"reversed_p={_fmt(p)}", 1e-9))
    for p, q in assert_pq:
        order.append((f"two_param_p={_fmt(p)}_q={_fmt(q)}", 1e-9))
    order.append(("q1_reduction", 1e-10))
    order.append(("p_eq_q", 1e-9))
    if two_qubit:
        order.append(("quad_identity", 1e-12))
        order.append(("tomogram_norm", 1e-10))
        order.append(("phi_probe", 1e-10))
    order.append(("subadditivity", 1e-9))
    if two_qubit:
        order.append(("ppt_match", 0.0))
        order.append(("witness_bounds", 1e-10))
        order.append(("delta_info", 1e-6))
    if cfg.pad is not None:
        order.append(("pad_spectrum", 1e-11))
    limits = dict(order)
    worst = {name: -math.inf for name, _ in order}
    records = {f"one_param_p={_fmt(p)}": [math.inf, -math.inf] for p in record_p}
    pq_records = {
        f"two_param_p={_fmt(p)}_q={_fmt(q)}": [math.inf, -math.inf, 0]
        for p, q in cfg.record_pq
    }
    first_bad: tuple[int, str, DensityMatrix] | None = None

    def note(name: str, value: float, sample: int, rho: DensityMatrix) -> None:
        nonlocal first_bad
        if value > worst[name]:
            worst[name] = value
        if value > limits[name] and first_bad is None:
            first_bad = (sample, name, rho)

    for i in range(cfg.samples):
        rank = cfg.rank if cfg.rank is not None else (i % cfg.dim) + 1
        base = random_density(cfg.dim, rank, cfg.seed + i, tol=tol)
        if cfg.pad is not None:
            rho = validate_density(zero_pad(base, cfg.pad), tol=tol)
            w_base = np.sort(eig_hermitian(base, tol=tol).eigenvalues)
            w_pad = np.sort(eig_hermitian(rho, tol=tol).eigenvalues)
            extra = cfg.pad - cfg.dim
            dev = float(np.max(np.abs(w_pad[extra:] - w_base)))
            if extra:
                dev = max(dev, float(np.max(np.abs(w_pad[:extra]))))
            note("pad_spectrum", dev, i, rho)
        else:
            rho = base

        one = {}
        for p in assert_p:
            res = one_param_residual(rho, part, p, tol=tol).residual
            one[p] = res
            note(f"one_param_p={_fmt(p)}", res, i, rho)
        for p in reversed_p:
            res = one_param_residual(rho, part, p, tol=tol).residual
            note(f"reversed_p={_fmt(p)}", -res, i, rho)
        for p, q in assert_pq:
            res = two_param_residual(rho, part, p, q, tol=tol).residual
            note(f"two_param_p={_fmt(p)}_q={_fmt(q)}", res, i, rho)
            note("q1_reduction", abs(res - one[p]), i, rho)
        for p in degenerate_p:
            res = two_param_residual(rho, part, p, p, tol=tol).residual
            note("p_eq_q", abs(res), i, rho)
        for p in record_p:
            res = one_param_residual(rho, part, p, tol=tol).residual
            rec = records[f"one_param_p={_fmt(p)}"]
            rec[0] = min(rec[0], res)
            rec[1] = max(rec[1], res)
        for p, q in cfg.record_pq:
            res = two_param_residual(rho, part, p, q, tol=tol).residual
            rec = pq_records[f"two_param_p={_fmt(p)}_q={_fmt(q)}"]
            rec[0] = min(rec[0], res)
            rec[1] = max(rec[1], res)
            if res > 0.0:
                rec[2] += 1

        mi = quantum_mutual_info(rho, part, tol=tol)
        note("subadditivity", mi.s12 - mi.s1 - mi.s2, i, rho)

        if two_qubit:
            red = partial_trace_first(rho, part)
            half_form = 0.5 * (
                float(np.trace(red @ red).real)
                - float(np.trace(rho.matrix @ rho.matrix).real)
            )
            note("quad_identity", abs(quadratic_residual_p2(rho) - half_form), i, rho)

            u = uniforms(cfg.seed + (1 << 32) + i, 8)
            base_ang = TomographyAngles(
                theta1=u[0] * math.pi, theta2=u[1] * math.pi,
                psi1=u[2] * TWO_PI, psi2=u[3] * TWO_PI,
            )
            t0 = tomogram(rho, base_ang)
            note("tomogram_norm", abs(sum(t0.components()) - 1.0), i, rho)
            for f1, f2 in ((u[4] * TWO_PI, u[5] * TWO_PI), (u[6] * TWO_PI, u[7] * TWO_PI)):
                tf = tomogram(rho, TomographyAngles(
                    theta1=base_ang.theta1, theta2=base_ang.theta2,
                    phi1=f1, phi2=f2, psi1=base_ang.psi1, psi2=base_ang.psi2))
                dev = max(abs(a - b) for a, b in zip(t0.components(), tf.components()))
                note("phi_probe", dev, i, rho)

            wit = witness_report(rho, tol=tol)
            pt_min = float(eig_hermitian(
                partial_transpose_second(rho, part), tol=tol).eigenvalues[0])
            agree = (wit.negativity <= 1e-10) == (pt_min >= -1e-9)
            note("ppt_match", 0.0 if agree else 1.0, i, rho)
            bound_dev = max(
                1.0 - wit.trace_norm_pt,
                -wit.negativity,
                -wit.concurrence,
                wit.concurrence - 1.0,
            )
            note("witness_bounds", bound_dev, i, rho)
            if i % stride == 0:
                rep = delta_info(rho, grid_n=cfg.grid_n, refine_iters=cfg.refine, tol=tol)
                note("delta_info", -rep.delta_i, i, rho)

    head = (
        f"check dim={cfg.dim} pad={cfg.pad if cfg.pad is not None else '-'}"
        f" rank={cfg.rank if cfg.rank is not None else 'cycle'}"
        f" samples={cfg.samples} seed={cfg.seed} blocks={part.n}:{part.m}"
        f" tol={tol!r} grid_n={cfg.grid_n} refine={cfg.refine}"
    )
    lines = [head]
    failed = False
    for name, limit in order:
        status = "ok" if worst[name] <= limit else "FAIL"
        failed = failed or status == "FAIL"
        lines.append(f"assert {name} value={_fmt(worst[name])} limit={_fmt(limit)} status={status}")
    for name, rec in records.items():
        lines.append(f"record {name} min={_fmt(rec[0])} max={_fmt(rec[1])}")
    for name, rec in pq_records.items():
        lines.append(
            f"record {name} min={_fmt(rec[0])} max={_fmt(rec[1])} positive={rec[2]}"
        )
    if failed and first_bad is not None:
        lines.append(f"counterexample sample={first_bad[0]} invariant={first_bad[1]}")
        lines.append(format_matrix(first_bad[2]).rstrip("\n"))
    lines.append("check FAIL" if failed else "check PASS")
    sys.stdout.write("\n".join(lines) + "\n")
    return 2 if failed else 0


_PLOT_SWEEP = '''#!/usr/bin/env python3
"""Plot residual curves from {csv_name}, one line per (p, q) pair."""
import csv
from pathlib import Path

import matplotlib.pyplot as plt

csv_path = Path(__file__).resolve().parent / "{csv_name}"
series = {{}}
with open(csv_path, newline="") as fh:
    for row in csv.DictReader(ln for ln in fh if not ln.startswith("#")):
        if not row["r"]:
            continue
        key = "p=" + row["p"] + (", q=" + row["q"] if row["q"] else "")
        xs, ys = series.setdefault(key, ([], []))
        xs.append(float(row["r"]))
        ys.append(float(row["residual"]))
fig, ax = plt.subplots(figsize=(7.0, 4.5))
for label, (xs, ys) in series.items():
    ax.plot(xs, ys, label=label)
ax.axvline(1.0 / 3.0, color="gray", linestyle="--", linewidth=1.0)
ax.axhline(0.0, color="black", linewidth=0.8)
ax.set_xlabel("r")
ax.set_ylabel("residual")
ax.legend(fontsize=8)
fig.tight_layout()
out = csv_path.with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
'''

_PLOT_INFO = '''#!/usr/bin/env python3
"""Plot delta_i and the witness curves from {csv_name}."""
import csv
from pathlib import Path

import matplotlib.pyplot as plt

csv_path = Path(__file__).resolve().parent / "{csv_name}"
rs, delta, n_curve, c_curve = [], [], [], []
with open(csv_path, newline="") as fh:
    for row in csv.DictReader(fh):
        if not row["r"]:
            continue
        rs.append(float(row["r"]))
        delta.append(float(row["delta_i"]))
        n_curve.append(float(row["N"]))
        c_curve.append(float(row["C"]))
fig, ax = plt.subplots(figsize=(7.0, 4.5))
ax.plot(rs, delta, color="black", label="delta_i")
ax.plot(rs, n_curve, label="N (trace norm of partial transpose)")
ax.plot(rs, c_curve, label="C (concurrence)")
ax.axvline(1.0 / 3.0, color="gray", linestyle="--", linewidth=1.0)
ax.set_xlabel("r")
ax.legend(fontsize=8)
fig.tight_layout()
out = csv_path.with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
'''

_PLOT_WITNESS = '''#!/usr/bin/env python3
"""Plot witness curves from {csv_name}."""
import csv
from pathlib import Path

import matplotlib.pyplot as plt

csv_path = Path(__file__).resolve().parent / "{csv_name}"
rs, tn, neg, conc = [], [], [], []
with open(csv_path, newline="") as fh:
    for row in csv.DictReader(fh):
        if not row["r"]:
            continue
        rs.append(float(row["r"]))
        tn.append(float(row["trace_norm_pt"]))
        neg.append(float(row["negativity"]))
        conc.append(float(row["concurrence"]))
fig, ax = plt.subplots(figsize=(7.0, 4.5))
ax.plot(rs, tn, label="trace norm of partial transpose")
ax.plot(rs, neg, label="negativity")
ax.plot(rs, conc, label="concurrence")
ax.axvline(1.0 / 3.0, color="gray", linestyle="--", linewidth=1.0)
ax.set_xlabel("r")
ax.legend(fontsize=8)
fig.tight_layout()
out = csv_path.with_suffix(".png")
fig.savefig(out, dpi=150)
print("wrote", out)
'''

_PLOT_TEMPLATES = {"sweep": _PLOT_SWEEP, "info": _PLOT_INFO, "witness": _PLOT_WITNESS}


def _emit_plot_script(out: str | None, kind: str) -> None:
    if out is None:
        raise _InputError("--emit-plot-script requires --out")
    stem, _ = os.path.splitext(out)
    script_path = stem + "_plot.py"
    text = _PLOT_TEMPLATES[kind].format(csv_name=os.path.basename(out))
    with open(script_path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qmink", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_state_source(sp):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--werner", action="store_true",
                         help="sweep the Werner family over --r")
        grp.add_argument("--file", metavar="PATH", help="matrix text file")
        grp.add_argument("--xfile", metavar="PATH",
                         help="matrix text file constrained to the X pattern")
        sp.add_argument("--r", dest="r_grid", type=_parse_grid, metavar="GRID",
                        help="r value or start:end:count grid (with --werner)")
        sp.add_argument("--pad", type=int, metavar="N",
                        help="zero-pad a --file matrix to N x N before validation")
        sp.add_argument("--blocks", type=_parse_blocks, metavar="N:M",
                        help="block partition (default 2:2 for dim 4)")

    def add_output(sp):
        sp.add_argument("--out", metavar="PATH",
                        help="write to this file instead of stdout")
        sp.add_argument("--tol", type=float, metavar="T",
                        help="validation tolerance (default 1e-9, or QMINK_TOL)")

    s1 = sub.add_parser("sweep1", help="one-parameter residual sweep CSV")
    add_state_source(s1)
    add_output(s1)
    s1.add_argument("--p", dest="p_list", type=_parse_float_list, required=True,
                    metavar="LIST", help="comma-separated exponents")
    s1.add_argument("--emit-plot-script", action="store_true",
                    help="write a matplotlib script next to --out")

    s2 = sub.add_parser("sweep2", help="two-parameter residual sweep CSV")
    add_state_source(s2)
    add_output(s2)
    s2.add_argument("--pq", dest="pq_list", type=_parse_pq_list, required=True,
                    metavar="LIST", help="comma-separated p:q pairs")
    s2.add_argument("--emit-plot-script", action="store_true",
                    help="write a matplotlib script next to --out")

    info = sub.add_parser("info", help="entropies, mutual informations, witnesses")
    add_state_source(info)
    add_output(info)
    info.add_argument("--grid-n", type=int, default=GRID_N_DEFAULT, metavar="N",
                      help="angle-grid points per axis for the i_t search")
    info.add_argument("--refine", type=int, default=REFINE_DEFAULT, metavar="N",
                      help="simplex refinement evaluation budget")
    info.add_argument("--bits", action="store_true",
                      help="display entropies in bits instead of nats")
    info.add_argument("--emit-plot-script", action="store_true",
                      help="write a matplotlib script next to --out")

    wit = sub.add_parser("witness", help="partial-transpose norm, negativity, concurrence")
    add_state_source(wit)
    add_output(wit)
    wit.add_argument("--emit-plot-script", action="store_true",
                     help="write a matplotlib script next to --out")

    tom = sub.add_parser("tomogram", help="joint outcome distribution at fixed angles")
    add_state_source(tom)
    add_output(tom)
    for name in ("theta1", "theta2", "phi1", "phi2", "psi1", "psi2"):
        tom.add_argument(f"--{name}", type=float, default=0.0, metavar="RAD")

    chk = sub.add_parser("check", help="seeded random-state property suite")
    chk.add_argument("--dim", type=int, default=4, metavar="D",
                     help="state dimension before padding (default 4)")
    chk.add_argument("--rank", type=int, metavar="K",
                     help="fixed rank; default cycles 1..dim")
    chk.add_argument("--samples", type=int, default=100, metavar="N")
    chk.add_argument("--seed", type=int, default=0, metavar="S")
    chk.add_argument("--pad", type=int, metavar="N",
                     help="zero-pad each sample to N x N")
    chk.add_argument("--blocks", type=_parse_blocks, metavar="N:M",
                     help="block partition override")
    chk.add_argument("--record-pq", dest="record_pq", type=_parse_pq_list,
                     default=(), metavar="LIST",
                     help="extra p:q pairs recorded without asserting")
    chk.add_argument("--grid-n", type=int, default=GRID_N_DEFAULT, metavar="N")
    chk.add_argument("--refine", type=int, default=REFINE_DEFAULT, metavar="N")
    chk.add_argument("--tol", type=float, metavar="T")
    return parser


_RUNNERS = {
    "sweep1": lambda cfg: _run_sweep(cfg, use_pairs=False),
    "sweep2": lambda cfg: _run_sweep(cfg, use_pairs=True),
    "info": _run_info,
    "witness": _run_witness,
    "tomogram": _run_tomogram,
    "check": _run_check,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _RUNNERS[cfg.command](cfg)
    except (QminkError, _InputError, OSError) as exc:
        print(f"qmink: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
