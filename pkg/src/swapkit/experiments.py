"""Parameter sweeps that regenerate the figure data, and the oracle cross-check suite."""

from __future__ import annotations

import csv
import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .measures import (
    concurrence_pure,
    concurrence_schmidt,
    concurrence_wootters_oracle,
    concurrence_xstate,
    negativity,
    negativity_schmidt,
    negativity_xstate,
)
from .states import (
    BELL_LABELS,
    NoisyPairParams,
    SchmidtPair,
    combo_criterion,
    depolarize,
    random_xstate,
    schmidt_decompose,
    schmidt_pair_state,
)
from .swap import (
    MeasurementBasis,
    average_noisy_concurrence,
    average_noisy_negativity,
    average_swapped_concurrence_pure,
    average_tripartite_concurrence,
    average_tripartite_negativity,
    branch_probabilities,
    noisy_outcome_concurrence,
    noisy_outcome_negativity,
    project_pure_pairs,
    project_three_pairs_ghz,
    swap_noisy_pairs,
    swap_pure_pairs,
    swap_three_pairs_ghz,
    weighted_average,
    weighted_tripartite,
)
from .teleport import (
    ChannelState,
    UnknownQubit,
    average_fidelity,
    swap_channel,
    teleport_noisy,
    teleport_noisy_all,
    teleport_probabilistic,
    total_success_probability,
)

SIGNIFICANT_DIGITS = 12
SIGN_TOL = 1e-10
BOUND_TOL = 1e-12

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_CONFIG = 2


class ConfigError(ValueError):
    """Invalid sweep or verification configuration."""


@dataclass(frozen=True)
class GridAxis:
    start: float
    stop: float
    step: float

    def __post_init__(self):
        if not self.step > 0:
            raise ConfigError(f"grid step must be positive, got {self.step}")
        if self.start > self.stop:
            raise ConfigError(f"grid start {self.start} exceeds stop {self.stop}")

    @classmethod
    def parse(cls, text: str) -> "GridAxis":
        try:
            start, stop, step = (float(x) for x in text.split(":"))
        except ValueError:
            raise ConfigError(f"grid range must be start:stop:step, got {text!r}") from None
        return cls(start, stop, step)

    def values(self) -> np.ndarray:
        n = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        vals = np.round(self.start + self.step * np.arange(n), 12)
        return np.minimum(vals, self.stop)


@dataclass
class Experiment:
    params: tuple[str, ...]
    defaults: dict[str, GridAxis]
    columns: tuple[str, ...]
    row: Callable[[dict[str, float], np.random.Generator, "SweepConfig"], list[float]]
    checks: Callable[[list[list[float]]], list["CheckResult"]]
    bounds: dict[str, tuple[float, float]] = field(default_factory=dict)


@dataclass
class SweepConfig:
    experiment: str
    grid: dict[str, GridAxis] = field(default_factory=dict)
    output_path: Path | str = "sweep.csv"
    seed: int = 0
    samples: int = 64
    workers: int = 1

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {self.experiment!r}; choose from {sorted(EXPERIMENTS)}")
        exp = EXPERIMENTS[self.experiment]
        unknown = set(self.grid) - set(exp.params)
        if unknown:
            raise ConfigError(f"experiment {self.experiment} has no parameter(s) {sorted(unknown)}; expected {exp.params}")
        for name, axis in self.grid.items():
            lo, hi = exp.bounds.get(name, (0.0, 1.0))
            if axis.start < lo or axis.stop > hi:
                raise ConfigError(f"{name} must stay within [{lo}, {hi}]")
        if self.samples < 1 or self.workers < 1:
            raise ConfigError("samples and workers must be at least 1")


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float
    passed: bool

    @classmethod
    def of(cls, name: str, deviations, tolerance: float) -> "CheckResult":
        arr = np.asarray(list(deviations), dtype=float)
        worst = float(np.max(arr)) if arr.size else 0.0
        return cls(name, worst, tolerance, bool(worst <= tolerance))


@dataclass
class SweepSummary:
    experiment: str
    output_path: Path
    rows: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _fmt(x: float) -> str:
    if isinstance(x, str):
        return x
    if math.isnan(x):
        return "nan"
    return f"{x:.{SIGNIFICANT_DIGITS}g}"


def _col(rows, columns, name):
    return np.array([r[columns.index(name)] for r in rows], dtype=float)


# -- experiment definitions --------------------------------------------------

_UNIT = GridAxis(0.0, 1.0, 0.01)
_COARSE = GridAxis(0.0, 1.0, 0.1)
_BELL_AMP = 1 / math.sqrt(2)


def _noisy(point):
    return NoisyPairParams.of(point["alpha"], point["p0"])


def _fig2_row(pt, rng, cfg):
    rho = depolarize(SchmidtPair(pt["p0"]), pt["alpha"]).matrix()
    return [pt["alpha"], pt["p0"], combo_criterion(rho), negativity(rho)]


def _fig2_checks(rows):
    cols = EXPERIMENTS["fig2-region"].columns
    f, n = _col(rows, cols, "f"), _col(rows, cols, "N")
    mismatch = [float((fi > SIGN_TOL) != (ni > SIGN_TOL)) for fi, ni in zip(f, n)]
    return [CheckResult.of("combo sign agrees with PPT", mismatch, 0.0)]


def _fig3_row(pt, rng, cfg):
    x = depolarize(SchmidtPair(pt["p0"]), pt["alpha"])
    return [pt["alpha"], pt["p0"], concurrence_xstate(x), negativity_xstate(x)]


def _fig3_checks(rows):
    cols = EXPERIMENTS["fig3-measures"].columns
    c, n = _col(rows, cols, "C"), _col(rows, cols, "N")
    out_of_range = np.concatenate([np.maximum(-c, 0), np.maximum(c - 1, 0), np.maximum(-n, 0), np.maximum(n - 1, 0)])
    return [
        CheckResult.of("C and N within [0, 1]", out_of_range, BOUND_TOL),
        CheckResult.of("C equals N for white-noise pairs", np.abs(c - n), BOUND_TOL),
    ]


def _fig4_row(pt, rng, cfg):
    p = _noisy(pt)
    c_in = concurrence_xstate(depolarize(p.schmidt, p.alpha))
    return [pt["alpha"], pt["p0"], average_noisy_concurrence(p), c_in * c_in]


def _fig4_checks(rows):
    cols = EXPERIMENTS["fig4-conc"].columns
    return [CheckResult.of("C_av <= C_product", _col(rows, cols, "C_av") - _col(rows, cols, "C_product"), BOUND_TOL)]


def _fig5_row(pt, rng, cfg):
    p = _noisy(pt)
    n_in = negativity_xstate(depolarize(p.schmidt, p.alpha))
    return [pt["alpha"], pt["p0"], average_noisy_negativity(p), n_in * n_in]


def _fig5_checks(rows):
    cols = EXPERIMENTS["fig5-neg"].columns
    return [CheckResult.of("N_av <= N_product", _col(rows, cols, "N_av") - _col(rows, cols, "N_product"), BOUND_TOL)]


def _fig6_row(pt, rng, cfg):
    p = _noisy(pt)
    x = depolarize(p.schmidt, p.alpha)
    c_in, n_in = concurrence_xstate(x), negativity_xstate(x)
    return [pt["alpha"], pt["p0"], average_noisy_concurrence(p), average_noisy_negativity(p), c_in * c_in, n_in * n_in]


def _fig6_checks(rows):
    cols = EXPERIMENTS["fig6-compare"].columns
    c_av, n_av = _col(rows, cols, "C_av"), _col(rows, cols, "N_av")
    p0 = _col(rows, cols, "p0")
    balanced = np.abs(p0 - 0.5) < 1e-12
    return [
        CheckResult.of("C_av >= N_av", n_av - c_av, BOUND_TOL),
        CheckResult.of("C_av == N_av at p0 = 0.5", np.abs(c_av - n_av)[balanced], BOUND_TOL),
        CheckResult.of("C_av <= C_product", c_av - _col(rows, cols, "C_product"), BOUND_TOL),
        CheckResult.of("N_av <= N_product", n_av - _col(rows, cols, "N_product"), BOUND_TOL),
    ]


def _swap_pure_row(pt, rng, cfg):
    ab, cd = SchmidtPair(pt["p0"]), SchmidtPair(pt["p0_prime"])
    a0, a1 = pt["a0"], pt["a1"]
    basis = MeasurementBasis(a0, math.sqrt(max(1 - a0 * a0, 0.0)), a1, math.sqrt(max(1 - a1 * a1, 0.0)))
    outs = swap_pure_pairs(ab, cd, basis)
    return (
        [pt["p0"], pt["p0_prime"], a0, a1]
        + [o.probability for o in outs]
        + [
            weighted_average(outs, lambda s: concurrence_pure(s)),
            average_swapped_concurrence_pure(ab, cd, basis),
            concurrence_schmidt(ab) * concurrence_schmidt(cd),
        ]
    )


def _swap_pure_checks(rows):
    cols = EXPERIMENTS["swap-pure"].columns
    probs = sum(_col(rows, cols, f"p_{lab}") for lab in BELL_LABELS)
    c_w, c_f, c_p = (_col(rows, cols, n) for n in ("C_av_weighted", "C_av", "C_product"))
    return [
        CheckResult.of("probabilities sum to 1", np.abs(probs - 1), BOUND_TOL),
        CheckResult.of("weighted C_av equals closed form", np.abs(c_w - c_f), BOUND_TOL),
        CheckResult.of("C_av <= C_AB * C_CD", c_f - c_p, BOUND_TOL),
    ]


def _swap_ghz_row(pt, rng, cfg):
    pairs = [SchmidtPair(pt[k]) for k in ("lambda0", "mu0", "nu0")]
    outs = swap_three_pairs_ghz(*pairs)
    return (
        [pt["lambda0"], pt["mu0"], pt["nu0"]]
        + [o.probability for o in outs]
        + [
            weighted_tripartite(outs, "concurrence"),
            weighted_tripartite(outs, "negativity"),
            average_tripartite_concurrence(*pairs),
            average_tripartite_negativity(*pairs),
        ]
    )


def _swap_ghz_checks(rows):
    cols = EXPERIMENTS["swap-ghz"].columns
    probs = sum(_col(rows, cols, f"p_G{k}") for k in range(8))
    return [
        CheckResult.of("probabilities sum to 1", np.abs(probs - 1), BOUND_TOL),
        CheckResult.of("weighted C_ACE equals product", np.abs(_col(rows, cols, "C_av") - _col(rows, cols, "C_product")), 1e-10),
        CheckResult.of("weighted N_ACE equals product", np.abs(_col(rows, cols, "N_av") - _col(rows, cols, "N_product")), 1e-10),
    ]


def _teleport_row(pt, rng, cfg):
    p = _noisy(pt)
    p_phi, _ = branch_probabilities(p)
    channel = swap_channel(p, "Phi+")
    success, fids = [], []
    for _ in range(cfg.samples):
        results = teleport_noisy_all(UnknownQubit.random(rng), channel)
        success.append(total_success_probability(results))
        fids.append(average_fidelity(results))
    fid = float("nan") if all(math.isnan(f) for f in fids) else float(np.nanmean(fids))
    return [pt["alpha"], pt["p0"], p_phi, float(np.mean(success)), fid]


def _teleport_checks(rows):
    cols = EXPERIMENTS["teleport"].columns
    fid = _col(rows, cols, "mean_fidelity")
    fid = fid[~np.isnan(fid)]
    alpha = _col(rows, cols, "alpha")
    full = _col(rows, cols, "mean_fidelity")[np.abs(alpha - 1) < 1e-12]
    full = full[~np.isnan(full)]
    return [
        CheckResult.of("fidelity within [0, 1]", np.concatenate([fid - 1, -fid]), BOUND_TOL),
        CheckResult.of("fidelity 1 at alpha = 1", np.abs(full - 1), 1e-10),
    ]


EXPERIMENTS: dict[str, Experiment] = {
    "fig2-region": Experiment(("alpha", "p0"), {"alpha": _UNIT, "p0": _UNIT}, ("alpha", "p0", "f", "N"), _fig2_row, _fig2_checks),
    "fig3-measures": Experiment(("alpha", "p0"), {"alpha": _UNIT, "p0": _COARSE}, ("alpha", "p0", "C", "N"), _fig3_row, _fig3_checks),
    "fig4-conc": Experiment(("alpha", "p0"), {"alpha": _UNIT, "p0": _COARSE}, ("alpha", "p0", "C_av", "C_product"), _fig4_row, _fig4_checks),
    "fig5-neg": Experiment(("alpha", "p0"), {"alpha": _UNIT, "p0": _COARSE}, ("alpha", "p0", "N_av", "N_product"), _fig5_row, _fig5_checks),
    "fig6-compare": Experiment(
        ("alpha", "p0"),
        {"alpha": _UNIT, "p0": _COARSE},
        ("alpha", "p0", "C_av", "N_av", "C_product", "N_product"),
        _fig6_row,
        _fig6_checks,
    ),
    "swap-pure": Experiment(
        ("p0", "p0_prime", "a0", "a1"),
        {"p0": _COARSE, "p0_prime": _COARSE, "a0": GridAxis(_BELL_AMP, _BELL_AMP, 1), "a1": GridAxis(_BELL_AMP, _BELL_AMP, 1)},
        ("p0", "p0_prime", "a0", "a1")
        + tuple(f"p_{lab}" for lab in BELL_LABELS)
        + ("C_av_weighted", "C_av", "C_product"),
        _swap_pure_row,
        _swap_pure_checks,
    ),
    "swap-ghz": Experiment(
        ("lambda0", "mu0", "nu0"),
        {k: GridAxis(0.0, 1.0, 0.25) for k in ("lambda0", "mu0", "nu0")},
        ("lambda0", "mu0", "nu0") + tuple(f"p_G{k}" for k in range(8)) + ("C_av", "N_av", "C_product", "N_product"),
        _swap_ghz_row,
        _swap_ghz_checks,
    ),
    "teleport": Experiment(
        ("alpha", "p0"),
        {"alpha": _COARSE, "p0": _COARSE},
        ("alpha", "p0", "P_phi", "success_probability", "mean_fidelity"),
        _teleport_row,
        _teleport_checks,
    ),
}


def grid_points(cfg: SweepConfig) -> list[dict[str, float]]:
    exp = EXPERIMENTS[cfg.experiment]
    axes = [cfg.grid.get(name, exp.defaults[name]).values() for name in exp.params]
    return [dict(zip(exp.params, map(float, combo))) for combo in itertools.product(*axes)]


def compute_rows(cfg: SweepConfig) -> list[list[float]]:
    """Evaluate every grid cell; each cell gets its own generator seeded by ``(seed, index)``."""
    exp = EXPERIMENTS[cfg.experiment]
    points = grid_points(cfg)

    def cell(i_pt):
        i, pt = i_pt
        return exp.row(pt, np.random.default_rng([cfg.seed, i]), cfg)

    if cfg.workers == 1:
        return [cell(x) for x in enumerate(points)]
    with ThreadPoolExecutor(cfg.workers) as pool:
        return list(pool.map(cell, enumerate(points)))


def run_sweep(cfg: SweepConfig) -> SweepSummary:
    """Write one CSV row per grid point and evaluate the experiment's post-sweep assertions."""
    exp = EXPERIMENTS[cfg.experiment]
    rows = compute_rows(cfg)
    path = Path(cfg.output_path)
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(exp.columns)
            for r in rows:
                writer.writerow([_fmt(v) for v in r])
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc}") from exc
    return SweepSummary(cfg.experiment, path, len(rows), exp.checks(rows))


# -- oracle suite ------------------------------------------------------------


@dataclass
class OracleReport:
    seed: int
    trials: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        body = {
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }
        return json.dumps(body, indent=2, sort_keys=True)


def _random_basis(rng):
    return MeasurementBasis.from_angles(*rng.uniform(0, np.pi / 2, size=2))


def run_oracle_suite(seed: int = 1, trials: int = 1000) -> OracleReport:
    """Run every analytic-versus-oracle comparison on ``trials`` random draws."""
    if trials < 1:
        raise ConfigError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    dev: dict[str, list[float]] = {}
    tol: dict[str, float] = {}

    def record(name, value, tolerance=1e-12):
        dev.setdefault(name, []).append(float(value))
        tol[name] = tolerance

    for _ in range(trials):
        x = random_xstate(rng)
        m = x.matrix()
        record("xstate concurrence vs Wootters", abs(concurrence_xstate(x) - concurrence_wootters_oracle(m)), 1e-10)
        record("xstate negativity vs partial transpose", abs(negativity_xstate(x) - negativity(m)), 1e-10)

        ab, cd, ef = (SchmidtPair(p) for p in rng.uniform(size=3))
        basis = _random_basis(rng)
        ana, ora = swap_pure_pairs(ab, cd, basis), project_pure_pairs(ab, cd, basis)
        record("pure swap probabilities vs projection", max(abs(a.probability - o.probability) for a, o in zip(ana, ora)))
        record(
            "pure swap states vs projection",
            max(np.max(np.abs(a.state - o.state)) for a, o in zip(ana, ora) if a.state is not None),
            1e-10,
        )
        record("pure swap C_av vs closed form", abs(weighted_average(ana, concurrence_pure) - average_swapped_concurrence_pure(ab, cd, basis)))
        bell = swap_pure_pairs(ab, cd)
        product = concurrence_schmidt(ab) * concurrence_schmidt(cd)
        record("Bell C_av vs product", abs(average_swapped_concurrence_pure(ab, cd) - product))
        record("Bell weighted N_av vs product", abs(weighted_average(bell, negativity) - negativity_schmidt(ab) * negativity_schmidt(cd)))

        g_ana, g_ora = swap_three_pairs_ghz(ab, cd, ef), project_three_pairs_ghz(ab, cd, ef)
        record("GHZ swap probabilities vs projection", max(abs(a.probability - o.probability) for a, o in zip(g_ana, g_ora)))
        record("GHZ swap states vs projection", max(np.max(np.abs(a.state - o.state)) for a, o in zip(g_ana, g_ora) if a.state is not None), 1e-10)
        record("GHZ weighted C_ACE vs product", abs(weighted_tripartite(g_ana, "concurrence") - average_tripartite_concurrence(ab, cd, ef)), 1e-10)
        record("GHZ weighted N_ACE vs product", abs(weighted_tripartite(g_ana, "negativity") - average_tripartite_negativity(ab, cd, ef)), 1e-10)

        params = NoisyPairParams.of(rng.uniform(), rng.uniform())
        n_ana, n_ora = swap_noisy_pairs(params), swap_noisy_pairs(params, method="numeric")
        record("noisy swap probabilities vs projection", max(abs(a.probability - o.probability) for a, o in zip(n_ana, n_ora)))
        record("noisy swap states vs projection", max(np.max(np.abs(a.state - o.state)) for a, o in zip(n_ana, n_ora) if a.state is not None), 1e-10)
        for o in n_ora:
            if o.state is None:
                continue
            record("noisy concurrence vs Wootters", abs(noisy_outcome_concurrence(params, o.label) - concurrence_wootters_oracle(o.state)), 1e-10)
            record("noisy negativity vs spectral", abs(noisy_outcome_negativity(params, o.label) - negativity(o.state)), 1e-10)

        for outs in (ana, g_ana, n_ana):
            record("probability conservation", abs(sum(o.probability for o in outs) - 1))

        rho = depolarize(params.schmidt, params.alpha).matrix()
        record("combo sign vs PPT", float((combo_criterion(rho) > SIGN_TOL) != (negativity(rho) > SIGN_TOL)), 0.0)

        v = schmidt_pair_state(SchmidtPair(max(ab.p0, ab.p1)))
        phases = np.exp(1j * rng.uniform(0, 2 * np.pi, size=4))
        record("Schmidt round trip", abs(schmidt_decompose(v * phases).p0 - max(ab.p0, ab.p1)))

        chi = UnknownQubit.random(rng)
        a = math.sqrt(rng.uniform(0.5, 1.0))
        b = math.sqrt(1 - a * a)
        channel = ChannelState.pure(a, b)
        prob = teleport_probabilistic(chi, channel)
        record("probabilistic teleport success-branch fidelity", max(abs(r.fidelity - 1) for r in prob if r.success))
        record("probabilistic teleport success probability vs 2b^2", abs(total_success_probability(prob) - 2 * b * b))
        record("teleport outcome probabilities sum to 1", abs(sum(r.outcome_probability for r in prob) - 1))
        embedded = ChannelState.density(channel.matrix, a, b)
        for r in prob:
            n = teleport_noisy(chi, embedded, r.outcome_label)
            record("noisy chain vs state vector (success probability)", abs(n.success_probability - r.success_probability), 1e-10)
            record("noisy chain vs state vector (fidelity)", abs(n.fidelity - r.fidelity), 1e-10)

    checks = [CheckResult.of(name, vals, tol[name]) for name, vals in dev.items()]
    return OracleReport(seed, trials, checks)
