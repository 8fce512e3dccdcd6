"""Randomized verification campaigns over the measure implementations.

Each campaign draws trial states deterministically (trial i uses base seed
plus i), measures a deviation per trial, and reports the failure count
against a tolerance.  Trials are independent, so distributing them over a
process pool gives the same result as running serially.
"""

import functools
from dataclasses import dataclass
from multiprocessing import get_context
from time import perf_counter

import numpy as np

from .coherence import OptimizerConfig, minimize_over_bases
from .discord import discord_ab_analytic, discord_ba_analytic
from .errors import DiscohError
from .entanglement import concurrence_pure, corollary1_check, monogamy_check
from .nonlocality import chsh_violation, v_measures_analytic, v_measures_numeric
from .states import bloch_decompose, make_werner, random_classical, random_mixed, random_pure

TWO_QUBIT_DIMS = (2, 2)
MONOGAMY_DIMS = ((2, 2), (2, 3), (3, 3), (4, 4))
PURE_DISCORD_DIMS = ((2, 2), (2, 3), (3, 3))


@dataclass(frozen=True)
class CampaignResult:
    suite: str
    trials: int
    failures: int
    max_deviation: float
    tol: float
    seconds: float

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"suite={self.suite} trials={self.trials} failures={self.failures} "
            f"max_deviation={self.max_deviation:.3e} tol={self.tol:g} "
            f"time={self.seconds:.1f}s : {status}"
        )


def _map_trials(trial_fn, trials: int, workers: int) -> list[float]:
    if workers <= 1:
        return [trial_fn(i) for i in range(trials)]
    with get_context("spawn").Pool(workers) as pool:
        return pool.map(trial_fn, range(trials), chunksize=max(1, trials // (workers * 4)))


def _run(suite: str, trial_fn, trials: int, tol: float, workers: int) -> CampaignResult:
    start = perf_counter()
    devs = np.asarray(_map_trials(trial_fn, trials, workers), dtype=float)
    failures = int(np.sum(~(devs <= tol)))  # NaN counts as failure
    worst = float(np.max(devs)) if devs.size else 0.0
    return CampaignResult(suite, trials, failures, worst, tol, perf_counter() - start)


def _monogamy_trial(i: int, seed: int, dims_cycle) -> float:
    dims = dims_cycle[i % len(dims_cycle)]
    psi = random_pure(dims, seed + i)
    return abs(monogamy_check(psi, check=False).residual)


def monogamy_campaign(
    trials: int = 1000,
    dims=MONOGAMY_DIMS,
    seed: int = 0,
    tol: float = 1e-10,
    workers: int = 1,
) -> CampaignResult:
    """Pure-state balance c^2 = d_total - d_local_a - d_local_b across dims."""
    trial = functools.partial(_monogamy_trial, seed=seed, dims_cycle=tuple(dims))
    return _run("monogamy", trial, trials, tol, workers)


def _closed_form_trial(i: int, seed: int, config: OptimizerConfig) -> float:
    rho = random_mixed(TWO_QUBIT_DIMS, 4, seed + i)
    dev_a = abs(discord_ab_analytic(rho)[0] - minimize_over_bases(rho, "class1", config).value)
    dev_b = abs(discord_ba_analytic(rho)[0] - minimize_over_bases(rho, "class2", config).value)
    return max(dev_a, dev_b)


def discord_closed_form_campaign(
    trials: int = 200,
    seed: int = 0,
    tol: float = 1e-6,
    config: OptimizerConfig | None = None,
    workers: int = 1,
) -> CampaignResult:
    """One-sided closed forms against the basis search on random mixed states."""
    cfg = config if config is not None else OptimizerConfig()
    trial = functools.partial(_closed_form_trial, seed=seed, config=cfg)
    return _run("analytic-vs-numeric", trial, trials, tol, workers)


def _class3_extrema_trial(i: int, seed: int, config: OptimizerConfig) -> float:
    rho = random_mixed(TWO_QUBIT_DIMS, 4, seed + i)
    v_an, vt_an = v_measures_analytic(rho)
    low, high = v_measures_numeric(rho, config)
    return max(abs(v_an - low.value), abs(vt_an - high.value))


def class3_extrema_campaign(
    trials: int = 200,
    seed: int = 0,
    tol: float = 1e-6,
    config: OptimizerConfig | None = None,
    workers: int = 1,
) -> CampaignResult:
    """Closed-form anti-diagonal extremes against the basis search."""
    cfg = config if config is not None else OptimizerConfig()
    trial = functools.partial(_class3_extrema_trial, seed=seed, config=cfg)
    return _run("theorem5", trial, trials, tol, workers)


def _pure_discord_trial(i: int, seed: int, dims_cycle, config: OptimizerConfig) -> float:
    dims = dims_cycle[i % len(dims_cycle)]
    psi = random_pure(dims, seed + i)
    c2 = concurrence_pure(psi) ** 2
    rho = psi.to_density()
    d_ab = minimize_over_bases(rho, "class1", config).value
    d_ba = minimize_over_bases(rho, "class2", config).value
    return max(
        abs(d_ab + d_ba - c2),
        abs(d_ab - c2 / 2.0),
        abs(d_ba - c2 / 2.0),
    )


def pure_state_discord_campaign(
    trials: int = 100,
    dims=PURE_DISCORD_DIMS,
    seed: int = 0,
    tol: float = 1e-6,
    config: OptimizerConfig | None = None,
    workers: int = 1,
) -> CampaignResult:
    """Pure states: d_sym = c^2 with equal halves on both sides."""
    cfg = config if config is not None else OptimizerConfig()
    trial = functools.partial(_pure_discord_trial, seed=seed, dims_cycle=tuple(dims), config=cfg)
    return _run("corollary2", trial, trials, tol, workers)


def _sum_rule_trial(i: int, seed: int) -> float:
    rho = random_mixed(TWO_QUBIT_DIMS, 4, seed + i)
    v, vt = v_measures_analytic(rho)
    t = bloch_decompose(rho).T
    return abs((v + vt) * 4.0 - float(np.sum(t * t)))


def class3_sum_rule_campaign(
    trials: int = 500,
    seed: int = 0,
    tol: float = 1e-10,
    workers: int = 1,
) -> CampaignResult:
    """Identity v + v_tilde = |T|^2 / 4 on random mixed states."""
    trial = functools.partial(_sum_rule_trial, seed=seed)
    return _run("eq64", trial, trials, tol, workers)


def _mixed_bound_trial(i: int, seed: int, samples: int) -> float:
    rho = random_mixed(TWO_QUBIT_DIMS, 4, seed + i)
    lhs, rhs_samples, _ = corollary1_check(rho, samples, seed + i)
    return max(0.0, lhs - min(rhs_samples))


def mixed_state_bound_campaign(
    trials: int = 200,
    samples: int = 64,
    seed: int = 0,
    tol: float = 1e-9,
    workers: int = 1,
) -> CampaignResult:
    """Decomposition-sampled lower bound on mixed two-qubit states."""
    trial = functools.partial(_mixed_bound_trial, seed=seed, samples=samples)
    return _run("corollary1", trial, trials, tol, workers)


def _classical_zero_trial(i: int, seed: int) -> float:
    rho = random_classical(TWO_QUBIT_DIMS, seed + i)
    return discord_ab_analytic(rho)[0] + discord_ba_analytic(rho)[0]


def classical_zero_campaign(
    trials: int = 100,
    seed: int = 0,
    tol: float = 1e-9,
    workers: int = 1,
) -> CampaignResult:
    """d_sym vanishes on classically correlated states."""
    trial = functools.partial(_classical_zero_trial, seed=seed)
    return _run("classical-zero", trial, trials, tol, workers)


def _sandwich_trial(i: int, seed: int, config: OptimizerConfig) -> float:
    rho = random_mixed(TWO_QUBIT_DIMS, 4, seed + i)
    d_ab = discord_ab_analytic(rho)[0]
    d_ba = discord_ba_analytic(rho)[0]
    d_tilde = minimize_over_bases(rho, "tilde_total", config).value
    low_violation = max(0.0, max(d_ab, d_ba) - d_tilde)
    high_violation = max(0.0, d_tilde - (d_ab + d_ba))
    return max(low_violation, high_violation)


def two_side_sandwich_campaign(
    trials: int = 100,
    seed: int = 0,
    tol: float = 1e-6,
    config: OptimizerConfig | None = None,
    workers: int = 1,
) -> CampaignResult:
    """max(d_ab, d_ba) <= d_tilde <= d_ab + d_ba on random mixed states."""
    cfg = config if config is not None else OptimizerConfig()
    trial = functools.partial(_sandwich_trial, seed=seed, config=cfg)
    return _run("two-side-sandwich", trial, trials, tol, workers)


def werner_sweep(lo: float = 0.0, hi: float = 1.0, steps: int = 101) -> list[dict]:
    """Closed-form measure table for the Werner family, one row per parameter."""
    if steps < 2:
        raise DiscohError("steps must be at least 2")
    if not (0.0 <= lo < hi <= 1.0):
        raise DiscohError(f"need 0 <= lo < hi <= 1, got lo={lo}, hi={hi}")
    rows = []
    for i in range(steps):
        p = lo + (hi - lo) * (i / (steps - 1))
        rho = make_werner(p)
        d_ab = discord_ab_analytic(rho)[0]
        d_ba = discord_ba_analytic(rho)[0]
        v, vt = v_measures_analytic(rho)
        violated, m = chsh_violation(rho)
        rows.append(
            {
                "p": p,
                "d_ab": d_ab,
                "d_ba": d_ba,
                "d_sym": d_ab + d_ba,
                "v": v,
                "v_tilde": vt,
                "horodecki_m": m,
                "chsh_violated": violated,
            }
        )
    return rows
