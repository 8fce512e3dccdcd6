"""Top-level acceptance gate.

Each criterion prints one PASS/FAIL line (run pytest with -s to see them all)
and then asserts, so the suite both reports and enforces.  Campaign sizes and
tolerances are the full-scale ones; nothing here is downscaled.
"""

import numpy as np

from discoh.states import apply_channel, phase_damping, random_mixed, make_werner
from discoh.nonlocality import chsh_violation
from discoh.verify import (
    class3_extrema_campaign,
    class3_sum_rule_campaign,
    classical_zero_campaign,
    discord_closed_form_campaign,
    mixed_state_bound_campaign,
    monogamy_campaign,
    pure_state_discord_campaign,
    two_side_sandwich_campaign,
    werner_sweep,
)


def _report(num: int, label: str, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {num}: {label} ({detail})"
    print(line)
    assert ok, line


def _campaign_criterion(num: int, label: str, result, budget: float) -> None:
    ok = result.passed and result.seconds <= budget
    _report(num, label, ok, f"{result.summary()} budget={budget:g}s")


def test_criterion_1_one_sided_closed_forms():
    result = discord_closed_form_campaign(trials=200, seed=11, tol=1e-6)
    _campaign_criterion(1, "one-sided closed forms match the basis search", result, 120.0)


def test_criterion_2_class3_extrema():
    result = class3_extrema_campaign(trials=200, seed=3, tol=1e-6)
    _campaign_criterion(2, "anti-diagonal extrema match the basis search", result, 120.0)


def test_criterion_3_monogamy_equality():
    result = monogamy_campaign(trials=1000, seed=7, tol=1e-10)
    _campaign_criterion(3, "pure-state coherence budget is exact", result, 30.0)


def test_criterion_4_pure_state_discord():
    result = pure_state_discord_campaign(trials=100, seed=5, tol=1e-6)
    _campaign_criterion(4, "pure states split d_sym = c^2 into equal halves", result, 180.0)


def test_criterion_5_chsh_threshold():
    rows = werner_sweep(0.0, 1.0, 1001)
    onset = next(i for i, row in enumerate(rows) if row["chsh_violated"])
    below, above = rows[onset - 1]["p"], rows[onset]["p"]
    target = 1.0 / np.sqrt(2.0)
    bracketed = below < target < above and not rows[onset - 1]["chsh_violated"]
    # the sweep grid localizes the onset to one step; pin it tighter by
    # probing the family directly on both sides of the stated window
    inside_window = (not chsh_violation(make_werner(0.7071))[0]) and chsh_violation(
        make_werner(0.7072)
    )[0]
    _report(
        5,
        "violation onset brackets 1/sqrt(2) and lies in (0.7071, 0.7072)",
        bracketed and inside_window,
        f"sweep bracket ({below:.4g}, {above:.4g}), direct checks at 0.7071/0.7072",
    )


def test_criterion_6_extrema_sum_rule():
    result = class3_sum_rule_campaign(trials=500, seed=1, tol=1e-10)
    _campaign_criterion(6, "v + v_tilde = |T|^2 / 4", result, 30.0)


def test_criterion_7_mixed_state_bound():
    result = mixed_state_bound_campaign(trials=200, samples=64, seed=13, tol=1e-9)
    _campaign_criterion(7, "decomposition averages dominate the mixed bound", result, 120.0)


def test_criterion_8_two_side_sandwich():
    result = two_side_sandwich_campaign(trials=100, seed=17, tol=1e-6)
    _campaign_criterion(8, "max(d_ab, d_ba) <= d_tilde <= d_ab + d_ba", result, 120.0)


def test_criterion_9_classical_zero():
    result = classical_zero_campaign(trials=100, seed=19, tol=1e-9)
    _campaign_criterion(9, "classically correlated states have d_sym = 0", result, 60.0)


def test_criterion_10_phase_damping_rates():
    worst_off = 0.0
    worst_kept = 0.0
    for gamma in (0.1, 0.5, 0.9):
        channel = phase_damping(gamma, "A")
        scale = np.sqrt(1.0 - gamma)
        for seed in range(20):
            rho = random_mixed((2, 2), 4, seed=1000 + seed)
            out = apply_channel(rho, channel)
            for row in range(4):
                for col in range(4):
                    dev = abs(out.mat[row, col] - scale * rho.mat[row, col])
                    kept = abs(out.mat[row, col] - rho.mat[row, col])
                    if row // 2 != col // 2:  # A-index differs
                        worst_off = max(worst_off, dev)
                    else:  # diagonal and B-side-only entries stay put
                        worst_kept = max(worst_kept, kept)
    ok = worst_off <= 1e-12 and worst_kept <= 1e-12
    _report(
        10,
        "phase damping scales A-off-diagonal entries by sqrt(1-gamma), leaves the rest",
        ok,
        f"max_dev_scaled={worst_off:.3e} max_dev_kept={worst_kept:.3e} tol=1e-12",
    )
