"""Batched derivative-free simplex minimizer.

Runs one Nelder-Mead simplex per batch row in lockstep, so a multi-start
search turns its objective evaluations into single vectorized calls.  A row
terminates when the spread of objective values over its simplex drops below
the tolerance; the whole loop stops when every row terminated or the
iteration cap is reached.  Given the same inputs the result is bit-identical
between runs.
"""

from dataclasses import dataclass

import numpy as np

ALPHA = 1.0  # reflection
GAMMA = 2.0  # expansion
BETA = 0.5  # contraction
DELTA = 0.5  # shrink


@dataclass(frozen=True)
class SimplexResult:
    x: np.ndarray  # (B, n) best vertex per row
    value: np.ndarray  # (B,) objective at the best vertex
    converged: np.ndarray  # (B,) bool, tolerance met within the budget
    iterations: int
    evaluations: int


def _sorted(sim, f):
    order = np.argsort(f, axis=1, kind="stable")
    return np.take_along_axis(sim, order[:, :, None], 1), np.take_along_axis(f, order, 1)


def minimize_batch(fn, x0, step=0.5, tol=1e-9, max_iter=2000) -> SimplexResult:
    """Minimize fn over each row of x0 independently.

    fn maps a (K, n) parameter block to K objective values and must be pure.
    """
    x0 = np.atleast_2d(np.asarray(x0, dtype=float))
    nb, n = x0.shape
    sim = np.repeat(x0[:, None, :], n + 1, axis=1)
    sim[:, 1:][:, np.arange(n), np.arange(n)] += step
    f = np.asarray(fn(sim.reshape(-1, n)), dtype=float).reshape(nb, n + 1)
    evals = nb * (n + 1)
    sim, f = _sorted(sim, f)
    converged = np.zeros(nb, dtype=bool)
    it = 0
    while it < max_iter:
        converged |= (f[:, -1] - f[:, 0]) <= tol
        act = np.flatnonzero(~converged)
        if act.size == 0:
            break
        it += 1
        s = sim[act]
        fs = f[act]
        k = act.size
        cen = s[:, :-1].mean(axis=1)
        xw = s[:, -1]
        fw = fs[:, -1]
        fb = fs[:, 0]
        fsw = fs[:, -2]
        xr = cen + ALPHA * (cen - xw)
        fr = np.asarray(fn(xr), dtype=float)
        evals += k

        new_x = xr.copy()
        new_f = fr.copy()
        shrink = np.zeros(k, dtype=bool)

        expand = fr < fb
        c_out = (fr >= fsw) & (fr < fw)
        c_in = fr >= fw
        second = expand | c_out | c_in
        idx2 = np.flatnonzero(second)
        if idx2.size:
            x2 = np.empty((idx2.size, n))
            sel_e = expand[idx2]
            sel_o = c_out[idx2]
            sel_i = c_in[idx2]
            x2[sel_e] = cen[idx2][sel_e] + GAMMA * (cen[idx2][sel_e] - xw[idx2][sel_e])
            x2[sel_o] = cen[idx2][sel_o] + BETA * (xr[idx2][sel_o] - cen[idx2][sel_o])
            x2[sel_i] = cen[idx2][sel_i] - BETA * (cen[idx2][sel_i] - xw[idx2][sel_i])
            f2 = np.asarray(fn(x2), dtype=float)
            evals += idx2.size

            take = np.zeros(idx2.size, dtype=bool)
            take[sel_e] = f2[sel_e] < fr[idx2][sel_e]
            take[sel_o] = f2[sel_o] <= fr[idx2][sel_o]
            take[sel_i] = f2[sel_i] < fw[idx2][sel_i]
            rows = idx2[take]
            new_x[rows] = x2[take]
            new_f[rows] = f2[take]
            # failed contractions shrink the whole simplex toward the best vertex
            failed = ~take & (sel_o | sel_i)
            shrink[idx2[failed]] = True

        keep = ~shrink
        s[keep, -1] = new_x[keep]
        fs[keep, -1] = new_f[keep]
        rows = np.flatnonzero(shrink)
        if rows.size:
            s[rows, 1:] = s[rows, :1] + DELTA * (s[rows, 1:] - s[rows, :1])
            fnew = np.asarray(fn(s[rows, 1:].reshape(-1, n)), dtype=float)
            fs[rows, 1:] = fnew.reshape(rows.size, n)
            evals += rows.size * n

        s, fs = _sorted(s, fs)
        sim[act] = s
        f[act] = fs
    return SimplexResult(sim[:, 0].copy(), f[:, 0].copy(), converged, it, evals)
