"""Geometric discord measures built on the coherence class sums.

For two qubits the one-sided measures have closed forms in Bloch data:

  d_ab = (|x|^2 + |T|^2 - lmax(x x^t + T T^t)) / 4
  d_ba = (|y|^2 + |T|^2 - lmax(y y^t + T^t T)) / 4

where lmax is the largest eigenvalue.  The symmetric measure is their sum
(the two minimizations decouple).  The two-sided measure, minimizing the
single-count off-diagonal sum over product bases, has no closed form and is
always computed by the basis search; it is bracketed by
max(d_ab, d_ba) <= d_tilde <= d_ab + d_ba, which is asserted.
"""

from dataclasses import dataclass

import numpy as np

from .coherence import BasisOptimum, OptimizerConfig, minimize_over_bases
from .errors import ConsistencyError, DiscohError, NormalizationError, UnsupportedDimensionError
from .states import DensityMatrix, bloch_decompose

ANALYTIC = "analytic"
NUMERIC = "numeric"


@dataclass(frozen=True)
class MeasurementDirection:
    """Unit vector on the Bloch sphere picking the optimal local basis."""

    p: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float).reshape(-1)
        if p.shape != (3,):
            raise NormalizationError(f"direction must be a 3-vector, got shape {p.shape}")
        if abs(np.dot(p, p) - 1.0) > 1e-12:
            raise NormalizationError(f"direction norm^2 = {np.dot(p, p):.15f} is not 1")
        object.__setattr__(self, "p", p)


@dataclass(frozen=True)
class DiscordReport:
    """One-sided, symmetric and (optional) two-sided measures of one state."""

    d_ab: float
    d_ba: float
    d_sym: float
    d_tilde: float | None
    method: str
    diagnostics: dict | None = None

    def __post_init__(self):
        if self.method not in (ANALYTIC, NUMERIC):
            raise DiscohError(f"method must be analytic or numeric, got {self.method!r}")
        if abs(self.d_sym - (self.d_ab + self.d_ba)) > 1e-12:
            raise ConsistencyError("d_sym must equal d_ab + d_ba")
        if self.d_tilde is not None:
            if self.d_tilde + 1e-12 < max(self.d_ab, self.d_ba):
                raise ConsistencyError(
                    f"two-sided value {self.d_tilde:.3e} below max(d_ab, d_ba)"
                )
            if self.d_tilde > self.d_sym + 1e-7:
                raise ConsistencyError(
                    f"two-sided value {self.d_tilde:.3e} exceeds d_sym + 1e-7"
                )


def _lexmax_unit(span: np.ndarray) -> np.ndarray:
    """Unit vector in the column span with lexicographically largest entries."""
    for k in range(span.shape[0]):
        v = span @ span[k].conj()
        nrm = float(np.linalg.norm(v))
        if nrm > 1e-12:
            return (v / nrm).real
    raise ConsistencyError("eigenvector span is degenerate to numerical zero")


def _closed_form(local: np.ndarray, corr: np.ndarray) -> tuple[float, MeasurementDirection]:
    mmat = np.outer(local, local) + corr @ corr.T
    w, v = np.linalg.eigh(mmat)
    lam = float(w[-1])
    span = v[:, w >= w[-1] - 1e-12]
    value = 0.25 * (float(np.dot(local, local)) + float(np.sum(corr * corr)) - lam)
    return max(value, 0.0), MeasurementDirection(_lexmax_unit(span))


def _require_two_qubits(rho: DensityMatrix, what: str):
    if rho.dims != (2, 2):
        raise UnsupportedDimensionError(f"{what} closed form needs dims (2, 2), got {rho.dims}")


def discord_ab_analytic(rho: DensityMatrix) -> tuple[float, MeasurementDirection]:
    """Closed-form measure with the minimizing measurement on side A."""
    _require_two_qubits(rho, "d_ab")
    rep = bloch_decompose(rho)
    return _closed_form(rep.x, rep.T)


def discord_ba_analytic(rho: DensityMatrix) -> tuple[float, MeasurementDirection]:
    """Closed-form measure with the minimizing measurement on side B."""
    _require_two_qubits(rho, "d_ba")
    rep = bloch_decompose(rho)
    return _closed_form(rep.y, rep.T.T)


def discord_ab_numeric(rho: DensityMatrix, config: OptimizerConfig | None = None) -> BasisOptimum:
    return minimize_over_bases(rho, "class1", config)


def discord_ba_numeric(rho: DensityMatrix, config: OptimizerConfig | None = None) -> BasisOptimum:
    return minimize_over_bases(rho, "class2", config)


def discord_symmetric(
    rho: DensityMatrix, method: str = ANALYTIC, config: OptimizerConfig | None = None
) -> float:
    """Sum of the two one-sided measures; the minimizations are independent."""
    if method == ANALYTIC:
        return discord_ab_analytic(rho)[0] + discord_ba_analytic(rho)[0]
    if method == NUMERIC:
        return discord_ab_numeric(rho, config).value + discord_ba_numeric(rho, config).value
    raise DiscohError(f"method must be analytic or numeric, got {method!r}")


def discord_two_side(rho: DensityMatrix, config: OptimizerConfig | None = None) -> BasisOptimum:
    """Minimized single-count off-diagonal sum; search only, no closed form."""
    return minimize_over_bases(rho, "tilde_total", config)


def discord_report(
    rho: DensityMatrix,
    method: str = "auto",
    config: OptimizerConfig | None = None,
    include_two_side: bool = True,
) -> DiscordReport:
    """Full set of discord measures with the bracket check applied."""
    if method == "auto":
        method = ANALYTIC if rho.dims == (2, 2) else NUMERIC
    diagnostics: dict = {}
    if method == ANALYTIC:
        d_ab, dir_a = discord_ab_analytic(rho)
        d_ba, dir_b = discord_ba_analytic(rho)
        diagnostics["direction_a"] = dir_a.p
        diagnostics["direction_b"] = dir_b.p
    elif method == NUMERIC:
        opt_a = discord_ab_numeric(rho, config)
        opt_b = discord_ba_numeric(rho, config)
        d_ab, d_ba = opt_a.value, opt_b.value
        diagnostics["converged_a"] = opt_a.converged
        diagnostics["converged_b"] = opt_b.converged
    else:
        raise DiscohError(f"method must be auto, analytic or numeric, got {method!r}")
    d_tilde = None
    if include_two_side:
        opt_t = discord_two_side(rho, config)
        d_tilde = opt_t.value
        diagnostics["converged_two_side"] = opt_t.converged
    return DiscordReport(
        d_ab=d_ab,
        d_ba=d_ba,
        d_sym=d_ab + d_ba,
        d_tilde=d_tilde,
        method=method,
        diagnostics=diagnostics,
    )
