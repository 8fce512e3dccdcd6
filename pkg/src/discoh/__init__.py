"""Basis-dependent coherence accounting for bipartite states, the discord
and nonlocality measures built on top of it, and randomized campaigns that
cross-check the closed forms against direct optimization."""

from .coherence import (
    BasisOptimum,
    ClassContributions,
    LocalBasisPair,
    OptimizerConfig,
    contributions,
    identity_basis,
    maximize_over_bases,
    minimize_over_bases,
    unitaries_from_params,
)
from .discord import (
    DiscordReport,
    MeasurementDirection,
    discord_ab_analytic,
    discord_ab_numeric,
    discord_ba_analytic,
    discord_ba_numeric,
    discord_report,
    discord_symmetric,
    discord_two_side,
)
from .entanglement import (
    MonogamyReport,
    concurrence_mixed_2q,
    concurrence_pure,
    corollary1_check,
    monogamy_check,
    script_d,
)
from .errors import (
    ChannelError,
    ConsistencyError,
    DiscohError,
    HermiticityError,
    MixedStateError,
    NormalizationError,
    PositivityError,
    PurityError,
    ShapeError,
    StateFormatError,
    TraceError,
    UnitarityError,
    UnsupportedDimensionError,
)
from .nonlocality import (
    CorrelationSpectrum,
    basis_pair_from_directions,
    chsh_violation,
    correlation_spectrum,
    direction_basis,
    v_measures_analytic,
    v_measures_numeric,
    v_objective_bloch,
)
from .states import (
    BlochRep,
    DensityMatrix,
    KrausChannel,
    PureState,
    apply_channel,
    bloch_compose,
    bloch_decompose,
    load_state,
    make_bell,
    make_werner,
    phase_damping,
    random_classical,
    random_mixed,
    random_pure,
    random_unitary,
    save_state,
    schmidt_decompose,
    swap_subsystems,
)
from .verify import (
    CampaignResult,
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

__version__ = "0.1.0"

__all__ = [
    "BasisOptimum",
    "BlochRep",
    "CampaignResult",
    "ChannelError",
    "ClassContributions",
    "ConsistencyError",
    "CorrelationSpectrum",
    "DensityMatrix",
    "DiscohError",
    "DiscordReport",
    "HermiticityError",
    "KrausChannel",
    "LocalBasisPair",
    "MeasurementDirection",
    "MixedStateError",
    "MonogamyReport",
    "NormalizationError",
    "OptimizerConfig",
    "PositivityError",
    "PureState",
    "PurityError",
    "ShapeError",
    "StateFormatError",
    "TraceError",
    "UnitarityError",
    "UnsupportedDimensionError",
    "apply_channel",
    "basis_pair_from_directions",
    "bloch_compose",
    "bloch_decompose",
    "chsh_violation",
    "class3_extrema_campaign",
    "class3_sum_rule_campaign",
    "classical_zero_campaign",
    "concurrence_mixed_2q",
    "concurrence_pure",
    "contributions",
    "corollary1_check",
    "correlation_spectrum",
    "direction_basis",
    "discord_ab_analytic",
    "discord_ab_numeric",
    "discord_ba_analytic",
    "discord_ba_numeric",
    "discord_closed_form_campaign",
    "discord_report",
    "discord_symmetric",
    "discord_two_side",
    "identity_basis",
    "load_state",
    "make_bell",
    "make_werner",
    "maximize_over_bases",
    "minimize_over_bases",
    "mixed_state_bound_campaign",
    "monogamy_campaign",
    "monogamy_check",
    "phase_damping",
    "pure_state_discord_campaign",
    "random_classical",
    "random_mixed",
    "random_pure",
    "random_unitary",
    "save_state",
    "schmidt_decompose",
    "script_d",
    "swap_subsystems",
    "two_side_sandwich_campaign",
    "unitaries_from_params",
    "v_measures_analytic",
    "v_measures_numeric",
    "v_objective_bloch",
    "werner_sweep",
]
