"""
Series - Truncated series arithmetic, the g-system and the exactly-one generating functions.
"""
from forge_words.application.series.g_system import (
    g_system_residuals,
    g_system_right_hand_side,
    solve_g_system,
)
from forge_words.application.series.weight_enumerators import (
    avoider_ogf,
    compute_f,
    compute_h,
    h_from_table,
    warmup_h1,
    warmup_h2,
)
from forge_words.domain.value_objects import (
    decimate,
    series_add,
    series_div_x,
    series_mul,
    series_scale,
    series_shift,
    series_sub,
)

__all__ = [
    "series_add",
    "series_sub",
    "series_scale",
    "series_shift",
    "series_mul",
    "series_div_x",
    "decimate",
    "solve_g_system",
    "g_system_residuals",
    "g_system_right_hand_side",
    "compute_h",
    "compute_f",
    "h_from_table",
    "warmup_h1",
    "warmup_h2",
    "avoider_ogf",
]
