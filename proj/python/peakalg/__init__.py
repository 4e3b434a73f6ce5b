"""Peak statistics, enriched P-partitions and peak algebras."""

from ._core import (
    closure,
    descent_set,
    enriched_order_polynomial,
    fibonacci,
    idempotents,
    linear_extensions,
    peak_function,
    peak_set,
    structure_constants,
)

__all__ = [
    "closure",
    "descent_set",
    "enriched_order_polynomial",
    "fibonacci",
    "idempotents",
    "linear_extensions",
    "peak_function",
    "peak_set",
    "structure_constants",
]
