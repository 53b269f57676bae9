"""Short Weierstrass curve generation, validation, and audit."""

from ._core import (
    audit_text,
    curve_order,
    ecdsa_roundtrip,
    generate,
    is_probable_prime,
    naf_weight,
    parallel_rho_cost_log2,
    registry_names,
    registry_show,
    rho_cost_log2,
    scalar_mul,
    solve_ecdlp,
    twist_order,
    verify_text,
)

__all__ = [
    "audit_text",
    "curve_order",
    "ecdsa_roundtrip",
    "generate",
    "is_probable_prime",
    "naf_weight",
    "parallel_rho_cost_log2",
    "registry_names",
    "registry_show",
    "rho_cost_log2",
    "scalar_mul",
    "solve_ecdlp",
    "twist_order",
    "verify_text",
]

__version__ = "0.1.0"
