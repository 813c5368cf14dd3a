"""Equivariant bifurcation analysis for Neumann elliptic systems on the disk."""

from ._core import (
    ComputationalError,
    Error,
    EulerSO2,
    analyze,
    bessel_j,
    bessel_j_prime,
    bif_a9,
    deg_minus_id,
    degree_from_orbits,
    disk_spectrum,
    lambda_set,
    neumann_radial_roots,
    rabinowitz_excludes_bounded,
    run_cli,
    zero_sum_subsets,
)


def a9_system(p1, p2, mu_b0):
    """System document for B1 = diag(0 x mu_b0, 1 x (p1 - mu_b0)) and B2 = Id."""
    b1 = []
    if mu_b0 > 0:
        b1.append({"value": 0, "mult": mu_b0})
    if p1 - mu_b0 > 0:
        b1.append({"value": 1, "mult": p1 - mu_b0})
    b2 = [{"value": 1, "mult": p2}] if p2 > 0 else []
    return {"p1": p1, "p2": p2, "b1": b1, "b2": b2, "mu_b0": mu_b0, "a9": True}


__all__ = [
    "ComputationalError",
    "Error",
    "EulerSO2",
    "a9_system",
    "analyze",
    "bessel_j",
    "bessel_j_prime",
    "bif_a9",
    "deg_minus_id",
    "degree_from_orbits",
    "disk_spectrum",
    "lambda_set",
    "neumann_radial_roots",
    "rabinowitz_excludes_bounded",
    "run_cli",
    "zero_sum_subsets",
]
