"""Frozen defaults for budgets, scan thresholds and check tolerances.

Every threshold that an experiment or acceptance check relies on lives here,
so a run can be reproduced from a single place.  The values are deliberately
conservative for desk-scale machines.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Defaults:
    # Largest field size accepted at all.  Enumeration work grows like q^n,
    # so anything beyond this is unusable long before it is incorrect.
    field_size_guard: int = 2**16

    # Full q x q operation tables are built when q is at most this; larger
    # fields fall back to per-call coordinate arithmetic.
    element_table_limit: int = 256

    # Cap on q^n for scans over monic polynomials of degree n.
    enumeration_budget: int = 2**24

    # Cap on the number of residues visited by a single mod-P^2 scan.
    residue_scan_budget: int = 2**20

    # Root counting mod P uses an exhaustive residue scan up to this degree
    # and a modular-exponentiation gcd beyond it.
    mod_p_scan_max_degree: int = 4

    # Extra degrees past the truncation cutoff for which local counts are
    # computed exactly while certifying the product tail.
    tail_extension: int = 4

    # Number of tail degrees summed with exact prime counts before switching
    # to the closed-form geometric remainder.
    tail_horizon: int = 48

    # Tolerance for the observed fraction against the truncated product in
    # density convergence runs.
    scan_deviation_tolerance: float = 0.05

    # Required certified interval width in density convergence runs.
    density_width_tolerance: float = 1e-3


DEFAULTS = Defaults()


def default_weil_slack(modulus_degree: int) -> float:
    """Default slack constant for progression deviation checks.

    The square-root error bound carries an unspecified constant; this default
    was confirmed against reference enumeration runs before being frozen.
    """
    return 2.0 * (modulus_degree + 1) / modulus_degree
