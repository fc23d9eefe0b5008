"""Square-free values of polynomials at prime arguments over F_q[t].

Exact arithmetic in F_q and F_q[t], local root counts with unique lifting,
the limiting density as a truncated Euler product with a certified tail
interval, and desk-scale counting experiments that reproduce the supporting
estimates.
"""

from .bivariate import BiPoly, discriminant, hensel_threshold, is_admissible
from .config import DEFAULTS
from .density import DensityEstimate, positivity_check, squarefree_density
from .errors import (
    BudgetExceededError,
    CertificationError,
    InadmissibleError,
    InseparableError,
    ParseError,
)
from .experiments import (
    QScanRow,
    ScanRow,
    SieveCounts,
    WeilCheck,
    empirical_density,
    qscan,
    remainder_counts,
    scan,
    sieve_split_counts,
    weil_check,
)
from .finitefield import FieldElement, FiniteField, field_from_order
from .localcounts import (
    LocalCount,
    count_roots_mod_prime,
    count_roots_mod_prime_square,
    count_unit_roots_mod_prime_square,
    hensel_lift,
    local_root_profile,
)
from .parsing import parse_bipoly, parse_poly
from .polyring import (
    Poly,
    PrimeMod,
    count_primes,
    count_primes_ap,
    enumerate_monic,
    enumerate_primes,
    euler_phi,
    factorize,
    frobenius_decompose,
    frobenius_recompose,
    is_irreducible,
    is_squarefree,
    poly_gcd,
    poly_modpow,
    poly_xgcd,
    primes_up_to,
    squarefree_decomposition,
)

__version__ = "0.1.0"
