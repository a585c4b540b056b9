"""Reversibility of additive cellular automata on cylinders.

A rule with units at positions ``x1 < ... < xr`` is irreversible on a
cylinder of size ``n`` exactly when some period of the recurrence
``T(i) = sum_{l>=2} T(i - (x_l - x1))`` divides ``n``.  This package
computes those period spectra and checks them against direct linear
algebra over GF(2).
"""

__version__ = "0.1.0"

from .errors import (
    CapacityError,
    DomainError,
    PreconditionError,
    SizeMismatchError,
    TheoremViolation,
)
from .gf2 import (
    BitString,
    Gf2Poly,
    circulant_nullspace,
    convolve,
    cyclic_shift,
    inverse_rule,
    parity,
    poly_gcd,
    poly_inverse_mod,
    poly_powmod,
)
from .recursion import (
    PositionCollection,
    ShiftCollection,
    apply_operator,
    companion_step,
    derive,
    orbit_of_seed,
)
from .spectrum import (
    Spectrum,
    char_poly,
    is_reversible,
    kernel,
    reversible_sizes,
    spectrum,
    spectrum_bruteforce,
    spectrum_poly,
)
from .families import (
    block_spectrum,
    eta,
    exp_bound_check,
    exp_closed_word,
    reflect,
    reversibility_index,
    scale,
    translate,
)
