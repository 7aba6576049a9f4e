"""Symbolic powers of the height-one ideal K of a rational normal scroll.

A = S / I_2(psi) for a scroll matrix psi with block widths sigma; K is
generated by the top row of psi and K^(n) = A_{>=n}.  The package builds the
monomial generating set of K^(n), certifies Groebner bases of its preimage,
assembles the rank/shift data of its filtration resolution, and computes
minimal Betti numbers independently from Koszul homology.
"""
from .algebra import DEFAULT_PRIME, FineDegree, Polynomial, VarLayout, compare_revlex, grade
from .betti import BettiTable, invariants_from_betti, koszul_betti
from .errors import (CapacityError, ConfigurationError, DomainError, IncompleteError,
                     InvariantViolation, ScrollDivError)
from .groebner import GroebnerBasis, buchberger, depth_certificate, verify_gb
from .kernels import BACKEND
from .rees import factor_over_S, rees_generating_set
from .resolution import filtration_coarse, filtration_fine, total_resolution
from .scroll import ScrollData, build_psi, minors_H
from .symbolic import canonical_form, enumerate_eligible, generating_set_L, in_symbolic_power

__version__ = "0.1.0"
