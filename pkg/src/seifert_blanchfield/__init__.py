"""Exact computations with Seifert and Blanchfield forms.

Everything is exact: Python integers, :class:`fractions.Fraction` and
residues modulo a prime.  The main entry points are re-exported here.
"""

from .errors import (AlgebraError, DegreeCapExceeded, InternalAssertion, InvalidPresentation,
                     MathematicalError, NotIdempotent, NotIntertwining, NotInvertible,
                     NotNearProjection, NotNonsingularForm, NotSquare, NotSymmetric,
                     RingMismatch, ShapeMismatch, SingularForm, SourceTargetMismatch,
                     ValidationError, WrongEta)
from .rings import GF, QQ, ZZ, BaseRing
from .linalg import (ColumnEchelon, IdempotentSplit, Matrix, arithmetic, block_diag,
                     cofactor_determinant, determinant, inverse, is_invertible, is_nilpotent,
                     rank, solve_linear, split_idempotent)
from .laurent import (LaurentMatrix, LaurentPoly, LocalizedElement, STElement, associated,
                      augment, degree_cap, involute, laurent_det, normalize_unit, st_to_z,
                      z_power, z_to_st)
from .seifert import (NearProjectionSplit, SeifertModule, SeifertMorphism, direct_sum,
                      dual_module, dual_morphism, is_near_projection, make_morphism,
                      split_near_projection)
from .blanchfield import (BlanchfieldMorphism, BlanchfieldPresentation, compose, covering,
                          dual_of_morphism, identity, invert, invert_with_certificate,
                          make_blanchfield_morphism, morphism_equal, reduce_morphism, seifertize,
                          zeta)
from .forms import (BlanchfieldForm, LocalizedForm, SeifertForm, UncoverTrace,
                    check_form_morphism, cover_form, localize_form, make_seifert_form,
                    rank_certificate, symmetrize, uncover)
from .invariants import (KNOTS, InvariantReport, KnotRecord, alexander, determinant_invariant,
                         invariant_report, knot, signature)

__version__ = "0.1.0"
