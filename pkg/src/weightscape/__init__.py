"""weightscape: exact combinatorics of weighted pointed stable curves.

Everything is computed in exact rational arithmetic.  The package covers
the weight-domain chamber decompositions, stability and contraction of
dual trees, boundary and exceptional-locus bookkeeping, GIT stability of
point configurations on the line, the named chamber families, and the
discrepancy ledgers of the standard blow-up towers.
"""

from .errors import (AtypicalLinearization, BoundarySumMismatch,
                     DegreeNotPositive, DimensionMismatch, DomainError,
                     DomainViolation, InternalInvariantError, LimitExceeded,
                     NonterminatingContraction, NotAStable, OnWall,
                     ResidualDegreeNotPositive, UnequalWeightsInBlock,
                     WeightOutOfRange, WeightsNotDominated, WeightscapeError)
from .ratcore import (ConstraintSystem, LinearConstraint, Rational,
                      find_interior_point, is_feasible, rat, rat_str)
from .weights import (Chamber, Granularity, Mode, Position, SignVector, Wall,
                      WeightData, enumerate_chambers, locate,
                      perturb_to_fine_chamber, same_chamber,
                      universal_curve_weight, validate, walls)
from .curves import (BoundaryDivisor, DegreeCase, DivisorFate, DivisorKind,
                     DivisorStatus, MarkClass, MarkedTree, StabilityReport,
                     Stratum, Vertex, boundary_divisors, canonical_form,
                     canonical_key, contracted_divisors,
                     degree_vanishing_case, enumerate_strata, forget,
                     is_blowup_profile, is_reduction_iso, is_stable,
                     mark_class, marked_tree, stabilize,
                     symmetrized_boundary_count, vertex_log_degree)
from .git import (ConfigType, GitVerdict, Linearization, QuotientMatch,
                  chamber_matches_quotient, is_typical, stability,
                  strictly_semistable_types, tau, tau_fine_preimage)
from .logcanon import (AmpleLcRange, DiscrepancyLedger, KeelLedgerResult,
                       LedgerStep, Remark76Report, kapranov_ample_lc_range,
                       kapranov_ledger, keel_ledger, remark76_check)
from .named import (BlowupStep, FamilyKind, NamedFamily, blowup_sequence,
                    classify, kapranov_w, kapranov_x, keel_y, losev_manin,
                    parse_tag, weights_for)

__version__ = "0.1.0"
