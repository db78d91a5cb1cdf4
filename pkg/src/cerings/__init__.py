"""Structure theory of finite associative algebras over prime fields.

The package decides, for algebras given by structure constants, whether
the ring is an essential extension of its center, and cross-checks that
decision against the graded parity criterion, the socle/idempotent
characterization, and a battery of proved implications.
"""

from .core import (DEFAULT_DIM_CAP, DEFAULT_ENUM_CAP, FiniteAlgebra, Ideal,
                   exterior_algebra, field_algebra, group_algebra,
                   ideal_closure, matrix_algebra, named_group_table,
                   product_algebra, quotient_algebra, random_algebra,
                   subalgebra_on, triangular_algebra)
from .errors import (CapExceededError, DecompositionUnavailableError,
                     DegenerateQuotientError, DimensionError, HypothesisError,
                     InvalidRingError, RingError, TheoremViolationError)
from .essentiality import CEVerdict, ce_decide, ce_exhaustive, quasi_identity_probe
from .fplinalg import (PrimeField, Subspace, intersect, kernel, member, rref,
                       subspace_sum)
from .graded import (Grading, check_generalized_anticommutative,
                     check_grading, check_homogeneously_faithful, component,
                     even_part, graded_ce_criterion, graded_center_predicted)
from .ringfile import dump_ring, load_ring, parse_ring_text, ring_text
from .structure import (AnalysisReport, center, idempotents,
                        idempotents_all_central, is_local, jacobson_radical,
                        left_socle, local_decomposition, right_socle,
                        socle_over_center)
from .verify import (analyze, check_ce_equivalence, corpus_run,
                     corpus_summary, default_corpus, parse_corpus_text)

__version__ = "0.1.0"
