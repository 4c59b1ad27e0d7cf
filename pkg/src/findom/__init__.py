"""Strongly Z-graded rings, Novikov contraction certificates and finite-domination witnesses."""

from .complexes import (FreeComplex, R0Complex, laurent_homology, mapping_cone, r0_betti,
                        validate_complex)
from .errors import (FindomError, GatingError, RingMismatch, SchemaError, Verdict,
                     WindowError)
from .fields import GF, QQ
from .linalg import KERNEL
from .mather import (Bicomplex, DominationData, contraction_from_domination, cone_nu,
                     evaluation_domination, nu_build, totrt_build)
from .novikov import (ContractionCertificate, TruncatedNovikov, contraction_search,
                      contraction_verify, laurent_novikov_decide)
from .rings import (GradedQuotientRing, LaurentRing, TwistedLaurentRing, abcd_ring,
                    derive_partition, reverse_grading, swap_twisted_ring, validate_ring,
                    verify_partition)
from .sheaves import extend_to_sheaf, h0_witness, witness_pipeline
from .torus import InducedElement, induce, mu_apply, torus

__version__ = "0.1.0"
