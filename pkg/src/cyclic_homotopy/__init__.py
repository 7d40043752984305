"""Explicit homotopies for cyclic group actions on rings.

Exact checks of the operator identities in the free ring (:mod:`.freering`,
:mod:`.operators`), finite ring instances (:mod:`.rings`), and the periodic
complex with its Tate quotients and effective preimages (:mod:`.cohomology`).
"""

__version__ = "0.1.0"

from .base import CyclicRing, PreconditionError, TooLargeError  # noqa: E402
from .freering import FreePoly, UniversalRing, generator, parse_poly, shift_apply, specialize  # noqa: E402
from .operators import (  # noqa: E402
    CheckResult,
    check_corollary1,
    check_eq1,
    check_homotopy,
    check_lemma1,
    check_proposition,
    h_special,
    hp_special,
    op_hpx,
    op_hx,
    op_jpx,
    op_jx,
    op_N,
    op_T,
    partial_sum,
)
from .rings import RingSpec, build_ring, find_norm_one  # noqa: E402
from .cohomology import image, kernel, norm_preimage, t_preimage, tate_quotients  # noqa: E402
