"""Exact computations in rational homology-manifold bordism: L-genus and
Pontrjagin numbers, the resolution-index monoid, the twisted product on
``(Omega^TOP (x) Q)[L_0(Z)]`` and the dual-transversality invariant."""

__version__ = "0.1.0"

from .bordism import TopClass, cp_generator, omega_coordinates, signature, top_product
from .charclasses import (
    Basis,
    BigradedClass,
    CharNumbers,
    PPolynomial,
    bigraded_multiply,
    bigraded_pair,
    convert_char_basis,
    genus_inverse_polynomial,
    l_polynomial,
    multiplicative_sequence_polynomial,
)
from .exact import (
    PowerSeries,
    enumerate_partitions,
    l_characteristic_series,
    series_reciprocal,
)
from .homology import (
    Coords,
    HClass,
    canonical_top_representative,
    h_product,
    lh_total_class,
    phi_to_psi,
    product_pontrjagin_class,
    psi_to_phi,
    star,
)
from .tables import (
    Decision,
    GroupDescriptor,
    ObstructionElement,
    dual_transverse_decision,
    l_group,
    resolvability,
    script_l_homotopy,
    transversality_invariant,
)
