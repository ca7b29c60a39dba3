"""Schubert calculus on a Grassmann algebra via Hasse-Schmidt derivations."""
from .coeff import (
    ANY,
    INHOMOGENEOUS,
    Generator,
    Poly,
    PolyParseError,
    Ring,
    RingMismatchError,
    graded_degree,
    parse_ring,
    poly_mul,
    poly_parse,
)
from .derivation import (
    DerivationEngine,
    apply_D,
    apply_Dbar,
    dbar_operator_poly,
    evaluate_operator,
    leibniz_expand,
    operator_ring,
    pieri_expand,
    pieri_shifts,
)
from .exterior import (
    ModuleSpec,
    MultiVector,
    TruncationError,
    normalize_wedge,
    reduce_index,
    weight,
)
from .presentation import (
    PresentationResult,
    dtilde_poly,
    normal_form,
    presentation,
    relation_poly,
)
from .schubert_ring import (
    ClassCombination,
    SchubertClass,
    class_to_vector,
    multiply,
    multiply_classes,
    pieri_on_class,
    structure_constants,
    vector_to_classes,
)
from .schur import (
    giambelli_vector,
    index_to_partition,
    parse_partition,
    partition_to_index,
    schur_delta,
)

__version__ = "0.1.0"
