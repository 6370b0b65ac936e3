"""Exact structure-constant kernel for Hom-alternative algebras, Hom-Poisson
coalgebras, and their modules and comodules.

Every axiom is a multilinear identity in the structure constants, decided
exactly over the rationals by scanning basis tuples; constructions (twists,
opposites, negations) are exact tensor transforms.
"""

from .algebras import (
    HomAlgebra,
    check_anticommute_identity,
    check_endomorphism,
    check_hom_associative,
    check_left_hom_alternative,
    check_morphism,
    check_right_hom_alternative,
    left_alternative_defect,
    negate,
    opposite,
    right_alternative_defect,
    yau_twist,
)
from .coalgebras import (
    HomCoassocCoalgebra,
    HomLieCoalgebra,
    HomPoissonCoalgebra,
    check_coalgebra_morphism,
    check_cocommutativity,
    check_coendomorphism,
    check_hom_coassociative,
    check_hom_coleibniz,
    check_hom_lie_coalgebra,
    check_hom_poisson_coalgebra,
    negate_coalgebra,
    opposite_coalgebra,
    yau_twist_coalgebra,
)
from .comodules import (
    HomComodule,
    check_coassoc_comodule,
    check_comodule_morphism,
    check_lie_comodule,
    check_poisson_comodule,
    negate_poisson_comodule,
    regular_comodule,
    twist_coassoc_comodule,
    twist_lie_comodule,
    twist_poisson_comodule,
    with_coalgebra,
)
from .errors import (
    AlgebraMismatch,
    AlreadyTwisted,
    CoalgebraMismatch,
    DimensionMismatch,
    FormatError,
    KernelError,
    KindMismatch,
    NotAnticommuting,
    NotCoendomorphism,
    NotEndomorphism,
    WrongSide,
)
from .exact import (
    ActionTensor,
    CoactionTensor,
    ComulTensor,
    LinearMap,
    MulTensor,
    Vector,
    apply_bilinear,
    apply_coaction,
    compose,
    cyclic_map,
    format_rational,
    parse_rational,
    rat,
    swap_map,
    tensor_product,
)
from .modules import (
    HomModule,
    check_left_module,
    check_module_morphism,
    check_right_module,
    left_module_defect,
    module_hom_associator,
    negate_module,
    opposite_module,
    regular_module,
    twist_module,
)
from .report import AxiomReport, Witness

__version__ = "0.1.0"
