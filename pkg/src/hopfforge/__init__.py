"""hopfforge: exact computation with finitely presented bialgebras and
Hopf algebras, their colimits, and a finite-dimensional structure-constant
oracle."""

from .algebra import FreeAlgebra, FreePoly, GenMap, TensorPoly, Word
from .constructions import (
    Coequalizer,
    Coproduct,
    CoproductLabeling,
    coequalizer,
    coproduct,
    induced_from_cocone,
    induced_from_coeq,
)
from .errors import (
    AlgebraMismatchError,
    CharacteristicError,
    DegreeOverflowError,
    HopfForgeError,
    NotFiniteDimensionalError,
    ParseError,
    UnknownGeneratorError,
)
from .fields import Field, QQ
from .findim import (
    ProbeResult,
    StructureTable,
    check_bialgebra_axioms,
    compile_presentation,
    coreflection_probe,
    solve_antipode,
)
from .presentation import HopfMap, HopfPresentation, check_hopf_map, validate
from .rewrite import (
    Membership,
    MembershipResult,
    RewriteSystem,
    basis_up_to_degree,
    complete,
    ideal_contains,
    normal_form,
    tensor_normal_form,
)
from .standard import (
    GroupPresentation,
    cyclic_group_algebra,
    group_algebra,
    idempotent_monoid_bialgebra,
    integers_group_algebra,
    make_example,
    monoid_bialgebra,
    primitive_element_bialgebra,
    sweedler_h4,
)

__version__ = "0.1.0"
