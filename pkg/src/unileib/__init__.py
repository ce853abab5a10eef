"""unileib: exact universal (bi)algebras of finite-dimensional Leibniz/Lie algebras.

From a structure-constant presentation of a Leibniz algebra the library builds
the universal algebra of the pair (a polynomial quotient with a canonical
Gröbner presentation), verifies its bialgebra structure, enumerates characters
and automorphisms over prime fields, and classifies group gradings and group
actions.  A compiled kernel accelerates the Gröbner and enumeration hot loops
when available; the pure-Python fallback is behaviourally identical.
"""

from ._kernel import kernel_name
from .fields import QQ, PrimeField, RationalField, field_from_json
from .poly import DEGREVLEX, LEX, Polynomial, VariableGrid
from .groebner import (
    GroebnerBasis,
    buchberger,
    normal_form,
    reduce_in_tensor_square,
    s_polynomial,
    tensor_square_basis,
)
from .algebras import (
    CommutativeAlgebra,
    LeibnizAlgebra,
    LinearMap,
    builtin,
    check_leibniz,
    check_lie,
    current_algebra,
    derived_subalgebra,
    is_hom,
    load_algebra,
)
from .universal import (
    Presentation,
    build_presentation,
    comultiplication,
    eta,
    symmetric_algebra_check,
    universal_polynomials,
    verify_comodule,
    verify_eta_hom,
)
from .homspace import (
    Character,
    convolution,
    convolution_inverse,
    enumerate_automorphisms,
    enumerate_characters,
    enumerate_endomorphisms,
    enumerate_representations,
    gamma,
    lift,
    verify_character,
)
from .gradings import (
    BialgebraHom,
    FiniteAbelianGroup,
    Grading,
    GroupAction,
    action_to_bihom,
    bihom_to_action,
    bihom_to_grading,
    classify_gradings,
    diagonal_gradings,
    enumerate_actions,
    grading_to_bihom,
    gradings_isomorphic,
    verify_bialgebra_hom,
)

__version__ = "0.1.0"
