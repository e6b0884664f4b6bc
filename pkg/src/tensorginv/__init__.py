"""Generalized inverses of even-order complex tensors under the Einstein product."""

from .config import DEFAULT_TOL, ToleranceConfig
from .errors import (
    BadExponent,
    ConvergenceFailure,
    HypothesisViolated,
    IndexNotFound,
    NotIndexOne,
    ShapeMismatch,
    TensorFileError,
    TensorInverseError,
    UnknownFixture,
)
from .inverses import (
    CoreEPFormula,
    CoreFormula,
    InverseKind,
    InverseResult,
    SumHypotheses,
    core_ep_inverse,
    core_ep_of_sum,
    core_inverse,
    core_inverse_of_sum,
    drazin_inverse,
    drazin_of_sum,
    group_inverse,
    group_inverse_of_sum,
    index_profile,
    inner_inverse,
    is_ep,
    is_hermitian_idempotent,
    is_idempotent,
    is_partial_isometry,
    is_tripotent,
    moore_penrose,
    one_three_inverse,
    reflexive_inverse,
    sum_hypotheses,
    tensor_index,
)
from .tensor import (
    DenseTensor,
    TensorShape,
    add,
    approx_equal,
    conj_transpose,
    einstein_product,
    identity_tensor,
    rsh,
    rsh_inverse,
    rshrank,
    scale,
    tensor_power,
    transpose,
    zero_tensor,
)
from .verify import AxiomReport, check, classify

__version__ = "0.1.0"
