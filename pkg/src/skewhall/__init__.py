"""Hall algebras of skew shapes and of finite modules over free commutative monoids."""

from ._kernels import BACKEND
from .category import CategorySpec
from .enumeration import enumerate_modules, skew_classes
from .errors import (
    ClassOutsideCategory,
    DimensionMismatch,
    NotAFiltration,
    NotASubmodule,
    NotConvex,
    PreconditionFailed,
    ResourceCapExceeded,
    SkewHallError,
    UnsupportedDimension,
)
from .hall import (
    DualElement,
    HallElement,
    TensorElement,
    antipode,
    bracket,
    coproduct,
    delta,
    dual_coproduct,
    extensions,
    pairing,
    product,
    sn_act,
    structure_constant,
    verify_axioms,
)
from .modules import (
    ZERO,
    ModuleClass,
    PointedModule,
    canonical_class,
    direct_sum,
    module_from_shape,
    shape_from_module,
)
from .shapes import SkewShape, canonicalize, enumerate_connected_shapes, filters_of, parse_shape
from .tableaux import Tableau, count_standard_via_chains, enumerate_standard

__version__ = "0.1.0"
