"""Discrete C- and S-orbit-function transforms on fundamental domains of compact simple Lie groups."""

from .algebra import AlgebraData, LieType, build, pairing, volume_of_F
from .errors import GridMismatch, OrbitCapExceeded, RankError, SingularWeight, TorusGridError
from .grids import (
    GridPoint,
    RMatrix,
    WeightPoint,
    count_F,
    count_F_interior,
    count_Lambda,
    enumerate_F,
    enumerate_Lambda,
    generate_R,
    nu,
    stratify_gcd,
)
from .orbitfn import eval_C_grid, eval_C_real, eval_S_grid, eval_S_real
from .transform import (
    CoefficientSet,
    SampleSet,
    ctransform,
    inner_C,
    inner_S,
    interpolate_C,
    interpolate_S,
    stransform,
    verify_orthogonality,
)
from .weyl import (
    StabilizerReport,
    classify_component,
    epsilon,
    orbit,
    reflect_weight,
    stabilizer_order_lambda,
    stabilizer_order_x,
)

__version__ = "0.1.0"
