"""Exact similarity solutions of one-phase Stefan problems whose latent heat
depends on the position and speed of the front, L = gamma s^beta sdot^delta."""

from .errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    PreconditionError,
    StefanError,
    ValidationError,
    VerificationError,
)
from .kummer import inerfc, kummer_m, kummer_m_derivative
from .model import (
    BoundaryCondition,
    DimensionlessGroups,
    LatentHeatLaw,
    MaterialParams,
    ProblemSpec,
    dimensionless,
    validate,
)
from .solution import (
    SimilaritySolution,
    assemble,
    eval_fixed_face_flux,
    eval_front,
    eval_u,
    latent_heat,
    solve,
)
from .solver import RootReport, f_dirichlet, f_general, f_general_prime, solve_xi

__version__ = "0.1.0"
