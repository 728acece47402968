"""Maps between fixed-face conditions that leave the solution unchanged,
and the large-h0 limit of the convective (Robin) condition.
"""

from dataclasses import dataclass, replace

from .errors import PreconditionError, ValidationError, VerificationError
from .model import BoundaryCondition, ProblemSpec, validate
from .solution import _front_kummers, solve
from .solver import solve_xi

EQUIVALENCE_TOL = 1e-9


@dataclass(frozen=True)
class EquivalenceRecord:
    source_spec: ProblemSpec
    target_spec: ProblemSpec
    xi_source: float
    xi_target: float
    max_xi_gap: float


def dirichlet_from_general(spec, sol):
    """Dirichlet spec whose solution coincides with ``sol``.

    The face temperature coefficient is u0 = u(0, t) t^(-alpha/2), which is
    the solution's c1.
    """
    bc = spec.bc
    if bc.kind == "dirichlet":
        raise PreconditionError("source spec already has a Dirichlet condition")
    m = spec.material
    m1, m2 = _front_kummers(spec.alpha, sol.xi)
    if bc.kind == "neumann":
        u0 = 2 * m.a * bc.q0 / m.k * sol.xi * m2 / m1
    else:
        lam, h0, u_inf = bc.as_general()
        u0 = u_inf * sol.xi * m2 / (m.k / (2 * m.a * h0) * m1 + lam * sol.xi * m2)
    return validate(replace(spec, bc=BoundaryCondition.dirichlet(u0)))


def h0_from_dirichlet(dspec, dsol, lam, u_inf):
    """Generalized (lam, h0, u_inf) spec whose solution coincides with ``dsol``.

    Requires ``lam * u0 < u_inf``; lam and u_inf are free data.
    """
    if dspec.bc.kind != "dirichlet":
        raise PreconditionError("source spec must have a Dirichlet condition")
    u0 = dspec.bc.u0
    if not lam * u0 < u_inf:
        raise PreconditionError(f"need lambda * u0 < u_inf (got {lam} * {u0} >= {u_inf})")
    m = dspec.material
    m1, m2 = _front_kummers(dspec.alpha, dsol.xi)
    h0 = -m.k * u0 * m1 / (2 * m.a * dsol.xi * m2 * (lam * u0 - u_inf))
    if lam == 1:
        bc = BoundaryCondition.robin(h0, u_inf)
    else:
        bc = BoundaryCondition.general(lam, h0, u_inf)
    try:
        return validate(replace(dspec, bc=bc))
    except ValidationError as exc:
        raise PreconditionError(str(exc)) from None


def to_dirichlet(spec, tol=1e-10, max_iter=100):
    """Solve ``spec``, map it to Dirichlet data, solve that, compare fronts."""
    sol, _ = solve(spec, tol, max_iter)
    target = dirichlet_from_general(spec, sol)
    xi_d = solve_xi(target, tol, max_iter).xi
    return EquivalenceRecord(spec, target, sol.xi, xi_d, abs(sol.xi - xi_d))


def from_dirichlet(dspec, lam, u_inf, tol=1e-10, max_iter=100):
    dsol, _ = solve(dspec, tol, max_iter)
    target = h0_from_dirichlet(dspec, dsol, lam, u_inf)
    xi = solve_xi(target, tol, max_iter).xi
    return EquivalenceRecord(dspec, target, dsol.xi, xi, abs(dsol.xi - xi))


@dataclass(frozen=True)
class LimitRow:
    Bi: float
    xi_r: float
    gap: float
    c1_r: float


@dataclass(frozen=True)
class LimitStudy:
    rows: list
    xi_d_inf: float
    u_inf: float


def robin_limit_study(base, bi_values, tol=1e-10, max_iter=100):
    """Robin front coefficients along ascending Biot numbers, against the
    Dirichlet problem with face temperature u_inf t^(alpha/2).

    Raises ``VerificationError`` if some xi_R is not strictly below xi_Dinf
    or the gaps fail to shrink strictly.
    """
    if base.bc.kind != "robin":
        raise PreconditionError("limit study needs a Robin spec")
    bi_values = [float(b) for b in bi_values]
    if any(b <= 0 for b in bi_values) or any(x >= y for x, y in zip(bi_values, bi_values[1:])):
        raise PreconditionError("Biot numbers must be positive and strictly ascending")
    m = base.material
    u_inf = base.bc.u_inf
    xi_d = solve_xi(replace(base, bc=BoundaryCondition.dirichlet(u_inf)), tol, max_iter).xi
    rows = []
    for bi in bi_values:
        spec = replace(base, bc=BoundaryCondition.robin(bi * m.k / m.a, u_inf))
        sol, _ = solve(spec, tol, max_iter)
        rows.append(LimitRow(bi, sol.xi, xi_d - sol.xi, sol.c1))
    bad = [r.Bi for r in rows if not r.gap > 0]
    if bad:
        raise VerificationError(f"xi_R >= xi_Dinf at Bi = {bad}")
    if any(x.gap <= y.gap for x, y in zip(rows, rows[1:])):
        raise VerificationError("gaps to xi_Dinf are not strictly decreasing")
    return LimitStudy(rows, xi_d, u_inf)
