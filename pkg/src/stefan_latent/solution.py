"""Similarity solution u(x,t) = t^(alpha/2) phi(eta), s(t) = 2 xi a sqrt(t).

With ``eta = x / (2 a sqrt(t))``,

    phi(eta) = c1 M(-alpha/2, 1/2, -eta^2) + c2 eta M(-alpha/2 + 1/2, 3/2, -eta^2)

and the constants c1, c2 fixed by the isotherm u(s, t) = 0 and the
condition at x = 0.
"""

from dataclasses import dataclass
import math

from .errors import DomainError, VerificationError
from .kummer import kummer_m
from .model import ProblemSpec
from .solver import RootReport, solve_xi

# relative slack when deciding whether x lies beyond the front
_FRONT_SLACK = 1e-12


@dataclass(frozen=True)
class SimilaritySolution:
    spec: ProblemSpec
    xi: float
    c1: float
    c2: float
    alpha: float

    def phi(self, eta):
        al = self.alpha
        e2 = -eta * eta
        return self.c1 * kummer_m(-al / 2, 0.5, e2) + self.c2 * eta * kummer_m(-al / 2 + 0.5, 1.5, e2)

    def dphi(self, eta):
        al = self.alpha
        e2 = -eta * eta
        return (2 * al * eta * self.c1 * kummer_m(-al / 2 + 1, 1.5, e2)
                + self.c2 * kummer_m(-al / 2 + 0.5, 0.5, e2))

    def dphi_front(self):
        """phi'(xi) from the reduced form c2 / M(alpha/2 + 1/2, 1/2, xi^2).

        Equivalent to ``dphi(xi)`` once phi(xi) = 0 but free of the
        cancellation between the c1 and c2 terms.
        """
        return self.c2 / kummer_m(self.alpha / 2 + 0.5, 0.5, self.xi * self.xi)


def _front_kummers(alpha, xi):
    e2 = -xi * xi
    return kummer_m(-alpha / 2, 0.5, e2), kummer_m(-alpha / 2 + 0.5, 1.5, e2)


def coefficients(spec, xi):
    """(c1, c2) for a given front coefficient ``xi``."""
    al = spec.alpha
    m, bc = spec.material, spec.bc
    m1, m2 = _front_kummers(al, xi)
    if not m1 > 0:
        raise VerificationError(f"M(-alpha/2, 1/2, -xi^2) = {m1} is not positive")
    if bc.kind == "dirichlet":
        return bc.u0, -bc.u0 * m1 / (xi * m2)
    if bc.kind == "neumann":
        scale = 2 * m.a * bc.q0 / m.k
        return scale * xi * m2 / m1, -scale
    lam, h0, u_inf = bc.as_general()
    den = m.k / (2 * m.a * h0) * m1 + lam * xi * m2
    if not den > 0:
        raise VerificationError(f"coefficient denominator {den} is not positive")
    return u_inf * xi * m2 / den, -u_inf * m1 / den


def assemble(spec, root):
    """Similarity solution for ``spec`` from a solved root (or a bare xi)."""
    xi = root.xi if isinstance(root, RootReport) else float(root)
    c1, c2 = coefficients(spec, xi)
    return SimilaritySolution(spec=spec, xi=xi, c1=c1, c2=c2, alpha=spec.alpha)


def solve(spec, tol=1e-10, max_iter=100):
    """Solve for xi and assemble; returns ``(solution, root_report)``."""
    root = solve_xi(spec, tol=tol, max_iter=max_iter)
    return assemble(spec, root), root


def _check_time(t):
    if not t > 0:
        raise DomainError(f"t must be > 0 (got {t})")


def eval_front(sol, t):
    """(s(t), sdot(t)) for the square-root front."""
    _check_time(t)
    a = sol.spec.material.a
    return 2 * sol.xi * a * math.sqrt(t), sol.xi * a / math.sqrt(t)


def eval_u(sol, x, t, extend=False):
    """Temperature at (x, t) for 0 <= x <= s(t).

    Points beyond the front raise ``DomainError`` unless ``extend`` is set,
    in which case they evaluate to 0.
    """
    _check_time(t)
    if x < 0:
        raise DomainError(f"x must be >= 0 (got {x})")
    a = sol.spec.material.a
    eta = x / (2 * a * math.sqrt(t))
    if eta > sol.xi * (1 + _FRONT_SLACK):
        if extend:
            return 0.0
        raise DomainError(f"x = {x} lies beyond the front s(t) = {2 * sol.xi * a * math.sqrt(t)}")
    return t ** (sol.alpha / 2) * sol.phi(eta)


def eval_u_x(sol, x, t):
    """Analytic du/dx at (x, t) inside the phase."""
    _check_time(t)
    a = sol.spec.material.a
    eta = x / (2 * a * math.sqrt(t))
    return t ** ((sol.alpha - 1) / 2) / (2 * a) * sol.dphi(eta)


def eval_u_x_front(sol, t):
    """du/dx at the front x = s(t), through the reduced form."""
    _check_time(t)
    a = sol.spec.material.a
    return t ** ((sol.alpha - 1) / 2) / (2 * a) * sol.dphi_front()


def eval_fixed_face_flux(sol, t):
    """k du/dx(0, t) = k c2 t^((alpha-1)/2) / (2a)."""
    _check_time(t)
    m = sol.spec.material
    return m.k * sol.c2 * t ** ((sol.alpha - 1) / 2) / (2 * m.a)


def latent_heat(sol, t):
    """Latent heat along the front, ``L = gamma 2^beta a^(beta+delta) xi^(beta+delta) t^p``.

    Returns ``(L, p, regime)`` with ``p = (beta - delta)/2`` and regime one
    of ``sublinear``, ``linear``, ``superlinear``.
    """
    _check_time(t)
    m, law = sol.spec.material, sol.spec.law
    bd = law.beta + law.delta
    p = (law.beta - law.delta) / 2
    value = m.gamma * 2**law.beta * m.a**bd * sol.xi**bd * t**p
    if p < 1:
        regime = "sublinear"
    elif p == 1:
        regime = "linear"
    else:
        regime = "superlinear"
    return value, p, regime


def stefan_flux(sol, t):
    """Right-hand side of the Stefan condition, gamma s^beta sdot^(delta + 1)."""
    s, sdot = eval_front(sol, t)
    law = sol.spec.law
    return sol.spec.material.gamma * s**law.beta * sdot ** (law.delta + 1)
