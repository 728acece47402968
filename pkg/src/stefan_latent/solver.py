"""Root equation for the front coefficient xi and its safeguarded Newton solve.

Every boundary condition leads to an equation of the form

    F(z) = C * h(z) - z**p = 0,   p = beta + delta + 1 > 0,

where ``h`` is positive and strictly decreasing from h(0+) > 0 (or +inf) to
0, so F has exactly one positive root.
"""

from dataclasses import dataclass
import math

from .errors import BracketError, ConvergenceError, DomainError, VerificationError
from .kummer import kummer_m

RESIDUAL_TOL = 1e-9
BRACKET_LO = 1e-12
BRACKET_HI_MAX = 1e3
LOG_SOLVE_POWER = 6.0


@dataclass(frozen=True)
class RootReport:
    xi: float
    iterations: int
    residual: float
    method: str
    bracket: tuple


def _robin_weight(spec):
    lam, h0, _ = spec.bc.as_general()
    m = spec.material
    return lam, m.k / (2 * m.a * h0)


def _overflow_guard(fn):
    """Large arguments overflow M; the reciprocal functions are then 0."""

    def wrapped(z, *args):
        try:
            return fn(z, *args)
        except OverflowError:
            return 0.0

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


@_overflow_guard
def f_general(z, spec):
    """1 / [k/(2 a h0) M(alpha/2+1/2, 1/2, z^2) + lam z M(alpha/2+1, 3/2, z^2)]."""
    lam, w = _robin_weight(spec)
    al = spec.alpha
    z2 = z * z
    den = w * kummer_m(al / 2 + 0.5, 0.5, z2)
    if lam:
        den += lam * z * kummer_m(al / 2 + 1, 1.5, z2)
    return 1.0 / den


@_overflow_guard
def f_general_prime(z, spec):
    """Derivative of ``f_general``; always negative."""
    lam, w = _robin_weight(spec)
    al = spec.alpha
    z2 = z * z
    den = w * kummer_m(al / 2 + 0.5, 0.5, z2)
    dden = w * 2 * (al + 1) * z * kummer_m(al / 2 + 1.5, 1.5, z2)
    if lam:
        den += lam * z * kummer_m(al / 2 + 1, 1.5, z2)
        dden += lam * kummer_m(al / 2 + 1, 0.5, z2)
    return -dden / (den * den)


@_overflow_guard
def g_neumann(z, law):
    """1 / M(alpha/2 + 1/2, 1/2, z^2)."""
    return 1.0 / kummer_m(law.alpha / 2 + 0.5, 0.5, z * z)


@_overflow_guard
def g_neumann_prime(z, law):
    al = law.alpha
    m0 = kummer_m(al / 2 + 0.5, 0.5, z * z)
    return -2 * (al + 1) * z * kummer_m(al / 2 + 1.5, 1.5, z * z) / (m0 * m0)


def f_dirichlet(z, law):
    """1 / (z M(alpha/2 + 1, 3/2, z^2)); decreases from +inf to 0."""
    if not z > 0:
        raise DomainError(f"f_dirichlet needs z > 0 (got {z})")
    try:
        return 1.0 / (z * kummer_m(law.alpha / 2 + 1, 1.5, z * z))
    except OverflowError:
        return 0.0


def f_dirichlet_prime(z, law):
    if not z > 0:
        raise DomainError(f"f_dirichlet needs z > 0 (got {z})")
    try:
        den = z * kummer_m(law.alpha / 2 + 1, 1.5, z * z)
        return -kummer_m(law.alpha / 2 + 1, 0.5, z * z) / (den * den)
    except OverflowError:
        return 0.0


@dataclass(frozen=True)
class RootEquation:
    """F(z) = constant * shape(z) - z**power with its derivative."""

    constant: float
    power: float
    shape: object
    shape_prime: object
    kind: str

    def __call__(self, z):
        return self.constant * self.shape(z) - z**self.power

    def derivative(self, z):
        return self.constant * self.shape_prime(z) - self.power * z ** (self.power - 1)


def root_equation(spec):
    """Build the root equation matching the spec's boundary condition."""
    m, law, bc = spec.material, spec.law, spec.bc
    p = law.power
    if bc.kind == "dirichlet":
        c = m.k * bc.u0 / (m.gamma * m.a ** (p + 1) * 2 ** (law.beta + 1))
        return RootEquation(c, p, lambda z: f_dirichlet(z, law),
                            lambda z: f_dirichlet_prime(z, law), "dirichlet")
    if bc.kind == "neumann":
        c = bc.q0 / (m.gamma * 2**law.beta * m.a**p)
        return RootEquation(c, p, lambda z: g_neumann(z, law),
                            lambda z: g_neumann_prime(z, law), "neumann")
    _, _, u_inf = bc.as_general()
    c = m.k * u_inf / (m.gamma * 2 ** (law.beta + 1) * m.a ** (p + 1))
    return RootEquation(c, p, lambda z: f_general(z, spec),
                        lambda z: f_general_prime(z, spec), "general")


def general_form(spec):
    """Root equation through ``f_general`` for any non-Dirichlet spec."""
    m, law = spec.material, spec.law
    p = law.power
    _, _, u_inf = spec.bc.as_general()
    c = m.k * u_inf / (m.gamma * 2 ** (law.beta + 1) * m.a ** (p + 1))
    return RootEquation(c, p, lambda z: f_general(z, spec),
                        lambda z: f_general_prime(z, spec), "general")


def find_bracket(eq):
    """(lo, hi) with F(lo) > 0 > F(hi); hi doubles from 1 up to 1e3."""
    lo = BRACKET_LO
    if not eq(lo) > 0:
        raise BracketError(f"F({lo}) = {eq(lo)} is not positive")
    hi = 1.0
    while eq(hi) >= 0:
        if hi >= BRACKET_HI_MAX:
            raise BracketError(f"no sign change of F on (0, {BRACKET_HI_MAX}]")
        lo = hi
        hi *= 2.0
    return lo, hi


def _initial_guess(eq, lo, hi):
    try:
        z0 = min(0.5, (eq.constant * eq.shape(1.0)) ** (1.0 / eq.power))
    except (ArithmeticError, ValueError):
        z0 = 0.5
    if not lo < z0 < hi:
        z0 = 0.5 * (lo + hi)
    return z0


def solve_xi(spec, tol=1e-10, max_iter=100):
    """Unique positive root xi of the spec's root equation.

    Newton's iteration stopped on ``|z_{i+1} - z_i| < tol``. A sign-change
    bracket is kept up to date; a Newton iterate that leaves it is replaced
    by the bracket midpoint. When ``beta + delta + 1 > 6`` the iteration runs
    on ``log z`` with the equivalent equation ``log(C h(z)) - p log z = 0``.

    Raises ``ConvergenceError`` after ``max_iter`` iterations or when
    ``|F(xi)|`` exceeds 1e-9, and ``BracketError`` when no sign change is
    found.
    """
    eq = root_equation(spec)
    lo, hi = find_bracket(eq)
    bracket = (lo, hi)
    use_log = eq.power > LOG_SOLVE_POWER
    z = _initial_guess(eq, lo, hi)
    bisected = False

    for it in range(1, max_iter + 1):
        f = eq(z)
        if f > 0:
            lo = z
        elif f < 0:
            hi = z
        else:
            return _checked(spec, eq, _report(eq, z, it, bisected, bracket))
        if use_log:
            shape = eq.shape(z)
            if shape > 0:
                g = math.log(eq.constant * shape) - eq.power * math.log(z)
                dg = z * eq.shape_prime(z) / shape - eq.power
                z_new = z * math.exp(-g / dg) if dg < 0 else math.nan
            else:
                z_new = math.nan
        else:
            df = eq.derivative(z)
            z_new = z - f / df if df != 0 else math.nan
        if not lo <= z_new <= hi:
            z_new = 0.5 * (lo + hi)
            bisected = True
        step = abs(z_new - z)
        z = z_new
        if step < tol:
            return _checked(spec, eq, _report(eq, z, it, bisected, bracket))
    raise ConvergenceError(f"Newton iteration did not converge in {max_iter} iterations (z={z})")


def _report(eq, z, iterations, bisected, bracket):
    residual = abs(eq(z))
    if residual > RESIDUAL_TOL:
        raise ConvergenceError(f"|F(xi)| = {residual:.3e} exceeds {RESIDUAL_TOL:g} at xi = {z}")
    return RootReport(
        xi=z,
        iterations=iterations,
        residual=residual,
        method="bisection-fallback" if bisected else "newton",
        bracket=bracket,
    )


def _checked(spec, eq, report):
    # the flux form and the lam = 0 generalized form must describe one equation
    if eq.kind == "neumann":
        other = general_form(spec)
        scale = max(1.0, abs(eq.constant * eq.shape(report.xi)))
        if abs(other(report.xi) - eq(report.xi)) > 1e-12 * scale:
            raise VerificationError("Neumann and lambda = 0 root equations disagree")
    return report
