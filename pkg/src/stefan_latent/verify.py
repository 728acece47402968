"""Independent checks of solved configurations.

* finite-difference residuals of the heat equation, the isotherm, the
  Stefan condition and the fixed-face condition on a grid inside the phase;
* a derivative-free bisection root finder that shares only ``kummer_m``
  with the Newton path;
* an extended-precision Kummer series evaluated with ``decimal``.
"""

from dataclasses import dataclass
import decimal
import math

from .errors import DomainError, PrecisionError, VerificationError
from .kummer import kummer_m
from .solution import eval_front, eval_u, eval_u_x_front, stefan_flux

GATES = {
    "pde_max_rel": 1e-6,
    "phase_temp_max_abs": 1e-12,
    "stefan_max_rel": 1e-6,
    "fixed_face_max_rel": 1e-8,
}

X_RANGE = (0.05, 0.95)
X_STEP = 1 / 200
T_STEP = 1 / 1000


@dataclass(frozen=True)
class ResidualReport:
    pde_max_rel: float
    phase_temp_max_abs: float
    stefan_max_rel: float
    fixed_face_max_rel: float
    grid: dict

    def failures(self, gates=None):
        """Names of the residual fields above their gate."""
        gates = GATES if gates is None else gates
        return [name for name, limit in gates.items() if not getattr(self, name) <= limit]

    def as_dict(self):
        return {name: getattr(self, name) for name in GATES}


# fourth-order stencils
def _d1_central(f, x, h):
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)


def _d2_central(f, x, h):
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h)


def _d1_one_sided(f, x, h):
    """Forward difference for h > 0, backward for h < 0."""
    return (-25 * f(x) + 48 * f(x + h) - 36 * f(x + 2 * h)
            + 16 * f(x + 3 * h) - 3 * f(x + 4 * h)) / (12 * h)


def _rel(diff, scale, floor):
    return abs(diff) / max(abs(scale), floor)


def _fixed_face_residual(sol, t, h):
    spec = sol.spec
    m, bc, al = spec.material, spec.bc, sol.alpha
    u0t = eval_u(sol, 0.0, t)
    if bc.kind == "dirichlet":
        want = bc.u0 * t ** (al / 2)
        return abs(u0t - want) / want
    flux = m.k * _d1_one_sided(lambda x: eval_u(sol, x, t), 0.0, h)
    if bc.kind == "neumann":
        want = -bc.q0 * t ** ((al - 1) / 2)
    else:
        lam, h0, u_inf = bc.as_general()
        want = h0 / math.sqrt(t) * (lam * u0t - u_inf * t ** (al / 2))
    return abs(flux - want) / max(abs(flux), abs(want))


def pde_residual(sol, nx=32, nt=8, t_range=(0.5, 2.0)):
    """Finite-difference residuals of ``sol`` on a similarity-scaled grid.

    Points are ``x = r s(t)`` with ``r`` evenly spaced in [0.05, 0.95] and
    ``t`` geometrically spaced over ``t_range``. Steps are ``s(t)/200`` in
    x and ``t/1000`` in t, with fourth-order stencils.
    """
    t0, t1 = t_range
    if nx < 16 or nt < 8:
        raise DomainError(f"grid too small (nx={nx} >= 16, nt={nt} >= 8 required)")
    if not 0 < t0 < t1:
        raise DomainError(f"need 0 < t0 < t1 (got {t_range})")
    a2 = sol.spec.material.a ** 2
    k = sol.spec.material.k
    times = [t0 * (t1 / t0) ** (j / (nt - 1)) for j in range(nt)]
    rs = [X_RANGE[0] + (X_RANGE[1] - X_RANGE[0]) * i / (nx - 1) for i in range(nx)]

    pde_pairs = []
    phase = stefan = fixed = 0.0
    for t in times:
        s, _ = eval_front(sol, t)
        hx = s * X_STEP
        ht = t * T_STEP
        for r in rs:
            x = r * s
            u_t = _d1_central(lambda tt: eval_u(sol, x, tt), t, ht)
            u_xx = _d2_central(lambda xx: eval_u(sol, xx, t), x, hx)
            pde_pairs.append((u_t, a2 * u_xx))

        phase = max(phase, abs(eval_u(sol, s, t)))

        want = stefan_flux(sol, t)
        fd = -k * _d1_one_sided(lambda xx: eval_u(sol, xx, t), s, -hx)
        analytic = -k * eval_u_x_front(sol, t)
        stefan = max(stefan, abs(fd - want) / want, abs(analytic - want) / want)

        fixed = max(fixed, _fixed_face_residual(sol, t, hx))

    floor = 1e-30 * max(max(abs(p), abs(q)) for p, q in pde_pairs)
    pde = max(_rel(p - q, max(abs(p), abs(q)), floor) for p, q in pde_pairs)
    return ResidualReport(
        pde_max_rel=pde,
        phase_temp_max_abs=phase,
        stefan_max_rel=stefan,
        fixed_face_max_rel=fixed,
        grid={"nx": nx, "nt": nt, "t_range": (t0, t1), "x_range": X_RANGE},
    )


def check(sol, **grid):
    """Run ``pde_residual`` and raise ``VerificationError`` on any failed gate."""
    report = pde_residual(sol, **grid)
    failed = report.failures()
    if failed:
        detail = ", ".join(f"{name}={getattr(report, name):.3e}" for name in failed)
        raise VerificationError(f"residual gates failed: {detail}")
    return report


# bisection oracle -------------------------------------------------------------

def _shape(shape, spec):
    al = spec.alpha
    if shape == "dirichlet":
        return lambda z: 1.0 / (z * kummer_m(al / 2 + 1, 1.5, z * z))
    if shape == "neumann":
        return lambda z: 1.0 / kummer_m(al / 2 + 0.5, 0.5, z * z)
    if shape == "general":
        lam, h0, _ = spec.bc.as_general()
        w = spec.material.k / (2 * spec.material.a * h0)
        return lambda z: 1.0 / (w * kummer_m(al / 2 + 0.5, 0.5, z * z)
                                + lam * z * kummer_m(al / 2 + 1, 1.5, z * z))
    raise ValueError(f"unknown shape {shape!r}")


def bisection_root(constant, shape, spec, lo, hi, tol=1e-13):
    """Root of ``constant * h(z) - z^(beta+delta+1)`` on [lo, hi] by bisection.

    ``h`` is the Dirichlet, flux or generalized shape function, rebuilt here
    from ``kummer_m``.
    """
    h = _shape(shape, spec)
    p = spec.law.beta + spec.law.delta + 1

    def F(z):
        return constant * h(z) - z**p

    f_lo, f_hi = F(lo), F(hi)
    if not f_lo * f_hi < 0:
        raise VerificationError(f"no sign change on [{lo}, {hi}] ({f_lo}, {f_hi})")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = F(mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def oracle_constant(spec):
    """Prefactor of the root equation written in dimensionless groups."""
    m, law, bc = spec.material, spec.law, spec.bc
    if bc.kind == "neumann":
        q = bc.q0 / (m.gamma * m.a ** (law.beta + law.delta + 1))
        return q / 2**law.beta, "neumann"
    u = bc.u0 if bc.kind == "dirichlet" else bc.as_general()[2]
    ste = u * m.k / (m.gamma * m.a ** (law.beta + law.delta + 2))
    return ste / 2 ** (law.beta + 1), "dirichlet" if bc.kind == "dirichlet" else "general"


def oracle_xi(spec, lo=1e-12, hi=10.0, tol=1e-13):
    constant, shape = oracle_constant(spec)
    return bisection_root(constant, shape, spec, lo, hi, tol)


# extended-precision Kummer series --------------------------------------------

def kummer_oracle(a, b, z, precision_digits=50):
    """Raw Taylor series of M(a, b, z) summed in ``precision_digits`` decimal digits.

    No argument transformation is applied. Raises ``PrecisionError`` when
    the largest term exceeds the sum by more than ``precision_digits - 17``
    decimal orders of magnitude.
    """
    if precision_digits < 30:
        raise ValueError("precision_digits must be >= 30")
    if abs(z) > 60:
        raise ValueError(f"|z| <= 60 required (got {z})")
    if b <= 0 and b == math.floor(b):
        raise ValueError(f"b must not be a non-positive integer, got b={b}")
    ctx = decimal.Context(prec=precision_digits)
    D = decimal.Decimal
    a_, b_, z_ = D(float(a)), D(float(b)), D(float(z))
    total = D(1)
    term = D(1)
    biggest = D(1)
    eps = D(10) ** (-(precision_digits + 2))
    n = 0
    while True:
        term = ctx.multiply(term, ctx.divide(ctx.multiply(ctx.add(a_, n), z_), ctx.multiply(ctx.add(b_, n), n + 1)))
        total = ctx.add(total, term)
        n += 1
        if abs(term) > biggest:
            biggest = abs(term)
        if term == 0 or (n > abs(z) and abs(term) <= eps * abs(total)):
            break
        if n > 5000:
            raise PrecisionError("extended-precision series did not converge")
    if total == 0:
        raise PrecisionError("series sums to zero at working precision")
    lost = math.log10(float(biggest / abs(total)))
    if lost > precision_digits - 17:
        raise PrecisionError(f"cancellation of {lost:.1f} digits exceeds working precision")
    return float(total)
