"""Problem data: material constants, latent-heat law, fixed-face condition.

The latent heat at the front is ``L = gamma * s**beta * sdot**delta``. A
similarity solution exists only when the boundary data scale with
``t**(alpha/2)``, ``alpha = beta - delta``; see ``LatentHeatLaw``.

Units are not enforced. Diffusivity enters through ``a`` (so ``a**2`` is the
usual thermal diffusivity), ``k`` is the conductivity.
"""

from dataclasses import dataclass, field, replace
from typing import Optional
import math

from .errors import ValidationError

BC_KINDS = ("dirichlet", "neumann", "robin", "general")


@dataclass(frozen=True)
class MaterialParams:
    a: float = 1.0
    k: float = 1.0
    gamma: float = 1.0

    def problems(self):
        out = []
        for name in ("a", "k", "gamma"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                out.append(f"{name} must be > 0 (got {value})")
        return out


@dataclass(frozen=True)
class LatentHeatLaw:
    """Exponents of ``L = gamma s^beta sdot^delta``."""

    beta: float = 0.0
    delta: float = 0.0

    @property
    def alpha(self):
        return self.beta - self.delta

    @property
    def power(self):
        """Exponent of z on the right-hand side of the root equation."""
        return self.beta + self.delta + 1.0

    def problems(self):
        out = []
        if not (math.isfinite(self.beta) and math.isfinite(self.delta)):
            return [f"beta and delta must be finite (got {self.beta}, {self.delta})"]
        if self.beta < self.delta:
            out.append(f"beta >= delta required (alpha = beta - delta = {self.alpha} < 0)")
        if self.power <= 0:
            out.append(f"beta + delta + 1 > 0 required (got {self.power})")
        return out


@dataclass(frozen=True)
class BoundaryCondition:
    """Condition at the fixed face x = 0.

    ``dirichlet``  u(0,t) = u0 t^(alpha/2)
    ``neumann``    k u_x(0,t) = -q0 t^((alpha-1)/2)
    ``robin``      k u_x(0,t) = h0/sqrt(t) [u(0,t) - u_inf t^(alpha/2)]
    ``general``    k u_x(0,t) = h0/sqrt(t) [lam u(0,t) - u_inf t^(alpha/2)]

    Use the classmethod constructors rather than filling fields by hand.
    """

    kind: str
    u0: Optional[float] = None
    q0: Optional[float] = None
    h0: Optional[float] = None
    u_inf: Optional[float] = None
    lam: Optional[float] = None

    @classmethod
    def dirichlet(cls, u0):
        return cls("dirichlet", u0=u0)

    @classmethod
    def neumann(cls, q0):
        return cls("neumann", q0=q0)

    @classmethod
    def robin(cls, h0, u_inf):
        return cls("robin", h0=h0, u_inf=u_inf, lam=1.0)

    @classmethod
    def general(cls, lam, h0, u_inf):
        return cls("general", h0=h0, u_inf=u_inf, lam=lam)

    def required(self):
        return {
            "dirichlet": ("u0",),
            "neumann": ("q0",),
            "robin": ("h0", "u_inf"),
            "general": ("lam", "h0", "u_inf"),
        }[self.kind]

    def problems(self):
        if self.kind not in BC_KINDS:
            return [f"bc must be one of {', '.join(BC_KINDS)} (got {self.kind!r})"]
        out = []
        for name in self.required():
            value = getattr(self, name)
            if value is None:
                out.append(f"{self.kind} condition needs {name}")
            elif name == "lam":
                if not (math.isfinite(value) and value >= 0):
                    out.append(f"lambda must be >= 0 (got {value})")
            elif not (math.isfinite(value) and value > 0):
                out.append(f"{name} must be > 0 (got {value})")
        if self.kind == "robin" and self.lam not in (None, 1.0):
            out.append(f"robin condition has lambda = 1 (got {self.lam})")
        return out

    def as_general(self):
        """(lam, h0, u_inf) of the equivalent generalized condition.

        A flux ``q0`` is the lam = 0 case with ``h0 * u_inf = q0``; the split
        is arbitrary, ``h0 = 1`` is used.
        """
        if self.kind == "neumann":
            return 0.0, 1.0, self.q0
        if self.kind == "robin":
            return 1.0, self.h0, self.u_inf
        if self.kind == "general":
            return self.lam, self.h0, self.u_inf
        raise ValueError("a Dirichlet condition has no generalized form")


@dataclass(frozen=True)
class ProblemSpec:
    material: MaterialParams = field(default_factory=MaterialParams)
    law: LatentHeatLaw = field(default_factory=LatentHeatLaw)
    bc: BoundaryCondition = field(default_factory=lambda: BoundaryCondition.dirichlet(1.0))

    @property
    def alpha(self):
        return self.law.alpha

    @classmethod
    def from_groups(cls, beta, delta, bc, Q=None, Ste=None, Bi=None, lam=None):
        """Spec with a = k = gamma = 1 driven directly by dimensionless groups."""
        law = LatentHeatLaw(beta, delta)
        if bc == "neumann":
            cond = BoundaryCondition.neumann(Q)
        elif bc == "dirichlet":
            cond = BoundaryCondition.dirichlet(Ste)
        elif bc == "robin":
            cond = BoundaryCondition.robin(Bi, Ste)
        elif bc == "general":
            cond = BoundaryCondition.general(lam, Bi, Ste)
        else:
            raise ValidationError(f"unknown bc {bc!r}")
        return validate(cls(MaterialParams(), law, cond))


def validate(raw):
    """Check every invariant of ``raw`` and return it unchanged.

    All violations are collected into one ``ValidationError``.
    """
    problems = raw.material.problems() + raw.law.problems() + raw.bc.problems()
    if problems:
        raise ValidationError(problems)
    return raw


@dataclass(frozen=True)
class DimensionlessGroups:
    Q: Optional[float] = None
    Ste: Optional[float] = None
    Bi: Optional[float] = None


def dimensionless(spec):
    """Flux number Q, generalized Stefan number Ste and Biot number Bi.

    Bi is taken as ``a h0 / k``, the combination for which
    ``k / (2 a h0) = 1 / (2 Bi)``.
    """
    m, law, bc = spec.material, spec.law, spec.bc
    if bc.kind == "neumann":
        return DimensionlessGroups(Q=bc.q0 / (m.gamma * m.a ** (law.beta + law.delta + 1)))
    if bc.kind in ("robin", "general"):
        return DimensionlessGroups(
            Ste=bc.u_inf * m.k / (m.gamma * m.a ** (law.beta + law.delta + 2)),
            Bi=m.a * bc.h0 / m.k,
        )
    return DimensionlessGroups()


# flat configuration files ----------------------------------------------------

CONFIG_KEYS = (
    "beta", "delta", "gamma", "a", "k", "bc",
    "u0", "q0", "h0", "u_inf", "lambda", "tol", "max_iter",
)


def parse_config_text(text):
    """Parse ``key = value`` lines (``#`` comments, ``:`` also accepted)."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        sep = "=" if "=" in line else ":"
        if sep not in line:
            raise ValidationError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split(sep, 1))
        if key not in CONFIG_KEYS:
            raise ValidationError(f"line {lineno}: unknown key {key!r}")
        values[key] = value
    return values


def spec_from_mapping(values):
    """Build and validate a spec from flat config values (strings or numbers).

    Returns ``(spec, tol, max_iter)``; missing material constants default
    to 1 and missing exponents to 0.
    """
    unknown = set(values) - set(CONFIG_KEYS)
    if unknown:
        raise ValidationError([f"unknown key {k!r}" for k in sorted(unknown)])

    def num(key, default=None):
        value = values.get(key)
        if value is None:
            return default
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ValidationError(f"{key} must be a number (got {value!r})") from None

    bc = str(values.get("bc", "")).strip().lower()
    if bc not in BC_KINDS:
        raise ValidationError(f"bc must be one of {', '.join(BC_KINDS)} (got {bc!r})")
    lam = num("lambda")
    if bc == "robin":
        lam = 1.0 if lam is None else lam
    cond = BoundaryCondition(
        bc,
        u0=num("u0") if bc == "dirichlet" else None,
        q0=num("q0") if bc == "neumann" else None,
        h0=num("h0") if bc in ("robin", "general") else None,
        u_inf=num("u_inf") if bc in ("robin", "general") else None,
        lam=lam if bc in ("robin", "general") else None,
    )
    spec = ProblemSpec(
        MaterialParams(num("a", 1.0), num("k", 1.0), num("gamma", 1.0)),
        LatentHeatLaw(num("beta", 0.0), num("delta", 0.0)),
        cond,
    )
    tol = num("tol", 1e-10)
    max_iter = num("max_iter", 100)
    problems = []
    try:
        validate(spec)
    except ValidationError as exc:
        problems.extend(exc.problems)
    if not tol > 0:
        problems.append(f"tol must be > 0 (got {tol})")
    if max_iter != int(max_iter) or max_iter < 1:
        problems.append(f"max_iter must be a positive integer (got {max_iter})")
    if problems:
        raise ValidationError(problems)
    return spec, tol, int(max_iter)


def with_bc(spec, bc):
    return validate(replace(spec, bc=bc))
