"""Reference front coefficients and the configurations behind them.

All configurations use a = k = gamma = 1 and are driven by the
dimensionless groups directly. Rows are keyed by ``(delta, beta)``.
"""

from .model import ProblemSpec

ROWS = ((0.0, 0.0), (0.0, 1.0), (-0.5, 0.0), (-0.5, 1.0), (1.0, 1.0), (1.0, 3.0))

Q_VALUES = (0.1, 0.2, 0.3, 0.4, 0.5)
BI_VALUES = (1.0, 10.0, 50.0, 100.0)
STE = 0.5

# xi for the flux condition, one entry per Q in Q_VALUES
TABLE1 = {
    (0.0, 0.0): (0.0990, 0.1927, 0.2777, 0.3531, 0.5237),
    (0.0, 1.0): (0.2138, 0.2912, 0.3453, 0.3875, 0.4225),
    (-0.5, 0.0): (0.0100, 0.0398, 0.0879, 0.1496, 0.2172),
    (-0.5, 1.0): (0.1319, 0.2016, 0.2543, 0.2970, 0.2952),
    (1.0, 1.0): (0.3534, 0.4357, 0.4904, 0.5321, 0.5661),
    (1.0, 3.0): (0.3838, 0.4323, 0.4627, 0.4851, 0.5031),
}

# printed values that contradict the closed form / monotonicity in Q
SUSPECT_TABLE1 = {(0.0, 0.0, 0.5), (-0.5, 1.0, 0.5)}
SUSPECT_FLAG = "suspect-paper-cell"

# xi for the convective condition at Ste = 0.5, one entry per Bi in
# BI_VALUES, followed by xi for the temperature condition u0 = Ste
TABLE2 = {
    (0.0, 0.0): (0.2926, 0.4422, 0.4601, 0.4625, 0.4648),
    (0.0, 1.0): (0.3490, 0.4485, 0.4617, 0.4635, 0.4652),
    (-0.5, 0.0): (0.1430, 0.3375, 0.3617, 0.3648, 0.3680),
    (-0.5, 1.0): (0.2701, 0.3837, 0.3994, 0.4015, 0.4036),
    (1.0, 1.0): (0.4736, 0.5514, 0.5609, 0.5621, 0.5634),
    (1.0, 3.0): (0.4615, 0.5181, 0.5260, 0.5270, 0.5281),
}


def table1_specs():
    """Yield ``(delta, beta, Q, spec)`` for every flux-table cell."""
    for delta, beta in ROWS:
        for q in Q_VALUES:
            yield delta, beta, q, ProblemSpec.from_groups(beta, delta, "neumann", Q=q)


def table2_specs():
    """Yield ``(delta, beta, Bi, spec)``; ``Bi is None`` marks the Dirichlet cell."""
    for delta, beta in ROWS:
        for bi in BI_VALUES:
            yield delta, beta, bi, ProblemSpec.from_groups(beta, delta, "robin", Ste=STE, Bi=bi)
        yield delta, beta, None, ProblemSpec.from_groups(beta, delta, "dirichlet", Ste=STE)


def all_specs():
    """The 60 tabulated configurations."""
    return [cell[-1] for cell in table1_specs()] + [cell[-1] for cell in table2_specs()]
