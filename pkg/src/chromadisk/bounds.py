"""Zero-free disk constants for the two hereditary graph classes.

For class index i in {0, 1} and pair independence ratio kappa, the working
quantity is

    B(a, x) = (1 - a) x + kappa x^2 / 4 * ((1 - a)^2 + (h(x) - 1)(h(x) - i))

with h the degree-free envelope bound. For fixed a in (0, 1) the threshold
x*(a) is the largest x in [0, 1/2] with B(a, x) <= a, the per-a constant is
C(a) = 1 / ((1 - a) x*(a)), and the published constant is the infimum of
C(a) over a. All solvers are plain bisection and golden section; the
functions involved are smooth except for a possible kink where x*(a) hits
the cap 1/2.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .genfun import envelope_bound

X_BISECTION_TOL = 1e-13
X_CAP_SLACK = 1e-12
A_GOLDEN_TOL = 1e-9
A_GRID_STEP = 1e-3
TABLE_CHECK_TOL = 5e-6

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _check_class(class_index: int) -> None:
    if class_index not in (0, 1):
        raise DomainError(f"class index must be 0 or 1, got {class_index}")


def _as_float_kappa(kappa) -> float:
    k = float(kappa)
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"kappa must lie in [0, 1], got {kappa}")
    return k


def _check_a(a: float) -> None:
    if not 0.0 < a < 1.0:
        raise DomainError(f"a must lie in (0, 1), got {a}")


def ratio_bound(class_index: int, kappa, a: float, x: float) -> float:
    """B(a, x) above; an upper bound for the removal ratio at radius (1-a)x/delta."""
    _check_class(class_index)
    k = _as_float_kappa(kappa)
    _check_a(a)
    h = envelope_bound(x)
    one_m_a = 1.0 - a
    return one_m_a * x + k * x * x / 4.0 * (
        one_m_a * one_m_a + (h - 1.0) * (h - class_index)
    )


def solve_x(class_index: int, kappa, a: float) -> float:
    """Largest x in [0, 1/2] with ratio_bound(..., x) <= a, by bisection.

    The bound vanishes at x = 0 and increases in x, so the feasible set is an
    interval. The cap 1/2 is returned when even the endpoint is feasible; the
    endpoint test carries a small slack so exact boundary cases (kappa = 0,
    a = 1/3) are not lost to the last floating-point ulp.
    """
    _check_class(class_index)
    k = _as_float_kappa(kappa)
    _check_a(a)
    if ratio_bound(class_index, k, a, 0.5) <= a + X_CAP_SLACK:
        return 0.5
    lo, hi = 0.0, 0.5
    while hi - lo > X_BISECTION_TOL:
        mid = 0.5 * (lo + hi)
        if ratio_bound(class_index, k, a, mid) <= a:
            lo = mid
        else:
            hi = mid
    return lo


def solve_x_linear(a: float) -> float:
    """Closed form for kappa = 0: a / (1 - a), capped at 1/2."""
    _check_a(a)
    return min(a / (1.0 - a), 0.5)


def c_of_a(class_index: int, kappa, a: float) -> float:
    """Per-a disk constant 1 / ((1 - a) x*(a))."""
    x = solve_x(class_index, kappa, a)
    if x <= 0.0:
        raise DomainError(f"threshold x collapsed to zero at a = {a}")
    return 1.0 / ((1.0 - a) * x)


def z_of_a(class_index: int, kappa, a: float, delta: int) -> float:
    """Forest-variable radius 1 / (C(a) delta) for maximum degree delta."""
    if not isinstance(delta, int) or delta < 3:
        raise DomainError("delta must be an integer >= 3")
    return 1.0 / (c_of_a(class_index, kappa, a) * delta)


@dataclass(frozen=True)
class BoundResult:
    """Minimized disk constant with the minimizer and its threshold."""

    class_index: int
    kappa: float
    a_star: float
    x_star: float
    c_star: float

    def disk_radius(self, delta: int) -> float:
        """Chromatic roots are confined to |q| < c_star * delta."""
        if not isinstance(delta, int) or delta < 3:
            raise DomainError("delta must be an integer >= 3")
        return self.c_star * delta

    def z_star(self, delta: int) -> float:
        """Forest-variable radius 1 / (c_star * delta)."""
        if not isinstance(delta, int) or delta < 3:
            raise DomainError("delta must be an integer >= 3")
        return 1.0 / (self.c_star * delta)


def minimize_c(class_index: int, kappa) -> BoundResult:
    """Infimum of c_of_a over a in (0, 1).

    A coarse grid brackets the minimizer, golden section narrows the bracket
    to A_GOLDEN_TOL. The objective is unimodal with at worst one kink, which
    golden section handles.
    """
    _check_class(class_index)
    k = _as_float_kappa(kappa)

    steps = round(1.0 / A_GRID_STEP) - 1
    grid = [(j + 1) * A_GRID_STEP for j in range(steps)]
    vals = [c_of_a(class_index, k, a) for a in grid]
    j = min(range(len(grid)), key=lambda i: (vals[i], grid[i]))
    lo = grid[j - 1] if j > 0 else grid[0]
    hi = grid[j + 1] if j + 1 < len(grid) else grid[-1]

    f = lambda a: c_of_a(class_index, k, a)
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > A_GOLDEN_TOL:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
    a_star = c if fc <= fd else d
    x_star = solve_x(class_index, k, a_star)
    return BoundResult(
        class_index=class_index,
        kappa=k,
        a_star=a_star,
        x_star=x_star,
        c_star=1.0 / ((1.0 - a_star) * x_star),
    )


@dataclass(frozen=True)
class ConstantsRow:
    kappa: float
    c_class0: float
    c_class1: float
    a_star0: float
    a_star1: float


def constants_table(step: float = 0.1) -> list[ConstantsRow]:
    """Rows (kappa, C for class 0, C for class 1, both minimizers) on a grid.

    The grid is kappa = 0, step, 2 step, ..., 1; step must divide 1.
    """
    if not 0.0 < step <= 1.0:
        raise DomainError("step must lie in (0, 1]")
    count = round(1.0 / step)
    if abs(count * step - 1.0) > 1e-9:
        raise DomainError(f"step {step} does not divide 1")
    rows = []
    for j in range(count + 1):
        kappa = j / count
        r0 = minimize_c(0, kappa)
        r1 = minimize_c(1, kappa)
        rows.append(
            ConstantsRow(
                kappa=kappa,
                c_class0=r0.c_star,
                c_class1=r1.c_star,
                a_star0=r0.a_star,
                a_star1=r1.a_star,
            )
        )
    return rows


# Frozen regression snapshot of constants_table(0.1), rounded to 6 decimals.
# Recomputation must stay within TABLE_CHECK_TOL of every cell.
REFERENCE_TABLE: tuple[ConstantsRow, ...] = (
    ConstantsRow(0.0, 3.000000, 3.000000, 0.333333, 0.333333),
    ConstantsRow(0.1, 3.169627, 3.128158, 0.355952, 0.350761),
    ConstantsRow(0.2, 3.285039, 3.214447, 0.363300, 0.356563),
    ConstantsRow(0.3, 3.377769, 3.283304, 0.367230, 0.359765),
    ConstantsRow(0.4, 3.457121, 3.341956, 0.369749, 0.361902),
    ConstantsRow(0.5, 3.527398, 3.393730, 0.371534, 0.363490),
    ConstantsRow(0.6, 3.591011, 3.440483, 0.372885, 0.364754),
    ConstantsRow(0.7, 3.649470, 3.483371, 0.373957, 0.365812),
    ConstantsRow(0.8, 3.703793, 3.523172, 0.374839, 0.366730),
    ConstantsRow(0.9, 3.754706, 3.560437, 0.375586, 0.367548),
    ConstantsRow(1.0, 3.802747, 3.595574, 0.376232, 0.368292),
)


def kappa_for_bounds(kappa) -> float:
    """Clamp an exact graph ratio into the float argument the solvers take.

    Graph ratios are exact rationals in [0, 1] for claw-free graphs; this is
    the one conversion point so rounding happens in a single place.
    """
    if isinstance(kappa, Fraction):
        if kappa < 0 or kappa > 1:
            raise DomainError(f"kappa {kappa} outside [0, 1]; bounds need claw-free input")
        return float(kappa)
    return _as_float_kappa(kappa)
