"""
Plane Shears
The linear changes of coordinates used to put plane curves in generic position
"""

from typing import Tuple

from src.arith.polynomial import MPoly
from src.roots.values import LinearValue, Value


def shear_matrix(t: int):
    return ((1, t, 0), (0, 1, 0), (0, 0, 1))


def shear(poly: MPoly, t: int) -> MPoly:
    """
    P(X1 + t X2, X2)

    Degrees are preserved and shear(shear(P, t), -t) == P. Polynomials in x3 are sheared in the
    same way, which lets a spatial polynomial follow its plane projections.
    """
    if t == 0:
        return poly
    return poly.linear_change(shear_matrix(t))


def unshear(x: Value, y: Value, t: int) -> Tuple[Value, Value]:
    """Original coordinates of a point given in the frame sheared by t"""
    if t == 0:
        return x, y
    return LinearValue([(1, x), (t, y)]), y
