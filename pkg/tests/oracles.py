"""Independent references for the trigonometry tests.

Polygons are built in the hyperboloid model with mpmath: walk along each side,
turn by a right angle, and check that the walk closes up.  Nothing here uses
the package's closed-form relations.
"""
import mpmath as mp

mp.mp.dps = 50

J = mp.diag([-1, 1, 1])


def _translate(length):
    ch, sh = mp.cosh(length), mp.sinh(length)
    return mp.matrix([[ch, sh, 0], [sh, ch, 0], [0, 0, 1]])


# quarter turn about the current point: u -> n, n -> -u
_TURN = mp.matrix([[1, 0, 0], [0, 0, -1], [0, 1, 0]])


def frames(sides):
    """Frame (columns: point, direction, normal) at the start of each side,
    followed by the frame after the last turn."""
    frame = mp.eye(3)
    out = []
    for length in sides:
        out.append(frame)
        frame = frame * _translate(mp.mpf(length)) * _TURN
    out.append(frame)
    return out


def walk(sides):
    """Closing error of a right-angled walk and the normals of its sides."""
    fs = frames(sides)
    last = fs[-1]
    err = max(abs(last[i, j] - (1 if i == j else 0)) for i in range(3) for j in range(3))
    return err, [f * mp.matrix([0, 0, 1]) for f in fs[:-1]]


def _inner(x, y):
    return (x.T * J * y)[0]


def foot_on_side(sides, i, j) -> float:
    """Distance from the start of side i to the foot of the common
    perpendicular between the geodesics of sides i and j."""
    fs = frames(sides)
    _, normals = walk(sides)
    m = normals[j]
    p = fs[i] * mp.matrix([1, 0, 0])
    u = fs[i] * mp.matrix([0, 1, 0])
    return float(mp.atanh(-_inner(u, m) / _inner(p, m)))


def closure_error(sides) -> float:
    return float(walk(sides)[0])


def distance_between_sides(sides, i, j) -> float:
    """Hyperbolic distance between the geodesics carrying sides i and j."""
    _, normals = walk(sides)
    n, m = normals[i], normals[j]
    return float(mp.acosh(abs(_inner(n, m))))


def opposite_side_mp(a, b, c):
    a, b, c = mp.mpf(a), mp.mpf(b), mp.mpf(c)
    return mp.acosh((mp.cosh(c) + mp.cosh(a) * mp.cosh(b)) / (mp.sinh(a) * mp.sinh(b)))
