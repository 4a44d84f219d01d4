"""Scene generators for the extremal constructions.

All coordinates are exact rationals: rotational symmetry is realized with
Pythagorean-style rational circle points rather than trigonometry, and the
derived extents are frozen (coplanar-chain) or computed by the same exact
chart machinery the solver uses (h1-symmetric).
"""

from __future__ import annotations

import math

from .core import Segment3, line_line_point, line_point_dir, v_add, v_scale, vec
from .errors import UnsupportedN
from .intervals import INF, pkey
from .quadric import _ruling_line_at, chart_for, line_on_quadric
from .scalars import parse_scalar, rat

GENERATOR_NAMES = (
    "h1-symmetric",
    "hp-ruling",
    "triangle-stab",
    "coplanar-chain",
    "two-plane",
    "concurrent",
)


def generate(name, n=None, points=False):
    """Build a generator scene; returns a list of Segment3."""
    if name == "triangle-stab":
        return triangle_stab()
    if name == "h1-symmetric":
        return h1_symmetric(_need_n(name, n, 3), points=points)
    if name == "hp-ruling":
        return hp_ruling(_need_n(name, n, 3))
    if name == "coplanar-chain":
        return coplanar_chain(_need_n(name, n, 4))
    if name == "two-plane":
        return two_plane(_need_n(name, n, 4))
    if name == "concurrent":
        return concurrent(_need_n(name, n, 3))
    raise UnsupportedN(f"unknown generator {name!r}")


def expected_components(name, n=None, points=False):
    """The component count each construction is built to achieve."""
    if name == "triangle-stab":
        return 3
    if name == "h1-symmetric":
        return n
    if name == "hp-ruling":
        return 1
    if name == "coplanar-chain":
        return n
    if name == "two-plane":
        return n - 1
    if name == "concurrent":
        return 1
    raise UnsupportedN(f"unknown generator {name!r}")


def _need_n(name, n, minimum):
    if n is None or n < minimum:
        raise UnsupportedN(f"{name} needs n >= {minimum}")
    return n


# ---------------------------------------------------------------------------
# triangle plus stabber: exactly three isolated transversals
# ---------------------------------------------------------------------------

def triangle_stab():
    """Closed triangle plus a vertical segment through an interior point.

    The only transversals are the three lines through the crossing point
    and a triangle vertex.  The stab point (1/4, 1/2) and the segment
    order are chosen so every transversal hits the first two segments at
    parameters on the 1/128 grid, which the sampling oracle probes.
    """
    a, b, c = vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0)
    stab_lo = (rat(1, 4), rat(1, 2), rat(-1))
    stab_hi = (rat(1, 4), rat(1, 2), rat(1))
    return [
        Segment3(a, b),
        Segment3(stab_lo, stab_hi),
        Segment3(b, c),
        Segment3(c, a),
    ]


# ---------------------------------------------------------------------------
# hyperbolic paraboloid ruling: one interval
# ---------------------------------------------------------------------------

def hp_ruling(n):
    """n segments on first-ruling lines of z = x*y with nested extents."""
    segs = []
    for d in range(n):
        w = rat(n - d)
        dd = rat(d)
        segs.append(Segment3((-w, dd, -dd * w), (w, dd, dd * w)))
    return segs


# ---------------------------------------------------------------------------
# hyperboloid of one sheet: n rotated ruling segments, n components
# ---------------------------------------------------------------------------

def _circle_points(n):
    """Rational points near the n-th roots of unity (half-angle trick)."""
    pts = []
    for k in range(n):
        half = math.pi * k / n
        if abs(half - math.pi / 2) < 1e-12:
            pts.append((rat(-1), rat(0)))
            continue
        t = rat(round(math.tan(half) * 64), 64)
        den = 1 + t * t
        pts.append(((1 - t * t) / den, 2 * t / den))
    if len({p for p in pts}) != n:
        raise UnsupportedN("rational rotations collide for this n")
    return pts


def _cyclic_between(x, y):
    """A rational parameter strictly inside the cyclic interval (x, y)."""
    if x is INF:
        return y - 1
    if y is INF:
        return x + 1
    if pkey(x) < pkey(y):
        return (x + y) / 2
    return x + 1  # wrapping interval: just past x is inside


def h1_symmetric(n, points=False):
    """n segments on first-ruling lines of x^2 + y^2 - z^2 = 1.

    Each ruling line excludes one parameter of the second-ruling circle
    (its parallel line); target transversals are placed between
    consecutive exclusions and the segments cut so their arcs start and
    end there.  With points=True the arcs shrink to the n targets and the
    scene has exactly n isolated transversals; otherwise the arcs overlap
    their neighbors and the n components are genuine arcs.
    """
    pts = _circle_points(n)
    lines = [
        line_point_dir((c, s, rat(0)), (-s, c, rat(1))) for c, s in pts
    ]
    chart = chart_for(lines[0], lines[1], lines[2])
    for l in lines:
        if not line_on_quadric(l, chart.quadric):
            raise UnsupportedN("rotated line left the quadric")

    exclusions = []
    for c, s in pts:
        if c == 1:
            exclusions.append(INF)
        else:
            exclusions.append(-s / (1 - c))

    order = sorted(range(n), key=lambda k: pkey(exclusions[k]))
    taus = []
    for idx in range(n):
        x = exclusions[order[idx]]
        y = exclusions[order[(idx + 1) % n]]
        taus.append(_cyclic_between(x, y))

    segs = [None] * n
    for idx in range(n):
        k = order[idx]
        tau_before = taus[idx - 1]  # tau in the gap ending at this exclusion
        tau_after = taus[idx]
        if points:
            lo_param, hi_param = tau_after, tau_before
        else:
            lo_param = _cyclic_between(exclusions[k], tau_after)
            hi_param = _cyclic_between(tau_before, exclusions[k])
        pa = line_line_point(_ruling_line_at(chart, lo_param), lines[k])
        pb = line_line_point(_ruling_line_at(chart, hi_param), lines[k])
        segs[k] = Segment3(pa, pb)
    return segs


# ---------------------------------------------------------------------------
# coplanar chain: n coplanar segments, n components
# ---------------------------------------------------------------------------
# Frozen by scripts/derive_chain_tables.py: long pairwise-crossing
# segments, each supporting line missing exactly one segment, so each of
# the n distinct slopes is punctured and the stabbers split into n slope
# windows.

CHAIN_TABLES = {
    4: (
        ("-135/8", "0", "1", "0"),
        ("-38", "-34", "-19/4", "-3/4"),
        ("-65/3", "17/3", "-5", "-11"),
        ("-227/8", "-91/4", "-401/24", "7/12"),
    ),
    5: (
        ("-42", "0", "113/4", "0"),
        ("-465/16", "15/16", "98", "128"),
        ("-345/16", "105/16", "43", "-58"),
        ("16", "-28", "102", "144"),
        ("-34/3", "164/3", "59", "-86"),
    ),
    6: (
        ("-32", "0", "35", "0"),
        ("-99/4", "9/4", "1027/16", "1459/16"),
        ("-42", "72", "42", "-12"),
        ("171/16", "-133/8", "70", "102"),
        ("-219/8", "219/4", "271/16", "-271/8"),
        ("6", "-72", "923/16", "1329/16"),
    ),
    7: (
        ("-41", "0", "22", "0"),
        ("-167/6", "7/6", "447/16", "911/16"),
        ("-615/16", "775/16", "15", "-5"),
        ("-141/16", "-141/8", "37", "74"),
        ("-52", "74", "42/5", "-234/5"),
        ("-35/2", "-129/2", "311/16", "741/16"),
        ("-211/8", "273/8", "-95/16", "-435/16"),
    ),
    8: (
        ("-125/8", "0", "34", "0"),
        ("-335/8", "-567/8", "925/32", "-3/32"),
        ("-48", "56", "46", "-38"),
        ("-48", "-82", "119/8", "175/4"),
        ("-37", "42", "811/8", "-939/4"),
        ("-263/8", "-477/8", "63", "228"),
        ("133/16", "945/16", "121", "-279"),
        ("-28/3", "-160/3", "60", "224"),
    ),
    9: (
        ("-1", "0", "33", "0"),
        ("-10", "-8", "51", "53"),
        ("-10", "37", "143/4", "-35/4"),
        ("243/40", "3/20", "65", "118"),
        ("-19", "54", "61/2", "-45"),
        ("-525/16", "-2919/16", "80", "156"),
        ("-65/32", "867/32", "67", "-180"),
        ("-45", "-224", "255/16", "79/4"),
        ("22/3", "152/3", "445/8", "-285/2"),
    ),
    10: (
        ("-63/4", "0", "38", "0"),
        ("-68", "-90", "51/2", "7/2"),
        ("-25", "55", "59/2", "1/2"),
        ("-409/8", "-273/4", "757/12", "961/6"),
        ("-38", "80", "433/12", "-409/6"),
        ("-461/8", "-1671/8", "75", "189"),
        ("-30", "84", "102", "-312"),
        ("-76", "-276", "273/8", "329/2"),
        ("-5", "104", "335/4", "-251"),
        ("-18", "-100", "43", "205"),
    ),
    11: (
        ("-21", "0", "42", "0"),
        ("-673/16", "-961/16", "36", "18"),
        ("-53", "83", "117/4", "3/4"),
        ("-54", "-80", "305/8", "417/4"),
        ("-106", "240", "91/6", "-7/3"),
        ("-47/2", "-135/2", "60", "183"),
        ("-99", "231", "179/8", "-1065/8"),
        ("-323/4", "-375", "425/8", "321/2"),
        ("-73/2", "98", "33", "-180"),
        ("-100", "-460", "-281/168", "5315/168"),
        ("-21", "85", "219/8", "-1255/8"),
    ),
    12: (
        ("-143/8", "0", "175/8", "0"),
        ("-24", "-5", "134/5", "229/5"),
        ("-31/2", "39/2", "297/8", "-265/8"),
        ("-113/12", "7/6", "53", "126"),
        ("4/3", "118/3", "46", "-50"),
        ("-315/8", "-1113/8", "155/4", "381/4"),
        ("-277/64", "5055/64", "39", "-51"),
        ("-49", "-176", "63", "272"),
        ("-41", "248", "623/24", "-119/6"),
        ("-211/8", "-775/8", "1981/18", "10535/18"),
        ("-417/16", "2965/16", "277/11", "-780/11"),
        ("13/11", "-912/11", "137", "732"),
    ),
}


def coplanar_chain(n):
    """n coplanar segments whose transversals form exactly n components."""
    if n not in CHAIN_TABLES:
        raise UnsupportedN("coplanar-chain supports 4 <= n <= 12")
    segs = []
    for ax, ay, bx, by in CHAIN_TABLES[n]:
        segs.append(
            Segment3(
                (parse_scalar(ax), parse_scalar(ay), rat(0)),
                (parse_scalar(bx), parse_scalar(by), rat(0)),
            )
        )
    return segs


# ---------------------------------------------------------------------------
# two planes through a shared line: n - 1 components
# ---------------------------------------------------------------------------

def two_plane(n):
    """n/2 segments in H = {z=0} through p, n/2 in K = {y=0} through q.

    Transversals are the H-pencil through q plus the K-pencil through p;
    the segments are long enough that each pencil splits into n/2 arcs,
    and the component of the line pq is shared, giving n - 1 components.
    """
    if n % 2 or n < 4:
        raise UnsupportedN("two-plane needs even n >= 4")
    m = rat(8 * n)
    half = n // 2
    segs = []
    for j in range(1, half + 1):
        d = (rat(1), rat(j), rat(0))  # in H through p = origin
        segs.append(Segment3(v_scale(-m, d), v_scale(m, d)))
    q = vec(4, 0, 0)
    for j in range(1, half + 1):
        d = (rat(1), rat(0), rat(j))  # in K through q
        segs.append(Segment3(v_add(q, v_scale(-m, d)), v_add(q, v_scale(m, d))))
    return segs


# ---------------------------------------------------------------------------
# concurrent segments: one component
# ---------------------------------------------------------------------------

def concurrent(n):
    """n segments through the origin with pairwise independent directions."""
    segs = []
    for k in range(n):
        d = (rat(1), rat(k), rat(k * k))
        segs.append(Segment3(v_scale(rat(-1), d), v_scale(rat(1), d)))
    return segs
