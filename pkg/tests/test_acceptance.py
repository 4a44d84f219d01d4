"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report lines.
"""

import math
import random
import time

import pytest

from transversals.core import (
    Segment3,
    line_line_point,
    line_through,
    supporting_line,
    v_add,
    v_scale,
    v_sub,
    vec,
)
from transversals.generators import coplanar_chain, generate, h1_symmetric
from transversals.oracle import (
    is_transversal,
    sampled_components,
    transversals_to_4_lines,
)
from transversals.planar import Segment2, meets_nonvertical, planar_components
from transversals.scalars import rat
from transversals.solver import solve

_REPORT = []


def _record(num, text):
    line = f"ACCEPTANCE {num}: PASS - {text}"
    _REPORT.append(line)
    print("\n" + line)


@pytest.fixture(scope="module", autouse=True)
def _summary():
    yield
    print("\n" + "\n".join(_REPORT))


def test_criterion_1_triangle_stab():
    scene = generate("triangle-stab")
    t0 = time.time()
    res = solve(scene)
    oracle_count = sampled_components(scene, 128)
    elapsed = time.time() - t0
    assert res.cardinality == "finite"
    assert res.count == 3
    assert all(c.isolated for c in res.components)
    assert oracle_count == 3
    assert elapsed < 1.0
    _record(1, f"triangle-stab: solve=3 isolated, oracle(128)=3, {elapsed:.2f}s")


def test_criterion_2_h1_symmetric_four():
    res = solve(h1_symmetric(4))
    assert res.classification == "ruling_h1"
    assert res.cardinality == "infinite"
    assert len(res.components) == 4
    assert all(c.chart == "circle" for c in res.components)
    shrunk = solve(h1_symmetric(4, points=True))
    assert shrunk.cardinality == "finite"
    assert shrunk.count == 4
    assert all(c.isolated for c in shrunk.components)
    _record(2, "h1-symmetric n=4: ruling_h1, 4 circle arcs; shrunk: 4 isolated")


def test_criterion_3_hp_ruling():
    for n in (3, 5, 8):
        res = solve(generate("hp-ruling", n))
        assert res.cardinality == "infinite"
        assert len(res.components) == 1
    _record(3, "hp-ruling n in {3,5,8}: exactly 1 component each")


def test_criterion_4_coplanar_chain():
    from tests._raster import raster_components

    for n in range(4, 9):
        scene = coplanar_chain(n)
        res = solve(scene)
        assert len(res.components) == n, (n, len(res.components))
        segs2 = [Segment2(s.a[:2], s.b[:2]) for s in scene]
        res2 = planar_components(segs2)
        assert len(res2.components) == n
        wraps = sum(1 for c in res2.components if c.kind == "circle")
        # the slope component wrapping through the infinite slope appears
        # as two window-truncated pieces in the rasterized dual plane
        assert raster_components(segs2, grid=8192) == n + wraps
    _record(4, "coplanar-chain n=4..8: n components, raster grid 8192^2 agrees")


def test_criterion_5_two_plane():
    for n in (4, 6, 8):
        res = solve(generate("two-plane", n))
        assert res.cardinality == "infinite"
        assert len(res.components) == n - 1, (n, len(res.components))
        merged = [c for c in res.components if c.chart == "two_pencils"]
        assert len(merged) == 1
        assert len(merged[0].arcs) == 2
    _record(5, "two-plane n in {4,6,8}: n-1 components, one two-chart merged")


def _random_line(rng, span=5):
    while True:
        p = vec(rng.randint(-span, span), rng.randint(-span, span),
                rng.randint(-span, span))
        q = vec(rng.randint(-span, span), rng.randint(-span, span),
                rng.randint(-span, span))
        if p != q:
            return line_through(p, q)


def _long_segments(lines, candidates):
    from transversals.core import point_on_line, v_dot
    from transversals.scalars import SqrtExt

    bound = rat(1)
    for cand in candidates:
        for l in lines:
            x = line_line_point(cand, l)
            p0 = point_on_line(l)
            t = v_dot(v_sub(x, p0), l.direction) / v_dot(l.direction, l.direction)
            if isinstance(t, SqrtExt):
                lo, hi = t.enclosure(rat(1))
                t_abs = max(abs(lo), abs(hi))
            else:
                t_abs = abs(t)
            bound = max(bound, t_abs)
    ext = bound + 10
    segs = []
    for l in lines:
        p0 = point_on_line(l)
        segs.append(Segment3(v_add(p0, v_scale(-ext, l.direction)),
                             v_add(p0, v_scale(ext, l.direction))))
    return segs


def test_criterion_6_random_quadruples():
    rng = random.Random(20240811)
    counts = {0: 0, 1: 0, 2: 0}
    done = 0
    while done < 1000:
        lines = []
        while len(lines) < 4:
            cand = _random_line(rng)
            if all(cand != l for l in lines):
                lines.append(cand)
        kind, data = transversals_to_4_lines(*lines)
        if kind == "infinite":
            continue
        segs = _long_segments(lines, data)
        res = solve(segs)
        assert res.cardinality == "finite"
        assert res.count == len(data) and res.count in (0, 1, 2)
        counts[res.count] += 1
        done += 1
    assert counts[0] > 0 and counts[2] > 0
    _record(6, f"1000 random quadruples: solve == oracle; distribution {counts}")


def test_criterion_7_concurrent():
    for n in (3, 10):
        res = solve(generate("concurrent", n))
        assert res.cardinality == "infinite"
        assert len(res.components) == 1
    _record(7, "concurrent n in {3,10}: infinite, exactly 1 component")


def _random_scene(rng):
    n = rng.randint(1, 8)
    segs = []
    for _ in range(n):
        a = vec(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
        if rng.random() < 0.08:
            segs.append(Segment3(a, a))
            continue
        b = vec(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5))
        if a == b:
            segs.append(Segment3(a, a))
        else:
            segs.append(Segment3(a, b, rng.random() < 0.9, rng.random() < 0.9))
    return segs


def _random_coplanar_scene(rng):
    n = rng.randint(3, 8)
    segs = []
    while len(segs) < n:
        a = (rat(rng.randint(-6, 6)), rat(rng.randint(-6, 6)), rat(0))
        b = (rat(rng.randint(-6, 6)), rat(rng.randint(-6, 6)), rat(0))
        if a != b:
            segs.append(Segment3(a, b))
    return segs


def _perturbed_generator_scene(rng):
    name, n = rng.choice(
        [("h1-symmetric", rng.randint(3, 6)), ("hp-ruling", rng.randint(3, 6)),
         ("coplanar-chain", rng.randint(4, 8)), ("two-plane", 2 * rng.randint(2, 4)),
         ("concurrent", rng.randint(3, 6)), ("triangle-stab", None)]
    )
    scene = generate(name, n)
    idx = rng.randrange(len(scene))
    s = scene[idx]
    jitter = (rat(rng.randint(-2, 2), 16), rat(rng.randint(-2, 2), 16),
              rat(rng.randint(-2, 2), 16))
    scene[idx] = Segment3(v_add(s.a, jitter), v_add(s.b, jitter),
                          s.closed_a, s.closed_b)
    return scene


def test_criterion_8_randomized_bound_suite():
    rng = random.Random(8)
    violations = 0
    total = 10_000
    for i in range(total):
        if i % 10 < 4:
            scene = _random_scene(rng)
        elif i % 10 < 7:
            scene = _random_coplanar_scene(rng)
        else:
            scene = _perturbed_generator_scene(rng)
        res = solve(scene)
        n = len(scene)
        if res.cardinality == "finite":
            if not res.count <= n:
                violations += 1
        else:
            if not 1 <= len(res.components) <= n:
                violations += 1
        for c in res.components:
            if not is_transversal(c.representative, scene):
                violations += 1
    assert violations == 0
    _record(8, f"{total} randomized scenes: 0 bound/representative violations")


def _random_coplanar_big(n, seed):
    rng = random.Random(seed)
    segs = []
    seen = set()
    while len(segs) < n:
        key = (rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6),
               rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        if key in seen or (key[0], key[1]) == (key[2], key[3]):
            continue
        seen.add(key)
        segs.append(Segment3((rat(key[0]), rat(key[1]), rat(0)),
                             (rat(key[2]), rat(key[3]), rat(0))))
    return segs


def test_criterion_9_performance():
    scene_small = _random_coplanar_big(1000, 7)
    scene_big = _random_coplanar_big(10000, 7)
    t_small = min(_timed(scene_small) for _ in range(2))
    t_big = _timed(scene_big)
    slope = math.log(t_big / t_small) / math.log(10)
    assert t_big <= 10.0, f"n=10^4 took {t_big:.2f}s"
    assert slope <= 1.25, f"log-log slope {slope:.2f}"
    _record(9, f"solve: n=10^3 {t_small:.2f}s, n=10^4 {t_big:.2f}s, slope {slope:.2f}")


def _timed(scene):
    t0 = time.time()
    solve(scene)
    return time.time() - t0


def test_criterion_10_micro_suites():
    rng = random.Random(10)
    # Pluecker relation after construction
    for _ in range(10_000):
        l = _random_line(rng, span=9)
        d, m = l.direction, l.moment
        assert d[0] * m[0] + d[1] * m[1] + d[2] * m[2] == 0
    # dual-wedge membership equivalence
    for _ in range(10_000):
        ax, ay = rat(rng.randint(-40, 40), 8), rat(rng.randint(-40, 40), 8)
        bx, by = rat(rng.randint(-40, 40), 8), rat(rng.randint(-40, 40), 8)
        seg = Segment2((ax, ay), (bx, by)) if (ax, ay) != (bx, by) else Segment2(
            (ax, ay), (ax, ay))
        a, b = rat(rng.randint(-40, 40), 8), rat(rng.randint(-40, 40), 8)
        g1 = seg.a[1] - a * seg.a[0]
        g2 = seg.b[1] - a * seg.b[0]
        lo, hi = min(g1, g2), max(g1, g2)
        if lo < b < hi or (b == lo == hi):
            in_wedge = True
        elif b < lo or b > hi:
            in_wedge = False
        elif lo == hi:
            in_wedge = True
        elif b == g1 == g2:
            in_wedge = True
        elif b == g1:
            in_wedge = seg.closed_a
        else:
            in_wedge = seg.closed_b
        assert meets_nonvertical(a, b, seg) == in_wedge
    # envelope pointwise correctness at 1000 random slopes
    from transversals.planar import _dual_pairs, _negate_envelope, eval_envelope, upper_envelope

    segs = []
    while len(segs) < 15:
        p = (rat(rng.randint(-30, 30), 4), rat(rng.randint(-30, 30), 4))
        q = (rat(rng.randint(-30, 30), 4), rat(rng.randint(-30, 30), 4))
        if p != q:
            segs.append(Segment2(p, q))
    lowers, uppers = _dual_pairs(segs)
    env_lo = upper_envelope(lowers)
    env_hi = _negate_envelope(upper_envelope([_negate_envelope(u) for u in uppers]))
    for _ in range(1000):
        a = rat(rng.randint(-200, 200), 16)
        assert eval_envelope(env_lo, a) == max(
            min(s.a[1] - a * s.a[0], s.b[1] - a * s.b[0]) for s in segs
        )
        assert eval_envelope(env_hi, a) == min(
            max(s.a[1] - a * s.a[0], s.b[1] - a * s.b[0]) for s in segs
        )
    # circular sweep order independence
    from transversals.intervals import INF, circ_point, circ_span, intersect_circular

    for _ in range(300):
        arcs = []
        for _ in range(rng.randint(1, 7)):
            x = rat(rng.randint(-12, 12))
            y = rat(rng.randint(-12, 12))
            if rng.random() < 0.15:
                arcs.append(circ_point("circle", x))
            elif x == y:
                arcs.append(circ_span("circle", x, INF, rng.random() < 0.5, False))
            else:
                arcs.append(circ_span("circle", x, y, rng.random() < 0.5,
                                      rng.random() < 0.5))
        base = intersect_circular(arcs)
        shuffled = list(arcs)
        rng.shuffle(shuffled)
        assert intersect_circular(shuffled) == base
    _record(10, "micro-suites: Pluecker 10^4, wedge 10^4, envelopes 10^3, sweep order")
