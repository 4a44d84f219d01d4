"""One-time derivation of the coplanar-chain generator tables.

The chain scene for n is built from n long coplanar segments on lines
with n distinct slopes, clipped so that each supporting line misses
exactly one segment while every other crossing stays inside both spans.
A line parallel to segment k cannot meet it, and the one line with the
same slope that does (the supporting line itself) misses its designated
victim, so each of the n slopes is punctured and the stabbers fall into
exactly n slope windows - the planar counterpart of the ruling example
where transversals to n lines of one ruling form n components.

For each n this script searches shift patterns and cut assignments (cuts
happen only at crossings that are extreme along their segment, placed an
eighth of the way to the next crossing so windows stay wide), verifies
the component count with the exact engine, and prints the frozen tables
embedded in transversals.generators.  The generator tests re-run this
derivation and assert the tables match.
"""

import random
import sys

sys.path.insert(0, "src")

from transversals.planar import Segment2, planar_components
from transversals.scalars import format_scalar, rat

SEEDS = {n: 2000 for n in range(4, 13)}


def chain_slopes(n):
    slopes = [rat(0)]
    k = 1
    while len(slopes) < n:
        slopes.append(rat(k))
        if len(slopes) < n:
            slopes.append(rat(-k))
        k += 1
    return slopes


def build(slopes, shifts, assignment, margins):
    n = len(slopes)

    def cx(j, k):
        return (slopes[j] * shifts[j] - slopes[k] * shifts[k]) / (
            slopes[j] - slopes[k]
        )

    rows = [sorted((cx(j, k), k) for k in range(n) if k != j) for j in range(n)]
    cuts = {}
    for k, (j, side) in assignment.items():
        cuts.setdefault(j, {})
        if side in cuts[j]:
            return None
        cuts[j][side] = k
    segs = []
    eighth = rat(1, 8)
    for j in range(n):
        row = rows[j]
        lo_i, hi_i = 0, len(row) - 1
        jcuts = cuts.get(j, {})
        if "lo" in jcuts:
            if row[0][1] != jcuts["lo"]:
                return None
            lo_i = 1
        if "hi" in jcuts:
            if row[-1][1] != jcuts["hi"]:
                return None
            hi_i -= 1
        if lo_i > hi_i:
            return None
        if "lo" in jcuts:
            lo = row[0][0] + (row[lo_i][0] - row[0][0]) * eighth
        else:
            lo = row[0][0] - margins[j]
        if "hi" in jcuts:
            hi = row[-1][0] - (row[-1][0] - row[hi_i][0]) * eighth
        else:
            hi = row[-1][0] + margins[j]
        if lo >= hi:
            return None
        m, t = slopes[j], shifts[j]
        segs.append(Segment2((lo, m * (lo - t)), (hi, m * (hi - t))))
    return segs


def check(segs, n):
    try:
        res = planar_components(segs)
    except Exception:
        return False
    if len(res.components) != n:
        return False
    wraps = [c for c in res.components if c.kind == "circle"]
    others = [c for c in res.components if c.kind == "slopes"]
    if len(wraps) > 1 or len(wraps) + len(others) != n:
        return False
    return all(c.arc.lo is not None and c.arc.hi is not None for c in others)


def derive(n, seed, tries=30000):
    slopes = chain_slopes(n)
    rng = random.Random(seed)
    for attempt in range(tries):
        shifts = [rat(rng.randint(-30, 30)) for _ in slopes]

        def cx(j, kk):
            return (slopes[j] * shifts[j] - slopes[kk] * shifts[kk]) / (
                slopes[j] - slopes[kk]
            )

        rows = [
            sorted((cx(j, kk), kk) for kk in range(n) if kk != j) for j in range(n)
        ]
        order = list(range(n))
        rng.shuffle(order)
        assignment = {}
        used = set()
        ok = True
        for k in order:
            opts = []
            for j in range(n):
                if j == k:
                    continue
                if rows[j][0][1] == k and (j, "lo") not in used:
                    opts.append((j, "lo"))
                if rows[j][-1][1] == k and (j, "hi") not in used:
                    opts.append((j, "hi"))
            if not opts:
                ok = False
                break
            pick = rng.choice(opts)
            assignment[k] = pick
            used.add(pick)
        if not ok:
            continue
        margins = [rat(rng.choice((5, 8, 12))) for _ in range(n)]
        segs = build(slopes, shifts, assignment, margins)
        if segs is not None and check(segs, n):
            return segs, attempt
    return None, None


def main():
    print("CHAIN_TABLES = {")
    for n in range(4, 13):
        scene, attempt = derive(n, SEEDS[n])
        if scene is None:
            print(f"    # n={n}: NOT FOUND")
            continue
        print(f"    {n}: (  # seed {SEEDS[n]}, attempt {attempt}")
        for s in scene:
            c = tuple(
                f'"{format_scalar(v)}"' for v in (s.a[0], s.a[1], s.b[0], s.b[1])
            )
            print(f"        ({c[0]}, {c[1]}, {c[2]}, {c[3]}),")
        print("    ),")
    print("}")


if __name__ == "__main__":
    main()
