"""Independent oracle for two-variable monomial ideals.

Membership in the integral closure is decided by monomial valuations
(weights u, v >= 0): x^a y^b is integral over I iff u*a + v*b >= min over
generators for every weight. For exponents bounded by B, weights with
entries up to B suffice. Multiplicity comes from the second difference of
colength(closure(I^n)); no polygon geometry is used.

Writes tests/data/monomial_oracle.json.
"""

import itertools
import json
import random
from pathlib import Path

WEIGHT_BOUND = 24


def weights():
    for u in range(WEIGHT_BOUND + 1):
        for v in range(WEIGHT_BOUND + 1):
            if (u, v) != (0, 0):
                yield u, v


WEIGHTS = list(weights())


def minimize(gens):
    gens = sorted(set(gens))
    out = []
    for g in gens:
        if not any(h[0] <= g[0] and h[1] <= g[1] for h in out):
            out.append(g)
    return sorted(out)


def orders(gens):
    return {(u, v): min(u * a + v * b for a, b in gens) for u, v in WEIGHTS}


def closure(gens):
    ords = orders(gens)
    amax = max(a for a, b in gens if b == 0)
    bmax = max(b for a, b in gens if a == 0)
    pts = [(a, b) for a in range(amax + 1) for b in range(bmax + 1)
           if all(u * a + v * b >= ords[u, v] for u, v in WEIGHTS)]
    return minimize(pts)


def howald(gens):
    ords = orders(gens)
    amax = max(a for a, b in gens if b == 0)
    bmax = max(b for a, b in gens if a == 0)
    pts = [(a, b) for a in range(amax + 1) for b in range(bmax + 1)
           if all(u * (a + 1) + v * (b + 1) > ords[u, v] for u, v in WEIGHTS if u > 0 and v > 0)]
    return minimize(pts) if pts else [(0, 0)]


def colength(gens):
    amax = max(a for a, b in gens if b == 0)
    bmax = max(b for a, b in gens if a == 0)
    return sum(1 for a in range(amax) for b in range(bmax)
               if not any(g[0] <= a and g[1] <= b for g in gens))


def power(gens, n):
    return minimize(tuple(map(sum, zip(*combo))) for combo in itertools.combinations_with_replacement(gens, n))


def multiplicity(gens):
    lengths = [colength(closure(power(gens, n))) for n in (1, 2, 3)]
    return lengths[2] - 2 * lengths[1] + lengths[0]


def fmt(gens):
    parts = []
    for a, b in gens:
        if a == 0 and b == 0:
            parts.append("1")
            continue
        x = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
        y = "" if b == 0 else ("y" if b == 1 else f"y^{b}")
        parts.append("*".join(p for p in (x, y) if p))
    return ", ".join(parts)


def cases():
    fixed = [
        [(2, 0), (0, 3)],
        [(2, 0), (0, 5)],
        [(1, 0), (0, 1)],
        [(3, 0), (0, 3)],
        [(2, 0), (1, 1), (0, 2)],
        [(3, 0), (0, 4)],
        [(4, 0), (0, 6)],
        [(5, 0), (1, 2), (0, 7)],
        [(8, 0), (0, 8)],
        [(7, 0), (2, 2), (0, 5)],
    ]
    rng = random.Random(1729)
    while len(fixed) < 60:
        k = rng.randint(0, 3)
        gens = [(rng.randint(1, 8), 0), (0, rng.randint(1, 8))]
        gens += [(rng.randint(1, 6), rng.randint(1, 6)) for _ in range(k)]
        gens = minimize(gens)
        if gens not in fixed:
            fixed.append(gens)
    return fixed


def main():
    out = []
    for gens in cases():
        c = closure(gens)
        out.append({
            "generators": fmt(gens),
            "closure": fmt(c),
            "adjoint": fmt(howald(c)),
            "colength": colength(c),
            "multiplicity": multiplicity(c),
            "order": min(a + b for a, b in c),
        })
    path = Path(__file__).resolve().parent.parent / "data" / "monomial_oracle.json"
    path.write_text(json.dumps(out, indent=2) + "\n")
    print(f"wrote {len(out)} cases to {path}")


if __name__ == "__main__":
    main()
