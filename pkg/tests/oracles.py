"""Independent brute-force oracles used to pin expected values.

Everything here recomputes results along a different route than the
library: closure by fixpoint iteration instead of dynamic programming,
hardcoded GF(4) tables instead of generated ones, and subspace equality
by explicit vector enumeration instead of bilinear shortcuts.
"""

from itertools import combinations

# GF(4): 0, 1, 2 = a, 3 = a+1 with a^2 = a+1; addition is XOR.
GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
GF4_INV = (None, 1, 3, 2)


def naive_closure(generators, bound):
    """Members <= bound of the additive closure, by fixpoint iteration."""
    members = {0} | {g for g in generators if g <= bound}
    while True:
        grown = {a + b for a in members for b in members if a + b <= bound}
        if grown <= members:
            return sorted(members)
        members |= grown


def naive_gap_pairs(gaps, value):
    gap_set = set(gaps)
    return sum(1 for a in gaps if 2 * a <= value and (value - a) in gap_set)


def is_division_closed(contains, complement):
    """Ideal test: complement closed under subtracting semigroup elements."""
    comp = set(complement)
    for t in comp:
        for s in range(1, t + 1):
            if contains(s) and contains(t - s) and (t - s) not in comp:
                return False
    return True


def naive_ideal_complements(contains, elements, max_size):
    """All division-closed complements from `elements`, by raw subset scan."""
    found = set()
    for size in range(1, max_size + 1):
        for combo in combinations(elements, size):
            if 0 in combo and is_division_closed(contains, combo):
                found.add(frozenset(combo))
    return found


# -- GF(4) linear algebra for the q=2 Hermitian checks --


def _gf4_pow(v, e):
    r = 1
    for _ in range(e):
        r = GF4_MUL[r][v]
    return r


def naive_wstar_q2(coords):
    """Rank-jump pole orders for q=2 point coordinate pairs."""
    n = len(coords)
    echelon = []
    jumps = []
    m = 0
    while len(jumps) < n:
        b = m % 2
        rest = m - 3 * b
        if rest >= 0:
            a = rest // 2
            row = [GF4_MUL[_gf4_pow(x, a)][_gf4_pow(y, b)] for (x, y) in coords]
            for piv, erow in echelon:
                f = row[piv]
                if f:
                    row = [v ^ GF4_MUL[f][w] for v, w in zip(row, erow)]
            piv = next((k for k, v in enumerate(row) if v), None)
            if piv is not None:
                scale = GF4_INV[row[piv]]
                echelon.append((piv, [GF4_MUL[scale][v] for v in row]))
                jumps.append(m)
        m += 1
        assert m <= 64, "runaway rank computation"
    return jumps


# -- literal isometry-dual verification over any field of the package --


def _rref(rows, n, field):
    ech = []
    for row in rows:
        r = list(row)
        for piv, erow in ech:
            if r[piv]:
                f = field.neg(r[piv])
                r = [field.add(v, field.mul(f, w)) for v, w in zip(r, erow)]
        piv = next((k for k, v in enumerate(r) if v), None)
        if piv is not None:
            scale = field.inv(r[piv])
            ech.append((piv, [field.mul(scale, v) for v in r]))
    return ech


def nullspace(rows, n, field):
    ech = sorted(_rref(rows, n, field))
    for i in range(len(ech)):
        piv, row = ech[i]
        for j in range(i):
            pj, rj = ech[j]
            if rj[piv]:
                f = field.neg(rj[piv])
                ech[j] = (pj, [field.add(v, field.mul(f, w)) for v, w in zip(rj, row)])
    pivots = [p for p, _ in ech]
    basis = []
    for free in (k for k in range(n) if k not in pivots):
        v = [0] * n
        v[free] = 1
        for p, row in ech:
            v[p] = field.neg(row[free])
        basis.append(v)
    return basis


def span_vectors(rows, n, field):
    """Every vector in the row span (exponential; small inputs only)."""
    vectors = {(0,) * n}
    for row in rows:
        additions = set()
        for c in range(field.q):
            scaled = tuple(field.mul(c, v) for v in row)
            for w in vectors:
                additions.add(tuple(field.add(a, b) for a, b in zip(w, scaled)))
        vectors |= additions
    return vectors


def literal_isometry_check(cs, x_values):
    """Check x * C^i == dual(C^(n-i)) for every i by full vector enumeration."""
    n, field = cs.n, cs.field
    rows = cs.generator_rows
    for i in range(n + 1):
        twisted = [
            [field.mul(x_values[k], row[k]) for k in range(n)] for row in rows[:i]
        ]
        dual = nullspace(rows[: n - i], n, field)
        if span_vectors(twisted, n, field) != span_vectors(dual, n, field):
            return False
    return True
