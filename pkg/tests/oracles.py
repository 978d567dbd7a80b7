"""Brute-force reference computations, deliberately sharing no code paths with the package."""
from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import sympy

# Positive roots in simple-root coordinates (Bourbaki numbering), written out by hand.
POSITIVE_ROOTS = {
    ("A", 1): [(1,)],
    ("A", 2): [(1, 0), (0, 1), (1, 1)],
    ("B", 2): [(1, 0), (0, 1), (1, 1), (1, 2)],
    ("G", 2): [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)],
}

CARTAN = {
    ("A", 1): [[2]],
    ("A", 2): [[2, -1], [-1, 2]],
    ("B", 2): [[2, -2], [-1, 2]],
    ("G", 2): [[2, -1], [-3, 2]],
}


def clebsch_gordan(a, b):
    """sl2: V(a) (x) V(b) = sum of V(a+b-2k), k = 0..min(a, b)."""
    return {(a + b - 2 * k,): 1 for k in range(min(a, b) + 1)}


def _to_fund(cartan, c):
    n = len(c)
    return tuple(sum(c[i] * cartan[i][j] for i in range(n)) for j in range(n))


def _weyl_group(cartan):
    """All Weyl group elements as (matrix on fundamental coordinates, sign)."""
    n = len(cartan)

    def refl(i):
        # s_i(w) = w - w_i alpha_i ; alpha_i = row i of the Cartan matrix
        return tuple(tuple((int(r == c) - (cartan[i][c] if r == i else 0)) for c in range(n))
                     for r in range(n))

    def mul(A, B):
        return tuple(tuple(sum(A[r][k] * B[k][c] for k in range(n)) for c in range(n))
                     for r in range(n))

    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    gens = [refl(i) for i in range(n)]
    elems = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(g, s)
                if h not in elems:
                    elems[h] = -elems[g]
                    nxt.append(h)
        frontier = nxt
    return list(elems.items())


def _apply_row(M, w):
    # w as a row vector, acted on from the right
    n = len(w)
    return tuple(sum(w[r] * M[r][c] for r in range(n)) for c in range(n))


def kostant_multiplicities(key, lam, candidates):
    """Weight multiplicities of V(lam) by Kostant's formula, for the given dominant weights."""
    cartan = CARTAN[key]
    pos = POSITIVE_ROOTS[key]
    n = len(cartan)
    W = _weyl_group(cartan)
    inv = sympy.Matrix(cartan).inv()

    def root_coords(w):
        v = sympy.Matrix([list(w)]) * inv
        return tuple(v)

    @lru_cache(maxsize=None)
    def partitions(v, i=0):
        if i == len(pos):
            return 1 if not any(v) else 0
        total = 0
        b = pos[i]
        cur = v
        while all(c >= 0 for c in cur):
            total += partitions(cur, i + 1)
            cur = tuple(x - y for x, y in zip(cur, b))
        return total

    rho = (1,) * n
    lr = tuple(a + b for a, b in zip(lam, rho))
    out = {}
    for mu in candidates:
        mr = tuple(a + b for a, b in zip(mu, rho))
        s = 0
        for M, sign in W:
            diff = tuple(x - y for x, y in zip(_apply_row(M, lr), mr))
            rc = root_coords(diff)
            if all(c.is_integer and c >= 0 for c in rc):
                s += sign * partitions(tuple(int(c) for c in rc))
        out[mu] = s
    return out


def adjoint_basis_weights(key):
    cartan = CARTAN[key]
    n = len(cartan)
    roots = [_to_fund(cartan, c) for c in POSITIVE_ROOTS[key]]
    return roots + [tuple(-x for x in r) for r in roots] + [(0,) * n] * n


def power_by_enumeration(key, kind, k):
    """Full weight diagram of S^k or Lambda^k of the adjoint module, by listing monomials."""
    basis = adjoint_basis_weights(key)
    n = len(CARTAN[key])
    picks = (combinations_with_replacement if kind == "sym" else combinations)(range(len(basis)), k)
    out = Counter()
    for p in picks:
        w = [0] * n
        for i in p:
            w = [a + b for a, b in zip(w, basis[i])]
        out[tuple(w)] += 1
    return dict(out)


def mesh_dimension_oracle(vertices, depth):
    """dim e_w (kQ / mesh ideal) e_v for the truncated Z+ x Z+ translation quiver.

    Lists every path explicitly and ranks the span of all p * rho_x * q.
    """
    vs = set(vertices)

    def succ(v):
        m, n = v
        return [w for w in ((m, n + 1), (m + 1, n - 1)) if w in vs and w[1] >= 0]

    @lru_cache(maxsize=None)
    def paths(v, w):
        if v == w:
            return [(v,)]
        out = []
        for u in succ(v):
            for p in paths(u, w):
                out.append((v,) + p)
        return out

    relators = {}
    for (m, n) in vertices:
        if m == 0:
            continue
        t = (m - 1, n)
        terms = [((t, (m - 1, n + 1), (m, n)), 1)]
        if n >= 1:
            terms.append(((t, (m, n - 1), (m, n)), -1))
        relators[(m, n)] = terms

    table = {}
    for v in vertices:
        for w in vertices:
            basis = paths(v, w)
            if not basis:
                table[(v, w)] = 0
                continue
            pos = {p: i for i, p in enumerate(basis)}
            rows = []
            for x, terms in relators.items():
                t = terms[0][0][0]
                for q in paths(v, t):
                    for p in paths(x, w):
                        vec = [0] * len(basis)
                        for mid, sign in terms:
                            full = q + mid[1:] + p[1:]
                            vec[pos[full]] += sign
                        rows.append(vec)
            rank = sympy.Matrix(rows).rank() if rows else 0
            table[(v, w)] = len(basis) - rank
    return table


def _inverse_fractions(cartan):
    from fractions import Fraction
    inv = sympy.Matrix(cartan).inv()
    n = len(cartan)
    return [[Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n)] for i in range(n)]


def kostant_full_character(key, lam):
    """Every weight of V(lam) with its multiplicity, via Kostant's formula on a bounding box."""
    from itertools import product as iproduct

    cartan = CARTAN[key]
    n = len(cartan)
    inv = _inverse_fractions(cartan)
    rc = [sum(lam[i] * inv[i][j] for i in range(n)) for j in range(n)]
    bound = int(2 * max(rc, default=0)) + 1
    cands = []
    for c in iproduct(range(bound + 1), repeat=n):
        w = tuple(lam[j] - sum(c[i] * cartan[i][j] for i in range(n)) for j in range(n))
        cands.append(w)
    mults = kostant_multiplicities(key, lam, cands)
    return {w: m for w, m in mults.items() if m}


def convolve(a, b):
    out = Counter()
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            out[tuple(x + y for x, y in zip(w1, w2))] += m1 * m2
    return {w: m for w, m in out.items() if m}


def irreducible_multiplicity(key, mu, full):
    """Multiplicity of V(mu) in a module with weight diagram ``full`` (Weyl alternating sum)."""
    n = len(CARTAN[key])
    mr = tuple(x + 1 for x in mu)
    total = 0
    for M, sign in _weyl_group(CARTAN[key]):
        w = tuple(x - 1 for x in _apply_row(M, mr))
        total += sign * full.get(w, 0)
    return total


def psi_order_brute(psi_roots, lam, mu, max_total):
    """All coefficient sums n with mu - lam = sum n_b b, searching every n with |n| <= max_total."""
    from itertools import product as iproduct

    diff = tuple(b - a for a, b in zip(lam, mu))
    sums = set()
    for n in iproduct(range(max_total + 1), repeat=len(psi_roots)):
        if sum(n) > max_total:
            continue
        w = tuple(sum(c * r[j] for c, r in zip(n, psi_roots)) for j in range(len(lam)))
        if w == diff:
            sums.add(sum(n))
    return sums


def roots_maximising(all_roots, pairing):
    top = max(pairing(a) for a in all_roots)
    return {a for a in all_roots if pairing(a) == top}
