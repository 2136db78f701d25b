"""Independent sympy computation of the frozen values used by the C++ tests.

Run: python3 tests/oracles/oracle.py
Nothing here shares code with the C++ implementation; it rebuilds every object
from scratch with sympy matrices and nullspaces.
"""
from itertools import combinations

import sympy as sp

R = sp.Rational


def E(k, l):
    m = sp.zeros(3, 3)
    m[k - 1, l - 1] = 1
    return m


sigma = [2 * E(1, 1), E(1, 2) + E(2, 1), E(1, 3) + 2 * E(2, 2) + E(3, 1),
         E(2, 3) + E(3, 2), 2 * E(3, 3)]
delta = sp.diag(2, 0, -2)
nup = E(1, 2) + E(2, 3)
num = E(2, 1) + E(3, 2)

# Coordinates of a symmetric matrix in V in the sigma basis, via a linear solve.
S = sp.Matrix([[s[i, j] for s in sigma] for i in range(3) for j in range(3)])


def coords(m):
    flat = sp.Matrix([m[i, j] for i in range(3) for j in range(3)])
    sol, params = S.gauss_jordan_solve(flat)
    assert not params
    return sol


def rho(xi):
    return sp.Matrix.hstack(*[coords(xi * s + s * xi.T) for s in sigma])


def act(h):
    return sp.Matrix.hstack(*[coords(h * s * h.T) for s in sigma])


pairs = list(combinations(range(5), 2))


def wedge(u, v):
    return sp.Matrix([u[i] * v[j] - u[j] * v[i] for i, j in pairs])


def e(i, n=5):
    v = sp.zeros(n, 1)
    v[i] = 1
    return v


def ind_alg(x):
    n = x.shape[0]
    return sp.Matrix.hstack(*[wedge(x * e(i, n), e(j, n)) + wedge(e(i, n), x * e(j, n))
                              for i, j in combinations(range(n), 2)])


def ind_grp(g):
    n = g.shape[0]
    return sp.Matrix.hstack(*[wedge(g * e(i, n), g * e(j, n)) for i, j in combinations(range(n), 2)])


def pidx(i, j):
    return pairs.index((i - 1, j - 1))


def we(i, j):
    return e(pidx(i, j), 10)


W = sp.Matrix.hstack(we(1, 4) - we(2, 3), we(1, 5) - we(2, 4), we(2, 5) - we(3, 4))
gens = [rho(delta), rho(nup), rho(num)]
print("rho(delta) =", list(gens[0].diagonal()))
print("rho(nu+) =", gens[1].tolist())
print("rho(nu-) =", gens[2].tolist())
print("rank rho(nu+) =", gens[1].rank(), " kernel", [list(v) for v in gens[1].nullspace()])
print("[rho nu+, rho nu-] == rho(delta)/2:", gens[1] * gens[2] - gens[2] * gens[1] == gens[0] / 2)
print("charpoly rho(delta):", sp.factor(gens[0].charpoly().as_expr()))


def rank(m):
    return m.rank()


def invariant(m, sub):
    return rank(sp.Matrix.hstack(sub, m * sub)) == rank(sub)


print("W invariant:", [invariant(ind_alg(g), W) for g in gens])


def closure(seed, mats):
    cur = seed
    while True:
        nxt = sp.Matrix.hstack(cur, *[m * cur for m in mats])
        basis = sp.Matrix.hstack(*nxt.columnspace())
        if basis.shape[1] == cur.shape[1]:
            return basis
        cur = basis


igens = [ind_alg(g) for g in gens]
Wp = closure(we(1, 2), igens)
print("dim W' =", Wp.shape[1], " dim W+W' =", rank(sp.Matrix.hstack(W, Wp)))


def commutant_dim(mats, n):
    X = sp.Matrix(n, n, lambda i, j: sp.Symbol(f"x{i}_{j}"))
    syms = list(X)
    eqs = []
    for m in mats:
        eqs += list(X * m - m * X)
    A = sp.Matrix([[sp.diff(q, s) for s in syms] for q in eqs]) if eqs else sp.zeros(1, n * n)
    return n * n - A.rank()


print("commutant V:", commutant_dim(gens, 5), " commutant wedge:", commutant_dim(igens, 10))


def stab_dim(sub):
    # x in gl5 with ind_alg(x) sub subset sub: ann(sub)^T ind_alg(x) sub = 0
    X = sp.Matrix(5, 5, lambda i, j: sp.Symbol(f"x{i}_{j}"))
    syms = list(X)
    ann = sp.Matrix.hstack(*sub.T.nullspace()).T
    eqs = list(ann * ind_alg(X) * sub)
    A = sp.Matrix([[sp.diff(q, s) for s in syms] for q in eqs])
    ns = A.nullspace()
    return len(ns), ns


d, ns = stab_dim(W)
span4 = sp.Matrix.hstack(*[sp.Matrix(list(m)) for m in [sp.eye(5)] + gens])
print("stab(W) dim", d, " equals span{I,gens}:",
      rank(sp.Matrix.hstack(span4, *ns)) == 4 == rank(span4))
dp, nsp = stab_dim(Wp)
print("stab(W') dim", dp, " contained in stab(W):",
      rank(sp.Matrix.hstack(span4, *nsp)) == 4)

# quotient V' with representatives p12,p13,p14,p15,p25,p35,p45
reps = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
Rm = sp.Matrix.hstack(*[we(i, j) for i, j in reps])
B = sp.Matrix.hstack(Rm, W).inv()


def q(v):
    return (B * v)[:7, :]


def quot(m):
    return sp.Matrix.hstack(*[q(m * Rm[:, k]) for k in range(7)])


qd = quot(ind_alg(gens[0]))
print("quotient delta:", qd.tolist())
print("p23 -> ", list(q(we(2, 3))), " p24 ->", list(q(we(2, 4))), " p34 ->", list(q(we(3, 4))))

# Lie algebras G and N (12-dim)
def make_algebra(extra):
    sc = [[sp.zeros(12, 1) for _ in range(12)] for _ in range(12)]
    for i in range(5):
        for j in range(5):
            if i != j:
                v = q(wedge(e(i), e(j)))
                for k in range(7):
                    sc[i][j][5 + k] = v[k]
    for (i, j, vec) in extra:
        sc[i][j] = vec
        sc[j][i] = -vec
    return sc


def br(sc, x, y):
    out = sp.zeros(12, 1)
    for i in range(12):
        if x[i] == 0:
            continue
        for j in range(12):
            if y[j] != 0:
                out += x[i] * y[j] * sc[i][j]
    return out


def jacobi_viol(sc):
    bad = []
    for i, j, k in combinations(range(12), 3):
        ei, ej, ek = e(i, 12), e(j, 12), e(k, 12)
        s = br(sc, ei, br(sc, ej, ek)) + br(sc, ej, br(sc, ek, ei)) + br(sc, ek, br(sc, ei, ej))
        if s != sp.zeros(12, 1):
            bad.append((i, j, k))
    return bad


def span_cols(vs, n=12):
    vs = [v for v in vs if v != sp.zeros(n, 1)]
    if not vs:
        return sp.zeros(n, 0)
    return sp.Matrix.hstack(*sp.Matrix.hstack(*vs).columnspace())


def lcs(sc):
    cur = sp.eye(12)
    dims = [12]
    while cur.shape[1] > 0:
        cur = span_cols([br(sc, e(i, 12), cur[:, k]) for i in range(12) for k in range(cur.shape[1])])
        dims.append(cur.shape[1])
        if len(dims) > 13:
            break
    return dims


def center_dim(sc):
    A = sp.Matrix.vstack(*[sp.Matrix.hstack(*[br(sc, e(i, 12), e(j, 12)) for i in range(12)]) for j in range(12)])
    return 12 - A.rank()


def der(sc, n=12, image_ann=None):
    D = sp.Matrix(n, n, lambda i, j: sp.Symbol(f"d{i}_{j}"))
    syms = list(D)
    eqs = []
    for i, j in combinations(range(n), 2):
        ei, ej = e(i, n), e(j, n)
        eqs += list(D * br_n(sc, ei, ej, n) - br_n(sc, D * ei, ej, n) - br_n(sc, ei, D * ej, n))
    if image_ann is not None:
        eqs += list(image_ann * D)
    eqs = [x for x in eqs if x != 0]
    if not eqs:
        return [sp.Matrix(list(sp.eye(n)[k, :])) for k in range(0)] or n * n, None
    A = sp.Matrix([[sp.diff(x, s) for s in syms] for x in eqs])
    return n * n - A.rank(), A


def br_n(sc, x, y, n):
    out = sp.zeros(n, 1)
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] != 0:
                out += x[i] * y[j] * sc[i][j]
    return out


G = make_algebra([])
print("G jacobi violations:", len(jacobi_viol(G)), " lcs", lcs(G), " center", center_dim(G))
print("G [s1,s4]-[s2,s3] =", list(br(G, e(0, 12), e(3, 12)) - br(G, e(1, 12), e(2, 12))))
pdef = sp.zeros(12, 1)
pdef[6] = 1
pdef[11] = 1
N = make_algebra([(0, 5, pdef)])
print("N jacobi violations:", len(jacobi_viol(N)), " lcs", lcs(N), " center", center_dim(N))
mut = make_algebra([(0, 5, pdef), (1, 5, e(6, 12))])
mv = jacobi_viol(mut)
print("mutated N violations:", len(mv), mv[:5])
p15 = e(8, 12)
print("N(p15) jacobi:", len(jacobi_viol(make_algebra([(0, 5, p15)]))))

dG, _ = der(G)
dN, _ = der(N)
print("dim der G", dG, " dim der N", dN)
annVp = sp.Matrix.hstack(*[e(k, 12) for k in range(5)]).T  # kills V' image
print("shear G (C=V')", der(G, image_ann=annVp)[0])
annL = sp.Matrix.hstack(*[e(k, 12) for k in range(6)]).T  # image in L = span(p13..p45)
print("shear N (C=L)", der(N, image_ann=annL)[0])

# Heisenberg and abelian
H3 = [[sp.zeros(3, 1) for _ in range(3)] for _ in range(3)]
H3[0][1] = e(2, 3)
H3[1][0] = -e(2, 3)
print("der Heisenberg3:", der(H3, n=3)[0])

# infinitesimal line stabilizer of p in V'
qa = [quot(m) for m in igens]
pairs7 = list(combinations(range(7), 2))


def wedge7(u, v):
    return sp.Matrix([u[i] * v[j] - u[j] * v[i] for i, j in pairs7])


def inf_stab(p):
    A = sp.Matrix.hstack(*[wedge7(m * p, p) for m in qa])
    return 3 - A.rank()


pv = sp.Matrix([0, 1, 0, 0, 0, 0, 1])
print("inf stab default p:", inf_stab(pv), " p12:", inf_stab(e(0, 7)), " p15:", inf_stab(e(3, 7)))

# ind action of nu+ on s1^s5 - s2^s4
v = we(1, 5) - we(2, 4)
print("ind(nu+)(s1^s5 - s2^s4) =", list(ind_alg(gens[1]) * v))


def sym2(a, b, c, d):
    return sp.Matrix([[a * a, a * b, b * b / 2], [2 * a * c, a * d + b * c, b * d], [2 * c * c, 2 * c * d, d * d]])


hd = act(sym2(2, 0, 0, R(1, 2)))
print("action diag(2,1/2) on V:", list(hd.diagonal()), " fixed dim", (hd - sp.eye(5)).nullspace())
rot = sym2(R(3, 5), R(-4, 5), R(4, 5), R(3, 5))
ar = act(rot)
print("rotation fixed space:", [list(x) for x in (ar - sp.eye(5)).nullspace()])
arq = quot(ind_grp(ar))
print("rotation on V' charpoly:", sp.factor(arq.charpoly().as_expr()))
print("E11 rho error check:", [list(E(1, 1) * s + s * E(1, 1).T) for s in sigma][2])

mut3 = make_algebra([(0, 5, pdef), (2, 5, e(6, 12))])
m3 = jacobi_viol(mut3)
print("mutation [s3,p12]=p13 violations:", len(m3), m3[:3])

# quarter turn: an involution on V', eigenspace dims for +1 and -1
qt = quot(ind_grp(act(sym2(0, -1, 1, 0))))
print("quarter turn on V': dim(+1)", len((qt - sp.eye(7)).nullspace()), " dim(-1)", len((qt + sp.eye(7)).nullspace()))

# non-nilpotent derivation of N: 1/2 on V, sigma3 -> sigma3/2 + p12/2, p13 -> 3/2 p13 + 1/2 p45, 1 elsewhere on V'
Dw = sp.zeros(12, 12)
for k in range(5):
    Dw[k, k] = R(1, 2)
Dw[5, 2] = R(1, 2)
for k in range(5, 12):
    Dw[k, k] = 1
Dw[6, 6] = R(3, 2)
Dw[11, 6] = R(1, 2)
lhs_ok = all(Dw * br(N, e(i, 12), e(j, 12)) == br(N, Dw * e(i, 12), e(j, 12)) + br(N, e(i, 12), Dw * e(j, 12))
             for i, j in combinations(range(12), 2))
print("witness is a derivation of N:", lhs_ok, " nilpotent:", (Dw ** 12).is_zero_matrix)
