"""Independent reference computations used to derive frozen test values.

Everything here works on plain dicts of Fractions and expands each identity
term by term over explicit basis elements. Nothing is imported from the
package, so agreement with it is evidence rather than tautology.

    vector  {label: Fraction}
    table   {(a, b): vector}   product of basis elements
    op      {label: vector}    image of each basis element
    tensor  {(a, b): Fraction} or {(a, b, c): Fraction}
"""

from fractions import Fraction
from itertools import product

F = Fraction


def vec(**kw):
    return {k: F(v) for k, v in kw.items() if v}


def clean(v):
    return {k: c for k, c in v.items() if c}


def add(*vs):
    out = {}
    for v in vs:
        for k, c in v.items():
            out[k] = out.get(k, 0) + c
    return clean(out)


def scale(s, v):
    return clean({k: F(s) * c for k, c in v.items()})


def sub(u, v):
    return add(u, scale(-1, v))


def mul(table, u, v):
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            out = add(out, scale(ca * cb, table.get((a, b), {})))
    return out


def apply(op, v):
    return add(*[scale(c, op.get(k, {})) for k, c in v.items()]) if v else {}


def basis_vec(a):
    return {a: F(1)}


def antisym(entries):
    """Complete {(a, b): v} so that (b, a) -> -v."""
    out = dict(entries)
    for (a, b), v in entries.items():
        out[(b, a)] = scale(-1, v)
    return out


# -- identities -------------------------------------------------------------------


def jacobi(basis, br, x, y, z):
    return add(mul(br, x, mul(br, y, z)), mul(br, y, mul(br, z, x)), mul(br, z, mul(br, x, y)))


def jacobi_failures(basis, br):
    bad = []
    for a, b, c in product(basis, repeat=3):
        if jacobi(basis, br, basis_vec(a), basis_vec(b), basis_vec(c)):
            bad.append((a, b, c))
    return bad


def rb_defect(table, P, lam, x, y):
    """P(x)P(y) - P(P(x)y + xP(y) + lam xy)."""
    px, py = apply(P, x), apply(P, y)
    inner = add(mul(table, px, y), mul(table, x, py), scale(lam, mul(table, x, y)))
    return sub(mul(table, px, py), apply(P, inner))


def is_rb(basis, table, P, lam):
    return all(not rb_defect(table, P, lam, basis_vec(a), basis_vec(b)) for a, b in product(basis, repeat=2))


def prelie_defect(circ, x, y, z):
    """(x,y,z) - (y,x,z) with (x,y,z) = (xy)z - x(yz)."""
    def assoc(u, v, w):
        return sub(mul(circ, mul(circ, u, v), w), mul(circ, u, mul(circ, v, w)))
    return sub(assoc(x, y, z), assoc(y, x, z))


def is_prelie(basis, circ):
    return all(not prelie_defect(circ, basis_vec(a), basis_vec(b), basis_vec(c))
               for a, b, c in product(basis, repeat=3))


def induced_prelie(basis, br, P):
    return {(a, b): mul(br, apply(P, basis_vec(a)), basis_vec(b)) for a, b in product(basis, repeat=2)}


# -- small exact matrix helpers (lists of lists) ----------------------------------------


def mat_inverse(m):
    n = len(m)
    a = [[F(x) for x in row] + [F(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def form_adjoint(basis, B, P):
    """Phat with B(Phat u, v) = B(u, P v): solve column by column."""
    n = len(basis)
    Binv = mat_inverse(B)
    out = {}
    for j, u in enumerate(basis):
        # B(Phat e_j, e_k) = B(e_j, P e_k) = sum_m B[j][m] P[k]_m
        rhs = [sum(B[j][basis.index(m)] * c for m, c in P.get(v, {}).items()) for v in basis]
        # B(w, e_k) = sum_i w_i B[i][k], so w = rhs * B^{-1}
        w = [sum(rhs[k] * Binv[k][i] for k in range(n)) for i in range(n)]
        out[u] = clean({basis[i]: w[i] for i in range(n)})
    return out


def compose(A, B_):
    """(A o B)(e) = A(B(e))."""
    return {k: apply(A, v) for k, v in B_.items()}


# -- tensors and the classical Yang-Baxter equation ----------------------------------------


def coadjoint_double(basis, br):
    """Bracket on g + g*: [x, a*] = ad*(x) a*, with <ad*(x) a*, y> = -<a*, [x, y]>."""
    star = [b + "*" for b in basis]
    table = {}
    for a, b in product(basis, repeat=2):
        table[(a, b)] = dict(br.get((a, b), {}))
    for x in basis:
        for a in basis:
            v = {}
            for y in basis:
                c = br.get((x, y), {}).get(a, 0)
                if c:
                    v[y + "*"] = -c
            table[(x, a + "*")] = clean(v)
            table[(a + "*", x)] = scale(-1, clean(v))
    for a, b in product(star, repeat=2):
        table[(a, b)] = {}
    return basis + star, table


def embed_operator(basis, T):
    """r = sum_j T(e_j) (x) e_j* - e_j* (x) T(e_j) on g + g*."""
    r = {}
    for j in basis:
        for k, c in T.get(j, {}).items():
            r[(k, j + "*")] = r.get((k, j + "*"), 0) + c
            r[(j + "*", k)] = r.get((j + "*", k), 0) - c
    return {k: v for k, v in r.items() if v}


def cybe(br, r):
    """[r12, r13] + [r12, r23] + [r13, r23] as {(a, b, c): coeff}."""
    out = {}

    def put(a, b, c, s):
        out[(a, b, c)] = out.get((a, b, c), 0) + s

    terms = list(r.items())
    for (a1, b1), c1 in terms:
        for (a2, b2), c2 in terms:
            for k, v in br.get((a1, a2), {}).items():
                put(k, b1, b2, c1 * c2 * v)
            for k, v in br.get((b1, a2), {}).items():
                put(a1, k, b2, c1 * c2 * v)
            for k, v in br.get((b1, b2), {}).items():
                put(a1, a2, k, c1 * c2 * v)
    return {k: v for k, v in out.items() if v}


def coboundary(basis, br, r):
    """delta_r(x) = sum [x, a] (x) b + a (x) [x, b] for r = sum a (x) b."""
    out = {}
    for x in basis:
        t = {}
        for (a, b), c in r.items():
            for k, v in br.get((x, a), {}).items():
                t[(k, b)] = t.get((k, b), 0) + c * v
            for k, v in br.get((x, b), {}).items():
                t[(a, k)] = t.get((a, k), 0) + c * v
        out[x] = {k: v for k, v in t.items() if v}
    return out


def op_tensor_left(A, r):
    """(A (x) id) r."""
    out = {}
    for (a, b), c in r.items():
        for k, v in A.get(a, {}).items():
            out[(k, b)] = out.get((k, b), 0) + c * v
    return {k: v for k, v in out.items() if v}


def op_tensor_right(A, r):
    out = {}
    for (a, b), c in r.items():
        for k, v in A.get(b, {}).items():
            out[(a, k)] = out.get((a, k), 0) + c * v
    return {k: v for k, v in out.items() if v}


def tsub(s, t):
    out = dict(s)
    for k, v in t.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def block_operator(basis, P, Q):
    """P + Q* on g + g*: <Q* a*, y> = <a*, Q y>."""
    out = {x: dict(P.get(x, {})) for x in basis}
    for a in basis:
        out[a + "*"] = clean({y + "*": Q.get(y, {}).get(a, 0) for y in basis})
    return out
