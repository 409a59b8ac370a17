#!/usr/bin/env python3
"""Regenerate data/groups.txt, the catalog of all groups of order 48, 60, 72, 84.

The catalog is constructed from scratch out of elementary building blocks:

  * order 48:  P16 x| Z3 for the 14 groups P16 of order 16 (covers every group
    with a normal Sylow 2-subgroup), plus central Z2-extensions of each of the
    15 groups of order 24 (a group of order 48 without a normal Sylow
    2-subgroup has a central involution whose quotient has order 24, so this
    family covers the rest).
  * order 60:  Z5 x| H for the 5 groups H of order 12, plus A5.  A group of
    order 60 is A5 or has a normal Sylow 5-subgroup.
  * order 72:  P9 x| P8 over all actions (covers normal Sylow 3), plus
    Z3-extensions of each group of order 24 with both Z3-actions (a group of
    order 72 with four Sylow 3-subgroups has a normal Z3).
  * order 84:  Z7 x| H for the 5 groups H of order 12 (n_7 = 1 always).

Extensions with kernel Z_p are enumerated through explicit normalized
2-cocycles: the cocycle identity is solved as a linear system over GF(p) and
one extension is built per coboundary class.  The resulting pool is reduced up
to isomorphism; the run aborts unless the counts come out as 52, 13, 50, 15,
which together with the pairwise non-isomorphism check certifies completeness.

Output format, one record per line:
    group order=<n> name=<name> degree=<d> gens=<cycles>;<cycles>;...
with 1-based disjoint cycle notation.  Usage:  python3 tools/gen_catalog.py [out]
"""

import itertools
import random
import sys

random.seed(20260823)

# ---------------------------------------------------------------- perm basics

def pmul(p, q):
    # (p*q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(p)))

def pinv(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)

def pclosure(gens):
    if not gens:
        return [tuple(range(1))]
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    order = [ident]
    i = 0
    while i < len(order):
        g = order[i]
        i += 1
        for h in gens:
            x = pmul(g, h)
            if x not in seen:
                seen.add(x)
                order.append(x)
    return order

# ------------------------------------------------------------- table machinery
# A finite group is represented by its multiplication table: elements 0..n-1,
# identity 0, table[a][b] = a*b, inv[a].

class Tab:
    def __init__(self, table, name=""):
        self.t = table
        self.n = len(table)
        self.name = name
        self.inv = [0] * self.n
        for a in range(self.n):
            for b in range(self.n):
                if table[a][b] == 0:
                    self.inv[a] = b
                    break
        self._orders = None
        self._fp = None

    def order_of(self, a):
        k, x = 1, a
        while x != 0:
            x = self.t[x][a]
            k += 1
        return k

    def orders(self):
        if self._orders is None:
            self._orders = [self.order_of(a) for a in range(self.n)]
        return self._orders

    def close(self, elts):
        seen = {0} | set(elts)
        frontier = list(seen)
        while frontier:
            nf = []
            for a in frontier:
                for b in list(seen):
                    for c in (self.t[a][b], self.t[b][a]):
                        if c not in seen:
                            seen.add(c)
                            nf.append(c)
            frontier = nf
        return frozenset(seen)

    def generated(self, gens):
        return self.close(gens)

    def center_size(self):
        c = 0
        for a in range(self.n):
            if all(self.t[a][b] == self.t[b][a] for b in range(self.n)):
                c += 1
        return c

    def derived(self):
        comms = set()
        for a in range(self.n):
            for b in range(self.n):
                comms.add(self.t[self.t[a][b]][self.inv[self.t[b][a]]])
        return self.close(comms)

    def conj_class_sizes(self):
        left = set(range(self.n))
        sizes = []
        while left:
            a = next(iter(left))
            cls = set()
            for g in range(self.n):
                cls.add(self.t[self.t[g][a]][self.inv[g]])
            left -= cls
            sizes.append(len(cls))
        return tuple(sorted(sizes))

    def normalizer(self, sub):
        sub = frozenset(sub)
        out = []
        for g in range(self.n):
            gi = self.inv[g]
            if all(self.t[self.t[g][s]][gi] in sub for s in sub):
                out.append(g)
        return out

    def sylow_count(self, p):
        pk = 1
        while self.n % (pk * p) == 0:
            pk *= p
        if pk == 1:
            return 0
        # find a Sylow by normalizer climbing
        ords = self.orders()
        seed = next(a for a in range(self.n) if ords[a] == p)
        P = self.close([seed])
        while len(P) < pk:
            N = frozenset(self.normalizer(P))
            # pick a p-element of N outside P to enlarge
            grew = False
            for g in N:
                if g not in P and ords[g] % p == 0 and ords[g] == p ** self._pval(ords[g], p):
                    cand = self.close(list(P) + [self._ppart(g, p)])
                    if len(cand) > len(P) and len(cand) % p == 0 and pk % len(cand) == 0:
                        P = cand
                        grew = True
                        break
            if not grew:
                # fall back: brute force over all p-elements
                for g in range(self.n):
                    og = ords[g]
                    if g not in P and og == p ** self._pval(og, p):
                        cand = self.close(list(P) + [g])
                        if pk % len(cand) == 0 and len(cand) > len(P):
                            P = cand
                            grew = True
                            break
            assert grew, "sylow climb stuck"
        return self.n // len(self.normalizer(P))

    def _pval(self, m, p):
        v = 0
        while m % p == 0:
            m //= p
            v += 1
        return v

    def _ppart(self, g, p):
        # power of g that is a p-element
        og = self.order_of(g)
        m = og
        while m % p == 0:
            m //= p
        x = 0  # identity
        for _ in range(m):
            x = self.t[x][g]
        return x if x != 0 else g

    def abelian_invariant_histogram(self):
        d = self.derived()
        # order histogram of G/G'
        reps = {}
        idx = {}
        for a in range(self.n):
            key = frozenset(self.t[a][x] for x in d)
            idx.setdefault(key, len(idx))
        m = len(idx)
        qt = {}
        keys = {}
        for a in range(self.n):
            keys[a] = frozenset(self.t[a][x] for x in d)
        # order of each coset in quotient
        hist = {}
        done = set()
        for a in range(self.n):
            k = keys[a]
            if k in done:
                continue
            done.add(k)
            o, x = 1, a
            while keys[x] != keys[0]:
                x = self.t[x][a]
                o += 1
            hist[o] = hist.get(o, 0) + 1
        return tuple(sorted(hist.items()))

    def fingerprint(self):
        if self._fp is None:
            oh = {}
            for o in self.orders():
                oh[o] = oh.get(o, 0) + 1
            syl = tuple(self.sylow_count(p) for p in (2, 3, 5, 7) if self.n % p == 0)
            self._fp = (self.n, tuple(sorted(oh.items())), self.center_size(),
                        len(self.derived()), self.conj_class_sizes(), syl,
                        self.abelian_invariant_histogram())
        return self._fp

    def min_gens(self):
        if getattr(self, "_mingens", None) is None:
            ords = self.orders()
            elts = sorted(range(1, self.n), key=lambda a: -ords[a])
            gens = []
            cur = frozenset([0])
            for a in elts:
                if a not in cur:
                    gens.append(a)
                    cur = self.close(gens)
                    if len(cur) == self.n:
                        break
            self._mingens = gens
        return self._mingens

def tab_from_perm(gens):
    elems = pclosure(list(gens))
    index = {g: i for i, g in enumerate(elems)}
    ident = tuple(range(len(gens[0])))
    # reorder so identity is 0
    if index[ident] != 0:
        elems[0], elems[index[ident]] = elems[index[ident]], elems[0]
        index = {g: i for i, g in enumerate(elems)}
    table = [[index[pmul(a, b)] for b in elems] for a in elems]
    t = Tab(table)
    t.perm_elems = elems
    t.perm_gens = [index[g] for g in gens]
    return t

# ------------------------------------------------------------------ iso tests

def _extend_map(A, B, pairs):
    """Try to extend generator image pairs to a homomorphism on <gens>.
    Returns dict a->b or None on inconsistency.  Only word-consistency here;
    callers must do the full table check at leaves."""
    f = {0: 0}
    frontier = [0]
    gens = [p[0] for p in pairs]
    img = {a: b for a, b in pairs}
    for a, b in pairs:
        if a in f and f[a] != b:
            return None
        f[a] = b
    frontier = list(f.keys())
    while frontier:
        nf = []
        for a in frontier:
            for g in gens:
                c = A.t[a][g]
                fc = B.t[f[a]][img[g]]
                if c in f:
                    if f[c] != fc:
                        return None
                else:
                    f[c] = fc
                    nf.append(c)
        frontier = nf
    return f

def isomorphic(A, B):
    if A.n != B.n:
        return False
    if A.fingerprint() != B.fingerprint():
        return False
    gens = A.min_gens()
    aords = A.orders()
    bords = B.orders()
    # conjugacy class reps of B for the first generator image
    first_cands = []
    seen = set()
    for b in range(B.n):
        if bords[b] != aords[gens[0]] or b in seen:
            continue
        cls = set()
        for g in range(B.n):
            cls.add(B.t[B.t[g][b]][B.inv[g]])
        seen |= cls
        first_cands.append(b)

    def bt(i, pairs):
        if i == len(gens):
            f = _extend_map(A, B, pairs)
            if f is None or len(f) != A.n or len(set(f.values())) != A.n:
                return False
            # full verification
            for a in range(A.n):
                fa = f[a]
                ta = A.t[a]
                for b in range(A.n):
                    if B.t[fa][f[b]] != f[ta[b]]:
                        return False
            return True
        cands = first_cands if i == 0 else [b for b in range(B.n) if bords[b] == aords[gens[i]]]
        for b in cands:
            np = pairs + [(gens[i], b)]
            if _extend_map(A, B, np) is not None:
                if bt(i + 1, np):
                    return True
        return False

    return bt(0, [])

def automorphisms(T):
    """All automorphisms of T as element-index tuples."""
    gens = T.min_gens()
    ords = T.orders()
    out = []

    def bt(i, pairs):
        if i == len(gens):
            f = _extend_map(T, T, pairs)
            if f is None or len(f) != T.n or len(set(f.values())) != T.n:
                return
            for a in range(T.n):
                fa = f[a]
                for b in range(T.n):
                    if T.t[fa][f[b]] != f[T.t[a][b]]:
                        return
            out.append(tuple(f[a] for a in range(T.n)))
            return
        for b in range(T.n):
            if ords[b] != ords[gens[i]]:
                continue
            np = pairs + [(gens[i], b)]
            if _extend_map(T, T, np) is not None:
                bt(i + 1, np)

    bt(0, [])
    return out

def homs_to(T, S):
    """All homomorphisms T -> S (S given as Tab), as full maps."""
    gens = T.min_gens()
    tords = T.orders()
    sords = S.orders()
    out = []

    def bt(i, pairs):
        if i == len(gens):
            f = _extend_map(T, S, pairs)
            if f is None or len(f) != T.n:
                return
            for a in range(T.n):
                fa = f[a]
                for b in range(T.n):
                    if S.t[fa][f[b]] != f[T.t[a][b]]:
                        return
            out.append(f)
            return
        for b in range(S.n):
            if tords[gens[i]] % sords[b] != 0:
                continue
            np = pairs + [(gens[i], b)]
            if _extend_map(T, S, np) is not None:
                bt(i + 1, np)

    bt(0, [])
    return out

# -------------------------------------------------------------- constructions

def direct(A, B, name=""):
    n, m = A.n, B.n
    table = [[0] * (n * m) for _ in range(n * m)]
    for a1 in range(n):
        for b1 in range(m):
            for a2 in range(n):
                for b2 in range(m):
                    table[a1 * m + b1][a2 * m + b2] = A.t[a1][a2] * m + B.t[b1][b2]
    return Tab(table, name)

def semidirect(N, H, act, name=""):
    """act: h-index -> automorphism tuple of N. Elements (n, h)."""
    n, m = N.n, H.n
    table = [[0] * (n * m) for _ in range(n * m)]
    for n1 in range(n):
        for h1 in range(m):
            a1 = act[h1]
            for n2 in range(n):
                for h2 in range(m):
                    table[n1 * m + h1][n2 * m + h2] = N.t[n1][a1[n2]] * m + H.t[h1][h2]
    return Tab(table, name)

def cyclic(k, name=None):
    table = [[(a + b) % k for b in range(k)] for a in range(k)]
    return Tab(table, name or ("Z%d" % k))

def from_perm_gens(gens, name=""):
    T = tab_from_perm([tuple(g) for g in gens])
    T.name = name
    return T

def cycp(n, *cycles):
    """Permutation of degree n from 0-based cycles."""
    p = list(range(n))
    for cyc in cycles:
        for i in range(len(cyc)):
            p[cyc[i]] = cyc[(i + 1) % len(cyc)]
    return tuple(p)

# --------------------------------------------------------- cocycle extensions

def z2_cohomology_extensions(Q, p, actions=None):
    """All extensions 1 -> Z_p -> E -> Q -> 1, one per cocycle class per action.
    actions: list of maps Q-index -> unit mod p (the module action); default
    enumerates all homomorphisms Q -> Aut(Z_p) of order dividing 2 when p odd,
    or just the trivial one for p = 2."""
    import numpy as np
    n = Q.n
    exts = []
    if actions is None:
        if p == 2:
            actions = [[1] * n]
        else:
            actions = []
            # homs Q -> {1, -1}
            seenmaps = set()
            for f in homs_to(Q, cyclic(2)):
                m = tuple(1 if f[a] == 0 else p - 1 for a in range(n))
                if m not in seenmaps:
                    seenmaps.add(m)
                    actions.append(list(m))
    for act in actions:
        # variables f(a,b) for a,b in 1..n-1 (normalized); index (a-1)*(n-1)+(b-1)
        nv = (n - 1) * (n - 1)

        def vid(a, b):
            return (a - 1) * (n - 1) + (b - 1)

        rowset = set()
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    # act[a]*f(b,c) - f(ab,c) + f(a,bc) - f(a,b) = 0
                    r = {}
                    def add(k, v):
                        if k is not None:
                            r[k] = (r.get(k, 0) + v) % p
                    ab = Q.t[a][b]
                    bc = Q.t[b][c]
                    add(vid(b, c) if b and c else None, act[a])
                    add(vid(ab, c) if ab and c else None, p - 1)
                    add(vid(a, bc) if a and bc else None, 1)
                    add(vid(a, b) if a and b else None, p - 1)
                    r = tuple(sorted((k, v % p) for k, v in r.items() if v % p))
                    if r:
                        rowset.add(r)
        Z = gf_nullspace_sparse(rowset, nv, p)
        # coboundaries
        Bgen = np.zeros((n - 1, nv), dtype=np.int64)
        for cidx in range(1, n):
            # c supported on one element: c(x) = delta_{x==cidx}
            for a in range(n):
                for b in range(n):
                    if a and b:
                        v = 0
                        if b == cidx:
                            v += act[a]
                        if Q.t[a][b] == cidx:
                            v -= 1
                        if a == cidx:
                            v += 1
                        if v % p:
                            Bgen[cidx - 1, vid(a, b)] = v % p
        reps = gf_quotient_reps(Z, Bgen, p)
        for fvec in reps:
            # build extension table on pairs (k, q) -> k*n + q ... careful p*n
            N2 = p * n
            table = [[0] * N2 for _ in range(N2)]
            def fval(a, b):
                if a == 0 or b == 0:
                    return 0
                return int(fvec[vid(a, b)]) % p
            for k1 in range(p):
                for q1 in range(n):
                    for k2 in range(p):
                        for q2 in range(n):
                            k = (k1 + act[q1] * k2 + fval(q1, q2)) % p
                            table[k1 * n + q1][k2 * n + q2] = k * n + Q.t[q1][q2]
            E = Tab(table)
            exts.append(E)
    return exts

def gf_rref(M, p):
    import numpy as np
    M = M.copy() % p
    rows, cols = M.shape
    r = 0
    pivots = []
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if M[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        for i in range(rows):
            if i != r and M[i, c] % p:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M[:r], pivots

def gf_nullspace_sparse(rows, nv, p):
    """Nullspace basis of a sparse system (rows of (index, coeff) pairs)."""
    import numpy as np
    piv = {}  # pivot column -> normalized numpy row (pivot entry = 1)
    for rd in rows:
        v = np.zeros(nv, dtype=np.int64)
        for k, c in rd:
            v[k] = c % p
        while True:
            nz = np.nonzero(v)[0]
            if len(nz) == 0:
                break
            c = int(nz[0])
            if c in piv:
                v = (v - v[c] * piv[c]) % p
            else:
                v = (v * pow(int(v[c]), p - 2, p)) % p
                piv[c] = v
                break
    # back substitution to reduced echelon form
    cols = sorted(piv)
    for i in range(len(cols) - 1, -1, -1):
        c = cols[i]
        r = piv[c]
        for c2 in cols[i + 1:]:
            if r[c2]:
                r = (r - r[c2] * piv[c2]) % p
        piv[c] = r
    pivset = set(cols)
    free = [c for c in range(nv) if c not in pivset]
    basis = []
    for fc in free:
        v = np.zeros(nv, dtype=np.int64)
        v[fc] = 1
        for c in cols:
            v[c] = (-piv[c][fc]) % p
        basis.append(v)
    return np.array(basis, dtype=np.int64) if basis else np.zeros((0, nv), dtype=np.int64)

def gf_quotient_reps(Z, B, p):
    """Coset representatives of rowspace(B) (intersected with rowspace(Z)) in
    rowspace(Z) over GF(p)."""
    import numpy as np
    if Z.shape[0] == 0:
        return [np.zeros(B.shape[1], dtype=np.int64)]
    RB, _ = gf_rref(B, p) if B.shape[0] else (np.zeros((0, Z.shape[1]), dtype=np.int64), [])
    # greedily extend a basis of B-space by Z-vectors; enumerate combos of the
    # complement
    cur = RB.copy()
    comp = []
    for v in Z:
        test = np.vstack([cur, v.reshape(1, -1)])
        R2, _ = gf_rref(test, p)
        if R2.shape[0] > cur.shape[0]:
            cur = R2
            comp.append(v)
    h = len(comp)
    assert h <= 8, "unexpectedly large H^2 dimension %d" % h
    out = []
    for coeffs in itertools.product(range(p), repeat=h):
        v = np.zeros(Z.shape[1], dtype=np.int64)
        for c, w in zip(coeffs, comp):
            v = (v + c * w) % p
        out.append(v)
    return out

# ------------------------------------------------------ base group inventories

def build_order8():
    Z8 = cyclic(8, "Z8")
    Z4xZ2 = direct(cyclic(4), cyclic(2), "Z4xZ2")
    Z2c = direct(direct(cyclic(2), cyclic(2)), cyclic(2), "Z2^3")
    D4 = from_perm_gens([cycp(4, (0, 1, 2, 3)), cycp(4, (1, 3))], "D4")
    # Q8 on the 8 unit quaternions {1,-1,i,-i,j,-j,k,-k}
    # unit quaternions encoded as (sign, axis): index = axis*2 + (sign<0)
    def qm(a, b):
        def dec(x):
            return (1 if x % 2 == 0 else -1, x // 2)
        def enc(s, ax):
            return ax * 2 + (0 if s == 1 else 1)
        sa, xa = dec(a)
        sb, xb = dec(b)
        mul = {
            (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
            (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
            (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
            (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
        }
        s, ax = mul[(xa, xb)]
        return enc(sa * sb * s, ax)
    Q8 = Tab([[qm(a, b) for b in range(8)] for a in range(8)], "Q8")
    return [Z8, Z4xZ2, Z2c, D4, Q8]

def build_order16():
    Z2 = cyclic(2)
    o8 = build_order8()
    Z8, Z4xZ2, Z2c3, D4, Q8 = o8
    out = []
    out.append(cyclic(16, "Z16"))
    out.append(direct(cyclic(8), Z2, "Z8xZ2"))
    out.append(direct(cyclic(4), cyclic(4), "Z4xZ4"))
    out.append(direct(Z4xZ2, Z2, "Z4xZ2^2"))
    out.append(direct(Z2c3, Z2, "Z2^4"))
    out.append(from_perm_gens([cycp(8, (0, 1, 2, 3, 4, 5, 6, 7)), cycp(8, (1, 7), (2, 6), (3, 5))], "D8"))
    # semidihedral: s r s = r^3
    out.append(from_perm_gens([cycp(8, (0, 1, 2, 3, 4, 5, 6, 7)), cycp(8, (1, 3), (2, 6), (5, 7))], "SD16"))
    # modular: s r s = r^5
    out.append(from_perm_gens([cycp(8, (0, 1, 2, 3, 4, 5, 6, 7)), cycp(8, (1, 5), (3, 7))], "M4(2)"))
    # generalized quaternion Q16: a^8 = 1, b^2 = a^4, b a b^-1 = a^-1
    elems = [(i, j) for j in range(2) for i in range(8)]  # a^i b^j
    idx = {e: k for k, e in enumerate(elems)}
    def dicmul(e1, e2):
        i1, j1 = e1
        i2, j2 = e2
        if j1 == 0:
            return ((i1 + i2) % 8, j2)
        if j2 == 0:
            return ((i1 - i2) % 8, 1)       # b a^i = a^-i b
        return ((i1 - i2 + 4) % 8, 0)       # b a^i b = a^{4-i}
    Q16 = Tab([[idx[dicmul(e1, e2)] for e2 in elems] for e1 in elems], "Q16")
    assert Q16.t[0][0] == 0
    out.append(Q16)
    out.append(direct(D4, Z2, "D4xZ2"))
    out.append(direct(Q8, Z2, "Q8xZ2"))
    # Z4 x| Z4: b a b^-1 = a^-1
    a4 = cyclic(4)
    inv4 = (0, 3, 2, 1)
    act = [tuple(range(4)), inv4, tuple(range(4)), inv4]
    out.append(semidirect(a4, cyclic(4), act, "Z4:Z4"))
    # (Z4xZ2) x| Z2 = Pauli group / central product D4 o Z4:
    # realize as <(1234), (13), i*I>-ish via explicit perms on 8 points:
    # D4 o Z4 = Q8 o Z4 has presentation a^4=1, b^2=a^2, bab^-1=a^-1 .. build
    # as central product: (Q8 x Z4)/<(-1, 2)>
    QZ = direct(Q8, cyclic(4))
    # find the central element (-1, 2): -1 is index 1 in Q8 encoding
    kill = 1 * 4 + 2
    out.append(central_quotient(QZ, kill, "D4oZ4"))
    # (Z2xZ2) x| Z4, Z4 swapping the factors
    V = direct(Z2, Z2)
    sw = (0, 2, 1, 3)
    act = [tuple(range(4)), sw, tuple(range(4)), sw]
    out.append(semidirect(V, cyclic(4), act, "Z2^2:Z4"))
    assert len(out) == 14
    # sanity: pairwise non-isomorphic
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            assert not isomorphic(out[i], out[j]), (out[i].name, out[j].name)
    return out

def central_quotient(T, zelt, name=""):
    """Quotient of T by the order-2 central subgroup {0, zelt}."""
    assert T.order_of(zelt) == 2
    assert all(T.t[zelt][b] == T.t[b][zelt] for b in range(T.n))
    key = {}
    reps = []
    for a in range(T.n):
        k = min(a, T.t[zelt][a])
        if k == a:
            key[a] = len(reps)
            reps.append(a)
    idx = {}
    for a in range(T.n):
        idx[a] = key[min(a, T.t[zelt][a])]
    table = [[idx[T.t[a][b]] for b in reps] for a in reps]
    return Tab(table, name)

def build_order12():
    Z2 = cyclic(2)
    out = []
    out.append(cyclic(12, "Z12"))
    out.append(direct(Z2, cyclic(6), "Z2xZ6"))
    out.append(from_perm_gens([cycp(4, (0, 1, 2)), cycp(4, (0, 1), (2, 3))], "A4"))
    out.append(from_perm_gens([cycp(6, (0, 1, 2, 3, 4, 5)), cycp(6, (1, 5), (2, 4))], "D6"))
    # dicyclic Dic3 = Z3 x| Z4 with inversion
    inv3 = (0, 2, 1)
    act = [tuple(range(3)), inv3, tuple(range(3)), inv3]
    out.append(semidirect(cyclic(3), cyclic(4), act, "Dic3"))
    return out

def build_order24():
    o8 = build_order8()
    Z3 = cyclic(3)
    pool = []
    for P in o8:
        pool.append(direct(P, Z3, P.name + "xZ3"))
    # P8 x| Z3 (nontrivial): only Q8 and Z2^3 have order-3 automorphisms
    for P in o8:
        auts = automorphisms(P)
        ords3 = [a for a in auts if aut_order(a, auts) == 3]
        done = set()
        for a in ords3:
            # dedup by cycle type of a on P
            ct = cycle_type(a)
            if ct in done:
                continue
            done.add(ct)
            act = action_from_aut(Z3, P, a)
            pool.append(semidirect(P, Z3, act, P.name + ":Z3"))
    # Z3 x| P8
    inv3 = (0, 2, 1)
    for P in o8:
        for f in homs_to(P, cyclic(2)):
            if all(f[a] == 0 for a in range(P.n)):
                continue  # trivial action: already in the direct-product list
            act = [tuple(range(3)) if f[a] == 0 else inv3 for a in range(P.n)]
            pool.append(semidirect(Z3, P, act, "Z3:" + P.name))
    # S4
    pool.append(from_perm_gens([cycp(4, (0, 1, 2, 3)), cycp(4, (0, 1))], "S4"))
    uniq = dedup(pool)
    assert len(uniq) == 15, "expected 15 groups of order 24, got %d" % len(uniq)
    return uniq

def aut_order(a, auts=None):
    k, x = 1, a
    ident = tuple(range(len(a)))
    while x != ident:
        x = pmul(x, a)
        k += 1
    return k

def cycle_type(p):
    seen = [False] * len(p)
    ct = []
    for i in range(len(p)):
        if not seen[i]:
            l, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                l += 1
            ct.append(l)
    return tuple(sorted(ct))

def action_from_aut(H, N, a):
    """H cyclic of order k, a an automorphism of N with a^k = 1: the action map."""
    acts = [tuple(range(N.n))]
    cur = tuple(range(N.n))
    for _ in range(H.n - 1):
        cur = pmul(a, cur)
        acts.append(cur)
    # H is cyclic with generator index 1
    out = []
    for h in range(H.n):
        # h = generator^e: e = h since cyclic table is addition
        out.append(acts[h % len(acts)])
    return out

def dedup(pool):
    uniq = []
    for T in pool:
        if not any(isomorphic(T, U) for U in uniq):
            uniq.append(T)
    return uniq

# --------------------------------------------------- order-specific assemblies

def conj_class_reps_of_order3(auts):
    """Conjugacy class representatives of order-3 elements in the group of
    automorphisms (closed under composition)."""
    ident = tuple(range(len(auts[0])))
    elems = set(auts)
    # generating set: greedy
    gens = []
    cur = {ident}
    for a in auts:
        if a not in cur:
            gens.append(a)
            cur = set(pclosure(gens))
            if len(cur) == len(elems):
                break
    reps = []
    left = set(a for a in auts if aut_order(a) == 3)
    while left:
        x = next(iter(left))
        orb = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g in gens:
                z = pmul(pmul(g, y), pinv(g))
                if z not in orb:
                    orb.add(z)
                    stack.append(z)
        left -= orb
        reps.append(x)
    return reps

def build_order48():
    o16 = build_order16()
    o24 = build_order24()
    Z3 = cyclic(3)
    pool = []
    for P in o16:
        pool.append(direct(P, Z3, P.name + "xZ3"))
        auts = automorphisms(P)
        if len([a for a in auts if aut_order(a) == 3]):
            for a in conj_class_reps_of_order3(auts):
                act = action_from_aut(Z3, P, a)
                pool.append(semidirect(P, Z3, act, P.name + ":Z3"))
    for Q in o24:
        for i, E in enumerate(z2_cohomology_extensions(Q, 2)):
            E.name = "Z2.%s#%d" % (Q.name, i)
            pool.append(E)
    uniq = dedup(pool)
    assert len(uniq) == 52, "expected 52 groups of order 48, got %d" % len(uniq)
    return uniq

def build_order60():
    o12 = build_order12()
    Z5 = cyclic(5)
    mult2 = (0, 2, 4, 1, 3)  # x -> 2x mod 5, order 4 automorphism
    pool = []
    for H in o12:
        for f in homs_to(H, cyclic(4)):
            act = []
            for h in range(H.n):
                a = tuple(range(5))
                for _ in range(f[h]):
                    a = pmul(mult2, a)
                act.append(a)
            tag = "x" if all(v == 0 for v in f.values()) else ":"
            pool.append(semidirect(Z5, H, act, "Z5%s%s" % (tag, H.name)))
    pool.append(from_perm_gens([cycp(5, (0, 1, 2, 3, 4)), cycp(5, (0, 1, 2))], "A5"))
    uniq = dedup(pool)
    assert len(uniq) == 13, "expected 13 groups of order 60, got %d" % len(uniq)
    return uniq

def build_order72():
    o8 = build_order8()
    o24 = build_order24()
    Z9 = cyclic(9, "Z9")
    Z33 = direct(cyclic(3), cyclic(3), "Z3^2")
    pool = []
    for P9 in (Z9, Z33):
        aut9 = automorphisms(P9)
        for P8 in o8:
            # all homs P8 -> Aut(P9): enumerate generator images among 2-elements
            gens = P8.min_gens()
            pords = P8.orders()
            two_elts = [a for a in aut9 if aut_order(a) in (1, 2, 4, 8)]
            def bt(i, imgs):
                if i == len(gens):
                    # extend to full action map by words
                    act = extend_action(P8, gens, imgs)
                    if act is not None:
                        tag = "x" if all(a == tuple(range(P9.n)) for a in act) else ":"
                        pool.append(semidirect(P9, P8, act, "%s%s%s" % (P9.name, tag, P8.name)))
                    return
                for a in two_elts:
                    if pords[gens[i]] % aut_order(a) != 0:
                        continue
                    bt(i + 1, imgs + [a])
            bt(0, [])
        # dedup as we go to keep the pool small
        pool = dedup(pool)
    for Q in o24:
        for i, E in enumerate(z2_cohomology_extensions(Q, 3)):
            E.name = "Z3.%s#%d" % (Q.name, i)
            pool.append(E)
    uniq = dedup(pool)
    assert len(uniq) == 50, "expected 50 groups of order 72, got %d" % len(uniq)
    return uniq

def extend_action(H, gens, imgs):
    """Extend generator->automorphism images to all of H by words; verify."""
    ident = tuple(range(len(imgs[0]))) if imgs else None
    f = {0: ident}
    frontier = [0]
    gi = {g: a for g, a in zip(gens, imgs)}
    while frontier:
        nf = []
        for a in frontier:
            for g in gens:
                c = H.t[a][g]
                fc = pmul(f[a], gi[g])
                if c in f:
                    if f[c] != fc:
                        return None
                else:
                    f[c] = fc
                    nf.append(c)
        frontier = nf
    if len(f) != H.n:
        return None
    for a in range(H.n):
        for b in range(H.n):
            if pmul(f[a], f[b]) != f[H.t[a][b]]:
                return None
    return [f[a] for a in range(H.n)]

def build_order84():
    o12 = build_order12()
    Z7 = cyclic(7)
    mult3 = tuple((3 * i) % 7 for i in range(7))  # order 6 automorphism
    pool = []
    for H in o12:
        for f in homs_to(H, cyclic(6)):
            act = []
            for h in range(H.n):
                a = tuple(range(7))
                for _ in range(f[h]):
                    a = pmul(mult3, a)
                act.append(a)
            tag = "x" if all(v == 0 for v in f.values()) else ":"
            pool.append(semidirect(Z7, H, act, "Z7%s%s" % (tag, H.name)))
    uniq = dedup(pool)
    assert len(uniq) == 15, "expected 15 groups of order 84, got %d" % len(uniq)
    return uniq

# -------------------------------------------------------- permutation output

def tab_to_perm(T):
    """Faithful permutation representation of T, of reasonably small degree."""
    best = regular_rep(T)
    # try transitive coset actions on core-free subgroups, and pairs of
    # subgroups with trivially-intersecting cores
    subs = subgroup_candidates(T)
    cores = [core(T, H) for H in subs]
    for H, C in zip(subs, cores):
        if len(C) == 1:
            d = T.n // len(H)
            if d < len(best[0][0]):
                best = coset_rep(T, H)
    for i in range(len(subs)):
        for j in range(i + 1, len(subs)):
            if len(cores[i] & cores[j]) == 1:
                d = T.n // len(subs[i]) + T.n // len(subs[j])
                if d < len(best[0][0]):
                    best = sum_rep(T, subs[i], subs[j])
    return best

def subgroup_candidates(T):
    """A decent pool of subgroups: cyclic ones plus closures of random pairs."""
    seen = set()
    out = []
    for a in range(T.n):
        H = T.close([a])
        if H not in seen:
            seen.add(H)
            out.append(H)
    els = list(range(T.n))
    for _ in range(400):
        a, b = random.choice(els), random.choice(els)
        H = T.close([a, b])
        if len(H) < T.n and H not in seen:
            seen.add(H)
            out.append(H)
    return out

def core(T, H):
    K = set(H)
    changed = True
    while changed:
        changed = False
        for g in range(T.n):
            gi = T.inv[g]
            bad = [k for k in K if T.t[T.t[g][k]][gi] not in K]
            if bad:
                K -= set(bad)
                changed = True
    # K is now the set of elements all of whose conjugates lie in H; close it
    return T.close(K) if K else frozenset([0])

def coset_rep(T, H):
    Hs = frozenset(H)
    reps = []
    covered = set()
    for a in range(T.n):
        if a not in covered:
            reps.append(a)
            covered |= {T.t[a][h] for h in Hs}
    pos = {}
    for i, r in enumerate(reps):
        for h in Hs:
            pos[T.t[r][h]] = i
    gens = T.min_gens()
    perms = []
    for g in gens:
        perms.append(tuple(pos[T.t[g][r]] for r in reps))
    return perms, gens

def sum_rep(T, H1, H2):
    p1, g1 = coset_rep(T, H1)
    p2, _ = coset_rep(T, H2)
    d1 = len(p1[0])
    perms = []
    for a, b in zip(p1, p2):
        perms.append(tuple(list(a) + [d1 + x for x in b]))
    return perms, g1

def regular_rep(T):
    # left translation L_g(a) = g*a as a permutation of the elements
    gens = T.min_gens()
    perms = [tuple(T.t[g][a] for a in range(T.n)) for g in gens]
    return perms, gens

def perm_to_cycles(p):
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if not seen[i] and p[i] != i:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = p[j]
            parts.append("(" + ",".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "()"

def verify_faithful(T, perms, gens):
    # the map gens -> perms extends to an injective homomorphism
    act = extend_action_generic(T, gens, perms)
    assert act is not None, "not a homomorphism"
    imgs = set(act)
    assert len(imgs) == T.n, "not faithful"
    return True

def extend_action_generic(H, gens, imgs):
    ident = tuple(range(len(imgs[0])))
    f = {0: ident}
    frontier = [0]
    gi = {g: a for g, a in zip(gens, imgs)}
    while frontier:
        nf = []
        for a in frontier:
            for g in gens:
                c = H.t[a][g]
                fc = pmul(f[a], gi[g])
                if c in f:
                    if f[c] != fc:
                        return None
                else:
                    f[c] = fc
                    nf.append(c)
        frontier = nf
    if len(f) != H.n:
        return None
    return [f[a] for a in range(H.n)]

def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "data/groups.txt"
    batches = []
    print("order 48 ...", flush=True)
    batches.append((48, build_order48()))
    print("order 60 ...", flush=True)
    batches.append((60, build_order60()))
    print("order 72 ...", flush=True)
    batches.append((72, build_order72()))
    print("order 84 ...", flush=True)
    batches.append((84, build_order84()))

    lines = ["# Groups of order 48, 60, 72, 84 (complete up to isomorphism:",
             "# 52 + 13 + 50 + 15 records).  Regenerate with tools/gen_catalog.py;",
             "# the loader re-verifies orders, pairwise non-isomorphism and counts.",
             "#",
             "# group order=<n> name=<name> degree=<d> gens=<cycles>;<cycles>;..."]
    for order, groups in batches:
        names = set()
        for T in groups:
            nm = T.name or "G"
            base, k = nm, 2
            while nm in names:
                nm = "%s~%d" % (base, k)
                k += 1
            names.add(nm)
            perms, gens = tab_to_perm(T)
            verify_faithful(T, perms, gens)
            # sanity: the permutation group has the right order
            assert len(pclosure(perms)) == T.n
            deg = len(perms[0])
            assert deg <= 64, "degree %d too large for %s" % (deg, nm)
            gtxt = ";".join(perm_to_cycles(p) for p in perms)
            lines.append("group order=%d name=%s degree=%d gens=%s" % (order, nm, deg, gtxt))
    with open(out_path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print("wrote %s (%d records)" % (out_path, sum(len(g) for _, g in batches)))

if __name__ == "__main__":
    main()
