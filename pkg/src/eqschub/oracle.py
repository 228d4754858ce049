"""Slow, independent cross-checks.

Nothing in here reuses the fast paths of ``core`` or ``torus``: reduction
modulo p, wedge sign computation and Schur polynomials are all redone from
scratch on top of ``polyring``.

* ``leibniz_oracle`` expands D_h on a wedge by the raw Leibniz rule over all
  compositions of h.
* ``schur_sym`` / ``lr_constants`` compute classical Littlewood-Richardson
  numbers from bialternants.
* ``mu_leibniz_matrix`` builds D_h on the mu basis from the rank-one rule
  D_1 mu^j = mu^{j+1} + Y_j mu^j alone.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .combinatorics import IndexSeq, check_index_seq, index_sets, weight
from .polyring import Poly, VarSpec, torus_vars


def _sign_by_inversions(seq) -> int:
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv & 1 else 1


def _x_power_mod_p(m: int, coeffs, spec: VarSpec) -> list[Poly]:
    """Coordinates of X^m mod p on X^1..X^n, by long division (no memo)."""
    n = len(coeffs)
    # dense coefficient list of X^m, degrees 0..m
    poly = [spec.zero()] * m + [spec.one()]
    for deg in range(m, n, -1):
        lead = poly[deg]
        if not lead:
            continue
        poly[deg] = spec.zero()
        for i, c in enumerate(coeffs, start=1):
            if c:
                poly[deg - i] = poly[deg - i] - lead * c
    return poly[1:n + 1]


def leibniz_oracle(h: int, w):
    """D_h(w) by D_h(a1^...^ak) = sum over h_1+...+h_k = h of eps^{a1+h1}^...^eps^{ak+hk}."""
    from .core import WedgeElement
    if w.basis != "epsilon":
        raise ValueError("leibniz_oracle works in the epsilon basis")
    ctx = w.ctx
    spec = ctx.spec
    vec_cache: dict[int, list[Poly]] = {}

    def vec(m):
        if m not in vec_cache:
            vec_cache[m] = _x_power_mod_p(m, ctx.coeffs, spec)
        return vec_cache[m]

    out: dict[IndexSeq, Poly] = {}

    def accumulate(partial, coeff):
        for K, c in partial.items():
            s = out.get(K, spec.zero()) + coeff * c
            if s:
                out[K] = s
            else:
                out.pop(K, None)

    def extend(partial, m):
        # wedge the partial product (unsorted tuples) with eps^m
        nxt: dict[tuple, Poly] = {}
        for j, c in enumerate(vec(m), start=1):
            if not c:
                continue
            for J, a in partial.items():
                if j in J:
                    continue
                key = J + (j,)
                nxt[key] = nxt.get(key, spec.zero()) + a * c
        return {J: a for J, a in nxt.items() if a}

    for I, coeff in w.terms.items():
        k = len(I)

        def rec(pos, left, partial):
            if pos == k - 1:
                final = extend(partial, I[pos] + left)
                sorted_terms: dict[IndexSeq, Poly] = {}
                for J, a in final.items():
                    K = tuple(sorted(J))
                    t = a if _sign_by_inversions(J) > 0 else -a
                    sorted_terms[K] = sorted_terms.get(K, spec.zero()) + t
                accumulate(sorted_terms, coeff)
                return
            for s in range(left + 1):
                nxt = extend(partial, I[pos] + s)
                if nxt:
                    rec(pos + 1, left - s, nxt)

        if h >= 0:
            rec(0, h, {(): spec.one()})
    return WedgeElement(ctx, out, "epsilon")


# -- classical Littlewood-Richardson numbers from bialternants -----------------

def partition_of(I: IndexSeq) -> tuple[int, ...]:
    """(i_k - k, ..., i_1 - 1) with zeros kept."""
    k = len(I)
    return tuple(I[k - 1 - r] - (k - r) for r in range(k))


def index_of(lam, k: int) -> IndexSeq:
    lam = tuple(lam) + (0,) * (k - len(lam))
    return tuple(lam[k - j] + j for j in range(1, k + 1))


def _det(rows: list[list[Poly]], spec: VarSpec) -> Poly:
    N = len(rows)
    total = spec.zero()
    for p in permutations(range(N)):
        term = spec.const(_sign_by_inversions(p))
        for r in range(N):
            term = term * rows[r][p[r]]
            if not term:
                break
        total = total + term
    return total


def _lex_lead(p: Poly):
    return max(p.terms)


def exact_divide(p: Poly, d: Poly) -> Poly:
    """Multivariate division with lex leading terms; raises if not exact."""
    spec = p.spec
    q = spec.zero()
    r = p
    lead_d = _lex_lead(d)
    cd = d.terms[lead_d]
    while r:
        lead_r = _lex_lead(r)
        diff = tuple(a - b for a, b in zip(lead_r, lead_d))
        cr = r.terms[lead_r]
        if min(diff) < 0 or cr % cd:
            raise ArithmeticError("division is not exact")
        t = Poly(spec, {diff: cr // cd})
        q = q + t
        r = r - t * d
    return q


def schur_sym(I, N: int) -> Poly:
    """Schur polynomial of the partition of I in N variables x1..xN."""
    I = check_index_seq(I)
    lam = partition_of(I)
    if len(lam) > N:
        if any(lam[N:]):
            return VarSpec("y", N).zero()
        lam = lam[:N]
    lam = lam + (0,) * (N - len(lam))
    spec = VarSpec("y", N)  # x_i stored as y_i of a private variable set
    xs = [spec.var(i) for i in range(1, N + 1)]
    num = _det([[xs[i] ** (lam[j] + N - 1 - j) for j in range(N)] for i in range(N)], spec)
    den = _det([[xs[i] ** (N - 1 - j) for j in range(N)] for i in range(N)], spec)
    return exact_divide(num, den)


def lr_constants(I, J, k: int, n: int) -> dict[IndexSeq, int]:
    """Classical C^K_IJ for the k x (n-k) box, by leading-monomial elimination."""
    I = check_index_seq(I)
    J = check_index_seq(J)
    if weight(I) + weight(J) > k * (n - k):
        raise ValueError("wt(I) + wt(J) exceeds k(n-k)")
    N = k
    rest = schur_sym(I, N) * schur_sym(J, N)
    out: dict[IndexSeq, int] = {}
    while rest:
        lead = _lex_lead(rest)
        c = rest.terms[lead]
        lam = tuple(lead)
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise ArithmeticError("leading monomial is not a partition; input not symmetric")
        K = index_of(lam, k)
        rest = rest - schur_sym(K, N) * c
        if lam[0] <= n - k:
            out[K] = out.get(K, 0) + c
    return dict(sorted(out.items(), key=lambda t: (weight(t[0]), t[0])))


# -- the mu basis from the rank-one rule only -----------------------------------

def mu_leibniz_matrix(h: int, n: int, k: int) -> list[list[Poly]]:
    """Matrix of D_h on the k-th wedge of the mu basis, columns = images.

    Uses D_h mu^j = D_1^h mu^j with D_1 mu^j = mu^{j+1} + Y_j mu^j, mu^{n+1} = 0,
    and the Leibniz rule over compositions of h.
    """
    spec = torus_vars(n)
    Y = [None] + [spec.var(j) - spec.var(1) for j in range(1, n + 1)]

    def rank1(hh, j):
        v = {j: spec.one()}
        for _ in range(hh):
            nv: dict[int, Poly] = {}
            for a, c in v.items():
                nv[a] = nv.get(a, spec.zero()) + c * Y[a]
                if a + 1 <= n:
                    nv[a + 1] = nv.get(a + 1, spec.zero()) + c
            v = {a: c for a, c in nv.items() if c}
        return v

    basis = index_sets(k, n)
    pos = {I: r for r, I in enumerate(basis)}
    cols = []
    for I in basis:
        img: dict[IndexSeq, Poly] = {}

        def rec(p, left, partial):
            if p == k:
                if left:
                    return
                for J, a in partial.items():
                    K = tuple(sorted(J))
                    t = a if _sign_by_inversions(J) > 0 else -a
                    img[K] = img.get(K, spec.zero()) + t
                return
            rng = [left] if p == k - 1 else range(left + 1)
            for s in rng:
                f = rank1(s, I[p])
                nxt: dict[tuple, Poly] = {}
                for J, a in partial.items():
                    for j, c in f.items():
                        if j not in J:
                            nxt[J + (j,)] = nxt.get(J + (j,), spec.zero()) + a * c
                rec(p + 1, left - s, nxt)

        rec(0, h, {(): spec.one()})
        cols.append(img)
    N = len(basis)
    m = [[spec.zero()] * N for _ in range(N)]
    for c, img in enumerate(cols):
        for K, a in img.items():
            m[pos[K]][c] = a
    return m
