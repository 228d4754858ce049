"""Exterior powers of M(p) = XA[X]/pM and the derivations D_h acting on them.

Everything here works in the epsilon basis ``eps^i = X^i mod p``.  Operators
in the algebra generated by the D_h are stored as explicit square matrices over
the base ring, indexed by I^k_n in degree-then-lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Mapping

from .combinatorics import (IndexSeq, check_index_seq, index_sets, pieri_support,
                            shifted, weight)
from .polyring import Poly, VarSpec, elementary_e, generic_vars, parse_poly, torus_vars

MODES = ("classical", "generic", "torus")
BASES = ("epsilon", "mu")


@dataclass(frozen=True)
class Context:
    """Ambient data: rank n, wedge degree k, and the coefficients c_1..c_n of p."""

    n: int
    k: int
    mode: str
    spec: VarSpec
    coeffs: tuple[Poly, ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def basis(self) -> list[IndexSeq]:
        key = ("basis",)
        if key not in self._cache:
            self._cache[key] = index_sets(self.k, self.n)
        return self._cache[key]

    @property
    def position(self) -> dict[IndexSeq, int]:
        key = ("position",)
        if key not in self._cache:
            self._cache[key] = {I: r for r, I in enumerate(self.basis)}
        return self._cache[key]

    def zero(self) -> Poly:
        return self.spec.zero()

    def one(self) -> Poly:
        return self.spec.one()

    def Y(self, i: int) -> Poly:
        """Y_i = y_i - y_1 (torus mode only)."""
        if self.mode != "torus":
            raise ValueError("Y variables exist only in torus mode")
        return self.spec.var(i) - self.spec.var(1)

    def with_k(self, k: int) -> "Context":
        return make_context(self.n, k, self.mode)

    def check_index(self, I) -> IndexSeq:
        I = check_index_seq(I)
        if len(I) != self.k:
            raise ValueError(f"{I} has {len(I)} entries, expected k={self.k}")
        if I[-1] > self.n:
            raise ValueError(f"{I} has an entry larger than n={self.n}")
        return I


def make_context(n: int, k: int, mode: str = "torus") -> Context:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if mode == "classical":
        spec = generic_vars(n)
        coeffs = tuple(spec.zero() for _ in range(n))
    elif mode == "generic":
        spec = generic_vars(n)
        coeffs = tuple(spec.var(i) for i in range(1, n + 1))
    elif mode == "torus":
        spec = torus_vars(n)
        Ys = [spec.var(j) - spec.var(1) for j in range(1, n + 1)]
        coeffs = tuple((-1) ** i * elementary_e(i, Ys) for i in range(1, n + 1))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Context(n, k, mode, spec, coeffs)


# -- wedge bookkeeping --------------------------------------------------------

def sort_wedge(indices) -> tuple[int, IndexSeq | None]:
    """Sort wedge factors, returning (sign, sorted) or (0, None) on a repeat."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return 0, None
    return sign, tuple(idx)


def wedge_vectors(factors: list[Mapping[int, Poly]], spec: VarSpec) -> dict[IndexSeq, Poly]:
    """Expand f_1 ^ ... ^ f_k for rank-1 vectors given as {index: coeff}."""
    acc: dict[tuple, Poly] = {(): spec.one()}
    for f in factors:
        nxt: dict[tuple, Poly] = {}
        for J, a in acc.items():
            for j, b in f.items():
                if j in J:
                    continue
                sign, K = sort_wedge(J + (j,))
                c = a * b
                if sign < 0:
                    c = -c
                prev = nxt.get(K)
                s = c if prev is None else prev + c
                if s:
                    nxt[K] = s
                elif prev is not None:
                    del nxt[K]
        acc = nxt
        if not acc:
            break
    return acc


class WedgeElement:
    """A finitely supported combination of wedge basis elements."""

    __slots__ = ("ctx", "basis", "terms")

    def __init__(self, ctx: Context, terms: Mapping[IndexSeq, Poly] | None = None,
                 basis: str = "epsilon"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.ctx = ctx
        self.basis = basis
        self.terms = {I: c for I, c in (terms or {}).items() if c}

    @classmethod
    def basis_element(cls, ctx: Context, I, basis: str = "epsilon") -> "WedgeElement":
        return cls(ctx, {tuple(I): ctx.one()}, basis)

    def _check(self, other: "WedgeElement"):
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        self._check(other)
        out = dict(self.terms)
        for I, c in other.terms.items():
            out[I] = out[I] + c if I in out else c
        return WedgeElement(self.ctx, out, self.basis)

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        return self + other.scale(-1)

    def scale(self, a) -> "WedgeElement":
        return WedgeElement(self.ctx, {I: c * a for I, c in self.terms.items()}, self.basis)

    def coeff(self, I) -> Poly:
        return self.terms.get(tuple(I), self.ctx.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), weight(t[0]), t[0]))

    def __iter__(self):
        return iter(self.sorted_items())

    def __repr__(self):
        sym = "e" if self.basis == "epsilon" else "mu"
        if not self.terms:
            return "0"
        parts = [f"({c})*{sym}{'^'.join(map(str, I))}" for I, c in self.sorted_items()]
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"basis": self.basis,
                "terms": [{"index": list(I), "coeff": str(c)} for I, c in self.sorted_items()]}


# -- reduction and the derivations --------------------------------------------

def _reduce_vec(m: int, ctx: Context) -> dict[int, Poly]:
    if m < 1:
        raise ValueError("eps^m needs m >= 1")
    n = ctx.n
    if m <= n:
        return {m: ctx.one()}
    key = ("reduce", m)
    cache = ctx._cache
    if key in cache:
        return cache[key]
    # X^m = -(c_1 X^{m-1} + ... + c_n X^{m-n}) mod p
    out: dict[int, Poly] = {}
    for i, c in enumerate(ctx.coeffs, start=1):
        if not c:
            continue
        for j, a in _reduce_vec(m - i, ctx).items():
            s = out.get(j, ctx.zero()) - c * a
            if s:
                out[j] = s
            else:
                out.pop(j, None)
    cache[key] = out
    return out


def reduce_epsilon(m: int, ctx: Context) -> WedgeElement:
    """eps^m written in the basis eps^1..eps^n (as a degree-1 wedge element)."""
    return WedgeElement(ctx, {(j,): c for j, c in _reduce_vec(m, ctx).items()})


def wedge_of_epsilons(indices: Iterable[int], ctx: Context) -> dict[IndexSeq, Poly]:
    """eps^{j_1} ^ ... ^ eps^{j_k} for arbitrary positive j's, fully reduced."""
    idx = list(indices)
    if all(j <= ctx.n for j in idx):
        sign, K = sort_wedge(idx)
        if not sign:
            return {}
        return {K: ctx.spec.const(sign)}
    return wedge_vectors([_reduce_vec(j, ctx) for j in idx], ctx.spec)


def _generic_shadow(ctx: Context) -> Context:
    """The same (n, k) over the generic coefficients c_1..c_n."""
    key = ("shadow",)
    if key not in ctx._cache:
        ctx._cache[key] = make_context(ctx.n, ctx.k, "generic")
    return ctx._cache[key]


def specialize(p: Poly, ctx: Context) -> Poly:
    """Image of a polynomial in c_1..c_n under c_i -> the i-th coefficient of p in ``ctx``."""
    cache = ctx._cache
    out = ctx.zero()
    for exp, a in p.terms.items():
        key = ("cmono", exp)
        mono = cache.get(key)
        if mono is None:
            mono = ctx.one()
            for c, e in zip(ctx.coeffs, exp):
                if e:
                    mono = mono * c ** e
            cache[key] = mono
        out = out + mono * a
    return out


def _specialize_terms(terms: Mapping[IndexSeq, Poly], ctx: Context) -> dict[IndexSeq, Poly]:
    out = {}
    for K, c in terms.items():
        c = specialize(c, ctx)
        if c:
            out[K] = c
    return out


def _d_basis(h: int, I: IndexSeq, ctx: Context) -> dict[IndexSeq, Poly]:
    key = ("D", h, I)
    cache = ctx._cache
    if key not in cache and ctx.mode == "torus":
        # big cancellations among y-polynomials: compute over c_i, then specialize
        cache[key] = _specialize_terms(_d_basis(h, I, _generic_shadow(ctx)), ctx)
    if key not in cache:
        out: dict[IndexSeq, Poly] = {}
        for H in pieri_support(I, h):
            for K, c in wedge_of_epsilons(shifted(I, H), ctx).items():
                s = out[K] + c if K in out else c
                if s:
                    out[K] = s
                else:
                    del out[K]
        cache[key] = out
    return cache[key]


def _apply_linear(w: WedgeElement, action: Callable[[IndexSeq], Mapping[IndexSeq, Poly]]) -> WedgeElement:
    out: dict[IndexSeq, Poly] = {}
    for I, a in w.terms.items():
        for K, c in action(I).items():
            t = a * c
            s = out[K] + t if K in out else t
            if s:
                out[K] = s
            else:
                del out[K]
    return WedgeElement(w.ctx, out, w.basis)


def d_pieri(h: int, w: WedgeElement) -> WedgeElement:
    """D_h(w) via the Pieri support, reducing indices beyond n."""
    if w.basis != "epsilon":
        raise ValueError("d_pieri works in the epsilon basis")
    if h < 0:
        return WedgeElement(w.ctx, {}, w.basis)
    if h == 0:
        return w
    ctx = w.ctx
    return _apply_linear(w, lambda I: _d_basis(h, I, ctx))


Derivation = Callable[[int, WedgeElement], WedgeElement]


def _perm_sign(p) -> int:
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inv % 2 else 1


def schur_terms(I: IndexSeq) -> list[tuple[int, tuple[int, ...]]]:
    """Nonzero terms of det(T_{i_j - i}) as (sign, subscripts), T_0 = 1 kept as 0."""
    k = len(I)
    out = []
    for p in permutations(range(k)):
        hs = tuple(I[p[r]] - (r + 1) for r in range(k))
        if min(hs) < 0:
            continue
        out.append((_perm_sign(p), hs))
    return out


def apply_schur(I, w: WedgeElement, derivation: Derivation = d_pieri) -> WedgeElement:
    """Delta_I(D) applied to w; I may have any length and entries beyond n."""
    I = check_index_seq(I)
    ctx = w.ctx
    if derivation is d_pieri and ctx.mode == "torus":
        shadow = _generic_shadow(ctx)

        def column(J):
            key = ("schur-col", I, J)
            if key not in ctx._cache:
                g = apply_schur(I, WedgeElement.basis_element(shadow, J), derivation)
                ctx._cache[key] = _specialize_terms(g.terms, ctx)
            return ctx._cache[key]

        return _apply_linear(w, column)
    out = WedgeElement(ctx, {}, w.basis)
    for sign, hs in schur_terms(I):
        v = w
        for h in sorted(hs):
            if h:
                v = derivation(h, v)
            if v.is_zero():
                break
        if not v.is_zero():
            out = out + (v if sign > 0 else v.scale(-1))
    return out


# -- operators ----------------------------------------------------------------

class SchubertOp:
    """An endomorphism of the k-th exterior power, as a matrix over the base ring.

    Columns are images of basis vectors: ``matrix[r][c]`` is the coefficient of
    basis element r in the image of basis element c.
    """

    __slots__ = ("ctx", "basis", "matrix")

    def __init__(self, ctx: Context, matrix, basis: str = "epsilon"):
        N = len(ctx.basis)
        rows = tuple(tuple(row) for row in matrix)
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError(f"expected a {N}x{N} matrix")
        self.ctx = ctx
        self.basis = basis
        self.matrix = rows

    @property
    def index(self) -> list[IndexSeq]:
        return self.ctx.basis

    @classmethod
    def from_columns(cls, ctx: Context, columns: list[WedgeElement], basis: str = "epsilon"):
        pos = ctx.position
        N = len(pos)
        z = ctx.zero()
        m = [[z] * N for _ in range(N)]
        for c, col in enumerate(columns):
            for K, a in col.terms.items():
                m[pos[K]][c] = a
        return cls(ctx, m, basis)

    @classmethod
    def identity(cls, ctx: Context, basis: str = "epsilon"):
        N = len(ctx.basis)
        z, o = ctx.zero(), ctx.one()
        return cls(ctx, [[o if r == c else z for c in range(N)] for r in range(N)], basis)

    @classmethod
    def zero_op(cls, ctx: Context, basis: str = "epsilon"):
        N = len(ctx.basis)
        z = ctx.zero()
        return cls(ctx, [[z] * N for _ in range(N)], basis)

    def _check(self, other: "SchubertOp"):
        if other.ctx.n != self.ctx.n or other.ctx.k != self.ctx.k or other.basis != self.basis:
            raise ValueError("operators live on different spaces")

    def __add__(self, other):
        self._check(other)
        return SchubertOp(self.ctx, [[a + b for a, b in zip(r, s)]
                                     for r, s in zip(self.matrix, other.matrix)], self.basis)

    def __sub__(self, other):
        self._check(other)
        return SchubertOp(self.ctx, [[a - b for a, b in zip(r, s)]
                                     for r, s in zip(self.matrix, other.matrix)], self.basis)

    def scale(self, a) -> "SchubertOp":
        return SchubertOp(self.ctx, [[x * a for x in r] for r in self.matrix], self.basis)

    def __matmul__(self, other: "SchubertOp") -> "SchubertOp":
        self._check(other)
        N = len(self.matrix)
        z = self.ctx.zero()
        brows = [[(j, b) for j, b in enumerate(row) if b] for row in other.matrix]
        out = []
        for row in self.matrix:
            acc = [z] * N
            for t, a in enumerate(row):
                if not a:
                    continue
                for j, b in brows[t]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        return SchubertOp(self.ctx, out, self.basis)

    def __eq__(self, other):
        if not isinstance(other, SchubertOp):
            return NotImplemented
        return (self.basis == other.basis and self.ctx.n == other.ctx.n
                and self.ctx.k == other.ctx.k and self.matrix == other.matrix)

    def is_zero(self) -> bool:
        return not any(a for row in self.matrix for a in row)

    def entry(self, row_index, col_index) -> Poly:
        pos = self.ctx.position
        return self.matrix[pos[tuple(row_index)]][pos[tuple(col_index)]]

    def diagonal(self) -> list[Poly]:
        return [self.matrix[i][i] for i in range(len(self.matrix))]

    def column(self, J) -> WedgeElement:
        c = self.ctx.position[tuple(J)]
        return WedgeElement(self.ctx, {I: self.matrix[r][c] for r, I in enumerate(self.index)},
                            self.basis)

    def apply(self, w: WedgeElement) -> WedgeElement:
        if w.basis != self.basis:
            raise ValueError("basis mismatch")
        pos = self.ctx.position
        N = len(self.matrix)
        acc = [self.ctx.zero()] * N
        for J, a in w.terms.items():
            c = pos[J]
            for r in range(N):
                e = self.matrix[r][c]
                if e:
                    acc[r] = acc[r] + e * a
        return WedgeElement(self.ctx, dict(zip(self.index, acc)), self.basis)

    def to_json(self) -> dict:
        return {"basis": self.basis,
                "index": [list(I) for I in self.index],
                "matrix": [[str(a) for a in row] for row in self.matrix]}

    def __repr__(self):
        return f"SchubertOp(n={self.ctx.n}, k={self.ctx.k}, basis={self.basis})"


def d_matrix(h: int, ctx: Context) -> SchubertOp:
    """Matrix of D_h on the k-th exterior power (epsilon basis)."""
    key = ("Dmat", h)
    if key not in ctx._cache:
        if h < 0:
            op = SchubertOp.zero_op(ctx)
        elif h == 0:
            op = SchubertOp.identity(ctx)
        else:
            op = SchubertOp.from_columns(
                ctx, [d_pieri(h, WedgeElement.basis_element(ctx, J)) for J in ctx.basis])
        ctx._cache[key] = op
    return ctx._cache[key]


def schur_op(I, ctx: Context, derivation: Derivation = d_pieri) -> SchubertOp:
    """Matrix of the Schur determinant det(D_{i_j - i}).

    ``I`` is any strictly increasing sequence; its length may differ from k
    and entries may exceed n.
    """
    I = check_index_seq(I)
    key = ("schur", I)
    if derivation is d_pieri and key in ctx._cache:
        return ctx._cache[key]
    cols = [apply_schur(I, WedgeElement.basis_element(ctx, J), derivation) for J in ctx.basis]
    op = SchubertOp.from_columns(ctx, cols)
    if derivation is d_pieri:
        ctx._cache[key] = op
    return op


def schur_op_by_matrices(I, ctx: Context) -> SchubertOp:
    """Same operator as ``schur_op``, expanded as a sum of products of D_h matrices."""
    I = check_index_seq(I)
    total = SchubertOp.zero_op(ctx)
    for sign, hs in schur_terms(I):
        prod = SchubertOp.identity(ctx)
        for h in hs:
            if h:
                prod = prod @ d_matrix(h, ctx)
        total = total + prod if sign > 0 else total - prod
    return total


def base_wedge(ctx: Context, basis: str = "epsilon") -> WedgeElement:
    return WedgeElement.basis_element(ctx, tuple(range(1, ctx.k + 1)), basis)


def poincare(op: SchubertOp) -> WedgeElement:
    """Evaluate an operator at e^1 ^ ... ^ e^k."""
    return op.apply(base_wedge(op.ctx, op.basis))


def poincare_inv(I, ctx: Context) -> SchubertOp:
    return schur_op(ctx.check_index(I), ctx)


def multiply(I, J, ctx: Context, derivation: Derivation = d_pieri) -> dict[IndexSeq, Poly]:
    """Structure constants {K: C^K_IJ} of Delta_I * Delta_J."""
    I = ctx.check_index(I)
    J = ctx.check_index(J)
    res = apply_schur(I, WedgeElement.basis_element(ctx, J), derivation)
    return dict(res.sorted_items())


def relation_series(ctx: Context) -> list[SchubertOp]:
    """Coefficients DT_0..DT_n of the inverse of sum_j (-1)^j Delta_(2..j+1)(D) t^j.

    With this sign each DT_i expresses D_i through D_1..D_k.
    """
    k, n = ctx.k, ctx.n
    E = [None] + [schur_op(tuple(range(2, j + 2)), ctx) for j in range(1, k + 1)]
    series = [SchubertOp.identity(ctx)]
    for i in range(1, n + 1):
        acc = SchubertOp.zero_op(ctx)
        for j in range(1, min(i, k) + 1):
            term = E[j] @ series[i - j]
            # G_i = -sum_j (-1)^j E_j G_{i-j}
            acc = acc + term if j % 2 else acc - term
        series.append(acc)
    return series


def presentation_relations(ctx: Context) -> list[SchubertOp]:
    """The k relations DT_{n-k+j} + sum_i c_i DT_{n-k+j-i}, j = 1..k; each should vanish."""
    series = relation_series(ctx)
    n, k = ctx.n, ctx.k
    out = []
    for j in range(1, k + 1):
        m = n - k + j
        rel = series[m]
        for i in range(1, m + 1):
            c = ctx.coeffs[i - 1]
            if c:
                rel = rel + series[m - i].scale(c)
        out.append(rel)
    return out


def wedge_from_json(data: dict, ctx: Context) -> WedgeElement:
    terms = {}
    for t in data["terms"]:
        I = check_index_seq(t["index"])
        terms[I] = parse_poly(t["coeff"], ctx.spec)
    return WedgeElement(ctx, terms, data.get("basis", "epsilon"))


def op_from_json(data: dict, ctx: Context) -> SchubertOp:
    index = [tuple(I) for I in data["index"]]
    if index != ctx.basis:
        raise ValueError("operator index order does not match the context basis")
    m = [[parse_poly(s, ctx.spec) for s in row] for row in data["matrix"]]
    return SchubertOp(ctx, m, data.get("basis", "epsilon"))
