"""Diagonal torus action: the mu basis, equivariant Pieri rules and GKM checks.

In torus mode the base ring is Z[y1..yn], Y_i = y_i - y_1 (so Y_1 = 0) and
p = (X - Y_1)...(X - Y_n).  The mu basis is mu^i = X p_{i-1} mod p with
p_i = (X - Y_1)...(X - Y_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import (IndexSeq, check_index_seq, pieri_support, shifted,
                            to_bitstring, up_moves)
from .core import (Context, SchubertOp, WedgeElement, d_pieri, schur_op, wedge_vectors)
from .polyring import Poly, complete_h, divides, torus_vars


def _require_torus(ctx: Context):
    if ctx.mode != "torus":
        raise ValueError("the mu basis is only defined in torus mode")


@dataclass(frozen=True)
class MuBasis:
    """Change of basis between eps and mu on M(p), both directions.

    ``eps_of_mu[i]`` gives mu^i in eps coordinates, ``mu_of_eps[j]`` gives
    eps^j in mu coordinates (1-based keys).
    """

    ctx: Context
    eps_of_mu: dict[int, dict[int, Poly]] = field(repr=False)
    mu_of_eps: dict[int, dict[int, Poly]] = field(repr=False)

    def matrix(self) -> list[list[Poly]]:
        """n x n matrix whose column i holds mu^i in eps coordinates."""
        n = self.ctx.n
        z = self.ctx.zero()
        return [[self.eps_of_mu[i].get(j, z) for i in range(1, n + 1)] for j in range(1, n + 1)]


def mu_from_eps(ctx: Context) -> MuBasis:
    _require_torus(ctx)
    key = ("mubasis",)
    if key in ctx._cache:
        return ctx._cache[key]
    n, spec = ctx.n, ctx.spec
    # univariate polynomials in X over the base ring, as coefficient lists
    p_prev = [spec.one()]
    eps_of_mu: dict[int, dict[int, Poly]] = {}
    for i in range(1, n + 1):
        x_times = [spec.zero()] + p_prev
        eps_of_mu[i] = {j: c for j, c in enumerate(x_times) if c and j >= 1}
        Yi = ctx.Y(i)
        p_prev = [(p_prev[d - 1] if d >= 1 else spec.zero())
                  - (Yi * p_prev[d] if d < len(p_prev) else spec.zero())
                  for d in range(len(p_prev) + 1)]
    mu_of_eps: dict[int, dict[int, Poly]] = {}
    for j in range(1, n + 1):
        # eps^j = mu^j - sum_{i<j} a_ij eps^i
        acc = {j: spec.one()}
        for i, a in eps_of_mu[j].items():
            if i == j:
                continue
            for t, c in mu_of_eps[i].items():
                s = acc.get(t, spec.zero()) - a * c
                if s:
                    acc[t] = s
                else:
                    acc.pop(t, None)
        mu_of_eps[j] = acc
    mb = MuBasis(ctx, eps_of_mu, mu_of_eps)
    ctx._cache[key] = mb
    return mb


def _wedge_change(ctx: Context, I: IndexSeq, target: str) -> dict[IndexSeq, Poly]:
    """A basis wedge of the other basis written in ``target`` coordinates (memoized)."""
    key = ("wedge-change", target, I)
    hit = ctx._cache.get(key)
    if hit is None:
        mb = mu_from_eps(ctx)
        table = mb.eps_of_mu if target == "epsilon" else mb.mu_of_eps
        hit = wedge_vectors([table[i] for i in I], ctx.spec)
        ctx._cache[key] = hit
    return hit


def convert(w: WedgeElement, target: str) -> WedgeElement:
    """Rewrite a wedge element in the ``target`` basis ("epsilon" or "mu")."""
    if w.basis == target:
        return w
    out: dict[IndexSeq, Poly] = {}
    spec = w.ctx.spec
    for I, a in w.terms.items():
        for K, c in _wedge_change(w.ctx, I, target).items():
            s = out.get(K, spec.zero()) + a * c
            if s:
                out[K] = s
            else:
                out.pop(K, None)
    return WedgeElement(w.ctx, out, target)


def mu_wedge(ctx: Context, I) -> WedgeElement:
    return WedgeElement.basis_element(ctx, tuple(I), "mu")


def _Ys(ctx: Context, indices) -> list[Poly]:
    return [ctx.Y(i) for i in indices]


def d1_mu(j: int, ctx: Context) -> WedgeElement:
    """D_1 mu^j = mu^{j+1} + Y_j mu^j, with mu^{n+1} = 0."""
    _require_torus(ctx)
    if not 1 <= j <= ctx.n:
        raise ValueError(f"j={j} outside 1..{ctx.n}")
    terms = {(j,): ctx.Y(j)}
    if j < ctx.n:
        terms[(j + 1,)] = ctx.one()
    return WedgeElement(ctx, terms, "mu")


def eps_path(l: int, w: WedgeElement) -> WedgeElement:
    """D_l on a mu-basis element by converting to eps, applying Pieri, converting back."""
    return convert(d_pieri(l, convert(w, "epsilon")), "mu")


def di_mu(i: int, j: int, ctx: Context) -> WedgeElement:
    """D_i mu^j = sum_l h_{i-l}(Y_j..Y_{j+l}) mu^{j+l} while j + i <= n + 1."""
    _require_torus(ctx)
    n = ctx.n
    if not 1 <= j <= n:
        raise ValueError(f"j={j} outside 1..{n}")
    if i < 0:
        raise ValueError("i must be nonnegative")
    if j + i > n + 1:
        return eps_path(i, mu_wedge(ctx, (j,)))
    terms = {}
    for l in range(i + 1):
        if j + l > n:
            break
        terms[(j + l,)] = complete_h(i - l, _Ys(ctx, range(j, j + l + 1)), ctx.spec)
    return WedgeElement(ctx, terms, "mu")


def _pieri_closed(l: int, I: IndexSeq, ctx: Context):
    """Closed-form terms (indices above n dropped) and whether an index above n+1 arose."""
    n = ctx.n
    out: dict[IndexSeq, Poly] = {}
    overflow = False
    for u in range(l + 1):
        for M in pieri_support(I, l - u):
            K = shifted(I, M)
            if K[-1] > n + 1:
                overflow = True
            if K[-1] > n:
                continue
            args = []
            for i, m in zip(I, M):
                args.extend(range(i, i + m + 1))
            c = complete_h(u, _Ys(ctx, args), ctx.spec)
            if c:
                out[K] = out[K] + c if K in out else c
    return out, overflow


def equivariant_pieri(l: int, I, ctx: Context, method: str = "auto") -> WedgeElement:
    """D_l applied to mu^{i_1} ^ ... ^ mu^{i_k}, expanded in the mu basis.

    ``method``: "closed" uses the complete-symmetric-polynomial formula,
    dropping every term with an index above n; "epsilon" goes through the eps
    basis; "auto" uses the closed form unless an index above n+1 shows up.
    """
    _require_torus(ctx)
    I = check_index_seq(I)
    if I[-1] > ctx.n:
        raise ValueError(f"{I} has an entry larger than n={ctx.n}")
    if l < 0:
        raise ValueError("l must be nonnegative")
    if method == "epsilon":
        return eps_path(l, mu_wedge(ctx, I))
    terms, overflow = _pieri_closed(l, I, ctx)
    if method == "auto" and overflow:
        return eps_path(l, mu_wedge(ctx, I))
    if method not in ("auto", "closed"):
        raise ValueError(f"unknown method {method!r}")
    return WedgeElement(ctx, terms, "mu")


def divisorial_pieri(I, ctx: Context) -> WedgeElement:
    """(D_1 - Y_1 - ... - Y_k) applied to the mu-wedge of I."""
    I = check_index_seq(I)
    shift = sum(_Ys(ctx, range(1, len(I) + 1)), ctx.zero())
    return equivariant_pieri(1, I, ctx) - mu_wedge(ctx, I).scale(shift)


def divisorial_coefficient(I, ctx: Context) -> Poly:
    """sum_r (y_{i_r} - y_r)."""
    y = ctx.spec.var
    return sum((y(i) - y(r) for r, i in enumerate(I, start=1)), ctx.zero())


def divisorial_rule(I, ctx: Context) -> dict[str, Poly]:
    """The divisor rule written on 0/1 strings: one unit term per "01" -> "10" move."""
    lam = to_bitstring(tuple(I), ctx.n)
    out = {mv: ctx.one() for mv in up_moves(lam)}
    c = divisorial_coefficient(I, ctx)
    if c:
        out[lam] = c
    return out


def as_bitstrings(w: WedgeElement) -> dict[str, Poly]:
    return {to_bitstring(I, w.ctx.n): c for I, c in w.terms.items()}


# -- rank one GKM model ---------------------------------------------------------

@dataclass(frozen=True)
class GkmClass:
    components: tuple[Poly, ...]

    def __mul__(self, other: "GkmClass") -> "GkmClass":
        return GkmClass(tuple(a * b for a, b in zip(self.components, other.components)))

    def shift(self, c: Poly) -> "GkmClass":
        return GkmClass(tuple(a - c for a in self.components))

    def satisfies_gkm(self) -> bool:
        comps = self.components
        spec = comps[0].spec
        y = spec.var
        return all(divides(y(j) - y(h), comps[j - 1] - comps[h - 1])
                   for j in range(1, len(comps) + 1) for h in range(j + 1, len(comps) + 1))


def projective_gkm_class(i: int, n: int) -> GkmClass:
    """Components prod_{h<=i} (y_j - y_h), j = 1..n."""
    if not 0 <= i < n:
        raise ValueError(f"need 0 <= i < n, got i={i}, n={n}")
    spec = torus_vars(n)
    y = spec.var
    comps = []
    for j in range(1, n + 1):
        c = spec.one()
        for h in range(1, i + 1):
            c = c * (y(j) - y(h))
        comps.append(c)
    return GkmClass(tuple(comps))


def gkm_identities(n: int) -> bool:
    """Check S_i = p_i(S_1) for all i < n and p(S_1) = 0, exactly."""
    spec = torus_vars(n)
    Y = [None] + [spec.var(j) - spec.var(1) for j in range(1, n + 1)]
    s1 = projective_gkm_class(1, n)
    acc = GkmClass(tuple(spec.one() for _ in range(n)))
    for i in range(1, n + 1):
        acc = acc * s1.shift(Y[i])
        if i < n and acc != projective_gkm_class(i, n):
            return False
    return all(c.is_zero() for c in acc.components)


# -- operators in the mu basis ---------------------------------------------------

def operator_matrix_mu(I, ctx: Context) -> SchubertOp:
    """Matrix of G_I = (Poincare)^{-1}(mu-wedge of I) in the mu basis."""
    _require_torus(ctx)
    I = ctx.check_index(I)
    key = ("Gmu", I)
    if key in ctx._cache:
        return ctx._cache[key]
    target = convert(mu_wedge(ctx, I), "epsilon")
    g_eps = None
    for K, a in target.terms.items():
        term = schur_op(K, ctx).scale(a)
        g_eps = term if g_eps is None else g_eps + term
    cols = [convert(g_eps.apply(convert(mu_wedge(ctx, J), "epsilon")), "mu") for J in ctx.basis]
    op = SchubertOp.from_columns(ctx, cols, "mu")
    ctx._cache[key] = op
    return op


def d_matrix_mu(h: int, ctx: Context) -> SchubertOp:
    """Matrix of D_h in the mu basis, built column by column from eps_path."""
    _require_torus(ctx)
    cols = [eps_path(h, mu_wedge(ctx, J)) for J in ctx.basis]
    return SchubertOp.from_columns(ctx, cols, "mu")


def multiply_mu(I, J, ctx: Context) -> dict[IndexSeq, Poly]:
    """Structure constants of the mu-basis classes: G_I G_J = sum_K C^K_IJ G_K."""
    I = ctx.check_index(I)
    J = ctx.check_index(J)
    col = operator_matrix_mu(I, ctx).column(J)
    return dict(col.sorted_items())


@dataclass(frozen=True)
class GkmEdge:
    source: IndexSeq
    target: IndexSeq
    a: int
    b: int
    difference: Poly
    passed: bool


@dataclass(frozen=True)
class GkmReport:
    edges: tuple[GkmEdge, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.edges)

    def failures(self) -> list[GkmEdge]:
        return [e for e in self.edges if not e.passed]


def grassmannian_edges(ctx: Context):
    """Pairs (I, J, a, b) with J = I - {a} + {b}, I before J in basis order."""
    basis = ctx.basis
    for r, I in enumerate(basis):
        for J in basis[r + 1:]:
            only_i = set(I) - set(J)
            if len(only_i) == 1:
                (a,), (b,) = only_i, set(J) - set(I)
                yield I, J, a, b


def gkm_check_diagonal(op: SchubertOp, ctx: Context | None = None) -> GkmReport:
    """Test diag_I - diag_J divisible by (y_a - y_b) along every fixed-point edge."""
    ctx = ctx or op.ctx
    _require_torus(ctx)
    y = ctx.spec.var
    diag = dict(zip(ctx.basis, op.diagonal()))
    edges = []
    for I, J, a, b in grassmannian_edges(ctx):
        diff = diag[I] - diag[J]
        edges.append(GkmEdge(I, J, a, b, diff, divides(y(a) - y(b), diff)))
    return GkmReport(tuple(edges))
