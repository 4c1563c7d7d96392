"""Minimal projective resolutions, syzygies, Ext groups, extension classes.

Resolutions are memoized per algebra (keyed by the structural identity of the
resolved module) and extended on demand, so repeated Ext queries against the
same module reuse one resolution.
"""

from . import linalg, reps
from .errors import NothingToExtend, StratakitError, Truncated, ZeroModule
from .linalg import Matrix
from .reps import (Morphism, Rep, compose, direct_sum, hom_basis, kernel,
                   path_matrix, projective, quotient, radical_submodule,
                   zero_morphism, zero_rep)

DEFAULT_CAP = 20


class LowerBound(int):
    """A dimension known only to be >= this value (capped resolution)."""

    def __repr__(self):
        return f">={int(self)}"

    __str__ = __repr__


def projective_cover(m):
    """Projective cover ⊕P(i)^mult -> m, with multiplicities from top(m)."""
    if m.total_dim == 0:
        raise ZeroModule("projective cover of the zero module")
    a = m.algebra
    F = a.field
    tdims, pi = reps.top_multiplicities(m)
    # lifts of a basis of the top: columns of the linear sections of pi
    summands = []
    lifts = []
    for v in range(a.n):
        sec = pi.section_blocks[v]
        for k in range(tdims[v]):
            summands.append(v)
            lifts.append((v, sec.column(k)))
    P = direct_sum([projective(a, v) for v in summands]) if summands else zero_rep(a)
    blocks = [[] for _ in range(a.n)]  # per vertex: list of column vectors
    for (v, x) in lifts:
        # the summand P(v) has basis the paths from v; image of path p is p.x
        by_target = [[] for _ in range(a.n)]
        for bi in a.basis_with_source(v):
            by_target[a.path_target(a.basis[bi])].append(bi)
        for tv in range(a.n):
            for bi in by_target[tv]:
                p = a.basis[bi]
                vec = path_matrix(m, p.src, p.arrs).apply(x)
                blocks[tv].append(vec)
    mats = []
    for tv in range(a.n):
        mats.append(Matrix.from_columns(F, blocks[tv], rows=m.dims[tv]))
    cover = Morphism(P, m, mats)
    P.cover_summands = summands
    if not cover.is_surjective():
        raise StratakitError("projective cover failed to be surjective")
    return cover


def injective_hull(m):
    """Essential embedding m -> I with I injective (dual of a projective cover)."""
    dual = reps.dual_to_opposite(m)
    cover = projective_cover(dual)
    hull = reps.dual_to_opposite(cover.source)
    # dualizing twice restores the original action matrices, so the dual of
    # the cover is literally the transposed blocks
    emb = Morphism(m, hull, [b.transpose() for b in cover.blocks])
    if not (emb.is_valid() and emb.is_injective()):
        raise StratakitError("injective hull construction failed")
    return emb


def _generator_offsets(a, summands):
    """Per summand: (vertex, coordinate of the generator e_v inside that vertex block)."""
    offs = [0] * a.n
    out = []
    for v in summands:
        out.append((v, offs[v]))
        pv = projective(a, v)
        for tv in range(a.n):
            offs[tv] += pv.dims[tv]
    return out


class Resolution:
    """A (partial) minimal projective resolution.

    terms[i] is the multiset of projective summand vertices of P_i;
    diffs[0]: P_0 -> m is the cover, diffs[i]: P_i -> P_{i-1} for i >= 1.
    `complete` means the next syzygy is zero; `truncated` means the cap bit.
    """

    def __init__(self, module):
        self.module = module
        self.terms = []          # list of lists of vertex indices
        self.term_reps = []      # the assembled projective Reps
        self.diffs = []
        self.syzygy = module     # current syzygy rep (to be covered next)
        self.syzygy_incl = None  # inclusion of syzygy into previous term
        self.complete = module.total_dim == 0
        self.truncated = False

    @property
    def length(self):
        return len(self.terms) - 1

    def extend_to(self, nterms, cap=None):
        """Grow until there are nterms terms, the resolution completes, or cap bites."""
        while not self.complete and len(self.terms) < nterms:
            if cap is not None and len(self.terms) >= cap + 1:
                self.truncated = True
                return
            cover = projective_cover(self.syzygy)
            P = cover.source
            if self.syzygy_incl is None:
                diff = cover
            else:
                diff = compose(self.syzygy_incl, cover)
            self.terms.append(P.cover_summands)
            self.term_reps.append(P)
            self.diffs.append(diff)
            ker = kernel(cover)
            sub, incl = ker.as_rep()
            self.syzygy = sub
            self.syzygy_incl = incl
            if sub.total_dim == 0:
                self.complete = True

    def syzygy_at(self, s):
        """Omega^s of the module (s >= 0; Omega^0 is the module itself)."""
        if s == 0:
            return self.module
        self.extend_to(s)
        if self.complete and s >= len(self.terms):
            return zero_rep(self.module.algebra)
        if len(self.terms) < s:
            raise Truncated(f"resolution capped before syzygy {s}")
        if s == len(self.terms):
            return self.syzygy
        # kernel of diffs[s-1] equals the image of diffs[s]
        sub, _ = reps.image(self.diffs[s]).as_rep()
        return sub

    def is_minimal(self):
        """Each differential lands in the radical of its target."""
        for i in range(1, len(self.diffs)):
            rad = radical_submodule(self.term_reps[i - 1])
            if not rad.contains(reps.image(self.diffs[i])):
                return False
        return True

    def composes_to_zero(self):
        for i in range(1, len(self.diffs)):
            if not all(b.is_zero() for b in compose(self.diffs[i - 1], self.diffs[i]).blocks):
                return False
        return True


def min_proj_resolution(m, cap=DEFAULT_CAP):
    """Memoized minimal projective resolution, computed out to `cap` terms."""
    a = m.algebra
    table = a.cache.setdefault("resolutions", {})
    res = table.get(m.key())
    if res is None:
        res = Resolution(m)
        table[m.key()] = res
    res.extend_to(cap + 1, cap=cap)
    return res


def proj_dim(m, cap=DEFAULT_CAP):
    """Projective dimension, or LowerBound(cap) when the resolution was capped."""
    if m.total_dim == 0:
        return 0
    res = min_proj_resolution(m, cap)
    if res.complete:
        return len(res.terms) - 1
    return LowerBound(cap)


def inj_dim(m, cap=DEFAULT_CAP):
    """Injective dimension via the opposite algebra."""
    return proj_dim(reps.dual_to_opposite(m), cap)


def global_dim(a, cap=DEFAULT_CAP):
    best = 0
    capped = False
    for i in range(a.n):
        d = proj_dim(reps.simple(a, i), cap)
        if isinstance(d, LowerBound):
            capped = True
        best = max(best, int(d))
    return LowerBound(best) if capped else best


def _ext_complex_diff(res, n, s):
    """Matrix of Hom(P_s, n) -> Hom(P_{s+1}, n) in generator coordinates.

    Hom(⊕P(v_t), n) = ⊕ e_{v_t}.n; the map sends the tuple of generator values
    through the differential's path coefficients.
    """
    a = res.module.algebra
    F = a.field
    src_verts = res.terms[s]
    tgt_verts = res.terms[s + 1]
    src_dim = sum(n.dims[v] for v in src_verts)
    tgt_dim = sum(n.dims[v] for v in tgt_verts)
    if src_dim == 0 or tgt_dim == 0:
        return Matrix.zero(F, tgt_dim, src_dim)
    diff = res.diffs[s + 1]
    tgt_offsets = _generator_offsets(a, tgt_verts)
    # positions of each source summand's basis paths inside the vertex blocks of P_s
    summand_paths = []   # per summand t: list of (vertex, offset_in_vertex, Path)
    offs = [0] * a.n
    for v in src_verts:
        entry = []
        pv = projective(a, v)
        by_target = [[] for _ in range(a.n)]
        for bi in a.basis_with_source(v):
            by_target[a.path_target(a.basis[bi])].append(bi)
        for tv in range(a.n):
            for k, bi in enumerate(by_target[tv]):
                entry.append((tv, offs[tv] + k, a.basis[bi]))
        summand_paths.append(entry)
        for tv in range(a.n):
            offs[tv] += pv.dims[tv]
    col_off = []
    acc = 0
    for v in src_verts:
        col_off.append(acc)
        acc += n.dims[v]
    out = [[F.zero] * src_dim for _ in range(tgt_dim)]
    row_acc = 0
    for (vu, cu) in tgt_offsets:
        # gen_u is the basis vector at vertex vu, coordinate cu of P_{s+1};
        # its image under the differential stays in the vu-block of P_s
        gen_img = diff.blocks[vu].column(cu)
        for t, entry in enumerate(summand_paths):
            vt = src_verts[t]
            for (tv, pos, p) in entry:
                if tv != vu:
                    continue
                c = gen_img[pos]
                if F.is_zero(c):
                    continue
                # a morphism with generator value x at summand t sends gen_u
                # through c * (action of path p on n) applied to x
                act = path_matrix(n, p.src, p.arrs)   # n.dims[vu] x n.dims[vt]
                for r in range(n.dims[vu]):
                    for cc in range(n.dims[vt]):
                        out[row_acc + r][col_off[t] + cc] = F.add(
                            out[row_acc + r][col_off[t] + cc], F.mul(c, act[r, cc]))
        row_acc += n.dims[vu]
    return Matrix.from_rows(F, out) if tgt_dim else Matrix(F, 0, src_dim, [])


def ext_dim(i, m, n, cap=DEFAULT_CAP):
    """dim Ext^i(m, n).  Raises Truncated when the capped resolution cannot decide."""
    if m.algebra is not n.algebra:
        raise StratakitError("ext between modules over different algebras")
    if i < 0:
        return 0
    if m.total_dim == 0 or n.total_dim == 0:
        return 0
    res = min_proj_resolution(m, max(cap, i + 1))
    a = m.algebra
    F = a.field
    nterms = len(res.terms)
    if not res.complete and nterms < i + 2:
        raise Truncated(f"resolution capped below degree {i}")

    def cochain_dim(s):
        if s >= nterms:
            return 0
        return sum(n.dims[v] for v in res.terms[s])

    def delta(s):
        """C^s -> C^{s+1}"""
        if s + 1 >= nterms or s >= nterms:
            return Matrix.zero(F, cochain_dim(s + 1), cochain_dim(s))
        return _ext_complex_diff(res, n, s)

    d_i = delta(i)
    ker_dim = d_i.cols - linalg.rank(d_i)
    if i == 0:
        return ker_dim
    d_prev = delta(i - 1)
    return ker_dim - linalg.rank(d_prev)


def ext_vanishes_above(m, n, d, limit, cap=DEFAULT_CAP):
    """True if Ext^i(m, n) = 0 for d < i <= limit."""
    return all(ext_dim(i, m, n, cap) == 0 for i in range(d + 1, limit + 1))


# -- realized extension classes ---------------------------------------------

class ExtClass:
    """A short exact sequence 0 -> n -> middle -> m -> 0."""

    def __init__(self, incl, proj):
        self.incl = incl         # n -> middle
        self.proj = proj         # middle -> m
        self.middle = incl.target

    def is_exact(self):
        if not (self.incl.is_injective() and self.proj.is_surjective()):
            return False
        comp = compose(self.proj, self.incl)
        if not all(b.is_zero() for b in comp.blocks):
            return False
        return self.middle.total_dim == self.incl.source.total_dim + self.proj.target.total_dim

    def splits(self):
        """Does the projection admit a right inverse?"""
        m = self.proj.target
        homs = hom_basis(m, self.middle)
        if not homs:
            return m.total_dim == 0
        F = m.algebra.field
        # solve: sum c_i (proj . sigma_i) = id in Hom(m, m) coordinates
        cols = []
        for sig in homs:
            comp = compose(self.proj, sig)
            cols.append([e for b in comp.blocks for e in b.entries])
        ident = reps.identity_morphism(m)
        target = [e for b in ident.blocks for e in b.entries]
        mat = Matrix.from_columns(F, cols, rows=len(target))
        return linalg.solve(mat, target) is not None


def _cocycle_classes(m, n):
    """Basis of Ext^1(m, n) as morphisms Omega(m) -> n, plus the syzygy data."""
    res = min_proj_resolution(m, 1)
    res.extend_to(1)
    cover = res.diffs[0]
    P0 = res.term_reps[0]
    ker = kernel(cover)
    omega, incl = ker.as_rep()
    F = m.algebra.field
    cocycles = hom_basis(omega, n)
    if not cocycles:
        return [], omega, incl, cover
    # coboundaries: restrictions of Hom(P0, n) along the inclusion
    vec_len = sum(b.rows * b.cols for b in cocycles[0].blocks)

    def flat(f):
        return [e for b in f.blocks for e in b.entries]

    cob = [flat(compose(g, incl)) for g in hom_basis(P0, n)]
    cob_mat = Matrix.from_columns(F, cob, rows=vec_len) if cob else Matrix(F, vec_len, 0, [])
    reps_out = []
    chosen = Matrix(F, vec_len, 0, [])
    for c in cocycles:
        candidate = linalg.hstack([cob_mat, chosen,
                                   Matrix.from_columns(F, [flat(c)], rows=vec_len)])
        if linalg.rank(candidate) > linalg.rank(linalg.hstack([cob_mat, chosen])):
            reps_out.append(c)
            chosen = linalg.hstack([chosen, Matrix.from_columns(F, [flat(c)], rows=vec_len)])
    return reps_out, omega, incl, cover


def _pushout_extension(n, omega, incl, cover, cocycle):
    """Build 0 -> n -> Z -> m -> 0 from a cocycle Omega(m) -> n.

    Z = (n ⊕ P0) / {(cocycle(w), -incl(w))}.
    """
    a = n.algebra
    F = a.field
    P0 = cover.source
    m = cover.target
    total = direct_sum([n, P0])
    incl_n, incl_p = total.summand_inclusions
    sub_vecs = []
    for v in range(a.n):
        cols = []
        for j in range(omega.dims[v]):
            w_img_n = cocycle.blocks[v].column(j)
            w_img_p = [F.neg(x) for x in incl.blocks[v].column(j)]
            col = [F.zero] * total.dims[v]
            nb = incl_n.blocks[v]
            pb = incl_p.blocks[v]
            vec_n = nb.apply(w_img_n)
            vec_p = pb.apply(w_img_p)
            col = [F.add(x, y) for x, y in zip(vec_n, vec_p)]
            cols.append(col)
        sub_vecs.append(Matrix.from_columns(F, cols, rows=total.dims[v]))
    W = reps.Submodule(total, sub_vecs, check=False)
    Z, pi = quotient(total, W)
    emb = compose(pi, incl_n)                      # n -> Z
    # projection Z -> m: descend (x, y) -> cover(y); use the linear sections of pi
    blocks = []
    for v in range(a.n):
        sec = pi.section_blocks[v]
        comp = cover.blocks[v].mul(incl_p.blocks[v].transpose()).mul(sec)
        blocks.append(comp)
    proj = Morphism(Z, m, blocks)
    return ExtClass(emb, proj)


def ext1_classes(m, n):
    """Basis of Ext^1(m, n) realized as non-split short exact sequences."""
    cocycles, omega, incl, cover = _cocycle_classes(m, n)
    return [_pushout_extension(n, omega, incl, cover, c) for c in cocycles]


def universal_extension(q, x):
    """0 -> x -> Z -> q^r -> 0 realizing a basis of Ext^1(q, x) at once.

    Returns (middle, embedding of x, projection onto q^r).
    """
    cocycles, omega, incl, cover = _cocycle_classes(q, x)
    r = len(cocycles)
    if r == 0:
        raise NothingToExtend("Ext^1(q, x) = 0")
    a = q.algebra
    F = a.field
    qr = direct_sum([q] * r) if r > 1 else None
    P0 = cover.source
    if r == 1:
        return_ext = _pushout_extension(x, omega, incl, cover, cocycles[0])
        return return_ext.middle, return_ext.incl, return_ext.proj
    Pr = direct_sum([P0] * r)
    Or = direct_sum([omega] * r)
    # block-diagonal cover and inclusion, block-row cocycle
    cover_r = Morphism(Pr, qr, [linalg.block_diag(F, [cover.blocks[v]] * r)
                                for v in range(a.n)])
    incl_r = Morphism(Or, Pr, [linalg.block_diag(F, [incl.blocks[v]] * r)
                               for v in range(a.n)])
    coc = Morphism(Or, x, [linalg.hstack([c.blocks[v] for c in cocycles])
                           for v in range(a.n)])
    ext = _pushout_extension(x, Or, incl_r, cover_r, coc)
    return ext.middle, ext.incl, ext.proj
