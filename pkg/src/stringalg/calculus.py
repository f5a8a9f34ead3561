"""Module calculus over a fixed algebra context: Hom spaces, covers,
syzygies, stable Hom, Ext^1, isomorphism testing, Fitting decomposition,
radical/socle structure and non-split extensions.

Everything reduces to exact linear algebra.  Hom spaces are intertwiner
solution spaces; a map factors through a projective iff it lifts along the
projective cover of its target, which is one consistency solve.  Negative
syzygies use the symmetry of the algebras at hand (socle of a projective
indecomposable is isomorphic to its top; this is asserted at setup).
"""

from __future__ import annotations

import random

from .errors import (
    ContextMismatch,
    DimensionMismatch,
    ProjectiveInput,
    SplitFailure,
    SplitOnly,
)
from .matrix import Mat, RowBasisGF2, RowBasisGen, hstack, row_basis, vstack
from .rep import HomElement, ModuleRep, direct_sum


def _check_context(M: ModuleRep, N: ModuleRep):
    if M.algebra is not N.algebra:
        raise ContextMismatch(f"{M!r} vs {N!r}")


# -- Hom spaces ---------------------------------------------------------------


def _hom_rows_gf2(M, N, shift=0):
    """Equation rows (ints) for X with X*a_M = a_N*X, unknown X[i,j] at bit
    i*M.dim + j + shift."""
    m = M.dim
    rows = []
    for name in M.algebra.gen_names:
        A = M.action[name]
        B = N.action[name]
        acols = A.cols_nonzero()
        brows = B.rows_nonzero()
        for i in range(N.dim):
            base = []
            for r, _ in brows[i]:
                base.append(r * m)
            for j in range(m):
                row = 0
                for c, _ in acols[j]:
                    row ^= 1 << (i * m + c + shift)
                for rbase in base:
                    row ^= 1 << (rbase + j + shift)
                if row:
                    rows.append(row)
    return rows


def _hom_rows_generic(M, N, shift=0):
    field = M.field
    deg = field.degree
    m = M.dim
    width_rows = []
    for name in M.algebra.gen_names:
        A = M.action[name]
        B = N.action[name]
        acols = A.cols_nonzero()
        brows = B.rows_nonzero()
        for i in range(N.dim):
            for j in range(m):
                terms = {}
                for c, v in acols[j]:
                    u = i * m + c + shift
                    terms[u] = terms.get(u, 0) ^ v
                for r, v in brows[i]:
                    u = r * m + j + shift
                    terms[u] = terms.get(u, 0) ^ v
                planes = [0] * deg
                nonzero = False
                for u, v in terms.items():
                    if v:
                        nonzero = True
                        for p in range(deg):
                            if (v >> p) & 1:
                                planes[p] |= 1 << u
                if nonzero:
                    width_rows.append(planes)
    return width_rows


def hom_dim(M: ModuleRep, N: ModuleRep) -> int:
    _check_context(M, N)
    unknowns = M.dim * N.dim
    if unknowns == 0:
        return 0
    if M.field.degree == 1:
        basis = RowBasisGF2()
        for row in _hom_rows_gf2(M, N):
            basis.insert(row)
    else:
        basis = RowBasisGen(M.field)
        for row in _hom_rows_generic(M, N):
            basis.insert(row)
    return unknowns - basis.rank


def hom_basis(M: ModuleRep, N: ModuleRep) -> list[Mat]:
    """Basis of intertwiners as matrices (N.dim x M.dim)."""
    _check_context(M, N)
    unknowns = M.dim * N.dim
    if unknowns == 0:
        return []
    field = M.field
    if field.degree == 1:
        int_rows = _hom_rows_gf2(M, N)
        rows = [[r] for r in int_rows]
    else:
        rows = _hom_rows_generic(M, N)
    system = Mat(field, len(rows), unknowns, rows if rows else None)
    kernel = system.nullspace() if rows else Mat.identity(field, unknowns)
    out = []
    m = M.dim
    for k in range(kernel.nrows):
        f = Mat.zeros(field, N.dim, m)
        for p in range(field.degree):
            plane = kernel.rows[k][p]
            for i in range(N.dim):
                f.rows[i][p] = (plane >> (i * m)) & ((1 << m) - 1)
        out.append(f)
    return out


def hom_space(M: ModuleRep, N: ModuleRep) -> list[HomElement]:
    return [HomElement(M, N, f) for f in hom_basis(M, N)]


def end_dim(M: ModuleRep) -> int:
    return hom_dim(M, M)


# -- sub/quotient machinery ---------------------------------------------------


def sub_module(M: ModuleRep, rows: Mat, label: str = "") -> tuple[ModuleRep, Mat]:
    """Submodule spanned by the given row vectors.

    Returns (S, inc) with inc an (M.dim x S.dim) inclusion matrix.
    Raises if the span is not invariant.
    """
    basis = rows.row_space()
    r = basis.nrows
    inc = basis.transpose()
    R, pivots = basis.rref()
    action = {}
    for name in M.algebra.gen_names:
        prod = M.action[name].mul(inc)  # M.dim x r
        coords = prod.submatrix(pivots, range(r))
        if inc.mul(coords) != prod:
            raise DimensionMismatch(f"span not invariant under {name}")
        action[name] = coords
    return ModuleRep(M.algebra, r, action, label or f"sub({M.label})"), inc


def quotient_module(M: ModuleRep, rows: Mat, label: str = "") -> tuple[ModuleRep, Mat]:
    """Quotient of M by the invariant span of the given row vectors.

    Returns (Q, proj) with proj a (Q.dim x M.dim) projection matrix.
    """
    basis = rows.row_space()
    R, pivots = basis.rref()
    pivot_set = set(pivots)
    free = [c for c in range(M.dim) if c not in pivot_set]
    field = M.field
    proj = Mat.zeros(field, len(free), M.dim)
    for a, fc in enumerate(free):
        proj.rows[a][0] |= 1 << fc
    for k, pc in enumerate(pivots):
        # e_{pc} reduces to (row k restricted to free coordinates)
        for a, fc in enumerate(free):
            e = R.entry(k, fc)
            if e:
                for p in range(field.degree):
                    if (e >> p) & 1:
                        proj.rows[a][p] |= 1 << pc
    section = Mat.zeros(field, M.dim, len(free))
    for a, fc in enumerate(free):
        section.rows[fc][0] |= 1 << a
    action = {}
    for name in M.algebra.gen_names:
        act = proj.mul(M.action[name])
        if not act.mul(basis.transpose()).is_zero():
            raise DimensionMismatch(f"span not invariant under {name}")
        action[name] = act.mul(section)
    Q = ModuleRep(M.algebra, len(free), action, label or f"quot({M.label})")
    return Q, proj


def kernel_module(f: Mat, M: ModuleRep, label: str = "") -> tuple[ModuleRep, Mat]:
    """Kernel of a module map out of M (f has M.dim columns)."""
    return sub_module(M, f.nullspace(), label)


def image_module(f: Mat, N: ModuleRep, label: str = "") -> tuple[ModuleRep, Mat]:
    """Image of a module map into N (f has N.dim rows)."""
    return sub_module(N, f.column_space(), label)


# -- tops, socles, covers -------------------------------------------------------


def rad_rows(M: ModuleRep) -> Mat:
    """Row space of rad(A) * M."""
    mats = M.rad_matrices()
    if not mats:
        return Mat.zeros(M.field, 0, M.dim)
    return vstack([m.transpose() for m in mats]).row_space()


def top_multiplicities(M: ModuleRep) -> list[int]:
    return [hom_dim(M, S) for S in M.algebra.simples]


def socle_multiplicities(M: ModuleRep) -> list[int]:
    return [hom_dim(S, M) for S in M.algebra.simples]


def socle_rows(M: ModuleRep) -> Mat:
    mats = M.rad_matrices()
    if not mats:
        return Mat.identity(M.field, M.dim)
    return vstack(mats).nullspace()


def _rank_with(vectors: list, width: int, field) -> int:
    basis = row_basis(field)
    for v in vectors:
        basis.insert(v)
    return basis.rank


def _mat_rows_as_vectors(mat: Mat, field):
    if field.degree == 1:
        return [row[0] for row in mat.rows]
    return [list(row) for row in mat.rows]


def projective_cover(M: ModuleRep) -> tuple[ModuleRep, Mat]:
    """(P, pi) with P a sum of projective indecomposables matching top
    multiplicities and pi: P ->> M surjective (pi is M.dim x P.dim)."""
    if "cover" in M.cache:
        return M.cache["cover"]
    ctx = M.algebra
    field = M.field
    tops = top_multiplicities(M)
    acc = _mat_rows_as_vectors(rad_rows(M), field)
    blocks = []
    summands = []
    for i, P_i in enumerate(ctx.pims):
        need = tops[i]
        if need == 0:
            continue
        for h in hom_basis(P_i, M):
            if need == 0:
                break
            cols = _mat_rows_as_vectors(h.transpose(), field)
            before = _rank_with(acc, M.dim, field)
            after = _rank_with(acc + cols, M.dim, field)
            if after > before:
                acc = acc + cols
                blocks.append(h)
                summands.append(P_i)
                need -= 1
        if need:
            raise SplitFailure(f"cover of {M!r}: not enough maps from {P_i.label}")
    if not blocks:
        raise DimensionMismatch("cover of the zero module")
    pi = hstack(blocks)
    P = direct_sum(summands, label=f"P({M.label})")
    if pi.rank() != M.dim:
        raise SplitFailure(f"cover of {M!r} is not surjective")
    result = (P, pi)
    M.cache["cover"] = result
    return result


def injective_envelope(M: ModuleRep) -> tuple[ModuleRep, Mat]:
    """(I, emb) with emb: M >-> I injective (emb is I.dim x M.dim).

    Uses that the projective indecomposables are also the injective
    indecomposables with matching socle (symmetric algebra)."""
    if "envelope" in M.cache:
        return M.cache["envelope"]
    ctx = M.algebra
    socs = socle_multiplicities(M)
    soc_inc = socle_rows(M).transpose()  # M.dim x socdim
    blocks = []
    summands = []
    # a module map is injective iff it is injective on the socle, so track
    # the rank of the chosen maps restricted to soc(M)
    soc_rank = 0
    restricted = []
    for i, P_i in enumerate(ctx.pims):
        need = socs[i]
        if need == 0:
            continue
        for g in hom_basis(M, P_i):
            if need == 0:
                break
            cand = restricted + [g.mul(soc_inc)]
            r = vstack(cand).rank()
            if r > soc_rank:
                soc_rank = r
                restricted = cand
                blocks.append(g)
                summands.append(P_i)
                need -= 1
        if need:
            raise SplitFailure(f"envelope of {M!r}: not enough maps to {P_i.label}")
    if soc_rank != soc_inc.ncols:
        raise SplitFailure(f"envelope of {M!r} is not injective on the socle")
    emb = vstack(blocks)
    if emb.nullspace().nrows != 0:
        raise SplitFailure(f"envelope of {M!r} is not injective")
    I = direct_sum(summands, label=f"I({M.label})")
    result = (I, emb)
    M.cache["envelope"] = result
    return result


def syzygy(M: ModuleRep, steps: int = 1, strict: bool = False) -> ModuleRep:
    """Omega^steps: kernels of covers for steps > 0, cokernels of
    envelopes for steps < 0.

    Projective direct summands are absorbed (the kernel of a cover does
    not see them); with strict=True a projective input raises
    ProjectiveInput instead of returning the zero module."""
    if strict and M.dim and syzygy(M).dim == 0:
        raise ProjectiveInput(f"{M.label} is projective")
    cur = M
    while steps > 0:
        key = "syzygy"
        if key not in cur.cache:
            P, pi = projective_cover(cur)
            S, _ = sub_module(P, pi.nullspace(), label=f"O({cur.label})")
            cur.cache[key] = S
        cur = cur.cache[key]
        steps -= 1
    while steps < 0:
        key = "cosyzygy"
        if key not in cur.cache:
            I, emb = injective_envelope(cur)
            Q, _ = quotient_module(I, emb.transpose().row_space(), label=f"O-({cur.label})")
            cur.cache[key] = Q
        cur = cur.cache[key]
        steps += 1
    return cur


# -- stable homs, Ext^1 ------------------------------------------------------------


def stable_hom_dim(M: ModuleRep, N: ModuleRep) -> int:
    """dim of Hom(M,N) modulo maps factoring through a projective.

    A map factors through a projective iff it lifts along the projective
    cover of N, so the factoring subspace is the image of Hom(M, P(N))
    under composition with the cover map."""
    _check_context(M, N)
    if N.dim == 0 or M.dim == 0:
        return 0
    P, _ = projective_cover(N)
    omega_n = syzygy(N)
    return hom_dim(M, N) - (hom_dim(M, P) - hom_dim(M, omega_n))


def stable_end_dim(M: ModuleRep) -> int:
    return stable_hom_dim(M, M)


def factors_through_projective(f: Mat, M: ModuleRep, N: ModuleRep) -> bool:
    """Does the module map f: M -> N factor through a projective?

    Solves for g in Hom(M, P(N)) with pi*g = f; bit 0 is the RHS."""
    _check_context(M, N)
    P, pi = projective_cover(N)
    field = M.field
    m = M.dim
    if field.degree == 1:
        basis = RowBasisGF2()
        for row in _hom_rows_gf2(M, P, shift=1):
            basis.insert(row)
        pirows = pi.rows_nonzero()
        for i in range(N.dim):
            for j in range(m):
                row = 1 if f.entry(i, j) else 0
                for r, _ in pirows[i]:
                    row ^= 1 << (r * m + j + 1)
                if row:
                    basis.insert(row)
        return 0 not in basis.basis
    basis = RowBasisGen(field)
    for row in _hom_rows_generic(M, P, shift=1):
        basis.insert(row)
    deg = field.degree
    pirows = pi.rows_nonzero()
    for i in range(N.dim):
        for j in range(m):
            terms = {}
            e = f.entry(i, j)
            if e:
                terms[0] = e
            for r, v in pirows[i]:
                u = r * m + j + 1
                terms[u] = terms.get(u, 0) ^ v
            planes = [0] * deg
            nz = False
            for u, v in terms.items():
                if v:
                    nz = True
                    for p in range(deg):
                        if (v >> p) & 1:
                            planes[p] |= 1 << u
            if nz:
                basis.insert(planes)
    return 0 not in basis.basis


def ext1_dim(M: ModuleRep, N: ModuleRep) -> int:
    """dim Ext^1(M, N) via the stable-Hom formula for symmetric algebras."""
    return stable_hom_dim(syzygy(M), N)


def ext1_dim_cocycles(M: ModuleRep, N: ModuleRep) -> int:
    """Independent route: classes of cocycles Omega(M) -> N modulo
    restrictions of maps P(M) -> N."""
    _check_context(M, N)
    P, pi = projective_cover(M)
    krows = pi.nullspace()
    OmegaM, inc = sub_module(P, krows, label=f"O({M.label})")
    total = hom_dim(OmegaM, N)
    field = M.field
    basis = row_basis(field)
    for g in hom_basis(P, N):
        restricted = g.mul(inc)
        if field.degree == 1:
            vec = 0
            for i in range(restricted.nrows):
                vec |= restricted.rows[i][0] << (i * restricted.ncols)
            basis.insert(vec)
        else:
            planes = [0] * field.degree
            for i in range(restricted.nrows):
                for p in range(field.degree):
                    planes[p] |= restricted.rows[i][p] << (i * restricted.ncols)
            basis.insert(planes)
    return total - basis.rank


# -- isomorphism and decomposition ------------------------------------------------


def _combo(field, basis_mats, coeffs):
    out = Mat.zeros(field, basis_mats[0].nrows, basis_mats[0].ncols)
    for c, h in zip(coeffs, basis_mats):
        if c == 0:
            continue
        out = out.add(h if c == 1 else h.scale(c))
    return out


def _fitting_power(f: Mat) -> Mat:
    pw = 1
    while pw < f.nrows:
        pw <<= 1
    return f.power(pw)


def _nilpotent(f: Mat) -> bool:
    return _fitting_power(f).is_zero()


def is_isomorphic(M: ModuleRep, N: ModuleRep, seed: int = 0) -> bool:
    """Exact isomorphism test.

    Exhaustive search for an invertible hom when the space is tiny, then
    seeded random combinations, then a complete certificate based on
    Fitting decomposition and local endomorphism rings."""
    _check_context(M, N)
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    H = hom_basis(M, N)
    d = len(H)
    if d == 0:
        return False
    if not (hom_dim(M, M) == hom_dim(N, N) == hom_dim(N, M) == d):
        return False
    q = M.field.order
    if q**d <= 8192:
        coeffs = [0] * d
        for _ in range(q**d - 1):
            k = 0
            while True:
                coeffs[k] += 1
                if coeffs[k] < q:
                    break
                coeffs[k] = 0
                k += 1
            if _combo(M.field, H, coeffs).is_invertible():
                return True
        return False
    rng = random.Random(seed)
    for _ in range(64):
        coeffs = [rng.randrange(q) for _ in range(d)]
        if any(coeffs) and _combo(M.field, H, coeffs).is_invertible():
            return True
    return _certified_iso(M, N)


def _indecomposable_iso(U: ModuleRep, V: ModuleRep) -> bool:
    """U, V indecomposable: isomorphic iff some composite V->U->V ... of
    basis homs is non-nilpotent (local endomorphism rings)."""
    if U.dim != V.dim:
        return False
    fwd = hom_basis(U, V)
    bwd = hom_basis(V, U)
    for f in fwd:
        for g in bwd:
            if not _nilpotent(g.mul(f)):
                return True
    return False


def indec_isomorphic(U: ModuleRep, V: ModuleRep) -> bool:
    """Deterministic isomorphism test for modules KNOWN to be
    indecomposable: local endomorphism rings make a non-nilpotent
    composite through the other module a complete certificate."""
    _check_context(U, V)
    if U.dim != V.dim:
        return False
    if U.dim == 0:
        return True
    if hom_dim(U, U) != hom_dim(V, V) or hom_dim(U, V) != hom_dim(V, U):
        return False
    if hom_dim(U, V) == 0:
        return False
    return _indecomposable_iso(U, V)


def _certified_iso(M: ModuleRep, N: ModuleRep) -> bool:
    parts_m = decompose(M)
    parts_n = list(decompose(N))
    if len(parts_m) != len(parts_n):
        return False
    for U in parts_m:
        hit = None
        for k, V in enumerate(parts_n):
            if _indecomposable_iso(U, V):
                hit = k
                break
        if hit is None:
            return False
        parts_n.pop(hit)
    return True


def _split_by(f: Mat, M: ModuleRep):
    g = _fitting_power(f)
    r = g.rank()
    if r == 0 or r == M.dim:
        return None
    img, _ = image_module(g, M, label=f"{M.label}.im")
    ker, _ = kernel_module(g, M, label=f"{M.label}.ker")
    return img, ker


def decompose(M: ModuleRep) -> list[ModuleRep]:
    """Indecomposable direct summands via Fitting splitting."""
    if M.dim == 0:
        return []
    E = hom_basis(M, M)
    d = len(E)
    if d == 1:
        return [M]
    field = M.field
    ident = Mat.identity(field, M.dim)

    def candidates():
        for f in E:
            yield f
        for f in E:
            for c in field.nonzero_elements():
                yield f.add(ident.scale(c))
        for f in E:
            for g in E:
                if f is not g:
                    yield f.mul(g)
        for f in E:
            for g in E:
                if f is not g:
                    for c in field.nonzero_elements():
                        yield f.mul(g).add(ident.scale(c))

    for f in candidates():
        split = _split_by(f, M)
        if split:
            return decompose(split[0]) + decompose(split[1])

    # certify indecomposability: every endomorphism nilpotent or invertible
    if field.order**d <= 8192:
        coeffs = [0] * d
        for _ in range(field.order**d - 1):
            k = 0
            while True:
                coeffs[k] += 1
                if coeffs[k] < field.order:
                    break
                coeffs[k] = 0
                k += 1
            f = _combo(field, E, coeffs)
            g = _fitting_power(f)
            r = g.rank()
            if 0 < r < M.dim:
                img, _ = image_module(g, M, label=f"{M.label}.im")
                ker, _ = kernel_module(g, M, label=f"{M.label}.ker")
                return decompose(img) + decompose(ker)
        return [M]
    raise SplitFailure(f"cannot certify indecomposability of {M!r} (End dim {d})")


# -- extensions -----------------------------------------------------------------


def nonsplit_extension(top: ModuleRep, bottom: ModuleRep, cocycle_index: int = 0) -> ModuleRep:
    """Middle term of a non-split extension of `top` by `bottom`.

    Built as the pushout of Omega(top) -> P(top) along a cocycle
    Omega(top) -> bottom chosen outside the coboundary space."""
    _check_context(top, bottom)
    P, pi = projective_cover(top)
    OmegaT, inc = sub_module(P, pi.nullspace(), label=f"O({top.label})")
    field = top.field
    cob = row_basis(field)

    def vec_of(mat):
        if field.degree == 1:
            v = 0
            for i in range(mat.nrows):
                v |= mat.rows[i][0] << (i * mat.ncols)
            return v
        planes = [0] * field.degree
        for i in range(mat.nrows):
            for p in range(field.degree):
                planes[p] |= mat.rows[i][p] << (i * mat.ncols)
        return planes

    for g in hom_basis(P, bottom):
        cob.insert(vec_of(g.mul(inc)))
    chosen = []
    for h in hom_basis(OmegaT, bottom):
        probe = row_basis(field)
        probe.basis = dict(cob.basis)
        probe.rank = cob.rank
        if probe.insert(vec_of(h)):
            chosen.append(h)
    if not chosen:
        raise SplitOnly(f"no non-split extension of {top.label} by {bottom.label}")
    h = chosen[cocycle_index % len(chosen)]
    big = direct_sum([bottom, P])
    rows = Mat.zeros(field, OmegaT.dim, big.dim)
    for k in range(OmegaT.dim):
        for p in range(field.degree):
            row = 0
            for i in range(bottom.dim):
                if (h.rows[i][p] >> k) & 1:
                    row |= 1 << i
            for i in range(P.dim):
                if (inc.rows[i][p] >> k) & 1:
                    row |= 1 << (bottom.dim + i)
            rows.rows[k][p] = row
    E, _ = quotient_module(big, rows, label=f"E({top.label},{bottom.label})")
    if E.dim != top.dim + bottom.dim:
        raise DimensionMismatch("extension has wrong dimension")
    return E


# -- structure ------------------------------------------------------------------


def radical_series(M: ModuleRep) -> list[list[int]]:
    """Multiplicities of each simple in rad^j M / rad^{j+1} M, top down."""
    layers = []
    cur = M
    while cur.dim:
        rows = rad_rows(cur)
        tops = top_multiplicities(cur)
        layers.append(tops)
        if rows.nrows == 0:
            break
        cur, _ = sub_module(cur, rows, label=f"rad^k({M.label})")
    return layers


def socle_series(M: ModuleRep) -> list[list[int]]:
    """Multiplicities of each simple in soc^{j+1}/soc^j, bottom up."""
    layers = []
    cur = M
    while cur.dim:
        socs = socle_multiplicities(cur)
        layers.append(socs)
        rows = socle_rows(cur)
        if rows.nrows == cur.dim:
            break
        cur, _ = quotient_module(cur, rows, label=f"M/soc^k({M.label})")
    return layers


def composition_multiplicities(M: ModuleRep) -> list[int]:
    """Multiplicity of each simple among composition factors, counted via
    Hom from the projective indecomposables."""
    return [hom_dim(P_i, M) for P_i in M.algebra.pims]


def structure(M: ModuleRep) -> dict:
    return {
        "dim": M.dim,
        "radical_series": radical_series(M),
        "socle_series": socle_series(M),
        "multiplicities": composition_multiplicities(M),
    }
