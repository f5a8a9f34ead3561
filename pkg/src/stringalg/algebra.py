"""Algebra contexts: the fixed two-vertex path algebra with relations and
the group algebras over GF(2)/GF(4) it is compared against.

A context carries the regular module, expressions for a basis and for a
spanning set of the radical (as words in the generators, so they can be
evaluated on any module), the simple modules and the projective
indecomposables.  Group-algebra radicals are computed as the joint
annihilator of the simples; completeness of the simple list is checked
against the Wedderburn dimension count, and the symmetric-algebra
property soc(P) = top(P) is asserted rather than assumed.
"""

from __future__ import annotations

from .errors import FieldTooSmall, SplitFailure
from .gf import GF, OMEGA
from .matrix import Mat
from .rep import ModuleRep
from . import calculus
from .words import ALPHA, BETA, GAMMA, ETA

ARROW_GEN = ("alpha", "beta", "gamma", "eta")
_ARROW_S = (0, 0, 1, 1)
_ARROW_E = (0, 1, 0, 1)


class AlgebraContext:
    __slots__ = (
        "name",
        "field",
        "gen_names",
        "dim",
        "regular",
        "basis_expr",
        "rad_expr",
        "simples",
        "simple_names",
        "pims",
        "gen_perms",
        "elements",
    )

    def __init__(self, name, field, gen_names):
        self.name = name
        self.field = field
        self.gen_names = tuple(gen_names)
        self.dim = 0
        self.regular = None
        self.basis_expr = []
        self.rad_expr = []
        self.simples = []
        self.simple_names = []
        self.pims = []
        self.gen_perms = None
        self.elements = None

    def __repr__(self):
        return f"AlgebraContext({self.name}, {self.field})"


_CONTEXTS: dict[tuple, AlgebraContext] = {}


# -- the path algebra --------------------------------------------------------

# Path basis of the quotient algebra: index, name, arrow word (leftmost
# composes last), end vertex e(p), source vertex s(p).  The two relations
# identify alpha.gamma.beta with gamma.beta.alpha and eta.eta with
# beta.alpha.gamma; the latter normal forms are the chosen basis vectors.
_PATHS = [
    ("p_e0", (), 0, 0),
    ("p_e1", (), 1, 1),
    ("p_a", (ALPHA,), 0, 0),
    ("p_b", (BETA,), 1, 0),
    ("p_g", (GAMMA,), 0, 1),
    ("p_h", (ETA,), 1, 1),
    ("p_ba", (BETA, ALPHA), 1, 0),
    ("p_gb", (GAMMA, BETA), 0, 0),
    ("p_ag", (ALPHA, GAMMA), 0, 1),
    ("p_gba", (GAMMA, BETA, ALPHA), 0, 0),
    ("p_bag", (BETA, ALPHA, GAMMA), 1, 1),
]

# Left multiplication by each arrow on the path basis (everything not
# listed is zero; checked against the relations in the test suite).
_LEFT_MULT = {
    ALPHA: {0: 2, 4: 8, 7: 9},
    BETA: {0: 3, 2: 6, 8: 10},
    GAMMA: {1: 4, 3: 7, 6: 9},
    ETA: {1: 5, 5: 10},
}


def quiver_context(degree: int = 1) -> AlgebraContext:
    """The 11-dimensional special biserial algebra over GF(2^degree)."""
    key = ("Lambda", degree)
    if key in _CONTEXTS:
        return _CONTEXTS[key]
    field = GF(degree)
    ctx = AlgebraContext("Lambda", field, ("e0", "e1") + ARROW_GEN)
    ctx.dim = len(_PATHS)

    action = {}
    for v, name in ((0, "e0"), (1, "e1")):
        m = Mat.zeros(field, ctx.dim, ctx.dim)
        for i, (_, _, end, _) in enumerate(_PATHS):
            if end == v:
                m.set_entry(i, i, 1)
        action[name] = m
    for a in range(4):
        m = Mat.zeros(field, ctx.dim, ctx.dim)
        for src, dst in _LEFT_MULT[a].items():
            m.set_entry(dst, src, 1)
        action[ARROW_GEN[a]] = m
    ctx.regular = ModuleRep(ctx, ctx.dim, action, label="Lambda")

    def expr_of(i):
        _, arrows, end, _ = _PATHS[i]
        if arrows:
            return ((1, tuple(ARROW_GEN[a] for a in arrows)),)
        return ((1, (("e0", "e1")[end],)),)

    ctx.basis_expr = [expr_of(i) for i in range(ctx.dim)]
    ctx.rad_expr = [expr_of(i) for i in range(ctx.dim) if _PATHS[i][1]]

    for v, name in ((0, "S0"), (1, "S1")):
        act = {g: Mat.zeros(field, 1, 1) for g in ctx.gen_names}
        act[("e0", "e1")[v]] = Mat.identity(field, 1)
        ctx.simples.append(ModuleRep(ctx, 1, act, label=name))
    ctx.simple_names = ["S0", "S1"]

    for v, name in ((0, "P0"), (1, "P1")):
        idx = [i for i, (_, _, _, src) in enumerate(_PATHS) if src == v]
        act = {g: ctx.regular.action[g].submatrix(idx, idx) for g in ctx.gen_names}
        ctx.pims.append(ModuleRep(ctx, len(idx), act, label=name))

    _verify_context(ctx)
    _CONTEXTS[key] = ctx
    return ctx


# -- group algebras ---------------------------------------------------------------

_GROUP_GENS = {
    "S4": {"s": (1, 0, 2, 3), "t": (1, 2, 3, 0)},
    "A4": {"u": (1, 2, 0, 3), "v": (1, 0, 3, 2)},
    "C2": {"h": (1, 0, 2, 3)},
}


def perm_compose(p, q):
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_is_even(p):
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        ln = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        parity ^= (ln - 1) & 1
    return parity == 0


def group_elements(gens: dict) -> dict:
    """BFS words: element permutation -> tuple of generator names, with the
    leftmost name acting last."""
    ident = tuple(range(4))
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for name, g in gens.items():
                y = perm_compose(g, x)
                if y not in words:
                    words[y] = (name,) + words[x]
                    nxt.append(y)
        frontier = nxt
    return words


def _s4_simples(ctx):
    field = ctx.field
    t0 = ModuleRep(
        ctx,
        1,
        {g: Mat.identity(field, 1) for g in ctx.gen_names},
        label="T0",
    )
    # inflation through the quotient onto the symmetric group on the three
    # pair-partitions, acting on the 3-point permutation module mod the
    # all-ones vector
    t1 = ModuleRep(
        ctx,
        2,
        {
            "s": Mat.from_entries(field, [[1, 1], [0, 1]]),
            "t": Mat.from_entries(field, [[1, 0], [1, 1]]),
        },
        label="T1",
    )
    return [t0, t1], ["T0", "T1"]


def _a4_simples(ctx):
    field = ctx.field
    if field.order < 4:
        raise FieldTooSmall("cube roots of unity need GF(4)")
    simples = []
    names = []
    for k, name in ((0, "E0"), (1, "E1"), (2, "E2")):
        scalar = field.pow(OMEGA, k)
        act = {
            "u": Mat.from_entries(field, [[scalar]]),
            "v": Mat.identity(field, 1),
        }
        simples.append(ModuleRep(ctx, 1, act, label=name))
        names.append(name)
    return simples, names


def _c2_simples(ctx):
    t0 = ModuleRep(
        ctx,
        1,
        {g: Mat.identity(ctx.field, 1) for g in ctx.gen_names},
        label="k",
    )
    return [t0], ["k"]


def group_context(name: str, degree: int = 1) -> AlgebraContext:
    key = (name, degree)
    if key in _CONTEXTS:
        return _CONTEXTS[key]
    field = GF(degree)
    gens = _GROUP_GENS[name]
    ctx = AlgebraContext("k" + name, field, sorted(gens))
    ctx.gen_perms = dict(gens)
    ctx.elements = group_elements(gens)
    order = len(ctx.elements)
    ctx.dim = order

    basis = sorted(ctx.elements)
    pos = {x: i for i, x in enumerate(basis)}
    action = {}
    for gname in ctx.gen_names:
        g = gens[gname]
        m = Mat.zeros(field, order, order)
        for x, i in pos.items():
            m.set_entry(pos[perm_compose(g, x)], i, 1)
        action[gname] = m
    ctx.regular = ModuleRep(ctx, order, action, label="k" + name)
    ctx.basis_expr = [((1, ctx.elements[x]),) for x in basis]

    if name == "S4":
        ctx.simples, ctx.simple_names = _s4_simples(ctx)
    elif name == "A4":
        ctx.simples, ctx.simple_names = _a4_simples(ctx)
    else:
        ctx.simples, ctx.simple_names = _c2_simples(ctx)
    for S in ctx.simples:
        _assert_is_representation(ctx, S)

    ctx.rad_expr = _group_radical(ctx, basis)
    wedderburn = ctx.dim - sum(S.dim * S.dim for S in ctx.simples)
    if len(ctx.rad_expr) != wedderburn:
        raise SplitFailure(
            f"{ctx.name}: radical dim {len(ctx.rad_expr)} != {wedderburn}; simple list wrong"
        )

    ctx.pims = _group_pims(ctx)
    _verify_context(ctx)
    _CONTEXTS[key] = ctx
    return ctx


def _assert_is_representation(ctx, M):
    mats = {x: M.evaluate(((1, w),)) for x, w in ctx.elements.items()}
    for x, mx in mats.items():
        for gname in ctx.gen_names:
            g = ctx.gen_perms[gname]
            if mats[perm_compose(g, x)] != M.action[gname].mul(mx):
                raise SplitFailure(f"{M.label} is not a {ctx.name}-representation")


def _group_radical(ctx, basis):
    """Joint annihilator of the simples, as expressions over the group
    element basis."""
    field = ctx.field
    rows = []
    for S in ctx.simples:
        mats = [S.evaluate(((1, ctx.elements[x]),)) for x in basis]
        d = S.dim
        for i in range(d):
            for j in range(d):
                planes = [0] * field.degree
                for k, m in enumerate(mats):
                    e = m.entry(i, j)
                    for p in range(field.degree):
                        if (e >> p) & 1:
                            planes[p] |= 1 << k
                rows.append(planes)
    system = Mat(field, len(rows), ctx.dim, rows)
    kernel = system.nullspace()
    out = []
    for r in range(kernel.nrows):
        terms = tuple(
            (kernel.entry(r, k), ctx.elements[x])
            for k, x in enumerate(basis)
            if kernel.entry(r, k)
        )
        out.append(terms)
    return out


def _group_pims(ctx):
    parts = calculus.decompose(ctx.regular)
    reps = []
    for part in parts:
        for seen, count in reps:
            if calculus.is_isomorphic(part, seen):
                count[0] += 1
                break
        else:
            reps.append((part, [1]))
    ordered = []
    for i, S in enumerate(ctx.simples):
        hit = None
        for part, count in reps:
            if calculus.hom_dim(part, S) > 0:
                hit = (part, count[0])
                break
        if hit is None:
            raise SplitFailure(f"{ctx.name}: no projective cover summand for {S.label}")
        P, mult = hit
        if mult != S.dim:
            raise SplitFailure(
                f"{ctx.name}: {S.label} has cover multiplicity {mult}, expected {S.dim}"
            )
        ordered.append(P.relabel(f"P({S.label})"))
    return ordered


def _verify_context(ctx):
    # dim check: regular = sum of PIMs with multiplicity dim(simple)
    if sum(P.dim * S.dim for P, S in zip(ctx.pims, ctx.simples)) != ctx.dim:
        raise SplitFailure(f"{ctx.name}: PIM/simple dimension count failed")
    # split simples
    for S in ctx.simples:
        if calculus.hom_dim(S, S) != 1:
            raise SplitFailure(f"{ctx.name}: End({S.label}) != k")
    # radical annihilates the simples
    for S in ctx.simples:
        for e in ctx.rad_expr:
            if not S.evaluate(e).is_zero():
                raise SplitFailure(f"{ctx.name}: radical does not annihilate {S.label}")
    # symmetric-algebra property used for negative syzygies:
    # socle of each PIM is simple and isomorphic to its top
    for P, S in zip(ctx.pims, ctx.simples):
        soc = calculus.socle_rows(P)
        if soc.nrows != S.dim:
            raise SplitFailure(f"{ctx.name}: socle of {P.label} is not simple")
        sub, _ = calculus.sub_module(P, soc)
        if not calculus.is_isomorphic(sub, S):
            raise SplitFailure(f"{ctx.name}: socle of {P.label} is not its top")


def extend_scalars(M: ModuleRep, degree: int) -> ModuleRep:
    """View a GF(2) module over GF(2^degree) (entries 0/1 embed as-is)."""
    src = M.algebra
    if src.field.degree != 1:
        raise FieldTooSmall("scalar extension only from GF(2)")
    if src.name == "Lambda":
        ctx = quiver_context(degree)
    else:
        ctx = group_context(src.name[1:], degree)
    action = {
        name: Mat.from_entries(ctx.field, M.action[name].to_entries())
        for name in ctx.gen_names
    }
    return ModuleRep(ctx, M.dim, action, label=M.label)
