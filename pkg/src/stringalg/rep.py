"""Finite-dimensional modules given by generator matrices."""

from __future__ import annotations

from .errors import ContextMismatch, DimensionMismatch
from .matrix import Mat, block_diag


class ModuleRep:
    """A module over an algebra context: one square matrix per generator.

    Instances are treated as immutable; ``cache`` holds derived data
    (radical matrices, projective cover, ...) keyed by name.
    """

    __slots__ = ("algebra", "dim", "action", "label", "cache")

    def __init__(self, algebra, dim: int, action: dict[str, Mat], label: str = ""):
        for name in algebra.gen_names:
            m = action[name]
            if m.nrows != dim or m.ncols != dim:
                raise DimensionMismatch(f"generator {name} is not {dim}x{dim}")
        self.algebra = algebra
        self.dim = dim
        self.action = action
        self.label = label
        self.cache = {}

    @property
    def field(self):
        return self.algebra.field

    def act(self, name: str) -> Mat:
        return self.action[name]

    def evaluate(self, expr) -> Mat:
        """expr is a tuple of (coeff, generator-name word); the word
        multiplies left to right, so the rightmost generator acts first."""
        out = Mat.zeros(self.field, self.dim, self.dim)
        for coeff, word in expr:
            if coeff == 0:
                continue
            term = Mat.identity(self.field, self.dim)
            for name in word:
                term = term.mul(self.action[name])
            if coeff != 1:
                term = term.scale(coeff)
            out = out.add(term)
        return out

    def rad_matrices(self) -> list[Mat]:
        if "rad_mats" not in self.cache:
            self.cache["rad_mats"] = [self.evaluate(e) for e in self.algebra.rad_expr]
        return self.cache["rad_mats"]

    def relabel(self, label: str) -> "ModuleRep":
        out = ModuleRep(self.algebra, self.dim, self.action, label)
        out.cache = self.cache
        return out

    def to_json_dict(self) -> dict:
        field = self.field
        m = field.degree

        def pack_row(mat, r):
            v = 0
            for c in range(mat.ncols):
                v |= mat.entry(r, c) << (c * m)
            width = max(1, (mat.ncols * m + 3) // 4)
            return f"{v:0{width}x}"

        return {
            "algebra": self.algebra.name,
            "field": {"degree": field.degree, "modulus": field.modulus},
            "dim": self.dim,
            "label": self.label,
            "generators": {
                name: [pack_row(mat, r) for r in range(mat.nrows)]
                for name, mat in sorted(self.action.items())
            },
        }

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"ModuleRep({self.algebra.name}, dim={self.dim}{tag})"


def module_from_json(algebra, data: dict) -> ModuleRep:
    m = algebra.field.degree
    dim = data["dim"]
    mask = (1 << m) - 1
    action = {}
    for name, rows in data["generators"].items():
        mat = Mat.zeros(algebra.field, dim, dim)
        for r, hexrow in enumerate(rows):
            v = int(hexrow, 16)
            for c in range(dim):
                mat.set_entry(r, c, (v >> (c * m)) & mask)
        action[name] = mat
    return ModuleRep(algebra, dim, action, data.get("label", ""))


class HomElement:
    """A linear map source -> target commuting with every generator."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: ModuleRep, target: ModuleRep, matrix: Mat):
        if source.algebra is not target.algebra:
            raise ContextMismatch("hom between different algebra contexts")
        if matrix.nrows != target.dim or matrix.ncols != source.dim:
            raise DimensionMismatch("hom matrix has wrong shape")
        self.source = source
        self.target = target
        self.matrix = matrix

    def is_valid(self) -> bool:
        f = self.matrix
        for name in self.source.algebra.gen_names:
            if f.mul(self.source.action[name]) != self.target.action[name].mul(f):
                return False
        return True

    def __repr__(self):
        return f"HomElement({self.source.dim}->{self.target.dim})"


def direct_sum(mods: list[ModuleRep], label: str = "") -> ModuleRep:
    if not mods:
        raise DimensionMismatch("direct sum of nothing")
    algebra = mods[0].algebra
    for m in mods:
        if m.algebra is not algebra:
            raise ContextMismatch("direct sum across contexts")
    action = {
        name: block_diag([m.action[name] for m in mods])
        for name in algebra.gen_names
    }
    if not label:
        label = " + ".join(m.label or "?" for m in mods)
    return ModuleRep(algebra, sum(m.dim for m in mods), action, label)
