"""Hilbert matrices of the graded invariant algebras over a finite poset slice.

Rows and columns are indexed by the members of a ``PosetSlice``, farthest
from the top first, which makes every matrix here unitriangular.  Entries are
integer polynomials in ``t`` stored as coefficient tuples; in practice each
off-diagonal entry is a single monomial ``c t^d`` with ``d`` the Psi-distance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Sequence

from .charlib import DecompositionList, adjoint_ext_power, adjoint_sym_power, klimyk
from .errors import InternalInconsistencyError
from .psi import PosetSlice, PsiSet, _require_positive, enumerate_down_set
from .rootsys import RootSystem, Weight, add

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)


def monomial(c: int, d: int) -> Poly:
    return (0,) * d + (c,) if c else ZERO


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def pneg_t(p: Poly) -> Poly:
    """p(-t)."""
    return tuple(c if i % 2 == 0 else -c for i, c in enumerate(p))


def pformat(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if not c:
            continue
        mon = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if not mon:
            terms.append(str(c))
        elif c == 1:
            terms.append(mon)
        elif c == -1:
            terms.append("-" + mon)
        else:
            terms.append(f"{c}{mon}")
    return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class PolyMatrix:
    index: tuple[Weight, ...]
    entries: tuple[tuple[Poly, ...], ...]

    @classmethod
    def build(cls, index: Sequence[Weight], fn: Callable[[Weight, Weight], Poly]) -> "PolyMatrix":
        index = tuple(index)
        return cls(index, tuple(tuple(fn(r, c) for c in index) for r in index))

    @classmethod
    def identity(cls, index: Sequence[Weight]) -> "PolyMatrix":
        return cls.build(index, lambda r, c: ONE if r == c else ZERO)

    def __len__(self):
        return len(self.index)

    def entry(self, row: Weight, col: Weight) -> Poly:
        return self.entries[self.index.index(row)][self.index.index(col)]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.index != other.index:
            raise ValueError("index sets differ")
        n = len(self.index)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = padd(acc, pmul(a, b))
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(self.index, tuple(rows))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(self.index, tuple(
            tuple(padd(a, tuple(-c for c in b)) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def neg_t(self) -> "PolyMatrix":
        return PolyMatrix(self.index, tuple(tuple(pneg_t(p) for p in row) for row in self.entries))

    def transpose(self) -> "PolyMatrix":
        n = len(self.index)
        return PolyMatrix(self.index, tuple(
            tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    def restrict(self, subset: Sequence[Weight]) -> "PolyMatrix":
        """Principal submatrix on ``subset``, kept in this matrix's order."""
        keep = [w for w in self.index if w in set(subset)]
        pos = [self.index.index(w) for w in keep]
        return PolyMatrix(tuple(keep), tuple(
            tuple(self.entries[i][j] for j in pos) for i in pos))

    def is_zero(self) -> bool:
        return all(not p for row in self.entries for p in row)

    def is_identity(self) -> bool:
        n = len(self.index)
        return all(self.entries[i][j] == (ONE if i == j else ZERO)
                   for i in range(n) for j in range(n))

    def nonzero_offdiagonal(self):
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                if i != j and p:
                    yield self.index[i], self.index[j], p

    def to_dict(self, rs: RootSystem | None = None) -> dict:
        doc = {"index": [list(w) for w in self.index],
               "entries": [[list(p) for p in row] for row in self.entries]}
        if rs is not None:
            doc["index_simple"] = [[str(c) for c in rs.to_simple_root_coords(w)]
                                   for w in self.index]
        return doc

    def to_rows(self) -> list[tuple[int, int, int, int]]:
        """Flattened (row, col, degree, coeff) for nonzero coefficients."""
        out = []
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                for d, c in enumerate(p):
                    if c:
                        out.append((i, j, d, c))
        return out

    def pretty(self) -> str:
        cells = [[pformat(p) for p in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


# -- multiplicity kernels ---------------------------------------------------

@lru_cache(maxsize=None)
def _decomposition(rs: RootSystem, kind: str, d: int, nu: Weight) -> DecompositionList:
    power = adjoint_sym_power(rs, d) if kind == "sym" else adjoint_ext_power(rs, d)
    dec = klimyk(power, nu)
    if any(m < 0 for m in dec.values()):
        raise InternalInconsistencyError(f"negative multiplicity in {kind}^{d} (x) V{nu}")
    return dec


def _graded_entry(slice_: PosetSlice, kind: str, row: Weight, col: Weight,
                  decompose_row: bool = False) -> Poly:
    if row == col:
        return ONE
    d = slice_.distance(row, col)
    if d is None:
        return ZERO
    rs = slice_.psi.rs
    if decompose_row:
        c = _decomposition(rs, kind, d, row).get(col, 0)
    else:
        c = _decomposition(rs, kind, d, col).get(row, 0)
    return monomial(c, d)


def hilbert_matrix_sym(slice_: PosetSlice) -> PolyMatrix:
    """Entry (mu, nu): t^d dim Hom(V(mu), S^d g (x) V(nu)), d the Psi-distance."""
    return PolyMatrix.build(slice_.index(), lambda r, c: _graded_entry(slice_, "sym", r, c))


def hilbert_matrix_ext(slice_: PosetSlice, opposite: bool = False) -> PolyMatrix:
    """Entry (mu, nu): t^d dim Hom(V(mu), Lambda^d g (x) V(nu)).

    With ``opposite=True`` the entry is instead the dimension of the block
    sitting at (nu, mu) in the full invariant algebra, obtained by
    decomposing ``Lambda^d g (x) V(mu)``; these blocks realise the opposite
    algebra on the same index set.
    """
    return PolyMatrix.build(
        slice_.index(), lambda r, c: _graded_entry(slice_, "ext", r, c, decompose_row=opposite))


def ext_matrix(slice_: PosetSlice) -> PolyMatrix:
    """Yoneda matrix: entry (mu, nu) is t^d dim Ext^d(S_nu, S_mu) = t^d dim Hom(Lambda^d g (x) V(nu), V(mu))."""
    return PolyMatrix.build(slice_.index(), lambda r, c: _graded_entry(slice_, "ext", r, c))


def koszulity_check(slice_: PosetSlice) -> tuple[bool, PolyMatrix]:
    """Is ext(-t) the inverse of H_S(t)?  Returns the verdict and ``ext(-t) H_S(t) - I``."""
    H = hilbert_matrix_sym(slice_)
    E = ext_matrix(slice_)
    prod = E.neg_t() @ H
    residual = prod - PolyMatrix.identity(H.index)
    return residual.is_zero(), residual


def duality_check(slice_: PosetSlice) -> bool:
    return ext_matrix(slice_) == hilbert_matrix_ext(slice_, opposite=True)


def global_dimension(slice_: PosetSlice, ext: PolyMatrix | None = None
                     ) -> tuple[int, tuple[Weight, Weight] | None]:
    E = ext if ext is not None else ext_matrix(slice_)
    best, witness = 0, None
    for r, c, p in E.nonzero_offdiagonal():
        deg = len(p) - 1
        if deg > best:
            best, witness = deg, (r, c)
    bound = len(slice_.psi)
    if best > bound:
        raise InternalInconsistencyError(
            f"global dimension {best} exceeds |Psi| = {bound} at {witness}")
    return best, witness


def find_attaining_weight(psi: PsiSet, search_bound: int) -> Weight | None:
    """First dominant mu (by height) with dim Hom(V(mu + l_Psi), Lambda^|Psi| g (x) V(mu)) = 1."""
    _require_positive(psi)
    rs = psi.rs
    k = len(psi)
    lpsi = psi.lambda_psi
    for h in range(search_bound + 1):
        for mu in sorted(_compositions(h, rs.rank)):
            top = add(mu, lpsi)
            if any(c < 0 for c in top):
                continue
            dim = _decomposition(rs, "ext", k, mu).get(top, 0)
            if dim > 1:
                raise InternalInconsistencyError(
                    f"multiplicity {dim} > 1 of V{top} in Lambda^{k} g (x) V{mu}")
            if dim == 1:
                return mu
    return None


def _compositions(total: int, parts: int):
    for cut in product(range(total + 1), repeat=parts - 1):
        if sum(cut) <= total:
            yield tuple(cut) + (total - sum(cut),)


@dataclass
class KoszulReport:
    psi: PsiSet
    slice: PosetSlice
    hilbert_S: PolyMatrix
    hilbert_E: PolyMatrix
    ext_matrix: PolyMatrix
    koszul_ok: bool
    right_inverse_ok: bool
    duality_ok: bool
    gldim: int
    gldim_bound: int
    gldim_witness: tuple[Weight, Weight] | None
    residual: PolyMatrix = field(repr=False)

    @property
    def ok(self) -> bool:
        return (self.koszul_ok and self.right_inverse_ok and self.duality_ok
                and self.gldim <= self.gldim_bound)

    def to_dict(self) -> dict:
        rs = self.psi.rs
        return {
            "slice": {"xi": list(self.psi.xi),
                      "psi": [list(b) for b in self.psi.roots],
                      "lambda": list(self.slice.top),
                      "mu": None if self.slice.bottom is None else list(self.slice.bottom),
                      "size": len(self.slice)},
            "hilbert_S": self.hilbert_S.to_dict(rs),
            "hilbert_E": self.hilbert_E.to_dict(),
            "ext_matrix": self.ext_matrix.to_dict(),
            "koszul_ok": self.koszul_ok,
            "right_inverse_ok": self.right_inverse_ok,
            "duality_ok": self.duality_ok,
            "gldim": self.gldim,
            "gldim_bound": self.gldim_bound,
            "gldim_witness": None if self.gldim_witness is None
            else [list(w) for w in self.gldim_witness],
            "residual": self.residual.to_dict(),
            "ok": self.ok,
        }


def koszul_report(slice_: PosetSlice) -> KoszulReport:
    H = hilbert_matrix_sym(slice_)
    HE = hilbert_matrix_ext(slice_)
    E = ext_matrix(slice_)
    ok, residual = koszulity_check(slice_)
    right = (H @ E.neg_t()).is_identity()
    gl, wit = global_dimension(slice_, E)
    return KoszulReport(
        psi=slice_.psi, slice=slice_, hilbert_S=H, hilbert_E=HE, ext_matrix=E,
        koszul_ok=ok, right_inverse_ok=right, duality_ok=duality_check(slice_),
        gldim=gl, gldim_bound=len(slice_.psi), gldim_witness=wit, residual=residual)


def grow(psi: PsiSet, lam: Weight, steps: int) -> list[KoszulReport]:
    """Reports on the down-sets of lam, lam + l_Psi, ..., lam + steps * l_Psi."""
    out = []
    top = lam
    for _ in range(steps + 1):
        out.append(koszul_report(enumerate_down_set(psi, top)))
        top = add(top, psi.lambda_psi)
    return out
