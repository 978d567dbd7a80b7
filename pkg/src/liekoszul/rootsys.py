"""Root systems of the simple Lie algebras, in exact arithmetic.

Weights are plain tuples of ints holding coordinates in the basis of
fundamental weights.  The bilinear form is normalised so that long roots
have squared length 2; every construction downstream only uses ratios of
the form, so nothing depends on that choice beyond the normalisation itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import ValidationError

Weight = tuple[int, ...]

MAX_CLASSICAL_RANK = 12

_RANK_RULES = {
    "A": (lambda n: n >= 1, "A_n needs n >= 1"),
    "B": (lambda n: n >= 2, "B_n needs n >= 2"),
    "C": (lambda n: n >= 2, "C_n needs n >= 2"),
    "D": (lambda n: n >= 3, "D_n needs n >= 3"),
    "E": (lambda n: n in (6, 7, 8), "E_n needs n in {6, 7, 8}"),
    "F": (lambda n: n == 4, "F_n needs n = 4"),
    "G": (lambda n: n == 2, "G_n needs n = 2"),
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        if fam not in _RANK_RULES:
            raise ValidationError(f"unknown family {self.family!r}; expected one of A-G")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ValidationError(f"rank must be an int, got {self.rank!r}")
        ok, rule = _RANK_RULES[fam]
        if not ok(self.rank):
            raise ValidationError(f"invalid rank {self.rank} for family {fam}: {rule}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, name: str) -> "LieType":
        name = name.strip()
        if len(name) < 2 or not name[1:].isdigit():
            raise ValidationError(f"cannot parse Lie type {name!r}")
        return cls(name[0], int(name[1:]))


def cartan_matrix(lt: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki numbering, ``C[i][j] = 2(a_i, a_j)/(a_j, a_j)``."""
    n = lt.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    fam = lt.family
    if fam in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B":
            bond(n - 2, n - 1, -2, -1)
        elif fam == "C":
            bond(n - 2, n - 1, -1, -2)
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif fam == "G":
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in C)


def _half_lengths(C) -> tuple[Fraction, ...]:
    # d_i = (a_i, a_i)/2 from the symmetrisability condition C[i][j] d_j = C[j][i] d_i
    n = len(C)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and C[i][j] and d[j] is None:
                d[j] = d[i] * C[j][i] / C[i][j]
                stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _invert(M) -> tuple[tuple[Fraction, ...], ...]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(tuple(row[n:]) for row in A)


def add(x: Weight, y: Weight) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Weight, y: Weight) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def scale(k: int, x: Weight) -> Weight:
    return tuple(k * a for a in x)


@dataclass(frozen=True, eq=False)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    all_roots: tuple[Weight, ...]
    sym_form: tuple[tuple[Fraction, ...], ...]
    rho: Weight
    theta: Weight
    dim_g: int
    half_lengths: tuple[Fraction, ...] = field(repr=False)
    _inv_cartan: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    _form_int: tuple[tuple[int, ...], ...] = field(repr=False)
    _form_den: int = field(repr=False)
    _root_coords: dict = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.lie_type == self.lie_type

    def __hash__(self):
        return hash(self.lie_type)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def check(self, w: Sequence[int], what: str = "weight") -> Weight:
        if len(w) != self.rank:
            raise ValidationError(
                f"{what} has {len(w)} coordinates, {self.lie_type} needs {self.rank}")
        if not all(isinstance(c, int) for c in w):
            raise ValidationError(f"{what} must have integer coordinates, got {tuple(w)}")
        return tuple(w)

    def fundamental(self, i: int) -> Weight:
        """The fundamental weight omega_i, 1-based."""
        return tuple(int(j == i - 1) for j in range(self.rank))

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental coordinates, 1-based."""
        return self.simple_roots[i - 1]

    # -- bilinear form ------------------------------------------------------

    def inner_scaled(self, x: Weight, y: Weight) -> int:
        """``form_den * (x, y)``; integer, for hot loops."""
        G = self._form_int
        n = self.rank
        return sum(x[i] * G[i][j] * y[j] for i in range(n) if x[i] for j in range(n))

    @property
    def form_den(self) -> int:
        return self._form_den

    def inner(self, x: Weight, y: Weight) -> Fraction:
        self.check(x)
        self.check(y)
        return Fraction(self.inner_scaled(x, y), self._form_den)

    def is_dominant(self, w: Weight) -> bool:
        self.check(w)
        return all(c >= 0 for c in w)

    def to_simple_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        self.check(w)
        if w in self._root_coords:
            return tuple(Fraction(c) for c in self._root_coords[w])
        Ci = self._inv_cartan
        n = self.rank
        return tuple(sum((w[i] * Ci[i][j] for i in range(n)), Fraction(0)) for j in range(n))

    def from_simple_root_coords(self, c: Sequence[int]) -> Weight:
        C = self.cartan
        n = self.rank
        return tuple(sum(c[i] * C[i][j] for i in range(n)) for j in range(n))

    def height(self, w: Weight) -> Fraction:
        """Sum of the simple-root coordinates."""
        return sum(self.to_simple_root_coords(w), Fraction(0))

    def in_root_lattice(self, w: Weight) -> bool:
        return all(c.denominator == 1 for c in self.to_simple_root_coords(w))

    def is_root(self, w: Weight) -> bool:
        return w in self._root_coords and any(w)

    # -- Weyl group ---------------------------------------------------------

    def reflect(self, w: Weight, i: int) -> Weight:
        """Simple reflection s_i (0-based index)."""
        k = w[i]
        if not k:
            return w
        a = self.simple_roots[i]
        return tuple(x - k * y for x, y in zip(w, a))

    def dominant_rep(self, w: Weight) -> tuple[Weight, int]:
        """Dominant element of the Weyl orbit of ``w`` and the parity of the reflections used."""
        parity = 0
        roots = self.simple_roots
        w = list(w)
        n = self.rank
        while True:
            for i in range(n):
                k = w[i]
                if k < 0:
                    a = roots[i]
                    for j in range(n):
                        w[j] -= k * a[j]
                    parity ^= 1
                    break
            else:
                return tuple(w), parity

    def orbit(self, dom: Weight) -> list[Weight]:
        """Weyl orbit of a dominant weight, starting from ``dom``."""
        seen = {dom}
        out = [dom]
        frontier = [dom]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    if w[i] > 0:
                        v = self.reflect(w, i)
                        if v not in seen:
                            seen.add(v)
                            out.append(v)
                            nxt.append(v)
            frontier = nxt
        return out

    def signed_orbit(self, dom: Weight) -> list[tuple[Weight, int]]:
        """Orbit of a strictly dominant weight paired with sign(w) = (-1)^length(w).

        For a regular weight the orbit is in bijection with the Weyl group and
        the breadth-first layer from ``dom`` is exactly the length.
        """
        if any(c <= 0 for c in dom):
            raise ValidationError(f"signed_orbit needs a strictly dominant weight, got {dom}")
        seen = {dom}
        out = [(dom, 1)]
        frontier = [dom]
        sign = 1
        while frontier:
            sign = -sign
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    if w[i] > 0:
                        v = self.reflect(w, i)
                        if v not in seen:
                            seen.add(v)
                            out.append((v, sign))
                            nxt.append(v)
            frontier = nxt
        return out

    def weyl_group_order(self) -> int:
        return len(self.orbit(self.rho))

    def to_dict(self) -> dict:
        def rc(w):
            return [str(c) for c in self.to_simple_root_coords(w)]

        return {
            "family": self.lie_type.family,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "dim_g": self.dim_g,
            "rho": list(self.rho),
            "theta": list(self.theta),
            "theta_root_coords": rc(self.theta),
            "positive_roots": [
                {"fundamental": list(a), "simple": rc(a)} for a in self.positive_roots
            ],
            "num_roots": len(self.all_roots),
        }


def _root_closure(C) -> list[tuple[int, ...]]:
    # positive roots in simple-root coordinates via alpha-strings
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            pairing = [sum(beta[k] * C[k][i] for k in range(n)) for i in range(n)]
            for i in range(n):
                # p = how far down the alpha_i-string from beta goes
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - pairing[i]
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(lie_type: LieType, max_rank: int = MAX_CLASSICAL_RANK) -> RootSystem:
    if lie_type.family in "ABCD" and lie_type.rank > max_rank:
        raise ValidationError(
            f"rank {lie_type.rank} exceeds the configured limit {max_rank} for classical types")
    C = cartan_matrix(lie_type)
    n = lie_type.rank
    d = _half_lengths(C)
    Ci = _invert(C)
    # (omega_i, omega_j) = d_j * Cinv[i][j]
    G = tuple(tuple(d[j] * Ci[i][j] for j in range(n)) for i in range(n))
    den = lcm(*(x.denominator for row in G for x in row))
    G_int = tuple(tuple(int(x * den) for x in row) for row in G)

    pos_rc = _root_closure(C)

    def to_fund(c):
        return tuple(sum(c[i] * C[i][j] for i in range(n)) for j in range(n))

    root_coords = {}
    positive = []
    for c in pos_rc:
        w = to_fund(c)
        positive.append(w)
        root_coords[w] = c
        root_coords[tuple(-x for x in w)] = tuple(-x for x in c)
    negative = [tuple(-x for x in w) for w in positive]
    all_roots = sorted(positive + negative,
                       key=lambda w: (sum(root_coords[w]), root_coords[w]))
    simple = tuple(to_fund(tuple(int(i == j) for j in range(n))) for i in range(n))
    return RootSystem(
        lie_type=lie_type,
        cartan=C,
        simple_roots=simple,
        positive_roots=tuple(positive),
        all_roots=tuple(all_roots),
        sym_form=G,
        rho=(1,) * n,
        theta=positive[-1],
        dim_g=len(all_roots) + n,
        half_lengths=d,
        _inv_cartan=Ci,
        _form_int=G_int,
        _form_den=den,
        _root_coords=root_coords,
    )


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(LieType(family, rank))


def sum_weights(ws: Iterable[Weight], rank: int) -> Weight:
    out = (0,) * rank
    for w in ws:
        out = add(out, w)
    return out
