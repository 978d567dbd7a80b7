"""The Z+ x Z+ translation quiver with mesh relations, truncated at finite depth.

Vertices are pairs ``(m, n)`` with ``m + n <= depth``.  Arrows run
``(m, n) -> (m, n+1)`` (along a row) and ``(m, n) -> (m+1, n-1)`` (down a
column of the usual picture), and the translation is ``tau(m, n) = (m-1, n)``.
Every non-projective vertex ``v`` (``m > 0``) carries one mesh relator, the
signed sum of the length-two paths ``tau(v) -> u -> v``.

Path spaces modulo the mesh ideal are computed one source at a time by
building the indecomposable projective representation layer by layer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError

Vertex = tuple[int, int]


@dataclass(frozen=True)
class MeshQuiver:
    depth: int
    vertices: tuple[Vertex, ...]
    arrows: tuple[tuple[Vertex, Vertex], ...]
    translation: dict[Vertex, Vertex] = field(compare=False)

    def tau(self, v: Vertex) -> Vertex | None:
        return self.translation.get(v)

    def successors(self, v: Vertex) -> list[Vertex]:
        return [b for a, b in self.arrows if a == v]

    def predecessors(self, v: Vertex) -> list[Vertex]:
        return [a for a, b in self.arrows if b == v]

    def mesh(self, v: Vertex) -> list[tuple[Vertex, int]] | None:
        """Intermediate vertices of the mesh ending at ``v`` with their signs.

        ``None`` if ``v`` is projective or a constituent path leaves the truncation.
        """
        t = self.tau(v)
        if t is None:
            return None
        m, n = v
        mids = [((m - 1, n + 1), 1)]
        if n >= 1:
            mids.append(((m, n - 1), -1))
        vs = set(self.vertices)
        if any(u not in vs for u, _ in mids):
            return None
        return mids

    def path_degree(self, v: Vertex, w: Vertex) -> int | None:
        """Length of every path v -> w (all paths between two vertices have equal length)."""
        dh = (w[0] + w[1]) - (v[0] + v[1])
        dv = w[0] - v[0]
        if dh < 0 or dv < 0 or dv > v[1] + dh:
            return None
        return dh + dv

    def provisional(self) -> list[Vertex]:
        """Non-projective vertices whose relator could not be imposed in the truncation."""
        return [v for v in self.vertices if self.tau(v) is not None and self.mesh(v) is None]

    def ascii(self) -> str:
        cell = 7
        lines = []
        for m in range(self.depth + 1):
            row = [" " * cell] * (self.depth + 1)
            for n in range(self.depth - m + 1):
                row[m + n] = f"({m},{n})".ljust(cell)
            text = ""
            for col, c in enumerate(row):
                v = (m, col - m)
                nxt = (m, col - m + 1)
                arrow = " -> " if v in self.vertices and nxt in self.vertices else "    "
                text += c + arrow
            lines.append(text.rstrip())
            if m < self.depth:
                marks = ""
                for col in range(self.depth + 1):
                    v = (m, col - m)
                    down = (m + 1, col - m - 1)
                    mark = "  |" if v in self.vertices and down in self.vertices else "   "
                    marks += mark.ljust(cell + 4)
                lines.append(marks.rstrip())
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"depth": self.depth,
                "vertices": [list(v) for v in self.vertices],
                "arrows": [[list(a), list(b)] for a, b in self.arrows],
                "translation": [[list(v), list(t)] for v, t in sorted(self.translation.items())]}


def build_mesh_quiver(depth: int) -> MeshQuiver:
    if not isinstance(depth, int) or depth < 0:
        raise ValidationError(f"depth must be a nonnegative integer, got {depth!r}")
    verts = sorted(((m, n) for m in range(depth + 1) for n in range(depth + 1 - m)),
                   key=lambda v: (v[0] + v[1], v[0]))
    vs = set(verts)
    arrows = []
    for m, n in verts:
        for w in ((m, n + 1), (m + 1, n - 1)):
            if w in vs and w[1] >= 0:
                arrows.append(((m, n), w))
    tau = {(m, n): (m - 1, n) for m, n in verts if m > 0}
    return MeshQuiver(depth=depth, vertices=tuple(verts), arrows=tuple(arrows), translation=tau)


def _left_nullspace(R: list[list[Fraction]], nrows: int) -> list[list[Fraction]]:
    """Basis of {y : y R = 0} for an nrows x k matrix R."""
    k = len(R[0]) if R else 0
    # nullspace of R^T (k x nrows) by reduced row echelon form
    A = [[R[i][j] for i in range(nrows)] for j in range(k)]
    pivots = []
    r = 0
    for c in range(nrows):
        piv = next((i for i in range(r, k) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(k):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == k:
            break
    free = [c for c in range(nrows) if c not in pivots]
    basis = []
    for f in free:
        y = [Fraction(0)] * nrows
        y[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            y[pc] = -A[row][f]
        basis.append(y)
    return basis


def _projective(q: MeshQuiver, source: Vertex) -> dict[Vertex, int]:
    """Dimensions of e_w A e_source for all w, via the projective representation at ``source``."""
    dims: dict[Vertex, int] = {}
    # arrow maps P(u) -> P(w) as dim_w x dim_u matrices
    maps: dict[tuple[Vertex, Vertex], list[list[Fraction]]] = {}
    for w in q.vertices:
        preds = [u for u in q.predecessors(w) if dims.get(u)]
        offsets = {}
        size = 1 if w == source else 0
        for u in preds:
            offsets[u] = size
            size += dims[u]
        if size == 0:
            dims[w] = 0
            continue
        relations: list[list[Fraction]] = [[] for _ in range(size)]
        mids = q.mesh(w)
        t = q.tau(w)
        if mids is not None and dims.get(t):
            for j in range(dims[t]):
                col = [Fraction(0)] * size
                for u, sign in mids:
                    if not dims.get(u):
                        continue
                    A = maps[(t, u)]
                    for i in range(dims[u]):
                        col[offsets[u] + i] += sign * A[i][j]
                for i in range(size):
                    relations[i].append(col[i])
        if relations[0]:
            Q = _left_nullspace(relations, size)
        else:
            Q = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
        dims[w] = len(Q)
        for u in preds:
            o = offsets[u]
            maps[(u, w)] = [row[o:o + dims[u]] for row in Q]
    return dims


def hom_dimensions(q: MeshQuiver) -> dict[tuple[Vertex, Vertex], int]:
    """dim of (paths v -> w) modulo the mesh ideal, for every ordered pair (v, w)."""
    table = {}
    for v in q.vertices:
        dims = _projective(q, v)
        for w in q.vertices:
            table[(v, w)] = dims.get(w, 0)
    return table


def table_rows(q: MeshQuiver, table) -> list[dict]:
    return [{"source": list(v), "target": list(w), "degree": q.path_degree(v, w), "dim": d}
            for (v, w), d in sorted(table.items(), key=lambda kv: (q.vertices.index(kv[0][0]),
                                                                  q.vertices.index(kv[0][1])))
            if d or v == w]


def degree_profile(entries) -> dict[tuple[int, int], int]:
    """Histogram of (degree, dimension) over nonzero entries; used to set quiver data beside Hilbert data."""
    out: dict[tuple[int, int], int] = {}
    for deg, dim in entries:
        if dim:
            out[(deg, dim)] = out.get((deg, dim), 0) + 1
    return out
