"""The root set maximising the pairing with an integral weight, and its poset.

For a nonzero integral weight ``xi`` let ``Psi(xi)`` be the roots on which
``(xi, .)`` is maximal.  When ``Psi`` sits inside the positive roots it
induces the order ``nu <= lam`` iff ``lam - nu`` is a nonnegative integer
combination of ``Psi``; the coefficient sum of any such combination is the
same, namely ``(lam - nu, xi) / max xi``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import IncomparableError, InternalInconsistencyError, ValidationError
from .rootsys import RootSystem, Weight, add, sub, sum_weights


@dataclass(frozen=True, eq=False)
class PsiSet:
    rs: RootSystem
    xi: Weight
    max_xi: Fraction
    roots: tuple[Weight, ...]
    rho_xi: Weight
    _root_coords: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def lambda_psi(self) -> Weight:
        return self.rho_xi

    def __len__(self):
        return len(self.roots)

    def distance_closed_form(self, lam: Weight, mu: Weight) -> Fraction:
        """(mu - lam, xi) / max xi."""
        return self.rs.inner(sub(mu, lam), self.xi) / self.max_xi

    def to_dict(self) -> dict:
        rs = self.rs
        return {
            "xi": list(self.xi),
            "max_xi": str(self.max_xi),
            "size": len(self.roots),
            "positive": is_positive(self),
            "roots": [{"fundamental": list(b),
                       "simple": [str(c) for c in rs.to_simple_root_coords(b)]}
                      for b in self.roots],
            "lambda_psi": list(self.rho_xi),
        }


def compute_psi(rs: RootSystem, xi: Sequence[int]) -> PsiSet:
    xi = rs.check(tuple(xi), "xi")
    if not any(xi):
        raise ValidationError("xi = 0: max over R is 0; Psi undefined")
    pairs = [(rs.inner_scaled(xi, a), a) for a in rs.all_roots]
    top = max(p for p, _ in pairs)
    roots = tuple(sorted((a for p, a in pairs if p == top),
                         key=lambda a: (rs.height(a), a)))
    coords = tuple(tuple(int(c) for c in rs.to_simple_root_coords(b)) for b in roots)
    return PsiSet(rs=rs, xi=xi, max_xi=Fraction(top, rs.form_den), roots=roots,
                  rho_xi=sum_weights(roots, rs.rank), _root_coords=coords)


def is_positive(psi: PsiSet) -> bool:
    return all(c >= 0 for rc in psi._root_coords for c in rc)


def _require_positive(psi: PsiSet) -> None:
    if not is_positive(psi):
        raise ValidationError(f"Psi({psi.xi}) is not contained in the positive roots")


def _require_dominant(rs: RootSystem, w, what="weight") -> Weight:
    w = rs.check(tuple(w), what)
    if any(c < 0 for c in w):
        raise ValidationError(f"{what} {w} is not dominant")
    return w


def _decompositions(psi: PsiSet, target: Sequence[int], total: int | None = None):
    """Yield coefficient vectors n with sum n_b * beta = target (simple-root coordinates)."""
    coords = psi._root_coords
    k = len(coords)
    n = [0] * k

    def rec(i, rem, left):
        if i == k:
            if not any(rem) and (left is None or left == 0):
                yield tuple(n)
            return
        b = coords[i]
        cap = min((r // c for r, c in zip(rem, b) if c > 0), default=0)
        if left is not None:
            cap = min(cap, left)
        for m in range(cap, -1, -1):
            n[i] = m
            yield from rec(i + 1, [r - m * c for r, c in zip(rem, b)],
                           None if left is None else left - m)
        n[i] = 0

    yield from rec(0, list(target), total)


def find_combination(psi: PsiSet, lam: Weight, mu: Weight) -> tuple[int, ...] | None:
    """A witness n >= 0 with mu - lam = sum n_b b, or None."""
    rs = psi.rs
    diff = rs.to_simple_root_coords(sub(mu, lam))
    if any(c.denominator != 1 or c < 0 for c in diff):
        return None
    d = psi.distance_closed_form(lam, mu)
    if d.denominator != 1 or d < 0:
        return None
    return next(_decompositions(psi, [int(c) for c in diff], int(d)), None)


def leq_psi(psi: PsiSet, lam: Sequence[int], mu: Sequence[int]) -> int | None:
    """d_Psi(lam, mu) if lam <= mu in the Psi-order, else None."""
    _require_positive(psi)
    rs = psi.rs
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    diff = rs.to_simple_root_coords(sub(mu, lam))
    if any(c.denominator != 1 or c < 0 for c in diff):
        return None
    # search without the closed-form hint, then compare
    witness = next(_decompositions(psi, [int(c) for c in diff]), None)
    if witness is None:
        return None
    d = sum(witness)
    if d != psi.distance_closed_form(lam, mu):
        raise InternalInconsistencyError(
            f"coefficient sum {d} disagrees with closed-form distance for {lam} <= {mu}")
    return d


@dataclass(frozen=True, eq=False)
class PosetSlice:
    psi: PsiSet
    top: Weight
    members: dict[Weight, int]
    bottom: Weight | None = None

    def ordered(self) -> list[Weight]:
        """Members by distance to the top, then lexicographically."""
        return sorted(self.members, key=lambda w: (self.members[w], w))

    def index(self) -> list[Weight]:
        """Matrix index order: farthest from the top first."""
        return sorted(self.members, key=lambda w: (-self.members[w], w))

    def distance(self, lo: Weight, hi: Weight) -> int | None:
        """d_Psi(lo, hi) inside the slice, None if incomparable."""
        if lo == hi:
            return 0
        d = self.members[lo] - self.members[hi]
        if d <= 0:
            return None
        diff = [int(c) for c in self.psi.rs.to_simple_root_coords(sub(hi, lo))]
        if any(c < 0 for c in diff):
            return None
        if next(_decompositions(self.psi, diff, d), None) is None:
            return None
        return d

    def __len__(self):
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "top": list(self.top),
            "bottom": None if self.bottom is None else list(self.bottom),
            "size": len(self.members),
            "members": [{"weight": list(w), "distance": self.members[w]} for w in self.ordered()],
        }


def enumerate_down_set(psi: PsiSet, lam: Sequence[int]) -> PosetSlice:
    _require_positive(psi)
    rs = psi.rs
    lam = _require_dominant(rs, lam, "lambda")
    budget = rs.to_simple_root_coords(lam)
    coords = psi._root_coords
    norm_bound = rs.inner_scaled(lam, lam)
    members: dict[Weight, int] = {}
    k = len(coords)
    n = [0] * k

    def rec(i, rem, nu):
        # rem: simple-root coordinates of nu; a dominant nu has them all >= 0
        if i == k:
            if all(c >= 0 for c in nu):
                if rs.inner_scaled(nu, nu) > norm_bound:
                    raise InternalInconsistencyError(f"{nu} violates the norm bound under {lam}")
                members[nu] = sum(n)
            return
        b = coords[i]
        beta = psi.roots[i]
        cap = min((int(r // c) for r, c in zip(rem, b) if c > 0), default=0)
        for m in range(cap + 1):
            n[i] = m
            rec(i + 1, [r - m * c for r, c in zip(rem, b)],
                tuple(x - m * y for x, y in zip(nu, beta)))
        n[i] = 0

    rec(0, list(budget), lam)
    for nu, d in members.items():
        if d != psi.distance_closed_form(nu, lam):
            raise InternalInconsistencyError(f"distance mismatch at {nu} under {lam}")
    return PosetSlice(psi=psi, top=lam, members=members)


def enumerate_interval(psi: PsiSet, mu: Sequence[int], lam: Sequence[int]) -> PosetSlice:
    rs = psi.rs
    mu = _require_dominant(rs, mu, "mu")
    lam = _require_dominant(rs, lam, "lambda")
    if leq_psi(psi, mu, lam) is None:
        raise IncomparableError(f"{mu} is not below {lam} in the Psi-order")
    down = enumerate_down_set(psi, lam)
    members = {nu: d for nu, d in down.members.items() if leq_psi(psi, mu, nu) is not None}
    return PosetSlice(psi=psi, top=lam, members=members, bottom=mu)


def check_support_lemma(psi: PsiSet, trials: int, seed: int, max_coeff: int = 3) -> dict:
    """Randomised check of the support inequality.

    Draws nonnegative combinations ``sum m_a a`` over all roots; whenever the
    result lies in the monoid generated by Psi as ``sum n_b b``, checks
    ``sum n_b <= sum m_a`` with equality exactly when ``m`` is supported on Psi.
    Half of the draws are restricted to Psi (and a few other roots) so that
    the equality branch is exercised as well.
    """
    _require_positive(psi)
    rs = psi.rs
    rng = random.Random(seed)
    psi_set = set(psi.roots)
    others = [a for a in rs.all_roots if a not in psi_set]
    hits = equalities = 0
    counterexamples = []
    for _ in range(trials):
        m = {}
        for b in psi.roots:
            m[b] = rng.randint(0, max_coeff)
        if rng.random() < 0.5:
            for a in rng.sample(others, k=min(len(others), rng.randint(1, 3))):
                m[a] = m.get(a, 0) + rng.randint(1, max_coeff)
        total = sum_weights((tuple(c * x for x in a) for a, c in m.items()), rs.rank)
        target = rs.to_simple_root_coords(total)
        if any(c.denominator != 1 or c < 0 for c in target):
            continue
        sols = list(_decompositions(psi, [int(c) for c in target]))
        if not sols:
            continue
        hits += 1
        msum = sum(m.values())
        supported = all(c == 0 for a, c in m.items() if a not in psi_set)
        for sol in sols:
            nsum = sum(sol)
            ok = nsum <= msum and ((nsum == msum) == supported)
            if nsum == msum:
                equalities += 1
            if not ok:
                counterexamples.append({"m": {str(list(a)): c for a, c in m.items() if c},
                                        "n": list(sol)})
    return {"trials": trials, "seed": seed, "hits": hits, "equalities": equalities,
            "counterexamples": counterexamples}


def sum_free(psi: PsiSet) -> bool:
    rs = psi.rs
    bad = set(rs.all_roots) | {rs.zero}
    return all(add(a, b) not in bad for a in psi.roots for b in psi.roots)
