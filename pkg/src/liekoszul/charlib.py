"""Characters of finite-dimensional modules, stored on dominant weights.

A character keeps only the multiplicities of dominant weights; the full
weight diagram is the union of Weyl orbits and is expanded lazily.  This is
enough for everything needed here: Freudenthal's recursion for irreducibles,
Racah-Speiser (Klimyk) decomposition of tensor products, and the Newton
recursions giving symmetric and exterior powers of the adjoint module.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from pathlib import Path
from typing import Mapping

from .errors import InternalInconsistencyError, ValidationError
from .rootsys import RootSystem, Weight, add, sub

log = logging.getLogger(__name__)

CACHE_FORMAT_VERSION = 1
CACHE_ENV = "LIEKOSZUL_CACHE_DIR"
MAX_SYM_DEGREE = 16

# Decomposition of a module: highest weight -> multiplicity of V(highest weight).
DecompositionList = dict


@dataclass(frozen=True, eq=False)
class Character:
    rs: RootSystem
    mults: Mapping[Weight, int]

    def __post_init__(self):
        object.__setattr__(self, "mults", {w: m for w, m in self.mults.items() if m})

    @classmethod
    def from_full(cls, rs: RootSystem, full: Mapping[Weight, int]) -> "Character":
        """Restrict a Weyl-invariant weight function to its dominant part."""
        return cls(rs, {w: m for w, m in full.items() if m and all(c >= 0 for c in w)})

    @classmethod
    def zero(cls, rs: RootSystem) -> "Character":
        return cls(rs, {})

    @classmethod
    def trivial(cls, rs: RootSystem) -> "Character":
        return cls(rs, {rs.zero: 1})

    def __eq__(self, other):
        return (isinstance(other, Character) and self.rs == other.rs
                and self.mults == other.mults)

    def __repr__(self):
        return f"Character({self.rs.lie_type}, {dict(sorted(self.mults.items()))})"

    def is_zero(self) -> bool:
        return not self.mults

    @cached_property
    def orbit_sizes(self) -> dict[Weight, int]:
        return {w: len(self.rs.orbit(w)) for w in self.mults}

    @cached_property
    def full(self) -> dict[Weight, int]:
        out = {}
        for w, m in self.mults.items():
            for v in self.rs.orbit(w):
                out[v] = m
        return out

    def total_dim(self) -> int:
        return sum(m * self.orbit_sizes[w] for w, m in self.mults.items())

    def mult_at(self, w: Weight) -> int:
        return self.mults.get(self.rs.dominant_rep(w)[0], 0)

    def __add__(self, other: "Character") -> "Character":
        out = defaultdict(int, self.mults)
        for w, m in other.mults.items():
            out[w] += m
        return Character(self.rs, out)

    def __neg__(self) -> "Character":
        return Character(self.rs, {w: -m for w, m in self.mults.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Character(self.rs, {w: other * m for w, m in self.mults.items()})
        if not isinstance(other, Character):
            return NotImplemented
        # iterate over the smaller full diagram, land only on dominant weights
        a, b = (self, other) if len(self.full) <= len(other.full) else (other, self)
        out = defaultdict(int)
        bm = b.full
        for w1, m1 in a.full.items():
            for w2, m2 in bm.items():
                w = add(w1, w2)
                if all(c >= 0 for c in w):
                    out[w] += m1 * m2
        return Character(self.rs, out)

    __rmul__ = __mul__

    def adams(self, k: int) -> "Character":
        """psi^k: scale every weight by k."""
        return Character(self.rs, {tuple(k * c for c in w): m for w, m in self.mults.items()})

    def to_dict(self) -> dict:
        return {"dominant_mults": [[list(w), m] for w, m in sorted(self.mults.items())],
                "dim": self.total_dim()}


def _require_dominant(rs: RootSystem, lam: Weight, what: str = "weight") -> Weight:
    lam = rs.check(lam, what)
    if not all(c >= 0 for c in lam):
        raise ValidationError(f"{what} {lam} is not dominant")
    return lam


def dominant_weights_below(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights of V(lam), ordered by depth below ``lam``.

    Uses that dominant weights under the dominance order are linked by
    covering steps that are positive roots, so a search that stays inside
    the dominant chamber reaches all of them.
    """
    seen = {lam}
    layer = [lam]
    out = [lam]
    while layer:
        nxt = []
        for w in layer:
            for a in rs.positive_roots:
                v = sub(w, a)
                if v not in seen and all(c >= 0 for c in v):
                    seen.add(v)
                    nxt.append(v)
        out.extend(nxt)
        layer = nxt
    out.sort(key=lambda w: rs.height(sub(lam, w)))
    return out


@lru_cache(maxsize=None)
def _freudenthal(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    ip = rs.inner_scaled
    rho = rs.rho
    lr = add(lam, rho)
    top = ip(lr, lr)
    mults: dict[Weight, int] = {}
    for mu in dominant_weights_below(rs, lam):
        if mu == lam:
            mults[mu] = 1
            continue
        num = 0
        for a in rs.positive_roots:
            w = add(mu, a)
            while True:
                m = mults.get(rs.dominant_rep(w)[0], 0)
                if not m:
                    break
                num += m * ip(w, a)
                w = add(w, a)
        mr = add(mu, rho)
        den = top - ip(mr, mr)
        val, rem = divmod(2 * num, den)
        if rem:
            raise InternalInconsistencyError(f"non-integral Freudenthal value at {mu} in V({lam})")
        if val:
            mults[mu] = val
    return tuple(mults.items())


def irrep_character(rs: RootSystem, lam: Weight) -> Character:
    lam = _require_dominant(rs, lam, "highest weight")
    return Character(rs, dict(_freudenthal(rs, lam)))


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    lam = _require_dominant(rs, lam, "highest weight")
    lr = add(lam, rs.rho)
    num = den = 1
    for a in rs.positive_roots:
        num *= rs.inner_scaled(lr, a)
        den *= rs.inner_scaled(rs.rho, a)
    q, r = divmod(num, den)
    if r:
        raise InternalInconsistencyError(f"Weyl dimension of {lam} is not an integer")
    return q


def klimyk(M: Character, nu: Weight) -> DecompositionList:
    """Decompose ``M (x) V(nu)`` by the Racah-Speiser rule over the weights of ``M``."""
    rs = M.rs
    shift = add(nu, rs.rho)
    out: dict[Weight, int] = defaultdict(int)
    for k, m in M.full.items():
        dom, parity = rs.dominant_rep(add(k, shift))
        if 0 in dom:
            continue
        out[tuple(c - 1 for c in dom)] += -m if parity else m
    return {w: m for w, m in out.items() if m}


def tensor_decompose(rs: RootSystem, lam: Weight, mu: Weight) -> DecompositionList:
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    dec = klimyk(irrep_character(rs, lam), mu)
    if any(m < 0 for m in dec.values()):
        raise InternalInconsistencyError(f"negative multiplicity in V{lam} (x) V{mu}")
    return dec


def decompose(M: Character) -> DecompositionList:
    """Peel off irreducibles from the top; works for virtual characters too."""
    rs = M.rs
    rem = dict(M.mults)
    out = {}
    while rem:
        top = max(rem, key=lambda w: (rs.height(w), w))
        c = rem[top]
        out[top] = c
        for w, m in irrep_character(rs, top).mults.items():
            v = rem.get(w, 0) - c * m
            if v:
                rem[w] = v
            else:
                rem.pop(w, None)
    return out


@lru_cache(maxsize=None)
def _signed_shifts(rs: RootSystem, nu: Weight) -> tuple[tuple[Weight, int], ...]:
    rho = rs.rho
    return tuple((sub(w, rho), s) for w, s in rs.signed_orbit(add(nu, rho)))


def mult_in(rs: RootSystem, nu: Weight, M: Character, method: str = "weyl") -> int:
    """Multiplicity of V(nu) in M.

    ``method="weyl"`` uses the alternating sum over the Weyl group,
    ``method="peel"`` the full iterated subtraction.
    """
    nu = _require_dominant(rs, nu)
    if method == "peel":
        return decompose(M).get(nu, 0)
    if method != "weyl":
        raise ValidationError(f"unknown method {method!r}")
    return sum(s * M.mult_at(w) for w, s in _signed_shifts(rs, nu))


def hom_dim_tensor(rs: RootSystem, nu: Weight, A: Character, mu: Weight,
                   method: str = "klimyk") -> int:
    """dim Hom(V(nu), A (x) V(mu))."""
    nu = _require_dominant(rs, nu)
    mu = _require_dominant(rs, mu)
    if method == "klimyk":
        return klimyk(A, mu).get(nu, 0)
    if method == "product":
        return mult_in(rs, nu, A * irrep_character(rs, mu))
    raise ValidationError(f"unknown method {method!r}")


# -- powers of the adjoint module ------------------------------------------

def adjoint_character(rs: RootSystem) -> Character:
    return irrep_character(rs, rs.theta)


_cache_dir: Path | None | bool = True  # True: resolve from environment on first use
_memo: dict[tuple, Character] = {}


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Point the on-disk power cache somewhere else; ``None`` disables it."""
    global _cache_dir
    _cache_dir = Path(path) if path is not None else None


def cache_dir() -> Path | None:
    if _cache_dir is True:
        env = os.environ.get(CACHE_ENV)
        if env is not None:
            return Path(env) if env else None
        return Path.home() / ".cache" / "liekoszul"
    return _cache_dir


def clear_memory_cache() -> None:
    _memo.clear()


def _payload(mults: Mapping[Weight, int]) -> str:
    return json.dumps(sorted([list(w), m] for w, m in mults.items()), separators=(",", ":"))


def _cache_path(rs: RootSystem, kind: str, k: int) -> Path | None:
    root = cache_dir()
    if root is None:
        return None
    lt = rs.lie_type
    return root / f"v{CACHE_FORMAT_VERSION}" / f"{lt.family}{lt.rank}-{kind}-{k}.json"


def _load(rs, kind, k) -> Character | None:
    path = _cache_path(rs, kind, k)
    if path is None or not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
        payload = _payload({tuple(w): m for w, m in doc["mults"]})
        if (doc["format"] != CACHE_FORMAT_VERSION
                or doc["checksum"] != hashlib.sha256(payload.encode()).hexdigest()):
            raise ValueError("checksum mismatch")
        return Character(rs, {tuple(w): m for w, m in doc["mults"]})
    except (ValueError, KeyError, TypeError) as exc:
        log.info("discarding corrupt cache file %s: %s", path, exc)
        return None


def _store(rs, kind, k, ch: Character) -> None:
    path = _cache_path(rs, kind, k)
    if path is None:
        return
    payload = _payload(ch.mults)
    lt = rs.lie_type
    doc = {
        "format": CACHE_FORMAT_VERSION,
        "family": lt.family,
        "rank": lt.rank,
        "kind": kind,
        "degree": k,
        "mults": json.loads(payload),
        "checksum": hashlib.sha256(payload.encode()).hexdigest(),
    }
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps(doc, sort_keys=True))
        tmp.replace(path)
    except OSError as exc:
        log.warning("could not write cache file %s: %s", path, exc)


def _power(rs: RootSystem, kind: str, k: int) -> Character:
    key = (rs.lie_type, kind, k)
    if key in _memo:
        return _memo[key]
    if k == 0:
        ch = Character.trivial(rs)
    else:
        ch = _load(rs, kind, k)
        if ch is None:
            ch = _newton_step(rs, kind, k)
            _store(rs, kind, k, ch)
    _memo[key] = ch
    return ch


def _newton_step(rs: RootSystem, kind: str, k: int) -> Character:
    # k ch_k = sum_m (+-1)^(m-1) psi^m(g) ch_{k-m}; signs alternate for exterior powers
    acc: dict[Weight, int] = defaultdict(int)
    n = rs.rank
    for m in range(1, k + 1):
        sign = -1 if kind == "ext" and m % 2 == 0 else 1
        prev = _power(rs, kind, k - m)
        if prev.is_zero():
            continue
        pf = prev.full
        shifts = [tuple(m * c for c in a) for a in rs.all_roots]
        for w, c in pf.items():
            if all(x >= 0 for x in w):
                acc[w] += sign * n * c
            for s in shifts:
                v = tuple(w[i] + s[i] for i in range(n))
                if all(x >= 0 for x in v):
                    acc[v] += sign * c
    out = {}
    for w, c in acc.items():
        q, r = divmod(c, k)
        if r:
            raise InternalInconsistencyError(f"Newton recursion for {kind}^{k} is not integral")
        if q:
            out[w] = q
    return Character(rs, out)


def adjoint_sym_power(rs: RootSystem, k: int, max_degree: int = MAX_SYM_DEGREE) -> Character:
    if k < 0:
        raise ValidationError(f"degree must be nonnegative, got {k}")
    if k > max_degree:
        raise ValidationError(f"symmetric degree {k} exceeds the configured ceiling {max_degree}")
    return _power(rs, "sym", k)


def adjoint_ext_power(rs: RootSystem, j: int) -> Character:
    if j < 0:
        raise ValidationError(f"degree must be nonnegative, got {j}")
    if j > rs.dim_g:
        return Character.zero(rs)
    return _power(rs, "ext", j)


def power_dim(rs: RootSystem, kind: str, k: int) -> int:
    """Expected dimension of S^k or Lambda^k of the adjoint module."""
    if kind == "sym":
        return comb(rs.dim_g + k - 1, k)
    return comb(rs.dim_g, k)
