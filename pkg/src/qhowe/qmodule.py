"""Quantum exterior algebras as U_q(sl_n)-modules.

A module here is a tensor product of wedge powers of the defining
representation of U_q(sl_n): each factor is either the full exterior algebra
on X_1..X_n or its fixed-degree piece.  Monomials are tuples of strictly
increasing index tuples, one per factor.  GL weights are plain int tuples
(multiplicity of each index, additive across factors).

Generators act on the defining representation by E_i X_{i+1} = X_i,
F_i X_i = X_{i+1}, K_i X_j = q^(d_{ij}) X_j; wedge factors are handled by
acting slot-by-slot on the tensor-algebra lift and straightening with
X_j X_i = -q^(-1) X_i X_j (i < j), X_i X_i = 0; tensor factors are combined
through the coproduct.  Two coproducts preserve the relation ideal:

  standard:  D(E) = E (x) K + 1 (x) E,    D(F) = F (x) 1 + K^(-1) (x) F
  flipped:   D(E) = E (x) 1 + K^(-1) (x) E,  D(F) = F (x) K + 1 (x) F

The standard one is the default; it is the unique choice passing the
internal oracles (commuting Howe actions, unit leading coefficients of
divided-power strings, Weyl-element commutation).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .qring import Laurent, ONE, ZERO, qint
from ._linalg import SparseOp, nullspace, vec_divexact

GEN_E = "E"
GEN_F = "F"
GEN_K = "K"
GEN_KINV = "Kinv"

COPRODUCTS = ("standard", "flipped")

Monomial = tuple  # tuple of per-factor index tuples


def straighten(word: Iterable[int], rank: int) -> Optional[tuple[Laurent, tuple[int, ...]]]:
    """Sort a product of generators X_{word} into the increasing basis.

    Returns None for a repeated index (X_i^2 = 0); otherwise the coefficient
    (-q^(-1))^inv with inv the inversion count, and the sorted tuple.
    """
    word = tuple(word)
    for i in word:
        if not 1 <= i <= rank:
            raise ValueError(f"index {i} out of range 1..{rank}")
    if len(set(word)) != len(word):
        return None
    inv = sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])
    coeff = (-Laurent.q(-1)) ** inv
    return coeff, tuple(sorted(word))


@dataclass(frozen=True)
class Module:
    """Tensor product of wedge-power factors of the defining rep of U_q(sl_n).

    degrees[j] is the fixed degree of factor j, or None for the whole
    exterior algebra.  coproduct selects the tensor-factor convention.
    """

    rank: int
    degrees: tuple[Optional[int], ...]
    coproduct: str = "standard"

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.coproduct not in COPRODUCTS:
            raise ValueError(f"unknown coproduct {self.coproduct!r}")
        for d in self.degrees:
            if d is not None and not 0 <= d <= self.rank:
                raise ValueError(f"degree {d} out of range for rank {self.rank}")

    @property
    def sl_rank(self) -> int:
        return self.rank - 1

    def basis(self) -> tuple[Monomial, ...]:
        return _module_basis(self)

    def gl_weight(self, mono: Monomial) -> tuple[int, ...]:
        w = [0] * self.rank
        for factor in mono:
            for i in factor:
                w[i - 1] += 1
        return tuple(w)

    def alpha_weight(self, mono: Monomial, i: int) -> int:
        w = self.gl_weight(mono)
        return w[i - 1] - w[i]

    def act(self, kind: str, i: int, vec: dict) -> dict:
        """Apply a Chevalley generator or K^(+-1) to a vector."""
        if not 1 <= i <= self.sl_rank:
            raise ValueError(f"generator index {i} out of range 1..{self.sl_rank}")
        out: dict = {}
        for mono, c in vec.items():
            for m2, c2 in _act_mono(self, kind, i, mono):
                s = out.get(m2, ZERO) + c * c2
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return out

    def operator(self, kind: str, i: int) -> SparseOp:
        return _module_operator(self, kind, i)


_MODULE_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def _cached(key, build):
    try:
        return _MODULE_CACHE[key]
    except KeyError:
        pass
    value = build()
    with _CACHE_LOCK:
        return _MODULE_CACHE.setdefault(key, value)


def _module_basis(module: Module) -> tuple[Monomial, ...]:
    def build():
        per_factor = []
        idx = range(1, module.rank + 1)
        for d in module.degrees:
            if d is None:
                opts = [c for k in range(module.rank + 1) for c in combinations(idx, k)]
            else:
                opts = list(combinations(idx, d))
            per_factor.append(opts)
        out = [()]
        for opts in per_factor:
            out = [mono + (o,) for mono in out for o in opts]
        return tuple(sorted(out))

    return _cached(("basis", module), build)


def _alpha_of_index(j: int, i: int) -> int:
    if j == i:
        return 1
    if j == i + 1:
        return -1
    return 0


def _factor_alpha(factor: tuple[int, ...], i: int) -> int:
    return sum(_alpha_of_index(j, i) for j in factor)


def _factor_images(rank: int, factor: tuple[int, ...], kind: str, i: int):
    """Images of one wedge factor under E_i or F_i, via the lift.

    The generator hits one slot of the tensor-algebra lift; K (for E) or
    K^(-1) (for F) acts on the slots after resp. before it; the resulting
    word is straightened back into the sorted basis.
    """
    out = []
    if kind == GEN_E:
        for p, idx in enumerate(factor):
            if idx != i + 1:
                continue
            coeff = Laurent.q(sum(_alpha_of_index(j, i) for j in factor[p + 1:]))
            st = straighten(factor[:p] + (i,) + factor[p + 1:], rank)
            if st is not None:
                out.append((st[1], coeff * st[0]))
    elif kind == GEN_F:
        for p, idx in enumerate(factor):
            if idx != i:
                continue
            coeff = Laurent.q(-sum(_alpha_of_index(j, i) for j in factor[:p]))
            st = straighten(factor[:p] + (i + 1,) + factor[p + 1:], rank)
            if st is not None:
                out.append((st[1], coeff * st[0]))
    else:
        raise ValueError(kind)
    return out


def _act_mono(module: Module, kind: str, i: int, mono: Monomial):
    def build():
        if kind in (GEN_K, GEN_KINV):
            n = module.alpha_weight(mono, i)
            e = n if kind == GEN_K else -n
            return ((mono, Laurent.q(e)),)
        out = []
        nf = len(mono)
        std = module.coproduct == "standard"
        for f in range(nf):
            images = _factor_images(module.rank, mono[f], kind, i)
            if not images:
                continue
            if kind == GEN_E:
                others = range(f + 1, nf) if std else range(0, f)
                sign = 1 if std else -1
            else:
                others = range(0, f) if std else range(f + 1, nf)
                sign = -1 if std else 1
            e = sign * sum(_factor_alpha(mono[o], i) for o in others)
            coeff = Laurent.q(e)
            for newf, c in images:
                out.append((mono[:f] + (newf,) + mono[f + 1:], coeff * c))
        return tuple(out)

    return _cached(("act", module, kind, i, mono), build)


def _module_operator(module: Module, kind: str, i: int) -> SparseOp:
    def build():
        return SparseOp.from_action(
            module.basis(), lambda mono: module.act(kind, i, {mono: ONE})
        )

    return _cached(("op", module, kind, i), build)


# ---------------------------------------------------------------------------
# divided powers and singular vectors (generic over the module protocol:
# anything with .sl_rank, .basis(), .gl_weight, .alpha_weight, .act)


def act_divided(module, kind: str, i: int, r: int, vec: dict) -> dict:
    """E_i^(r)/F_i^(r) = r-th power divided by [r]!, computed stepwise.

    Exact division must succeed on integrable modules; a failure raises
    InexactDivisionError from the scalar layer.
    """
    if r < 0:
        raise ValueError("divided power needs r >= 0")
    out = vec
    for s in range(1, r + 1):
        out = module.act(kind, i, out)
        if not out:
            return {}
        out = vec_divexact(out, qint(s))
    return out


def weight_space(module, weight) -> tuple:
    weight = tuple(weight)
    return tuple(m for m in module.basis() if module.gl_weight(m) == weight)


def singular_vectors(module, weight, side: str = "lowest") -> list[dict]:
    """Basis of the weight-space vectors killed by all F_i (lowest) or all
    E_i (highest), by exact kernel computation.

    Vectors are primitive (content 1) and unit-normalized on their first
    basis monomial; empty list if there are none.
    """
    if side not in ("lowest", "highest"):
        raise ValueError(side)
    kind = GEN_F if side == "lowest" else GEN_E
    basis = weight_space(module, weight)
    if not basis:
        return []
    rows: dict = {}
    for col, mono in enumerate(basis):
        for i in range(1, module.sl_rank + 1):
            img = module.act(kind, i, {mono: ONE})
            for tmono, c in img.items():
                rows.setdefault((i, tmono), {})[col] = c
    dense = [
        [row.get(c, ZERO) for c in range(len(basis))]
        for _, row in sorted(rows.items(), key=lambda kv: repr(kv[0]))
    ]
    out = []
    for coeffs in nullspace(dense, len(basis)):
        vec = {m: c for m, c in zip(basis, coeffs) if c}
        out.append(vec)
    out.sort(key=lambda v: sorted(map(repr, v)))
    return out


# ---------------------------------------------------------------------------
# rendering


def wedge_str(factor: tuple[int, ...]) -> str:
    return "".join(f"X{i}" for i in factor) if factor else "1"


def mono_str(mono: Monomial) -> str:
    return "|".join(wedge_str(f) for f in mono)


def vec_str(vec: dict) -> str:
    if not vec:
        return "0"
    parts = [f"({c.text()})*{mono_str(m)}" for m, c in sorted(vec.items())]
    return " + ".join(parts)
