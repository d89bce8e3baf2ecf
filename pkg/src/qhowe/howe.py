"""The skew Howe duality bimodule: commuting U_q(sl_m) and U_q(sl_2) actions
on the degree-N piece of the quantum exterior algebra of C^m (x) C^2.

Basis monomials are pairs (S, T) of strictly increasing index subsets of
{1..m}: S carries the Y generators, T the X generators.  Two structural
isomorphisms give the module structures:

  left:   (S, T) -> X_S (x) X_T          in  wedge^|S|(C^m) (x) wedge^|T|(C^m)
  right:  (S, T) -> sign * slot tensor   in  (wedge_q C^2)^(x) m

where slot p carries YX if p in S and T, Y if p in S only, X if p in T only,
1 otherwise, and sign = (-1)^#{(a,b) in S x T : a < b}.  U_q(sl_m) acts
through the left map, U_q(sl_2) through the right map; the commuting of the
two actions is verified exhaustively at desk scale.

The slot factors use the basis {1, X, Y, YX}; the doubled state is the
product Y*X (not the sorted X*Y), matching the sign rule above.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from . import qmodule
from ._linalg import SparseOp, vec_scale
from .qmodule import GEN_E, GEN_F, GEN_K, GEN_KINV, Module, act_divided, singular_vectors, _cached
from .qring import Laurent, ONE, ZERO, qfact
from .report import CheckResult, check

SLOT_EMPTY, SLOT_X, SLOT_Y, SLOT_YX = 0, 1, 2, 3
_SLOT_NAMES = ("1", "X", "Y", "YX")
_SLOT_GL = ((0, 0), (1, 0), (0, 1), (1, 1))  # GL_2 weight (X count, Y count)
_SLOT_ALPHA = (0, 1, -1, 0)
_SLOT_DEGREE = (0, 1, 1, 2)


@dataclass(frozen=True)
class SlotModule:
    """(wedge_q C^2)^(x) m in the slot basis {1, X, Y, YX} per factor.

    The U_q(sl_2) generator acts per slot by E: Y -> X, F: X -> Y (the
    degree-0 and degree-2 states are invariant) and across slots through
    the same coproduct convention as Module.
    """

    m: int
    degree: Optional[int] = None
    coproduct: str = "standard"

    @property
    def sl_rank(self) -> int:
        return 1

    def basis(self) -> tuple:
        def build():
            out = []
            for states in _slot_states(self.m):
                if self.degree is None or sum(_SLOT_DEGREE[s] for s in states) == self.degree:
                    out.append(states)
            return tuple(sorted(out))

        return _cached(("slot_basis", self), build)

    def gl_weight(self, mono) -> tuple[int, int]:
        x = sum(_SLOT_GL[s][0] for s in mono)
        y = sum(_SLOT_GL[s][1] for s in mono)
        return (x, y)

    def alpha_weight(self, mono, i: int) -> int:
        x, y = self.gl_weight(mono)
        return x - y

    def act(self, kind: str, i: int, vec: dict) -> dict:
        if i != 1:
            raise ValueError("sl_2 has a single generator index")
        out: dict = {}
        for mono, c in vec.items():
            for m2, c2 in _slot_act_mono(self, kind, mono):
                s = out.get(m2, ZERO) + c * c2
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return out


def _slot_states(m: int):
    if m == 0:
        yield ()
        return
    for rest in _slot_states(m - 1):
        for s in range(4):
            yield rest + (s,)


def _slot_act_mono(module: SlotModule, kind: str, mono):
    def build():
        if kind in (GEN_K, GEN_KINV):
            n = module.alpha_weight(mono, 1)
            return ((mono, Laurent.q(n if kind == GEN_K else -n)),)
        std = module.coproduct == "standard"
        out = []
        if kind == GEN_E:
            src, dst = SLOT_Y, SLOT_X
        elif kind == GEN_F:
            src, dst = SLOT_X, SLOT_Y
        else:
            raise ValueError(kind)
        for p, s in enumerate(mono):
            if s != src:
                continue
            if kind == GEN_E:
                others = mono[p + 1:] if std else mono[:p]
                sign = 1 if std else -1
            else:
                others = mono[:p] if std else mono[p + 1:]
                sign = -1 if std else 1
            e = sign * sum(_SLOT_ALPHA[o] for o in others)
            out.append((mono[:p] + (dst,) + mono[p + 1:], Laurent.q(e)))
        return tuple(out)

    return _cached(("slot_act", module, kind, mono), build)


def slot_mono_str(mono) -> str:
    return "|".join(_SLOT_NAMES[s] for s in mono)


def slot_vec_str(vec: dict) -> str:
    if not vec:
        return "0"
    parts = [f"({c.text()})*{slot_mono_str(m)}" for m, c in sorted(vec.items())]
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# the Howe space


@dataclass(frozen=True)
class HoweSpace:
    """Degree-N piece, with its (k, l) weight-space decomposition."""

    m: int
    N: int
    coproduct: str = "standard"

    def __post_init__(self):
        if not 0 <= self.N <= 2 * self.m:
            raise ValueError("degree out of range")

    def basis(self) -> tuple:
        def build():
            idx = range(1, self.m + 1)
            out = []
            for k in range(self.N + 1):
                l = self.N - k
                if k > self.m or l > self.m:
                    continue
                for S in combinations(idx, k):
                    for T in combinations(idx, l):
                        out.append((S, T))
            return tuple(sorted(out))

        return _cached(("howe_basis", self), build)

    def block_basis(self, k: int, l: int) -> tuple:
        return tuple(b for b in self.basis() if len(b[0]) == k and len(b[1]) == l)

    def block_module(self, k: int, l: int) -> Module:
        return Module(self.m, (k, l), self.coproduct)

    def slot_module(self) -> SlotModule:
        return SlotModule(self.m, self.N, self.coproduct)

    # -- structural isomorphisms ------------------------------------------

    def iso_left(self, hm) -> tuple:
        """(S, T) as a tensor monomial of the two wedge factors; coefficient 1."""
        return hm

    def iso_right(self, hm) -> tuple[int, tuple]:
        """(sign, slot monomial) per the slot and sign rules."""
        S, T = hm
        sign = -1 if sum(1 for a in S for b in T if a < b) % 2 else 1
        sset, tset = set(S), set(T)
        slots = []
        for p in range(1, self.m + 1):
            if p in sset and p in tset:
                slots.append(SLOT_YX)
            elif p in sset:
                slots.append(SLOT_Y)
            elif p in tset:
                slots.append(SLOT_X)
            else:
                slots.append(SLOT_EMPTY)
        return sign, tuple(slots)

    def iso_right_inv(self, slots) -> tuple[int, tuple]:
        S = tuple(p + 1 for p, s in enumerate(slots) if s in (SLOT_Y, SLOT_YX))
        T = tuple(p + 1 for p, s in enumerate(slots) if s in (SLOT_X, SLOT_YX))
        sign, _ = self.iso_right((S, T))
        return sign, (S, T)

    def to_slots(self, vec: dict) -> dict:
        out = {}
        for hm, c in vec.items():
            sign, slots = self.iso_right(hm)
            out[slots] = c if sign == 1 else -c
        return out

    def from_slots(self, vec: dict) -> dict:
        out = {}
        for slots, c in vec.items():
            sign, hm = self.iso_right_inv(slots)
            out[hm] = c if sign == 1 else -c
        return out

    # -- the two actions ----------------------------------------------------

    def slm_op(self, kind: str, i: int) -> SparseOp:
        """U_q(sl_m) generator on the whole degree piece (blockwise)."""

        def build():
            cols = {}
            for hm in self.basis():
                k, l = len(hm[0]), len(hm[1])
                mod = self.block_module(k, l)
                cols[hm] = mod.act(kind, i, {hm: ONE})
            return SparseOp(cols)

        return _cached(("slm_op", self, kind, i), build)

    def sl2_op(self, kind: str) -> SparseOp:
        """U_q(sl_2) generator, transported through the right isomorphism."""

        def build():
            slot = self.slot_module()
            cols = {}
            for hm in self.basis():
                sign, slots = self.iso_right(hm)
                img = slot.act(kind, 1, {slots: ONE if sign == 1 else -ONE})
                cols[hm] = self.from_slots(img)
            return SparseOp(cols)

        return _cached(("sl2_op", self, kind), build)

    def act_slm(self, kind: str, i: int, vec: dict) -> dict:
        return self.slm_op(kind, i).apply(vec)

    def act_sl2(self, kind: str, vec: dict) -> dict:
        return self.sl2_op(kind).apply(vec)


@dataclass(frozen=True)
class HoweSl2:
    """The Howe space seen purely as a U_q(sl_2) module (module protocol)."""

    space: HoweSpace

    @property
    def sl_rank(self) -> int:
        return 1

    def basis(self) -> tuple:
        return self.space.basis()

    def gl_weight(self, mono) -> tuple[int, int]:
        return (len(mono[1]), len(mono[0]))  # (X count, Y count) = (l, k)

    def alpha_weight(self, mono, i: int) -> int:
        return len(mono[1]) - len(mono[0])

    def act(self, kind: str, i: int, vec: dict) -> dict:
        if i != 1:
            raise ValueError("sl_2 has a single generator index")
        return self.space.act_sl2(kind, vec)


def howe_mono_str(hm) -> str:
    S, T = hm
    body = "".join(f"Y{i}" for i in S) + "".join(f"X{j}" for j in T)
    return body or "1"


# ---------------------------------------------------------------------------
# distinguished lowest weight vectors


def family_weight(m: int, N: int, i: int) -> tuple[int, ...]:
    """GL_m weight of the i-th lowest-weight family: (0,..,0,1,..,1,2,..,2)
    with i twos, N-2i ones."""
    return (0,) * (m - N + i) + (1,) * (N - 2 * i) + (2,) * i


def leading_monomial(m: int, i: int, k: int, l: int) -> tuple:
    """Index recipe for the distinguished monomial of v_i^{k,l}:
    Y_{m-k-l+i+1}..Y_{m-l} Y_{m-i+1}..Y_m X_{m-l+1}..X_m."""
    S = tuple(range(m - k - l + i + 1, m - l + 1)) + tuple(range(m - i + 1, m + 1))
    T = tuple(range(m - l + 1, m + 1))
    return (S, T)


def _check_family_params(m: int, N: int, i: int, k: int, l: int):
    if k + l != N:
        raise ValueError("need k + l = N")
    if not (0 <= i <= min(k, l)):
        raise ValueError(f"need 0 <= i <= min(k, l), got i={i}, k={k}, l={l}")
    if k + l > m + i:
        raise ValueError(f"need k + l <= m + i for a valid GL_{m} weight")
    if k > m or l > m:
        raise ValueError("k, l must be at most m")


def lowest_weight_vector(space: HoweSpace, i: int, k: int, l: int) -> dict:
    """The sl_m lowest-weight vector of the i-th family in the (k, l) block,
    normalized so its distinguished monomial has coefficient 1."""

    def build():
        m, N = space.m, space.N
        _check_family_params(m, N, i, k, l)
        mod = space.block_module(k, l)
        sols = singular_vectors(mod, family_weight(m, N, i), "lowest")
        if len(sols) != 1:
            raise ValueError(
                f"expected a unique lowest weight vector, found {len(sols)} "
                f"(i={i}, k={k}, l={l}, m={m})"
            )
        vec = sols[0]
        lead = leading_monomial(m, i, k, l)
        c = vec.get(lead)
        if c is None:
            raise ValueError(f"distinguished monomial {lead} has zero coefficient")
        if not c.is_unit():
            raise ValueError(f"distinguished coefficient {c} is not a unit")
        return vec_scale(c.unit_inverse(), vec)

    return _cached(("lwv", space, i, k, l), build)


def admissible_families(m: int, N: int):
    for k in range(min(m, N) + 1):
        l = N - k
        if l > m:
            continue
        for i in range(min(k, l) + 1):
            if k + l <= m + i:
                yield i, k, l


# ---------------------------------------------------------------------------
# verification suites


def verify_commuting(m: int, N: int, coproduct: str = "standard") -> list[CheckResult]:
    """[sl_m generator, sl_2 generator] = 0 on the whole degree piece."""
    space = HoweSpace(m, N, coproduct)
    out = []
    sl2_kinds = (GEN_E, GEN_F, GEN_K, GEN_KINV)
    slm_kinds = (GEN_E, GEN_F, GEN_K, GEN_KINV)
    for i in range(1, m):
        for ka in slm_kinds:
            a = space.slm_op(ka, i)
            for kb in sl2_kinds:
                b = space.sl2_op(kb)
                comm = (a @ b) - (b @ a)
                params = {"m": m, "N": N, "slm": f"{ka}{i}", "sl2": kb.lower()}
                if comm.is_zero():
                    out.append(check("howe.commuting", params, True))
                else:
                    r, c, va, vb = comm.first_difference(SparseOp.zero())
                    out.append(
                        check(
                            "howe.commuting",
                            params,
                            False,
                            f"[{ka}{i}, {kb}] {howe_mono_str(c)} -> "
                            f"{howe_mono_str(r)}: {va.text()}",
                        )
                    )
    if m == 1:
        out.append(check("howe.commuting", {"m": m, "N": N}, True))
    return out


def sq_sum(n: int) -> Laurent:
    """Direct S_n enumeration of the divided-power leading coefficient:
    (1/[n]!) sum over permutations of prod_j q^(2 #{a<j: s(a)<s(j)} - (j-1)).

    Evaluates to 1 for every n.
    """
    total = ZERO
    for sigma in permutations(range(n)):
        e = 0
        for j in range(n):
            e += 2 * sum(1 for a in range(j) if sigma[a] < sigma[j]) - j
        total = total + Laurent.q(e)
    return total.divexact(qfact(n))


def tilde_vector(space: HoweSpace, i: int, k: int, l: int) -> dict:
    """The slot-module image of v_i^{k,l}, normalized to coefficient 1 on the
    distinguished slot monomial 1..1 Y..Y X..X YX..YX."""
    v = lowest_weight_vector(space, i, k, l)
    w = space.to_slots(v)
    lead = tilde_leading_slots(space.m, space.N, i, k, l)
    c = w.get(lead)
    if c is None or not c.is_unit():
        raise ValueError("distinguished slot coefficient is not a unit")
    return vec_scale(c.unit_inverse(), w)


def tilde_leading_slots(m: int, N: int, i: int, k: int, l: int) -> tuple:
    return (
        (SLOT_EMPTY,) * (m - N + i)
        + (SLOT_Y,) * (k - i)
        + (SLOT_X,) * (l - i)
        + (SLOT_YX,) * i
    )


def verify_divided_transport(space: HoweSpace, i: int, k: int, l: int) -> list[CheckResult]:
    """The divided-power recursion between distinguished vectors:
    F^(k-i) applied to the (i, N-i) vector and E^(l-i) applied to the
    (N-i, i) vector both reproduce the (k, l) vector exactly, and the
    permutation-sum identity for the leading coefficient evaluates to 1."""
    m, N = space.m, space.N
    _check_family_params(m, N, i, k, l)
    slot = space.slot_module()
    out = []
    params = {"m": m, "N": N, "i": i, "k": k, "l": l}

    target = tilde_vector(space, i, k, l)
    via_f = act_divided(slot, GEN_F, 1, k - i, tilde_vector(space, i, i, N - i))
    via_e = act_divided(slot, GEN_E, 1, l - i, tilde_vector(space, i, N - i, i))
    out.append(
        check(
            "howe.divided_transport.f",
            params,
            via_f == target,
            f"F^({k - i}) gave {slot_vec_str(via_f)}",
        )
    )
    out.append(
        check(
            "howe.divided_transport.e",
            params,
            via_e == target,
            f"E^({l - i}) gave {slot_vec_str(via_e)}",
        )
    )
    s = sq_sum(k - i)
    out.append(
        check(
            "howe.sq_sum",
            {"n": k - i},
            s == ONE,
            f"sum evaluated to {s.text()}",
        )
    )
    return out
