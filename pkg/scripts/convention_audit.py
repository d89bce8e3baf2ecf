#!/usr/bin/env python3
"""Audit the convention calibrations.

Runs every rank-one Weyl variant against the pinning identities on the
two-dimensional module, both coproducts against the divided-power
leading-coefficient oracle, and both grading signs against the Euler-sum
anchors.  The defaults used by the engine are exactly the survivors.
"""

from qhowe import braidgrp as bg
from qhowe import ktheory as kt
from qhowe.howe import SLOT_X, SLOT_Y, SlotModule
from qhowe.qmodule import GEN_E, GEN_F, GEN_K, GEN_KINV, Module, act_divided
from qhowe.qring import ONE


def weyl_variants():
    two = Module(2, (1,))
    e, f = two.operator(GEN_E, 1), two.operator(GEN_F, 1)
    k, ki = two.operator(GEN_K, 1), two.operator(GEN_KINV, 1)
    hi, lo = ((1,),), ((2,),)
    print("rank-one Weyl variants on the 2-dim module:")
    for v in bg.VARIANTS:
        t = bg.rank1_weyl(two, 1, v)
        high_to_low = t.apply({hi: ONE}) == {lo: ONE}
        comm = (
            (t @ f) == -((e @ k) @ t)
            and (t @ e) == -((ki @ f) @ t)
            and (t @ k) == (ki @ t)
        )
        print(f"  {bg.variant_name(v)}: high-to-low={high_to_low} commutation={comm}")
    print(f"  selected: {bg.variant_name(bg.selected_variant())}")


def coproducts():
    print("\ncoproducts vs the leading-coefficient oracle (want 1):")
    for cop in ("standard", "flipped"):
        slot = SlotModule(2, 2, coproduct=cop)
        got = act_divided(slot, GEN_F, 1, 1, {(SLOT_X, SLOT_X): ONE})
        lead = got.get((SLOT_Y, SLOT_X))
        print(f"  {cop}: leading coefficient {lead.text() if lead else '0'}")


def grading_signs():
    print("\ngrading signs vs the Euler-sum anchors:")
    for eps in (1, -1):
        ok11 = kt._rickard_matches_weyl(1, 1, eps)
        ok22 = kt._rickard_matches_weyl(2, 2, eps)
        print(f"  eps={eps:+d}: (m,N)=(1,1) {ok11}, (2,2) {ok22}")
    print(f"  selected: eps={kt.grading_sign():+d}")


if __name__ == "__main__":
    weyl_variants()
    coproducts()
    grading_signs()
