"""Credibility evaluation walkthrough: the six-factor score, weakest-link
propagation, attacks in both modes, and validity verdicts.

Run: python3 demos/02_credibility_evaluation.py
"""

from argnet import ATTACK_CREDIBILITY_SUM, credibility_at, preset, validity
from argnet.sampledata import add_chain_attack, build_chain

config = preset("scenario-2010")
print("== active weighting ==")
print(f"  certainty {config.w_cert}, usage {config.w_usage}, min-support {config.w_minsup},")
print(f"  conflict {config.w_conflict}, preference {config.w_pref}, scheme {config.w_scheme}")
print(f"  scheme weights: {dict(config.scheme_weights)}")

net, ids = build_chain()
snapshot = net.snapshot()

print("\n== bottom-up evaluation of the inference chain ==")
for key in ("i1", "i2", "s1", "i3"):
    b = credibility_at(ids[key], snapshot, config)
    print(f"  {key}: c={b.c:g} u={b.u} m={b.m:g} a={b.a:g} p={b.p:g} s={b.s:g} "
          f"-> total {b.total:.5f}")
print("  the inference inherits its weakest premise (m = 0.80),")
print("  and the conclusion inherits the inference (m = 0.724)")

verdict = validity(ids["i3"], snapshot, config)
print(f"\n  conclusion verdict: {'valid' if verdict.valid else 'invalid'} "
      f"({verdict.credibility:.5f} vs balance point {verdict.balance_point:g})")

print("\n== a conflict node flips the verdict ==")
ids = add_chain_attack(net, ids)
snapshot = net.snapshot()
b = credibility_at(ids["i3"], snapshot, config)
print(f"  attacked conclusion: u={b.u} (participation and CA-conclusion cancel), "
      f"a={b.a:g} -> total {b.total:.5f}")
verdict = validity(ids["i3"], snapshot, config)
print(f"  verdict now: {'valid' if verdict.valid else 'invalid'}")

print("\n== the attack factor is selectable ==")
sum_config = config.with_attack_mode(ATTACK_CREDIBILITY_SUM)
b_sum = credibility_at(ids["i3"], snapshot, sum_config)
print(f"  count mode:          a={b.a:g}  total {b.total:.5f}")
print(f"  credibility-sum mode: a={b_sum.a:.4f} total {b_sum.total:.5f}")
