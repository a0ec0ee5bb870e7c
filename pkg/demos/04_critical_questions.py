"""Critical questions: raising one blocks the challenged inference until it
is resolved, and the evaluation shows exactly what blocking suspends.

Run: python3 demos/04_critical_questions.py
"""

from argnet import builtin_schemes, credibility_at, preset
from argnet.sampledata import build_chain

config = preset("scenario-2010")
net, ids = build_chain()

scheme = {s.id: s for s in builtin_schemes()}["argument_from_position_to_know"]
print("== the scheme's critical questions ==")
for index, question in enumerate(scheme.critical_questions):
    print(f"  CQ{index}: {question}")

before = credibility_at(ids["i3"], net.snapshot(), config)
print(f"\nconclusion before any challenge: total {before.total:.5f} (m={before.m:.4f})")

print("\n== sally raises CQ0 against the inference ==")
cq_id = net.raise_critical_question(ids["s1"], 0,
                                    "Is John actually in a position to know?",
                                    raised_by="sally")
snapshot = net.snapshot()
print(f"  blocked S-nodes: {sorted(snapshot.blocked)}")
during = credibility_at(ids["i3"], snapshot, config)
print(f"  conclusion while blocked: total {during.total:.5f} (m={during.m:.4f})")
print("  only the minimum-support factor changed; usage is structural and stays put")

print("\n== jim resolves the question ==")
net.resolve_critical_question(cq_id, "He is a certified meteorologist.")
after = credibility_at(ids["i3"], net.snapshot(), config)
print(f"  conclusion after resolution: total {after.total:.5f}")
print(f"  restored bit-exactly: {after == before}")
