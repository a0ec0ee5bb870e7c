"""The full software-cost debate: five arguments by four users, evaluated
end to end — validity, best explanation, and both contradiction degrees.

Run: python3 demos/03_software_debate.py
"""

from argnet import (
    ATTACK_CREDIBILITY_SUM,
    argument_tree,
    contradiction_degree_simple,
    contradiction_degree_weighted,
    credibility_at,
    explanation,
    preset,
    topic_scope,
    validity,
)
from argnet.sampledata import TOPIC, build_software_debate

net, ids = build_software_debate()
snapshot = net.snapshot()
config = preset("scenario-2010")
names = {v: k for k, v in ids.items()}

print("== the debate ==")
for nid in sorted(snapshot.nodes):
    node = snapshot.nodes[nid]
    print(f"  {names[nid]:13s} {node.kind.value:2s} [{node.certainty.value:9s}] {node.summary}")

print("\n== evaluating the claim's argument tree ==")
tree = argument_tree(ids["claim"], snapshot)
print(f"  tree covers: {sorted(names[n] for n in tree.node_ids())}")
for key in ("argument1", "argument2", "argument3", "claim"):
    b = credibility_at(ids[key], snapshot, config)
    print(f"  {key:11s} total {b.total:+.4f}  (c={b.c:g} u={b.u} m={b.m:.4f} a={b.a:g} p={b.p:g} s={b.s:g})")

verdict = validity(ids["argument1"], snapshot, config)
print(f"\n  argument 1 fails: credibility {verdict.credibility:.4f} -> "
      f"{'valid' if verdict.valid else 'invalid'}")
print("  the conflict node is the strongest element in the tree:")
print(f"    conflict {credibility_at(ids['argument3'], snapshot, config).total:.4f} vs "
      f"inference {credibility_at(ids['argument2'], snapshot, config).total:.4f}")

print("\n== best explanation for the claim ==")
result = explanation(ids["claim"], snapshot, config)
print(f"  path: {' -> '.join(names[p] for p in result.path)}")
print(f"  text: {result.text}")

print("\n== contradiction degree over the topic ==")
scope = topic_scope(snapshot, TOPIC)
print(f"  scope: {sorted(names[n] for n in scope)}")
print(f"  simple (count ratio):            {contradiction_degree_simple(scope, snapshot):.4f}")
print(f"  weighted (credibility mass):     "
      f"{contradiction_degree_weighted(scope, snapshot, config):.4f}")
print(f"  weighted, credibility-sum mode:  "
      f"{contradiction_degree_weighted(scope, snapshot, config.with_attack_mode(ATTACK_CREDIBILITY_SUM)):.4f}")
