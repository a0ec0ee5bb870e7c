"""Authoring walkthrough: information nodes, scheme applications, and the
structural safeguards around them.

Run: python3 demos/01_authoring_basics.py
"""

from argnet import ArgumentNetwork, Certainty, NodeKind, builtin_schemes
from argnet.errors import PremiseNotINode

net = ArgumentNetwork()

print("== the shipped scheme catalog ==")
for scheme in builtin_schemes():
    print(f"  {scheme.id:38s} {scheme.scheme_kind.value:10s} "
          f"{len(scheme.premise_descriptors)} premises, "
          f"{len(scheme.critical_questions)} critical questions")

print("\n== creating information nodes ==")
occupation = net.create_i_node(
    "John is a weather man",
    certainty=Certainty.HIGH,
    support_url="http://www.theweathernet.com/weather",
    context=[("weather", 1.0), ("forecast", 0.8)],
    author="jim",
)
statement = net.create_i_node("John said that it would rain tomorrow",
                              certainty=Certainty.AVERAGE, author="jim")
conclusion = net.create_i_node("It will rain tomorrow", certainty=Certainty.HIGH, author="jim")
for node_id in (occupation, statement, conclusion):
    node = net.snapshot().nodes[node_id]
    print(f"  {node.id}: [{node.certainty.value}] {node.summary}")

print("\n== linking them with a scheme application ==")
inference = net.create_s_node(
    NodeKind.RA,
    "John's occupation and statement prove it will rain",
    Certainty.VERY_HIGH,
    premises=[occupation, statement],
    conclusion=conclusion,
    scheme="argument_from_position_to_know",
    topic=[("rain", 1.0)],
    author="jim",
)
node = net.snapshot().nodes[inference]
print(f"  {node.id}: {node.kind.value} via {node.scheme}")
print(f"  premises {list(node.premises)} -> conclusion {node.conclusion}")

print("\n== only I-nodes may serve as premises ==")
try:
    net.create_s_node(NodeKind.RA, "nonsense", Certainty.LOW,
                      premises=[inference], conclusion=occupation,
                      scheme="argument_from_sign")
except PremiseNotINode as exc:
    print(f"  rejected as expected: {exc.message}")

print("\n== snapshots are immutable, indexed views ==")
snapshot = net.snapshot()
print(f"  nodes: {len(snapshot.nodes)}, version: {snapshot.version}")
print(f"  S-nodes concluding at {conclusion}: {snapshot.incoming(conclusion)}")
print(f"  usage of {occupation}: {snapshot.usage(occupation)} (premise of one argument)")
