"""Querying the corpus: the six filter families, taxonomy subsumption, and
weighted context matching.

Run: python3 demos/05_queries.py
"""

from argnet import credibility_at, load_taxonomy, make_spec, match_context, preset, run_query
from argnet.sampledata import build_software_debate

net, ids = build_software_debate()
snapshot = net.snapshot()
config = preset("scenario-2010")
names = {v: k for k, v in ids.items()}


def show(label, result):
    print(f"  {label}: {[names[n] for n in result]}")


print("== filter families (conjoined when combined) ==")
show("by kind (conflict nodes)", run_query(make_spec(kinds=["CA"]), snapshot, config))
show("by scheme (position to know)",
     run_query(make_spec(schemes=["argument_from_position_to_know"]), snapshot, config))
show("by author (sally)", run_query(make_spec(author="sally"), snapshot, config))
show("by scheme inside the claim's tree",
     run_query(make_spec(schemes=["argument_from_sign"], target=ids["claim"]), snapshot, config))
show("by minimum degree of support (>= 1.0)",
     run_query(make_spec(kinds=["I", "RA", "CA", "PA"], min_support=1.0), snapshot, config))

print("\n== taxonomy-backed domain search ==")
taxonomy = load_taxonomy([("java", "software_topics"), ("protege", "software_topics")])
show("domain 'software_topics' (via descendants)",
     run_query(make_spec(domain="software_topics"), snapshot, config, taxonomy))

print("\n== weighted context matching ==")
query_ctx = [("java", 1.0)]
for key in ("java_free", "protege_java", "claim"):
    node = snapshot.nodes[ids[key]]
    score = match_context(query_ctx, node.context, taxonomy)
    print(f"  {key:13s} score {score:.2f}  context={[(t.term, t.weight) for t in node.context]}")
show("context filter at threshold 0.5",
     run_query(make_spec(context=query_ctx, context_threshold=0.5), snapshot, config, taxonomy))

print("\n== results are ranked by credibility, then id ==")
ranked = run_query(make_spec(kinds=["RA", "CA", "PA"]), snapshot, config)
for nid in ranked:
    print(f"  {names[nid]:11s} {credibility_at(nid, snapshot, config).total:+.4f}")
