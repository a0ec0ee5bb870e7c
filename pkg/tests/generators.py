"""Seeded random generators for the property-test corpus.

Networks are grown through the public mutation surface, so every generated
network satisfies the structural invariants by construction. Cycles are
injected as pairs of RA nodes concluding at each other's premises.
"""

from __future__ import annotations

import random
import warnings

from argnet.errors import SchemeArityWarning
from argnet.evaluation import ATTACK_MODES, CredibilityConfig
from argnet.model import Certainty, NodeKind
from argnet.network import ArgumentNetwork
from argnet.schemes import builtin_schemes

CERTAINTIES = list(Certainty)
INFERENCE_SCHEMES = [s.id for s in builtin_schemes() if s.scheme_kind.value == "inference"]
ALL_SCHEME_IDS = [s.id for s in builtin_schemes()]


def random_config(rng: random.Random, *, sign_constrained: bool = True,
                  attack_mode: str | None = None) -> CredibilityConfig:
    def weight(lo=0.0, hi=2.0):
        return round(rng.uniform(lo, hi), 3)

    w_conflict = -weight() if sign_constrained else weight(-2.0, 2.0)
    return CredibilityConfig(
        w_cert=weight(),
        w_usage=weight(),
        w_minsup=weight(0.0, 1.0),
        w_conflict=w_conflict,
        w_pref=weight(),
        w_scheme=weight(),
        scheme_weights={sid: round(rng.uniform(0.0, 5.0), 2) for sid in ALL_SCHEME_IDS},
        balance_point=0.0,
        attack_mode=attack_mode or rng.choice(ATTACK_MODES),
    )


def random_network(rng: random.Random, *, max_nodes: int = 15, force_cycles: bool = False,
                   with_cqs: bool = False) -> tuple[ArgumentNetwork, list[str]]:
    """Grow a random consistent network; returns it plus the id list."""
    net = ArgumentNetwork()
    ids: list[str] = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SchemeArityWarning)
        for _ in range(rng.randint(1, 3)):
            ids.append(net.create_i_node(f"statement {len(ids)}", rng.choice(CERTAINTIES),
                                         author=rng.choice("abc")))
        while len(ids) < rng.randint(2, max_nodes):
            i_nodes = [nid for nid in ids if net.snapshot().nodes[nid].kind is NodeKind.I]
            roll = rng.random()
            if roll < 0.45 or not i_nodes:
                ids.append(net.create_i_node(f"statement {len(ids)}", rng.choice(CERTAINTIES),
                                             author=rng.choice("abc")))
                continue
            kind = rng.choices([NodeKind.RA, NodeKind.CA, NodeKind.PA], weights=[5, 2, 2])[0]
            scheme = {
                NodeKind.RA: rng.choice(INFERENCE_SCHEMES),
                NodeKind.CA: "conflict",
                NodeKind.PA: "preference",
            }[kind]
            premises = rng.sample(i_nodes, k=min(len(i_nodes), rng.randint(1, 2)))
            conclusion = rng.choice(ids)
            ids.append(net.create_s_node(kind, f"link {len(ids)}", rng.choice(CERTAINTIES),
                                         premises=premises, conclusion=conclusion,
                                         scheme=scheme, author=rng.choice("abc")))
        if force_cycles:
            snapshot = net.snapshot()
            i_nodes = [nid for nid in ids if snapshot.nodes[nid].kind is NodeKind.I]
            if len(i_nodes) < 2:
                i_nodes.append(net.create_i_node("cycle seed", Certainty.AVERAGE))
                ids.append(i_nodes[-1])
                if len(i_nodes) < 2:
                    i_nodes.append(net.create_i_node("cycle seed 2", Certainty.AVERAGE))
                    ids.append(i_nodes[-1])
            a, b = rng.sample(i_nodes, k=2)
            ids.append(net.create_s_node(NodeKind.RA, "cycle forward", Certainty.AVERAGE,
                                         premises=[b], conclusion=a,
                                         scheme=rng.choice(INFERENCE_SCHEMES)))
            ids.append(net.create_s_node(NodeKind.RA, "cycle back", Certainty.AVERAGE,
                                         premises=[a], conclusion=b,
                                         scheme=rng.choice(INFERENCE_SCHEMES)))
        if with_cqs:
            snapshot = net.snapshot()
            s_nodes = [nid for nid in ids if snapshot.nodes[nid].kind.is_scheme]
            raised = []
            for nid in s_nodes:
                descriptor = snapshot.schemes[snapshot.nodes[nid].scheme]
                if descriptor.critical_questions and rng.random() < 0.4:
                    raised.append(net.raise_critical_question(
                        nid, rng.randrange(len(descriptor.critical_questions)), "challenged"))
            for cq_id in raised:
                if rng.random() < 0.5:
                    net.resolve_critical_question(cq_id, "settled")
    return net, ids


def fresh_premises(rng: random.Random, net: ArgumentNetwork, count: int) -> list[str]:
    return [net.create_i_node(f"fresh premise {net.version}-{i}", rng.choice(CERTAINTIES))
            for i in range(count)]
