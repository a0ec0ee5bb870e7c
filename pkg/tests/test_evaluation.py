from __future__ import annotations

import dataclasses
import random

import pytest

from argnet.errors import (
    EmptyDenominator,
    MissingSchemeWeightWarning,
    NodeNotInTree,
    NotSchemeNode,
    UnknownNode,
)
from argnet.evaluation import (
    ATTACK_COUNT,
    ATTACK_CREDIBILITY_SUM,
    CredibilityConfig,
    contradiction_degree_simple,
    contradiction_degree_weighted,
    credibility,
    credibility_at,
    evaluate_tree,
    explanation,
    topic_scope,
    validity,
)
from argnet.model import Certainty, NodeKind
from argnet.network import ArgumentNetwork, argument_tree
from argnet.sampledata import TOPIC
from tests.generators import fresh_premises, random_config, random_network
from tests.oracle import oracle_credibility, oracle_greedy_path


# -- frozen derived values ----------------------------------------------------


def test_isolated_i_node_high_certainty(scenario_config):
    net = ArgumentNetwork()
    node = net.create_i_node("alone", certainty=Certainty.HIGH)
    snapshot = net.snapshot()
    breakdown = credibility_at(node, snapshot, scenario_config)
    assert breakdown.total == pytest.approx(0.14, abs=1e-9)
    assert breakdown.total == pytest.approx(
        oracle_credibility(snapshot, scenario_config, node), abs=1e-12)
    assert (breakdown.c, breakdown.u, breakdown.m, breakdown.a, breakdown.p, breakdown.s) == \
        (7.0, 0, 0.0, 0.0, 0.0, 0.0)


def test_chain_values_match_frozen_oracle_numbers(chain, scenario_config):
    net, ids = chain
    snapshot = net.snapshot()
    expected = {"i1": 0.84, "i2": 0.80, "s1": 0.724, "i3": 0.97032}
    for key, value in expected.items():
        total = credibility_at(ids[key], snapshot, scenario_config).total
        assert total == pytest.approx(value, abs=1e-9)
        assert total == pytest.approx(
            oracle_credibility(snapshot, scenario_config, ids[key]), abs=1e-12)
    s1 = credibility_at(ids["s1"], snapshot, scenario_config)
    assert s1.m == pytest.approx(0.80, abs=1e-9)
    assert s1.s == 4.0


def test_chain_attack_flips_validity_and_usage_cancels(attacked_chain, scenario_config):
    net, ids = attacked_chain
    snapshot = net.snapshot()
    i3 = credibility_at(ids["i3"], snapshot, scenario_config)
    assert i3.u == 1  # +1 participation, -1 CA-conclusion
    assert i3.a == 1.0
    assert i3.total == pytest.approx(-0.52968, abs=1e-9)
    assert i3.total == pytest.approx(
        oracle_credibility(snapshot, scenario_config, ids["i3"]), abs=1e-12)
    verdict = validity(ids["i3"], snapshot, scenario_config)
    assert not verdict.valid
    assert credibility_at(ids["ca1"], snapshot, scenario_config).total == pytest.approx(0.5332, abs=1e-9)


def test_chain_validity_before_attack(chain, scenario_config):
    net, ids = chain
    verdict = validity(ids["i3"], net.snapshot(), scenario_config)
    assert verdict.valid
    assert verdict.credibility == pytest.approx(0.97032, abs=1e-9)
    assert verdict.balance_point == 0.0


def test_validity_unknown_node(scenario_config):
    with pytest.raises(UnknownNode):
        validity("ghost", ArgumentNetwork().snapshot(), scenario_config)


def test_validity_at_exact_balance_point_is_invalid():
    net = ArgumentNetwork()
    node = net.create_i_node("edge", certainty=Certainty.AVERAGE)
    config = CredibilityConfig(w_cert=0.0, w_usage=0.0, w_minsup=0.0, w_conflict=0.0,
                               w_pref=0.0, w_scheme=0.0, balance_point=0.0)
    assert not validity(node, net.snapshot(), config).valid


def test_credibility_requires_node_in_tree(chain, scenario_config):
    net, ids = chain
    snapshot = net.snapshot()
    lone = net.create_i_node("isolated")
    tree = argument_tree(ids["i3"], net.snapshot())
    breakdown = credibility(ids["s1"], tree, net.snapshot(), scenario_config)
    assert breakdown.total == pytest.approx(0.724, abs=1e-9)
    with pytest.raises(NodeNotInTree):
        credibility(lone, tree, net.snapshot(), scenario_config)
    del snapshot


def test_missing_scheme_weight_warns_and_counts_zero(scenario_config):
    net = ArgumentNetwork()
    p = net.create_i_node("assertion", certainty=Certainty.AVERAGE)
    q = net.create_i_node("expertise", certainty=Certainty.AVERAGE)
    c = net.create_i_node("conclusion", certainty=Certainty.AVERAGE)
    ra = net.create_s_node(NodeKind.RA, "per the expert", Certainty.AVERAGE,
                           premises=[p, q], conclusion=c,
                           scheme="argument_from_expert_opinion")
    with pytest.warns(MissingSchemeWeightWarning):
        breakdown = credibility_at(ra, net.snapshot(), scenario_config)
    assert breakdown.s == 0.0


# -- contradiction degrees ------------------------------------------------------


def test_contradiction_simple_scenario_census(debate):
    net, ids = debate
    snapshot = net.snapshot()
    scope = topic_scope(snapshot, TOPIC)
    kinds = [snapshot.nodes[nid].kind.value for nid in scope]
    assert sorted(kinds) == ["CA", "PA", "RA", "RA", "RA"]
    assert contradiction_degree_simple(scope, snapshot) == 0.25


def test_contradiction_simple_zero_numerator(chain):
    net, ids = chain
    snapshot = net.snapshot()
    assert contradiction_degree_simple([ids["s1"]], snapshot) == 0.0


def test_contradiction_simple_empty_denominator(attacked_chain):
    net, ids = attacked_chain
    with pytest.raises(EmptyDenominator):
        contradiction_degree_simple([ids["ca1"]], net.snapshot())


def test_contradiction_simple_rejects_i_nodes(chain):
    net, ids = chain
    with pytest.raises(NotSchemeNode):
        contradiction_degree_simple([ids["i1"]], net.snapshot())


def test_contradiction_weighted_derived_value(attacked_chain, scenario_config):
    net, ids = attacked_chain
    snapshot = net.snapshot()
    value = contradiction_degree_weighted([ids["s1"], ids["ca1"]], snapshot, scenario_config)
    assert value == pytest.approx(0.5332 / 0.724, abs=1e-4)


def test_contradiction_weighted_no_ca_is_zero(chain, scenario_config):
    net, ids = chain
    assert contradiction_degree_weighted([ids["s1"]], net.snapshot(), scenario_config) == 0.0


# -- explanation -----------------------------------------------------------------


def test_explanation_isolated_node(scenario_config):
    net = ArgumentNetwork()
    node = net.create_i_node("the lone claim")
    result = explanation(node, net.snapshot(), scenario_config)
    assert result.path == (node,)
    assert result.text == "the lone claim"
    assert len(result.path_credibilities) == 1


def test_explanation_scenario_shape(debate, scenario_config):
    net, ids = debate
    result = explanation(ids["claim"], net.snapshot(), scenario_config)
    assert result.path[0] == ids["claim"]
    assert ids["protege_good"] in result.path      # the conflict's premise
    assert ids["argument2"] in result.path
    assert ids["java_free"] in result.path         # one of argument 2's antecedents
    assert "Java applications are usually free" in result.text
    assert "Protege is developed in Java" in result.text
    assert 'in conflict with "Good software costs more"' in result.text


def test_explanation_matches_independent_greedy_oracle():
    rng = random.Random(42)
    for _ in range(120):
        net, ids = random_network(rng, max_nodes=8, force_cycles=rng.random() < 0.3)
        snapshot = net.snapshot()
        config = random_config(rng)
        root = rng.choice(ids)
        got = explanation(root, snapshot, config)
        assert list(got.path) == oracle_greedy_path(snapshot, config, root)


# -- attack modes ------------------------------------------------------------------


def test_attack_modes_differ_only_in_a_factor(attacked_chain, scenario_config):
    net, ids = attacked_chain
    snapshot = net.snapshot()
    count_mode = credibility_at(ids["i3"], snapshot, scenario_config)
    sum_mode = credibility_at(ids["i3"], snapshot,
                              scenario_config.with_attack_mode(ATTACK_CREDIBILITY_SUM))
    assert count_mode.a == 1.0
    assert sum_mode.a == pytest.approx(0.5332, abs=1e-9)
    assert sum_mode.total == pytest.approx(0.97032 - 1.5 * 0.5332, abs=1e-9)


# -- oracle equivalence on random networks ---------------------------------------------


def test_engine_matches_oracle_on_random_networks():
    rng = random.Random(1234)
    for _ in range(80):
        net, ids = random_network(rng, max_nodes=14, force_cycles=rng.random() < 0.25,
                                  with_cqs=rng.random() < 0.3)
        snapshot = net.snapshot()
        config = random_config(rng)
        for root in rng.sample(ids, k=min(4, len(ids))):
            got = credibility_at(root, snapshot, config).total
            want = oracle_credibility(snapshot, config, root)
            assert got == pytest.approx(want, abs=1e-9)


# -- invariants & properties --------------------------------------------------------------


def test_breakdown_identity_property():
    rng = random.Random(77)
    for _ in range(60):
        net, ids = random_network(rng, max_nodes=12)
        snapshot = net.snapshot()
        config = random_config(rng)
        root = rng.choice(ids)
        tree = argument_tree(root, snapshot)
        evaluated = evaluate_tree(tree, snapshot, config)
        for breakdown in evaluated.breakdowns.values():
            recomputed = (config.w_cert * breakdown.c + config.w_usage * breakdown.u
                          + config.w_minsup * breakdown.m + config.w_conflict * breakdown.a
                          + config.w_pref * breakdown.p + config.w_scheme * breakdown.s)
            assert recomputed == breakdown.total


def test_pa_monotonicity_property():
    rng = random.Random(2024)
    for _ in range(200):
        net, ids = random_network(rng, max_nodes=10)
        config = random_config(rng, sign_constrained=True)
        target = rng.choice(ids)
        before = credibility_at(target, net.snapshot(), config).total
        premises = fresh_premises(rng, net, rng.randint(1, 2))
        net.create_s_node(NodeKind.PA, "extra support", rng.choice(list(Certainty)),
                          premises=premises, conclusion=target, scheme="preference")
        after = credibility_at(target, net.snapshot(), config).total
        assert after >= before - 1e-12


def test_ca_monotonicity_property_both_modes():
    rng = random.Random(2025)
    for _ in range(200):
        net, ids = random_network(rng, max_nodes=10)
        mode = rng.choice([ATTACK_COUNT, ATTACK_CREDIBILITY_SUM])
        config = random_config(rng, sign_constrained=True, attack_mode=mode)
        target = rng.choice(ids)
        before = credibility_at(target, net.snapshot(), config).total
        premises = fresh_premises(rng, net, rng.randint(1, 2))
        net.create_s_node(NodeKind.CA, "objection", rng.choice(list(Certainty)),
                          premises=premises, conclusion=target, scheme="conflict")
        after = credibility_at(target, net.snapshot(), config).total
        assert after <= before + 1e-12


def test_weakest_link_sensitivity_property():
    rng = random.Random(4096)
    for _ in range(200):
        net = ArgumentNetwork()
        weak = net.create_i_node("weak premise", Certainty.VERY_LOW)
        strong = net.create_i_node("strong premise", Certainty.VERY_HIGH)
        conclusion = net.create_i_node("conclusion", rng.choice(list(Certainty)))
        ra = net.create_s_node(NodeKind.RA, "inference", rng.choice(list(Certainty)),
                               premises=[weak, strong], conclusion=conclusion,
                               scheme="argument_from_sign")
        config = dataclasses.replace(random_config(rng, sign_constrained=True),
                                     attack_mode=ATTACK_COUNT)
        if config.w_cert == 0.0:
            config = dataclasses.replace(config, w_cert=0.5)
        base = credibility_at(ra, net.snapshot(), config)
        assert base.m == credibility_at(weak, net.snapshot(), config).total

        # raising the non-minimal premise leaves m unchanged
        net.create_s_node(NodeKind.RA, "backs the strong premise", Certainty.HIGH,
                          premises=fresh_premises(rng, net, 1), conclusion=strong,
                          scheme="argument_from_sign")
        after_boost = credibility_at(ra, net.snapshot(), config)
        assert after_boost.m == base.m

        # attacking the minimal premise lowers m (usage cancellation keeps u)
        net.create_s_node(NodeKind.CA, "undermines the weak premise", Certainty.HIGH,
                          premises=fresh_premises(rng, net, 1), conclusion=weak,
                          scheme="conflict")
        after_attack = credibility_at(ra, net.snapshot(), config)
        if config.w_conflict < 0.0:
            assert after_attack.m < after_boost.m
        else:
            assert after_attack.m == pytest.approx(after_boost.m, abs=1e-12)


def test_determinism_bit_identical_runs():
    rng = random.Random(31337)
    net, ids = random_network(rng, max_nodes=16, force_cycles=True, with_cqs=True)
    config = random_config(rng)
    snapshot_a = net.snapshot()
    snapshot_b = net.snapshot()
    assert snapshot_a == snapshot_b
    for root in ids[:6]:
        one = credibility_at(root, snapshot_a, config)
        two = credibility_at(root, snapshot_b, config)
        assert one == two
        assert validity(root, snapshot_a, config) == validity(root, snapshot_b, config)
        assert explanation(root, snapshot_a, config) == explanation(root, snapshot_b, config)


def test_argmax_stability_under_scheme_weight_rescaling():
    # doubling every scheme weight while halving w_scheme is exact in binary
    # floating point, so all outputs must be bit-identical.
    rng = random.Random(13)
    for _ in range(40):
        net, ids = random_network(rng, max_nodes=12)
        snapshot = net.snapshot()
        config = random_config(rng)
        rescaled = dataclasses.replace(
            config,
            w_scheme=config.w_scheme / 2.0,
            scheme_weights={k: v * 2.0 for k, v in config.scheme_weights.items()},
        )
        for root in rng.sample(ids, k=min(3, len(ids))):
            assert credibility_at(root, snapshot, config).total == \
                credibility_at(root, snapshot, rescaled).total
            assert explanation(root, snapshot, config).path == \
                explanation(root, snapshot, rescaled).path


def test_blocking_removes_only_m_contribution(scenario_config):
    net = ArgumentNetwork()
    ra = None
    assertion = net.create_i_node("E asserts A", certainty=Certainty.HIGH)
    expertise = net.create_i_node("E is an expert", certainty=Certainty.HIGH)
    conclusion = net.create_i_node("A holds", certainty=Certainty.HIGH)
    ra = net.create_s_node(NodeKind.RA, "expert inference", Certainty.HIGH,
                           premises=[assertion, expertise], conclusion=conclusion,
                           scheme="argument_from_position_to_know")
    before = credibility_at(conclusion, net.snapshot(), scenario_config)
    cq_id = net.raise_critical_question(ra, 0, "in a position to know?")
    during = credibility_at(conclusion, net.snapshot(), scenario_config)
    assert during.m == 0.0
    assert during.u == before.u          # usage is structural, not blocked
    assert (during.c, during.a, during.p, during.s) == (before.c, before.a, before.p, before.s)
    net.resolve_critical_question(cq_id, "yes, verified")
    after = credibility_at(conclusion, net.snapshot(), scenario_config)
    assert after == before


def test_contradiction_weighted_zero_denominator():
    from argnet.errors import ZeroDenominator

    net = ArgumentNetwork()
    p = net.create_i_node("p", Certainty.AVERAGE)
    c = net.create_i_node("c", Certainty.AVERAGE)
    ra = net.create_s_node(NodeKind.RA, "link", Certainty.AVERAGE,
                           premises=[p], conclusion=c, scheme="argument_from_sign")
    zeroed = CredibilityConfig(w_cert=0.0, w_usage=0.0, w_minsup=0.0, w_conflict=0.0,
                               w_pref=0.0, w_scheme=0.0,
                               scheme_weights={"argument_from_sign": 1.0})
    with pytest.raises(ZeroDenominator):
        contradiction_degree_weighted([ra], net.snapshot(), zeroed)
