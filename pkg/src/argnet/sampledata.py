"""Ready-made sample networks: a two-premise inference chain and the
five-argument software-cost debate used throughout the demos and tests.

The debate reconstructs a small multi-user exchange: an argument from
position to know for "Good software costs more", a sign argument that
Protege is good and free, a conflict node attacking the first argument's
inference, an argument from example reusing the sign argument's conclusion,
and a preference node backing that last inference. Exactly one certainty
(the main claim: high) is fixed by the source material; the rest are
editorial choices recorded here.
"""

from __future__ import annotations

from argnet.model import Certainty, NodeKind
from argnet.network import ArgumentNetwork

TOPIC = "software"


def build_chain(network: ArgumentNetwork | None = None) -> tuple[ArgumentNetwork, dict[str, str]]:
    """I1, I2 -> RA (position to know) -> I3, plus helpers to extend it."""
    net = network if network is not None else ArgumentNetwork()
    ids = {}
    ids["i1"] = net.create_i_node("John is a weather man", certainty=Certainty.HIGH, author="jim")
    ids["i2"] = net.create_i_node("John said that it would rain tomorrow",
                                  certainty=Certainty.AVERAGE, author="jim")
    ids["i3"] = net.create_i_node("It will rain tomorrow", certainty=Certainty.HIGH, author="jim")
    ids["s1"] = net.create_s_node(
        NodeKind.RA,
        "John's occupation and statement prove it will rain",
        Certainty.VERY_HIGH,
        premises=[ids["i1"], ids["i2"]],
        conclusion=ids["i3"],
        scheme="argument_from_position_to_know",
        topic=[("rain", 1.0)],
        author="jim",
    )
    return net, ids


def add_chain_attack(net: ArgumentNetwork, ids: dict[str, str]) -> dict[str, str]:
    """A low-certainty conflict against the chain's conclusion."""
    ids["i4"] = net.create_i_node("The sky is perfectly clear tonight",
                                  certainty=Certainty.LOW, author="sally")
    ids["ca1"] = net.create_s_node(
        NodeKind.CA,
        "A clear sky contradicts the rain forecast",
        Certainty.AVERAGE,
        premises=[ids["i4"]],
        conclusion=ids["i3"],
        scheme="conflict",
        topic=[("rain", 1.0)],
        author="sally",
    )
    return ids


def build_software_debate(network: ArgumentNetwork | None = None) -> tuple[ArgumentNetwork, dict[str, str]]:
    """The five-argument software-cost debate network.

    Returns the network and a name -> node-id map with keys: claim, p1a,
    p1b, argument1, java_free, protege_java, protege_good, argument2,
    argument3 (the CA), typical, argument4, java_good, argument5 (the PA).
    """
    net = network if network is not None else ArgumentNetwork()
    ids: dict[str, str] = {}

    # Argument 1 (jim): position to know that good software costs more.
    ids["claim"] = net.create_i_node(
        "Good software costs more",
        certainty=Certainty.HIGH,
        context=[("software", 1.0)],
        author="jim",
    )
    ids["p1a"] = net.create_i_node(
        "Industry analysts are in a position to know software economics",
        certainty=Certainty.AVERAGE, context=[("software", 1.0)], author="jim",
    )
    ids["p1b"] = net.create_i_node(
        "Industry analysts say that good software costs more",
        certainty=Certainty.AVERAGE, context=[("software", 1.0)], author="jim",
    )
    ids["argument1"] = net.create_s_node(
        NodeKind.RA,
        "Analysts' position to know establishes that good software costs more",
        Certainty.AVERAGE,
        premises=[ids["p1a"], ids["p1b"]],
        conclusion=ids["claim"],
        scheme="argument_from_position_to_know",
        topic=[(TOPIC, 1.0)],
        author="jim",
    )

    # Argument 2 (sally): by the sign of being a Java application,
    # Protege is good and free.
    ids["java_free"] = net.create_i_node(
        "Java applications are usually free",
        certainty=Certainty.HIGH, context=[("java", 1.0)], author="sally",
    )
    ids["protege_java"] = net.create_i_node(
        "Protege is developed in Java",
        certainty=Certainty.VERY_HIGH, context=[("java", 1.0), ("protege", 0.9)], author="sally",
    )
    ids["protege_good"] = net.create_i_node(
        "Protege is a good and free piece of software",
        certainty=Certainty.HIGH, context=[("protege", 1.0)], author="sally",
    )
    ids["argument2"] = net.create_s_node(
        NodeKind.RA,
        "Being developed in Java signals that Protege is good and free",
        Certainty.HIGH,
        premises=[ids["java_free"], ids["protege_java"]],
        conclusion=ids["protege_good"],
        scheme="argument_from_sign",
        topic=[(TOPIC, 1.0)],
        author="sally",
    )

    # Argument 3 (sally): the conflict, attacking argument 1's inference
    # node rather than its conclusion.
    ids["argument3"] = net.create_s_node(
        NodeKind.CA,
        "A good and free Protege contradicts the costs-more inference",
        Certainty.VERY_HIGH,
        premises=[ids["protege_good"]],
        conclusion=ids["argument1"],
        scheme="conflict",
        topic=[(TOPIC, 1.0)],
        author="sally",
    )

    # Argument 4 (steve): by example, reusing argument 2's conclusion.
    ids["typical"] = net.create_i_node(
        "Protege is typical of good Java software",
        certainty=Certainty.AVERAGE, context=[("java", 1.0)], author="steve",
    )
    ids["java_good"] = net.create_i_node(
        "Java applications are good",
        certainty=Certainty.AVERAGE, context=[("java", 1.0)], author="steve",
    )
    ids["argument4"] = net.create_s_node(
        NodeKind.RA,
        "Protege exemplifies that Java applications are good",
        Certainty.AVERAGE,
        premises=[ids["protege_good"], ids["typical"]],
        conclusion=ids["java_good"],
        scheme="argument_from_example",
        topic=[(TOPIC, 1.0)],
        author="steve",
    )

    # Argument 5 (tom): a preference node backing argument 4's inference,
    # reusing one of argument 2's premises.
    ids["argument5"] = net.create_s_node(
        NodeKind.PA,
        "Free availability is a reason to prefer the Java-quality argument",
        Certainty.HIGH,
        premises=[ids["java_free"]],
        conclusion=ids["argument4"],
        scheme="preference",
        topic=[(TOPIC, 1.0)],
        author="tom",
    )
    return net, ids
