"""Hand-built simple ACR-GNNs recognising strict linear orders and their gadgetisations."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

from acr_workbench.errors import InvalidParameterError
from acr_workbench.gnn.compiler import compile_with_table
from acr_workbench.gnn.network import (
    AcrGnn,
    Activation,
    AggregationSpec,
    Classifier,
    Comparison,
    Layer,
    Rational,
)
from acr_workbench.gnn.transforms import parallel_layers, to_simple
from acr_workbench.graphs.generators import SeedLike, make_rng
from acr_workbench.logic.syntax import And, Diamond, Formula, GlobalExists, Not, Prop, disjunction


class _LayerPlan:
    """Assemble a layer from named input and output dimensions."""

    def __init__(self, inputs: Sequence[str], outputs: Sequence[str]) -> None:
        self.inputs = {name: i for i, name in enumerate(inputs)}
        self.outputs = {name: j for j, name in enumerate(outputs)}
        size_in, size_out = len(inputs), len(outputs)
        self.self_weights = [[0] * size_out for _ in range(size_in)]
        self.aggregate_weights = [[0] * size_out for _ in range(size_in)]
        self.readout_weights = [[0] * size_out for _ in range(size_in)]
        self.bias: List[Rational] = [0] * size_out

    def own(self, source: str, target: str, weight: Rational = 1) -> "_LayerPlan":
        self.self_weights[self.inputs[source]][self.outputs[target]] += weight
        return self

    def neighbours(self, source: str, target: str, weight: Rational = 1) -> "_LayerPlan":
        self.aggregate_weights[self.inputs[source]][self.outputs[target]] += weight
        return self

    def everyone(self, source: str, target: str, weight: Rational = 1) -> "_LayerPlan":
        self.readout_weights[self.inputs[source]][self.outputs[target]] += weight
        return self

    def constant(self, target: str, value: Rational) -> "_LayerPlan":
        self.bias[self.outputs[target]] += value
        return self

    def carry(self, *names: str) -> "_LayerPlan":
        for name in names:
            self.own(name, name)
        return self

    def build(self) -> Layer:
        return Layer.build(self.self_weights, self.aggregate_weights, self.readout_weights,
                           self.bias, activation=Activation.RELU)


def build_linear_order_gnn() -> AcrGnn:
    """Six-layer simple ACR-GNN accepting exactly the strict linear orders.

    Layers 1-4 compute, in parallel dimensions, ``|E|``, ``C(n, 2)``,
    ``hom(P2, G)`` and ``C(n, 3)``; layer 5 takes the four one-sided ReLU
    differences and layer 6 sums them. The classifier accepts iff the sum
    is at most 0.
    """

    half, sixth = Fraction(1, 2), Fraction(1, 6)
    layer1 = _LayerPlan([], ["e", "b2", "h", "b3"])
    for name in ("e", "b2", "h", "b3"):
        layer1.constant(name, 1)

    layer2 = _LayerPlan(["e", "b2", "h", "b3"], ["e", "b2", "h", "b3"])
    layer2.neighbours("e", "e").everyone("b2", "b2").neighbours("h", "h").everyone("b3", "b3")

    layer3 = _LayerPlan(["e", "b2", "h", "b3"], ["e", "b2", "h", "b3_sq", "b3_n"])
    layer3.everyone("e", "e")
    layer3.own("b2", "b2", -half).everyone("b2", "b2", half)
    layer3.neighbours("h", "h")
    layer3.everyone("b3", "b3_sq").own("b3", "b3_n")

    layer4 = _LayerPlan(["e", "b2", "h", "b3_sq", "b3_n"], ["e", "b2", "h", "b3"])
    layer4.carry("e", "b2").everyone("h", "h")
    layer4.everyone("b3_sq", "b3", sixth).own("b3_sq", "b3", -3 * sixth).own("b3_n", "b3", 2 * sixth)

    layer5 = _LayerPlan(["e", "b2", "h", "b3"], ["e_over", "e_under", "h_over", "h_under"])
    layer5.own("e", "e_over").own("b2", "e_over", -1)
    layer5.own("b2", "e_under").own("e", "e_under", -1)
    layer5.own("h", "h_over").own("b3", "h_over", -1)
    layer5.own("b3", "h_under").own("h", "h_under", -1)

    layer6 = _LayerPlan(["e_over", "e_under", "h_over", "h_under"], ["total"])
    layer6.own("e_over", "total").own("e_under", "total").own("h_over", "total").own("h_under", "total")

    layers = tuple(plan.build() for plan in (layer1, layer2, layer3, layer4, layer5, layer6))
    classifier = Classifier.build([1], 0, Comparison.AT_MOST)
    return AcrGnn(0, layers, classifier, name="linear-order")


SOURCE = And(Prop(1), Not(Prop(2)))
SINK = And(Not(Prop(1)), Prop(2))
IDENTITY = And(Not(Prop(1)), Not(Prop(2)))
DOUBLE = And(Prop(1), Prop(2))


def _exactly_one(body: Formula) -> Formula:
    return And(Diamond(1, body), Not(Diamond(2, body)))


def gadget_structure_formula() -> Formula:
    """GML∃ sentence true exactly on gadgetisations (clauses psi1-psi4)."""

    violations = [
        DOUBLE,
        And(SOURCE, Diamond(1, SOURCE)),
        And(SINK, Diamond(1, SINK)),
        And(IDENTITY, Diamond(1, IDENTITY)),
        And(disjunction([SOURCE, SINK]), Not(_exactly_one(IDENTITY))),
        And(IDENTITY, Not(And(_exactly_one(SOURCE), _exactly_one(SINK)))),
    ]
    return Not(GlobalExists(1, disjunction(violations)))


_COUNTS = ["n", "E", "nN", "P1E", "NE", "NNn"]


def _gadget_counting_net() -> AcrGnn:
    """Counts on a gadget with ``n`` identity vertices (``N = 3n`` vertices in total).

    ``pi`` is o(x) on a source copy and i(u) on a sink copy, so summing it
    around an identity vertex gives o(u) + i(u). ``rho`` is o(x) on source
    copies only: its readout is ``E`` and the readout of its neighbour sum is
    ``sum o^2 + E``. Products with ``n`` come from readouts of broadcast
    values, divided by ``N = 3n`` later.
    """

    layer1 = _LayerPlan(["a", "b"], ["one", "S", "T", "I"])
    layer1.constant("one", 1)
    layer1.own("a", "S").own("b", "S", -1)
    layer1.own("b", "T").own("a", "T", -1)
    layer1.constant("I", 1).own("a", "I", -1).own("b", "I", -1)

    layer2 = _LayerPlan(["one", "S", "T", "I"], ["I", "pi", "rho", "n", "N"])
    layer2.carry("I")
    layer2.neighbours("S", "pi").neighbours("T", "pi").own("I", "pi", -2)
    layer2.neighbours("T", "rho").own("I", "rho", -1)
    layer2.everyone("I", "n").everyone("one", "N")

    layer3 = _LayerPlan(["I", "pi", "rho", "n", "N"], ["I", "n", "h", "sigma", "E", "nN"])
    layer3.carry("I", "n")
    layer3.neighbours("pi", "h").neighbours("rho", "sigma")
    layer3.everyone("rho", "E").everyone("n", "nN")

    deviations = ["u1", "u2", "u3", "u4"]
    layer4 = _LayerPlan(["I", "n", "h", "sigma", "E", "nN"],
                        ["I", "n", "E", "nN", "P1E", "NE", "NNn"] + deviations)
    layer4.carry("I", "n", "E", "nN")
    layer4.everyone("sigma", "P1E").everyone("E", "NE").everyone("nN", "NNn")
    # x = h - n + 1; min(1, |x|) = u1 + u2 - u3 - u4 for integer x
    layer4.own("h", "u1").own("n", "u1", -1).constant("u1", 1)
    layer4.own("n", "u2").own("h", "u2", -1).constant("u2", -1)
    layer4.own("h", "u3").own("n", "u3", -1)
    layer4.own("n", "u4").own("h", "u4", -1).constant("u4", -2)

    layer5 = _LayerPlan(["I"] + _COUNTS + deviations, _COUNTS + ["gated"])
    layer5.carry(*_COUNTS)
    layer5.own("u1", "gated").own("u2", "gated").own("u3", "gated", -1).own("u4", "gated", -1)
    layer5.own("I", "gated").constant("gated", -1)

    layer6 = _LayerPlan(_COUNTS + ["gated"], _COUNTS + ["bad_degree"])
    layer6.carry(*_COUNTS).everyone("gated", "bad_degree")

    layers = tuple(plan.build() for plan in (layer1, layer2, layer3, layer4, layer5, layer6))
    width = layers[-1].output_dim
    return AcrGnn(2, layers, Classifier.build([0] * width, 0), name="gadget-counts")


def build_gadget_order_gnn() -> AcrGnn:
    """Simple ACR-GNN accepting exactly gadgetisations of strict linear orders.

    A compiled structural check (converted to sum/ReLU form) runs beside the
    counting pipeline; the last layer collects six non-negative defects and
    the classifier accepts iff their sum is 0:

    * the structural sentence is false,
    * ``E != C(n, 2)`` (two one-sided terms),
    * ``(n - 1) E - sum o^2 != C(n, 3)`` (two one-sided terms),
    * some identity vertex has ``o(u) + i(u) != n - 1``.

    Under the degree condition ``(n - 1) E - sum o^2`` equals ``hom(P2)`` of
    the underlying digraph, so acceptance is the hom-count characterisation
    of strict linear orders.
    """

    structure_formula = gadget_structure_formula()
    compiled, table = compile_with_table(structure_formula, input_dim=2)
    structure = to_simple(compiled)
    counting = _gadget_counting_net()
    layers, offsets = parallel_layers([structure, counting])
    truth = offsets[0] + 2 * table.dim(structure_formula)
    width = layers[-1].output_dim

    names: Dict[str, int] = {"p": truth, "q": truth + 1}
    for k, name in enumerate(_COUNTS + ["bad_degree"]):
        names[name] = offsets[1] + k
    inputs = [f"_{i}" for i in range(width)]
    for name, position in names.items():
        inputs[position] = name

    final = _LayerPlan(inputs, ["e_over", "e_under", "h_over", "h_under", "degree", "structure"])
    third, sixth = Fraction(1, 3), Fraction(1, 6)
    edge_defect = {"E": 1, "nN": -sixth, "n": Fraction(1, 2)}
    path_defect = {"NE": third, "P1E": -1, "NNn": -Fraction(1, 54), "nN": sixth, "n": -third}
    for name, weight in edge_defect.items():
        final.own(name, "e_over", weight).own(name, "e_under", -weight)
    for name, weight in path_defect.items():
        final.own(name, "h_over", weight).own(name, "h_under", -weight)
    final.own("bad_degree", "degree")
    final.constant("structure", 1).own("p", "structure", -1).own("q", "structure", 1)

    all_layers = layers + (final.build(),)
    classifier = Classifier.build([1] * 6, 0, Comparison.AT_MOST)
    return AcrGnn(2, all_layers, classifier, name="gadget-order")


def random_bounded_network(
    layers: int,
    input_dim: int,
    width: int,
    c: int,
    seed: SeedLike = None,
) -> AcrGnn:
    """Random ReLU network with BoundedSum(c) aggregation and sum readout.

    Weights are small rationals so that traces stay exact and cheap.
    """

    if layers < 1 or width < 1 or c < 1:
        raise InvalidParameterError("random network needs layers, width, c >= 1")
    rng = make_rng(seed)
    choices = [Fraction(k, 2) for k in range(-4, 5)]

    def matrix(rows: int, columns: int) -> List[List[Rational]]:
        return [[rng.choice(choices) for _ in range(columns)] for _ in range(rows)]

    built = []
    previous = input_dim
    for _ in range(layers):
        built.append(Layer.build(
            matrix(previous, width), matrix(previous, width), matrix(previous, width),
            [rng.choice(choices) for _ in range(width)],
            activation=Activation.RELU,
            aggregation=AggregationSpec.bounded(c),
            readout=AggregationSpec.sum_all(),
        ))
        previous = width
    classifier = Classifier.build([rng.choice(choices) for _ in range(width)], rng.choice(choices))
    return AcrGnn(input_dim, tuple(built), classifier, name=f"random-bounded-{c}")


__all__ = [
    "build_gadget_order_gnn",
    "build_linear_order_gnn",
    "gadget_structure_formula",
    "random_bounded_network",
]
