"""Single-shot LOCAL-model simulation.

A T-round deterministic LOCAL algorithm is modelled as a pure function from
a node's radius-T view to its output.  The view carries the induced ball
around the node -- nodes, edges, input labels, advice strings, and any label
layers produced by earlier phases -- and nothing else, so locality is
enforced by construction: the simulator materializes the ball and the
algorithm has no other channel to the graph.

``run_local`` evaluates the function at every node and reports the declared
radius plus wall-clock statistics.  ``PhasedDecoder`` chains several such
functions, exposing each phase's outputs to the next as a label layer; its
declared radius is the sum of the phase radii.

Views compare by content.  When a view exhausts its whole connected
component the simulator hands every node of the component the same view
object (re-centered), and :func:`analyze_once` lets an algorithm run a
whole-component analysis exactly once and share it across the component's
nodes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from .errors import InvalidParams
from .graph import Graph

LabelLayers = Mapping[str, Mapping[int, Hashable]]


@dataclass(frozen=True)
class View:
    """Everything a node may look at: the induced ball of the declared
    radius around ``center``, with labels restricted to it."""

    center: int
    radius: int
    n: int
    max_degree: int
    nodes: Tuple[int, ...]                       # sorted
    edges: Tuple[Tuple[int, int], ...]           # sorted, u < v
    exhausted: bool                              # ball contains its whole component
    input_labels: Tuple[Tuple[int, int, str], ...]
    advice: Tuple[Tuple[int, str], ...]          # nonempty strings only
    labels: Tuple[Tuple[str, Tuple[Tuple[int, Hashable], ...]], ...]

    @property
    def content_key(self) -> Tuple:
        """Identity of the view minus the center: two nodes whose balls
        coincide share analysis results keyed on this."""
        return (self.radius, self.n, self.max_degree, self.nodes, self.edges,
                self.exhausted, self.input_labels, self.advice, self.labels)

    def graph(self) -> Graph:
        return _view_graph(self.content_key, self.nodes, self.edges, self.input_labels)

    def advice_map(self) -> Dict[int, str]:
        return dict(self.advice)

    def label_map(self, layer: str) -> Dict[int, Hashable]:
        for name, pairs in self.labels:
            if name == layer:
                return dict(pairs)
        return {}

    def sees_whole_component(self) -> bool:
        return self.exhausted

    def distance_to_center(self, v: int) -> Optional[int]:
        return self.graph().distance(self.center, v)


_GRAPH_CACHE: Dict[Tuple, Graph] = {}


def _view_graph(key: Tuple, nodes, edges, input_labels) -> Graph:
    g = _GRAPH_CACHE.get(key)
    if g is None:
        labels = {}
        for (u, v, lab) in input_labels:
            labels[(u, v)] = lab
            labels[(v, u)] = lab
        g = Graph.from_edges(nodes, edges, labels)
        if len(_GRAPH_CACHE) >= 256:
            _GRAPH_CACHE.clear()
        _GRAPH_CACHE[key] = g
    return g


def collect_view(g: Graph, center: int, radius: int,
                 advice: Optional[Mapping[int, str]] = None,
                 labels: Optional[LabelLayers] = None) -> View:
    """Materialize the radius-``radius`` view of ``center``."""
    if radius < 0:
        raise InvalidParams("radius must be >= 0")
    dist = g.bfs_dist([center], cutoff=radius)
    return _assemble_view(g, center, radius, dist, advice, labels)


def _assemble_view(g: Graph, center: int, radius: int, dist: Mapping[int, int],
                   advice: Optional[Mapping[int, str]],
                   labels: Optional[LabelLayers]) -> View:
    nodes = tuple(sorted(dist))
    in_ball = set(nodes)
    edges = []
    exhausted = True
    for v in nodes:
        for u in g.neighbors(v):
            if u in in_ball:
                if v < u:
                    edges.append((v, u))
            else:
                exhausted = False
    ilabels = tuple(sorted((u, v, g.label(u, v)) for (u, v) in edges
                           if g.label(u, v) is not None))
    adv: Tuple[Tuple[int, str], ...] = ()
    if advice:
        adv = tuple((v, advice[v]) for v in nodes if advice.get(v))
    lay: List[Tuple[str, Tuple[Tuple[int, Hashable], ...]]] = []
    if labels:
        for name in sorted(labels):
            layer = labels[name]
            pairs = tuple((v, layer[v]) for v in nodes if v in layer)
            lay.append((name, pairs))
    return View(center=center, radius=radius, n=g.n, max_degree=g.max_degree,
                nodes=nodes, edges=tuple(sorted(edges)), exhausted=exhausted,
                input_labels=ilabels, advice=adv, labels=tuple(lay))


@dataclass(frozen=True)
class LocalAlgorithm:
    """A deterministic LOCAL algorithm in single-shot form."""

    name: str
    radius: int
    evaluate: Callable[[View], Hashable]


@dataclass
class LocalityReport:
    algorithm: str
    declared_radius: int
    nodes: int
    evaluations: int
    wall_seconds: float
    phases: List["LocalityReport"] = field(default_factory=list)

    def as_dict(self) -> Dict[str, Any]:
        out = {"algorithm": self.algorithm,
               "declared_radius": self.declared_radius,
               "nodes": self.nodes,
               "evaluations": self.evaluations,
               "wall_seconds": round(self.wall_seconds, 6)}
        if self.phases:
            out["phases"] = [p.as_dict() for p in self.phases]
        return out


def run_local(g: Graph, algo: LocalAlgorithm,
              advice: Optional[Mapping[int, str]] = None,
              labels: Optional[LabelLayers] = None,
              ) -> Tuple[Dict[int, Hashable], LocalityReport]:
    """Evaluate ``algo`` at every node of ``g``.

    Views that exhaust their component are computed once per component and
    re-centered for its remaining nodes, so whole-graph-radius algorithms
    cost O(component) per component rather than O(component) per node.
    """
    start = time.perf_counter()
    outputs: Dict[int, Hashable] = {}
    component_view: Dict[int, View] = {}   # node -> exhausted view of its component
    evaluations = 0
    for v in g.nodes:
        base = component_view.get(v)
        if base is not None:
            view = replace(base, center=v)
        else:
            view = collect_view(g, v, algo.radius, advice, labels)
            if view.exhausted:
                for w in view.nodes:
                    component_view[w] = view
        outputs[v] = algo.evaluate(view)
        evaluations += 1
    report = LocalityReport(algorithm=algo.name, declared_radius=algo.radius,
                            nodes=g.n, evaluations=evaluations,
                            wall_seconds=time.perf_counter() - start)
    return outputs, report


# -- shared whole-view analyses -------------------------------------------

_ANALYSIS_CACHE: Dict[Tuple, Any] = {}


def analyze_once(tag: str, view: View, build: Callable[[View], Any]) -> Any:
    """Run ``build(view)`` once per distinct view content and share the
    result across nodes whose views coincide (its value must therefore not
    depend on ``view.center``)."""
    key = (tag, view.content_key)
    if key in _ANALYSIS_CACHE:
        return _ANALYSIS_CACHE[key]
    value = build(view)
    if len(_ANALYSIS_CACHE) >= 512:
        _ANALYSIS_CACHE.clear()
    _ANALYSIS_CACHE[key] = value
    return value


# -- phased decoders -------------------------------------------------------

@dataclass(frozen=True)
class Phase:
    name: str
    radius: int
    evaluate: Callable[[View], Hashable]


class PhasedDecoder:
    """Sequential LOCAL phases; phase i's outputs appear to later phases as
    the label layer named after it.  Declared radius is the sum of phase
    radii (information can flow along a chain of dependent phases)."""

    def __init__(self, name: str, phases: Sequence[Phase],
                 initial_labels: Optional[Mapping[str, Mapping[int, Hashable]]] = None):
        if not phases:
            raise InvalidParams("a decoder needs at least one phase")
        names = [p.name for p in phases]
        if len(set(names)) != len(names):
            raise InvalidParams("phase names must be unique")
        self.name = name
        self.phases = list(phases)
        self.initial_labels = dict(initial_labels) if initial_labels else {}

    @property
    def radius(self) -> int:
        return sum(p.radius for p in self.phases)

    def run(self, g: Graph, advice: Optional[Mapping[int, str]] = None,
            ) -> Tuple[Dict[int, Hashable], LocalityReport]:
        start = time.perf_counter()
        labels: Dict[str, Mapping[int, Hashable]] = dict(self.initial_labels)
        outputs: Dict[int, Hashable] = {}
        sub: List[LocalityReport] = []
        for phase in self.phases:
            algo = LocalAlgorithm(name=phase.name, radius=phase.radius,
                                  evaluate=phase.evaluate)
            outputs, rep = run_local(g, algo, advice=advice, labels=labels)
            sub.append(rep)
            labels[phase.name] = outputs
        report = LocalityReport(algorithm=self.name, declared_radius=self.radius,
                                nodes=g.n, evaluations=sum(r.evaluations for r in sub),
                                wall_seconds=time.perf_counter() - start, phases=sub)
        return outputs, report
