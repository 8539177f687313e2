"""Advice assignments, bit-string codecs, schema composition, 1-bit conversion.

An advice schema is a pair: a centralized encoder that sees the whole graph
and writes a bit-string on every node, and a deterministic local decoder
that turns the advice back into a solution.  Three assignment kinds exist:

* ``uniform``  -- every node holds the same number of bits,
* ``subset``   -- some nodes hold a fixed-length string, the rest nothing,
* ``variable`` -- arbitrary per-node lengths (empty = no bits).

Composable schemas additionally promise that at most ``gamma0`` nodes hold
bits in any radius-``alpha`` ball and that no string exceeds
``c*alpha/gamma0^3`` bits; those promises are what :func:`compose_schemas`
and :func:`to_one_bit` consume, and they are re-verified by exhaustive ball
scans instead of being trusted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ConstantsInfeasible, DecodeError, GraphFormatError, InvalidParams
from .graph import Graph, log2_ceil
from .sim import LocalityReport, Phase, PhasedDecoder, View, analyze_once

BITS = frozenset("01")


def _check_bits(s: str) -> str:
    if set(s) - BITS:
        raise InvalidParams(f"not a bit-string: {s!r}")
    return s


# -- assignments -----------------------------------------------------------

@dataclass
class AdviceAssignment:
    """Per-node advice bits.  ``bits`` stores only nodes that hold bits,
    except in ``uniform`` kind where every node appears."""

    kind: str                      # uniform | subset | variable
    bits: Dict[int, str]
    length: Optional[int] = None   # fixed length for uniform / subset

    def __post_init__(self):
        if self.kind not in ("uniform", "subset", "variable"):
            raise InvalidParams(f"unknown advice kind {self.kind!r}")
        for v, s in self.bits.items():
            _check_bits(s)
        if self.kind in ("uniform", "subset"):
            if self.length is None:
                lens = {len(s) for s in self.bits.values()}
                if len(lens) > 1:
                    raise InvalidParams(f"{self.kind} advice with mixed lengths {lens}")
                self.length = lens.pop() if lens else 0
            bad = [v for v, s in self.bits.items() if len(s) != self.length]
            if bad:
                raise InvalidParams(f"{self.kind} advice length mismatch at {bad[:5]}")

    def validate(self, g: Graph) -> None:
        unknown = [v for v in self.bits if not g.has_node(v)]
        if unknown:
            raise InvalidParams(f"advice on unknown nodes {unknown[:5]}")
        if self.kind == "uniform" and set(self.bits) != set(g.nodes):
            raise InvalidParams("uniform advice must cover every node")

    def holders(self) -> List[int]:
        return sorted(v for v, s in self.bits.items() if s)

    def get(self, v: int) -> str:
        return self.bits.get(v, "")

    def max_length(self) -> int:
        return max((len(s) for s in self.bits.values()), default=0)

    def total_bits(self) -> int:
        return sum(len(s) for s in self.bits.values())


def measure_sparsity(assignment: AdviceAssignment) -> float:
    """Fraction of 1s in a uniform 1-bit assignment."""
    if assignment.kind != "uniform" or assignment.length != 1:
        raise InvalidParams("sparsity is defined for uniform 1-bit advice")
    if not assignment.bits:
        return 0.0
    ones = sum(1 for s in assignment.bits.values() if s == "1")
    return ones / len(assignment.bits)


def write_advice(assignment: AdviceAssignment, path: str) -> None:
    with open(path, "w") as fh:
        for v in sorted(assignment.bits):
            fh.write(f"{v} {assignment.bits[v] or '-'}\n")


def read_advice(path: str, kind: str = "variable") -> AdviceAssignment:
    bits: Dict[int, str] = {}
    with open(path) as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            parts = ln.split()
            if len(parts) != 2:
                raise GraphFormatError(f"bad advice line {ln!r}")
            bits[int(parts[0])] = "" if parts[1] == "-" else _check_bits(parts[1])
    return AdviceAssignment(kind=kind, bits=bits)


# -- codecs ----------------------------------------------------------------

def length_frame(L: str) -> str:
    """Self-delimiting frame: ceil(log2(|L|+1)) ones, one 0, |L| in that
    many bits, then L itself."""
    _check_bits(L)
    if not L:
        raise InvalidParams("cannot frame an empty string")
    w = log2_ceil(len(L) + 1)
    return "1" * w + "0" + format(len(L), f"0{w}b") + L


def read_length_frame(s: str, pos: int) -> Tuple[str, int]:
    """Parse one length frame starting at ``pos``; returns (payload, new pos)."""
    w = 0
    while pos + w < len(s) and s[pos + w] == "1":
        w += 1
    if w == 0 or pos + w >= len(s) or s[pos + w] != "0":
        raise DecodeError(f"malformed frame header at bit {pos}")
    pos += w + 1
    if pos + w > len(s):
        raise DecodeError("frame length field truncated")
    ln = int(s[pos:pos + w], 2)
    if ln < 1 or log2_ceil(ln + 1) != w:
        raise DecodeError(f"non-canonical frame length {ln} in {w} bits")
    pos += w
    if pos + ln > len(s):
        raise DecodeError("frame payload truncated")
    return s[pos:pos + ln], pos + ln


def frame_encode(entries: Sequence[Tuple[int, str]], k: int) -> str:
    """Pack slot entries (index, payload) into one string.

    Indices are 1..k, written in ceil(log2(k+1)) bits, entries must be
    strictly ascending and payloads nonempty.
    """
    if k < 1:
        raise InvalidParams("frame_encode needs k >= 1")
    w_idx = log2_ceil(k + 1)
    out: List[str] = []
    last = 0
    for (i, L) in entries:
        if not 1 <= i <= k:
            raise InvalidParams(f"slot index {i} out of 1..{k}")
        if i <= last:
            raise InvalidParams("slot indices must be strictly ascending")
        last = i
        out.append(format(i, f"0{w_idx}b"))
        out.append(length_frame(L))
    return "".join(out)


def frame_decode(s: str, k: int) -> Dict[int, str]:
    """Inverse of :func:`frame_encode`; returns {index: payload}."""
    _check_bits(s)
    if k < 1:
        raise InvalidParams("frame_decode needs k >= 1")
    w_idx = log2_ceil(k + 1)
    out: Dict[int, str] = {}
    pos = 0
    last = 0
    while pos < len(s):
        if pos + w_idx > len(s):
            raise DecodeError("slot index truncated")
        i = int(s[pos:pos + w_idx], 2)
        if not 1 <= i <= k:
            raise DecodeError(f"slot index {i} out of 1..{k}")
        if i <= last:
            raise DecodeError("slot indices not ascending")
        last = i
        pos += w_idx
        payload, pos = read_length_frame(s, pos)
        out[i] = payload
    return out


def runlength_encode(L: str, gamma: int) -> str:
    """Encode each bit as a run of 1s (gamma+1 for 0, gamma+2 for 1)
    terminated by a single 0."""
    _check_bits(L)
    if gamma < 2:
        raise InvalidParams("runlength_encode needs gamma >= 2")
    return "".join("1" * (gamma + 1 + int(b)) + "0" for b in L)


def runlength_decode(s: str, gamma: int) -> str:
    """Inverse of :func:`runlength_encode`; trailing 0s (padding) allowed."""
    _check_bits(s)
    if gamma < 2:
        raise InvalidParams("runlength_decode needs gamma >= 2")
    out: List[str] = []
    pos = 0
    while pos < len(s):
        run = 0
        while pos + run < len(s) and s[pos + run] == "1":
            run += 1
        if run == 0:
            break  # padding from here on
        if pos + run >= len(s):
            raise DecodeError("run not terminated")
        if run == gamma + 1:
            out.append("0")
        elif run == gamma + 2:
            out.append("1")
        else:
            raise DecodeError(f"run length {run} not in {{{gamma + 1}, {gamma + 2}}}")
        pos += run + 1
    if any(ch != "0" for ch in s[pos:]):
        raise DecodeError("nonzero padding after runs")
    return "".join(out)


# -- schemas ---------------------------------------------------------------

@dataclass(frozen=True)
class ComposableInfo:
    """Instance-level composability promise."""

    gamma0: int          # max bit-holding nodes per alpha-ball
    alpha: int
    c: float
    string_bound: int    # beta: max per-node advice bits
    decode_radius: int   # T

    def admits(self) -> Optional[str]:
        """Check beta <= c*alpha/gamma0^3; returns the failing inequality."""
        limit = self.c * self.alpha / self.gamma0 ** 3
        if self.string_bound > limit:
            return (f"beta <= c*alpha/gamma0^3: {self.string_bound} > "
                    f"{self.c}*{self.alpha}/{self.gamma0}^3 = {limit:.3f}")
        return None


class Schema:
    """Encoder / decoder pair with optional composability metadata."""

    def __init__(self, name: str, kind: str,
                 encode: Callable[[Graph], AdviceAssignment],
                 decoder: Callable[[Graph], PhasedDecoder],
                 composable: Optional[ComposableInfo] = None,
                 node_checker: Optional[Callable[[Graph, Dict[int, Hashable], int], bool]] = None,
                 brute_force: Optional[Callable[[Graph], Dict[int, Hashable]]] = None):
        self.name = name
        self.kind = kind
        self._encode = encode
        self._decoder = decoder
        self.composable = composable
        self.node_checker = node_checker
        self.brute_force = brute_force

    def encode(self, g: Graph) -> AdviceAssignment:
        assignment = self._encode(g)
        assignment.validate(g)
        return assignment

    def decoder(self, g: Graph) -> PhasedDecoder:
        return self._decoder(g)

    def decode(self, g: Graph, assignment: AdviceAssignment,
               ) -> Tuple[Dict[int, Hashable], LocalityReport]:
        return self.decoder(g).run(g, advice=assignment.bits)

    def roundtrip(self, g: Graph) -> Tuple[Dict[int, Hashable], AdviceAssignment, LocalityReport]:
        assignment = self.encode(g)
        outputs, report = self.decode(g, assignment)
        return outputs, assignment, report


def verify_ball_bound(g: Graph, assignment: AdviceAssignment,
                      alpha: int, gamma0: int) -> None:
    """Exhaustively confirm that every alpha-ball holds at most gamma0
    bit-holding nodes; raises on violation."""
    holders = set(assignment.holders())
    if not holders:
        return
    for v in g.nodes:
        count = sum(1 for u in g.ball(v, alpha) if u in holders)
        if count > gamma0:
            raise ConstantsInfeasible(
                "per-ball bound",
                f"ball({v},{alpha}) holds {count} > gamma0 = {gamma0} bit holders")


# -- composition -----------------------------------------------------------

@dataclass
class Slot:
    """One problem in a composition.

    ``encode(g, deps)`` returns per-node strings given the decoded outputs
    of the dependency slots; ``decode(view, strings, deps)`` is the local
    decoder, where ``strings`` maps nodes in the view to this slot's advice
    and ``deps`` maps dependency names to their outputs inside the view.
    """

    name: str
    deps: Tuple[str, ...]
    gamma0: int
    radius: int
    encode: Callable[[Graph, Dict[str, Dict[int, Hashable]]], Dict[int, str]]
    decode: Callable[[View, Dict[int, str], Dict[str, Dict[int, Hashable]]], Hashable]
    alpha_requirement: int = 0
    brute_force: Optional[Callable[[Graph, Dict[str, Dict[int, Hashable]]],
                                   Dict[int, Hashable]]] = None


def _slot_phase(slot: Slot, extract: Callable[[View], Dict[int, str]]) -> Phase:
    def evaluate(view: View) -> Hashable:
        deps = {d: view.label_map(d) for d in slot.deps}
        return slot.decode(view, extract(view), deps)
    return Phase(name=slot.name, radius=slot.radius, evaluate=evaluate)


def schema_from_slot(slot: Slot, kind: str = "variable",
                     composable: Optional[ComposableInfo] = None,
                     node_checker=None) -> Schema:
    """Expose a dependency-free slot as a standalone schema."""
    if slot.deps:
        raise InvalidParams(f"slot {slot.name} has dependencies; compose it instead")

    def encode(g: Graph) -> AdviceAssignment:
        strings = slot.encode(g, {})
        return AdviceAssignment(kind=kind,
                                bits={v: s for v, s in strings.items() if s or kind == "uniform"})

    def decoder(g: Graph) -> PhasedDecoder:
        return PhasedDecoder(slot.name, [_slot_phase(slot, lambda v: v.advice_map())])

    brute = None
    if slot.brute_force is not None:
        brute = lambda g: slot.brute_force(g, {})
    return Schema(slot.name, kind, encode, decoder, composable=composable,
                  node_checker=node_checker, brute_force=brute)


def compose_schemas(name: str, slots: Sequence[Slot], c: float, alpha: int,
                    node_checker=None, verify_balls: bool = True) -> Schema:
    """Combine slot schemas into one variable-length schema.

    Slots must list dependencies among strictly earlier slots.  The encoder
    runs slot encoders in index order, feeding each the decoded outputs of
    its dependencies; per-node strings are packed with :func:`frame_encode`.
    The decoder frame-decodes and then solves the slots in index order
    (dependencies first).  Admission checks: ``alpha`` must be at least
    ``(2*k*gamma)^3 * ceil(log2 k) / c`` and at least every slot's own
    requirement; every slot string must fit in ``c*alpha/(2*k*gamma)^3``
    bits.  The per-ball bound is re-verified by scan at encode time.
    """
    k = len(slots)
    if k < 1:
        raise InvalidParams("compose_schemas needs at least one slot")
    names = [s.name for s in slots]
    if len(set(names)) != k:
        raise InvalidParams("slot names must be unique")
    for i, slot in enumerate(slots):
        for d in slot.deps:
            if d not in names[:i]:
                raise InvalidParams(
                    f"slot {slot.name} depends on {d}, which is not an earlier slot")
    gamma = sum(s.gamma0 for s in slots)
    logk = max(1, log2_ceil(k)) if k > 1 else 1
    threshold = (2 * k * gamma) ** 3 * logk / c
    if alpha < threshold:
        raise ConstantsInfeasible(
            "alpha >= (2k*gamma)^3*ceil(log2 k)/c",
            f"alpha = {alpha} < {threshold:.2f}")
    for slot in slots:
        if alpha < slot.alpha_requirement:
            raise ConstantsInfeasible(
                f"alpha >= requirement of slot {slot.name}",
                f"{alpha} < {slot.alpha_requirement}")
    per_slot_limit = c * alpha / (2 * k * gamma) ** 3

    # DAG path cost: longest dependency chain, edge weights = slot radii.
    cost: Dict[str, int] = {}
    for slot in slots:
        cost[slot.name] = slot.radius + max((cost[d] for d in slot.deps), default=0)
    decode_radius = max(cost.values())

    info = ComposableInfo(gamma0=gamma, alpha=alpha, c=c,
                          string_bound=int(per_slot_limit) * k + k * (2 * log2_ceil(k + 1) + 8),
                          decode_radius=decode_radius)

    def encode(g: Graph) -> AdviceAssignment:
        strings_by_slot: Dict[str, Dict[int, str]] = {}
        decoded: Dict[str, Dict[int, Hashable]] = {}
        for slot in slots:
            deps_out = {d: decoded[d] for d in slot.deps}
            strings = {v: s for v, s in slot.encode(g, deps_out).items() if s}
            for v, s in strings.items():
                if len(s) > per_slot_limit:
                    raise ConstantsInfeasible(
                        "slot string <= c*alpha/(2k*gamma)^3",
                        f"slot {slot.name} writes {len(s)} bits at node {v}, "
                        f"limit {per_slot_limit:.2f}")
            strings_by_slot[slot.name] = strings

            # Decode this slot now so later encoders see what decoders will see.
            def tmp_extract(view: View, _s=strings) -> Dict[int, str]:
                return {v: _s.get(v, "") for v in view.nodes}
            phase_now = Phase(slot.name, slot.radius,
                              lambda view, _sl=slot, _ex=tmp_extract: _sl.decode(
                                  view, _ex(view),
                                  {d: view.label_map(d) for d in _sl.deps}))
            dec = PhasedDecoder(f"{name}/encode-feedback/{slot.name}", [phase_now],
                                initial_labels=decoded)
            decoded[slot.name], _ = dec.run(g, advice=None)
        bits = {}
        for v in g.nodes:
            entries = [(i + 1, strings_by_slot[slots[i].name][v])
                       for i in range(k) if v in strings_by_slot[slots[i].name]]
            if entries:
                bits[v] = frame_encode(entries, k)
        assignment = AdviceAssignment(kind="variable", bits=bits)
        if verify_balls:
            verify_ball_bound(g, assignment, alpha, gamma)
        return assignment

    def _extract(view: View, idx: int) -> Dict[int, str]:
        out: Dict[int, str] = {}
        for v, s in view.advice:
            entries = frame_decode(s, k)
            if idx + 1 in entries:
                out[v] = entries[idx + 1]
        return out

    def decoder(g: Graph) -> PhasedDecoder:
        phases = [_slot_phase(slot, lambda view, _i=i: _extract(view, _i))
                  for i, slot in enumerate(slots)]
        return PhasedDecoder(name, phases)

    brute = None
    if all(s.brute_force is not None for s in slots):
        def brute(g: Graph) -> Dict[int, Hashable]:
            decoded: Dict[str, Dict[int, Hashable]] = {}
            for slot in slots:
                deps_out = {d: decoded[d] for d in slot.deps}
                decoded[slot.name] = slot.brute_force(g, deps_out)
            return decoded[slots[-1].name]

    return Schema(name, "variable", encode, decoder, composable=info,
                  node_checker=node_checker, brute_force=brute)


# -- one-bit conversion ----------------------------------------------------

@dataclass(frozen=True)
class OneBitParams:
    gamma: int                      # clustering parameter, >= wrapped gamma0, >= 2
    component_cap: int = 10_000     # brute-force fallback node limit


def _one_components(g: Graph, ones: Iterable[int]) -> List[List[int]]:
    """Connected components of the induced subgraph on 1-holders."""
    ones_set = set(ones)
    seen: set = set()
    comps: List[List[int]] = []
    for v in sorted(ones_set):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            w = stack.pop()
            for u in g.neighbors(w):
                if u in ones_set and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _absorb_clusters(g: Graph, holders: Sequence[int], d: int) -> List[List[int]]:
    """Group bit holders: repeatedly absorb any holder within distance d of
    the cluster, processing holders by ascending ID."""
    remaining = sorted(holders)
    clusters: List[List[int]] = []
    while remaining:
        seed = remaining.pop(0)
        cluster = [seed]
        grown = True
        while grown:
            grown = False
            near = set()
            if d >= 1:
                near = set(g.bfs_dist(cluster, cutoff=d))
            for u in list(remaining):
                if u in near:
                    remaining.remove(u)
                    cluster.append(u)
                    grown = True
        clusters.append(sorted(cluster))
    return clusters


def to_one_bit(wrapped: Schema, params: OneBitParams) -> Schema:
    """Convert a composable variable-length schema into a uniform 1-bit one.

    Bit holders of the wrapped assignment are marked with a 1.  Holder
    clusters (absorption at distance d = alpha // (10*gamma)) ship their
    concatenated, length-framed strings as a run-length encoded payload
    along a deterministic ray of nodes far from the cluster; when no valid
    ray exists the decoder falls back to gathering the whole component
    (up to ``component_cap`` nodes) and solving it outright with the
    wrapped schema's canonical solver.
    """
    info = wrapped.composable
    if info is None:
        raise InvalidParams(f"schema {wrapped.name} is not composable")
    gamma = params.gamma
    if gamma < max(2, info.gamma0):
        raise InvalidParams(f"gamma must be >= max(2, gamma0 = {info.gamma0})")
    bad = info.admits()
    if bad:
        raise ConstantsInfeasible(bad)
    alpha = info.alpha
    d = alpha // (10 * gamma)
    ray_len = d // 8
    z_min = d // 8 + 10
    z_max = d // 4
    name = f"{wrapped.name}+1bit"

    def encode(g: Graph) -> AdviceAssignment:
        inner = wrapped.encode(g)
        verify_ball_bound(g, inner, alpha, info.gamma0)
        too_long = [v for v in inner.holders() if len(inner.get(v)) > info.string_bound]
        if too_long:
            raise ConstantsInfeasible(
                "wrapped string <= beta",
                f"nodes {too_long[:5]} exceed {info.string_bound} bits")
        bits = {v: "0" for v in g.nodes}
        holders = inner.holders()
        for v in holders:
            bits[v] = "1"
        clusters = _absorb_clusters(g, holders, d)
        for cluster in clusters:
            if len(cluster) > gamma:
                raise ConstantsInfeasible(
                    "cluster size <= gamma",
                    f"absorption produced {len(cluster)} holders {cluster[:6]}")
            ray = _find_ray(g, cluster)
            if ray is None:
                continue  # decoder falls back to brute force for this component
            payload = "".join(length_frame(inner.get(v)) for v in cluster)
            encoded = runlength_encode(payload, gamma)
            if len(encoded) > len(ray):
                continue  # payload does not fit; same fallback
            for node, bit in zip(ray, encoded):
                if bits[node] == "1":
                    raise DecodeError(f"ray collides with marker at {node}")
                bits[node] = bit
        return AdviceAssignment(kind="uniform", bits=bits, length=1)

    def _find_ray(g: Graph, cluster: List[int]) -> Optional[List[int]]:
        if ray_len < 1 or z_min > z_max:
            return None
        dist = g.bfs_dist(cluster, cutoff=z_max)
        candidates = sorted(v for v, x in dist.items() if z_min <= x <= z_max)
        if not candidates:
            return None
        z = candidates[0]
        ray = [z]
        cur = z
        while len(ray) < ray_len:
            nxt = min((u for u in g.neighbors(cur) if dist.get(u) == dist[cur] - 1),
                      default=None)
            if nxt is None:
                return None
            ray.append(nxt)
            cur = nxt
        return ray

    def _reconstruct(view: View) -> Dict[int, Hashable]:
        vg = view.graph()
        advice = view.advice_map()
        ones = [v for v, b in advice.items() if b == "1"]
        comps = _one_components(vg, ones)
        markers: List[int] = []
        runs: List[List[int]] = []
        for comp in comps:
            if len(comp) <= gamma:
                markers.extend(comp)
            elif len(comp) in (gamma + 1, gamma + 2):
                runs.append(comp)
            else:
                raise DecodeError(f"1-component of size {len(comp)} fits no pattern")
        if not markers:
            if runs:
                raise DecodeError("payload runs without any bit-holder markers")
            # No advice anywhere in sight: the wrapped decoder runs bare.
            outputs, _ = wrapped.decoder(vg).run(vg, advice=None)
            return outputs
        clusters = _absorb_clusters(vg, markers, d)
        recovered: Dict[int, str] = {}
        need_brute = False
        for cluster in clusters:
            ray = _find_ray(vg, cluster)
            if ray is None:
                need_brute = True
                break
            raw = "".join(advice.get(v, "0") for v in ray)
            try:
                payload = runlength_decode(raw, gamma)
                pos = 0
                strings: List[str] = []
                while pos < len(payload):
                    s, pos = read_length_frame(payload, pos)
                    strings.append(s)
            except DecodeError:
                need_brute = True
                break
            if len(strings) != len(cluster):
                raise DecodeError(
                    f"payload carries {len(strings)} strings for {len(cluster)} holders")
            for v, s in zip(cluster, strings):
                recovered[v] = s
        if need_brute:
            if not view.sees_whole_component():
                raise ConstantsInfeasible(
                    "component <= brute-force cap",
                    f"no payload ray and component of {view.center} exceeds the view")
            if len(view.nodes) > params.component_cap:
                raise ConstantsInfeasible(
                    "component <= brute-force cap",
                    f"{len(view.nodes)} nodes > cap {params.component_cap}")
            if wrapped.brute_force is None:
                raise DecodeError("no payload ray and wrapped schema lacks a solver")
            return wrapped.brute_force(vg)
        outputs, _ = wrapped.decoder(vg).run(vg, advice=recovered)
        return outputs

    def decoder(g: Graph) -> PhasedDecoder:
        inner_radius = wrapped.decoder(g).radius
        radius = inner_radius + alpha + d + params.component_cap

        def evaluate(view: View) -> Hashable:
            outputs = analyze_once(f"onebit:{name}", view, _reconstruct)
            return outputs[view.center]
        return PhasedDecoder(name, [Phase("onebit", radius, evaluate)])

    return Schema(name, "uniform", encode, decoder,
                  composable=None, node_checker=wrapped.node_checker,
                  brute_force=wrapped.brute_force)
