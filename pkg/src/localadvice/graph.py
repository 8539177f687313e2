"""Graph core: immutable adjacency structure, generators, and basic ops.

Nodes carry unique positive integer IDs.  All neighbor iterations are in
ascending ID order and every tie-break in the package is "smallest ID", so
any two runs over the same graph produce identical results.  Generators
assign IDs as a seeded permutation of ``1..n`` (optionally spread over
``1..n^2``) so that ID order is independent of construction order.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import GraphFormatError, InvalidParams

EdgeEndpoint = Tuple[int, int]  # (endpoint, other endpoint) — identifies edge {u,v} seen from u


class Graph:
    """Undirected simple graph with sorted adjacency.

    ``labels`` optionally maps an edge endpoint ``(u, v)`` (edge ``{u,v}``
    seen from ``u``) to an input label string.
    """

    __slots__ = ("_adj", "_nodes", "labels", "n", "max_degree", "_m")

    def __init__(self, adjacency: Dict[int, Iterable[int]],
                 labels: Optional[Dict[EdgeEndpoint, str]] = None):
        adj: Dict[int, Tuple[int, ...]] = {}
        for v, nbrs in adjacency.items():
            if v <= 0:
                raise GraphFormatError(f"node IDs must be positive, got {v}")
            ordered = tuple(sorted(set(nbrs)))
            if v in ordered:
                raise GraphFormatError(f"self-loop at node {v}")
            adj[v] = ordered
        for v, nbrs in adj.items():
            for u in nbrs:
                if u not in adj or v not in adj[u]:
                    raise GraphFormatError(f"edge {v}-{u} not symmetric")
        self._adj = adj
        self._nodes = tuple(sorted(adj))
        self.labels = dict(labels) if labels else {}
        for (u, v) in self.labels:
            if u not in adj or v not in adj.get(u, ()):
                raise GraphFormatError(f"label on missing edge endpoint ({u},{v})")
        self.n = len(adj)
        self.max_degree = max((len(nb) for nb in adj.values()), default=0)
        self._m = sum(len(nb) for nb in adj.values()) // 2

    # -- basic accessors ---------------------------------------------------

    @property
    def nodes(self) -> Tuple[int, ...]:
        return self._nodes

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_node(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in self._nodes:
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def incident_edges(self, v: int) -> List[Tuple[int, int]]:
        """Edges at v as (v, neighbor), neighbors ascending."""
        return [(v, u) for u in self._adj[v]]

    def label(self, u: int, v: int) -> Optional[str]:
        return self.labels.get((u, v))

    # -- traversal ---------------------------------------------------------

    def bfs_dist(self, sources: Iterable[int], cutoff: Optional[int] = None) -> Dict[int, int]:
        """Distances from the closest of ``sources``, up to ``cutoff`` hops."""
        dist: Dict[int, int] = {}
        q: deque[int] = deque()
        for s in sorted(set(sources)):
            if s not in self._adj:
                raise KeyError(f"unknown node {s}")
            dist[s] = 0
            q.append(s)
        while q:
            v = q.popleft()
            d = dist[v]
            if cutoff is not None and d >= cutoff:
                continue
            for u in self._adj[v]:
                if u not in dist:
                    dist[u] = d + 1
                    q.append(u)
        return dist

    def ball(self, v: int, r: int) -> Set[int]:
        """All nodes within distance r of v (including v)."""
        return set(self.bfs_dist([v], cutoff=r))

    def ring(self, v: int, r: int) -> Set[int]:
        """Nodes at distance exactly r from v."""
        if r == 0:
            return {v}
        dist = self.bfs_dist([v], cutoff=r)
        return {u for u, d in dist.items() if d == r}

    def distance(self, u: int, v: int, cutoff: Optional[int] = None) -> Optional[int]:
        """Hop distance, or None when v is unreachable (within cutoff)."""
        if u == v:
            return 0
        dist: Dict[int, int] = {u: 0}
        q: deque[int] = deque([u])
        while q:
            w = q.popleft()
            d = dist[w]
            if cutoff is not None and d >= cutoff:
                continue
            for x in self._adj[w]:
                if x not in dist:
                    if x == v:
                        return d + 1
                    dist[x] = d + 1
                    q.append(x)
        return None

    def component(self, v: int) -> Set[int]:
        return set(self.bfs_dist([v]))

    def components(self) -> List[Set[int]]:
        """Connected components, ordered by smallest member ID."""
        seen: Set[int] = set()
        out: List[Set[int]] = []
        for v in self._nodes:
            if v not in seen:
                comp = self.component(v)
                seen |= comp
                out.append(comp)
        return out

    def eccentricity(self, v: int) -> int:
        return max(self.bfs_dist([v]).values())

    def diameter(self) -> int:
        """Largest eccentricity over all components."""
        best = 0
        for v in self._nodes:
            best = max(best, self.eccentricity(v))
        return best

    def shortest_path(self, source: int, target: int) -> List[int]:
        """A deterministic shortest path: each step goes through the
        smallest-ID neighbor that is closer to the source."""
        dist = self.bfs_dist([source])
        if target not in dist:
            raise KeyError(f"{target} unreachable from {source}")
        path = [target]
        cur = target
        while cur != source:
            cur = min(u for u in self._adj[cur] if dist.get(u, -1) == dist[cur] - 1)
            path.append(cur)
        path.reverse()
        return path

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep`` (labels restricted accordingly)."""
        keep_set = set(keep)
        adj = {v: [u for u in self._adj[v] if u in keep_set]
               for v in self._nodes if v in keep_set}
        labels = {(u, v): s for (u, v), s in self.labels.items()
                  if u in keep_set and v in keep_set}
        return Graph(adj, labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj and self.labels == other.labels

    def __hash__(self):
        return hash(tuple((v, self._adj[v]) for v in self._nodes))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


def from_edges(nodes: Iterable[int], edges: Iterable[Tuple[int, int]],
               labels: Optional[Dict[EdgeEndpoint, str]] = None) -> Graph:
    adj: Dict[int, List[int]] = {v: [] for v in nodes}
    for (u, v) in edges:
        if u not in adj or v not in adj:
            raise GraphFormatError(f"edge {u}-{v} uses undeclared node")
        if v not in adj[u]:
            adj[u].append(v)
            adj[v].append(u)
    return Graph(adj, labels)


# -- file format -----------------------------------------------------------
#
#   n m max_degree
#   u v              (m edge lines)
#   label u v L      (optional; label of edge {u,v} at endpoint u)

def write_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.m} {g.max_degree}\n")
        for (u, v) in g.edges():
            fh.write(f"{u} {v}\n")
        for (u, v) in sorted(g.labels):
            fh.write(f"label {u} {v} {g.labels[(u, v)]}\n")


def read_graph(path: str) -> Graph:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 3:
        raise GraphFormatError(f"bad header {lines[0]!r}, expected 'n m max_degree'")
    try:
        n, m, dmax = (int(x) for x in head)
    except ValueError as exc:
        raise GraphFormatError(f"bad header {lines[0]!r}") from exc
    edges: List[Tuple[int, int]] = []
    labels: Dict[EdgeEndpoint, str] = {}
    nodes: Set[int] = set()
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "label":
            if len(parts) != 4:
                raise GraphFormatError(f"bad label line {ln!r}")
            labels[(int(parts[1]), int(parts[2]))] = parts[3]
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        nodes.add(u)
        nodes.add(v)
    if len(edges) != m:
        raise GraphFormatError(f"header says {m} edges, found {len(edges)}")
    if len(nodes) > n:
        raise GraphFormatError(f"header says {n} nodes, found {len(nodes)}")
    # Isolated nodes are not representable in edge lines; number them 1..n if
    # the file declares more nodes than appear.
    if len(nodes) < n:
        want = n - len(nodes)
        fresh = [i for i in range(1, 2 * n + 2) if i not in nodes][:want]
        nodes |= set(fresh)
    g = from_edges(nodes, edges, labels)
    if g.max_degree != dmax:
        raise GraphFormatError(f"header says max degree {dmax}, actual {g.max_degree}")
    return g


# -- generators ------------------------------------------------------------

def _assign_ids(count: int, seed: int, spread: bool = False) -> List[int]:
    """Seeded permutation of 1..count (or of a sample from 1..count^2)."""
    rng = random.Random(("ids", seed, count, spread))
    if spread and count > 1:
        ids = rng.sample(range(1, count * count + 1), count)
    else:
        ids = list(range(1, count + 1))
        rng.shuffle(ids)
    return ids


def cycle(n: int, seed: int = 0, spread_ids: bool = False) -> Graph:
    """Cycle C_n with permuted IDs."""
    if n < 3:
        raise InvalidParams("cycle needs n >= 3")
    ids = _assign_ids(n, seed, spread_ids)
    edges = [(ids[i], ids[(i + 1) % n]) for i in range(n)]
    return from_edges(ids, edges)


def path(n: int, seed: int = 0, spread_ids: bool = False) -> Graph:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    ids = _assign_ids(n, seed, spread_ids)
    edges = [(ids[i], ids[i + 1]) for i in range(n - 1)]
    return from_edges(ids, edges)


def grid2d(rows: int, cols: int, seed: int = 0, spread_ids: bool = False) -> Graph:
    """rows x cols grid with permuted IDs."""
    if rows < 1 or cols < 1:
        raise InvalidParams("grid2d needs positive dimensions")
    ids = _assign_ids(rows * cols, seed, spread_ids)
    at = lambda r, c: ids[r * cols + c]
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((at(r, c), at(r, c + 1)))
            if r + 1 < rows:
                edges.append((at(r, c), at(r + 1, c)))
    return from_edges(ids, edges)


def random_graph(n: int, max_degree: int, m: int, seed: int = 0) -> Graph:
    """Random simple graph with a hard degree cap (mixed degree parities)."""
    rng = random.Random(("random_graph", seed, n, max_degree, m))
    ids = _assign_ids(n, seed)
    deg = {v: 0 for v in ids}
    edges: Set[Tuple[int, int]] = set()
    attempts = 0
    while len(edges) < m and attempts < 50 * m + 200:
        attempts += 1
        u, v = rng.sample(ids, 2)
        key = (min(u, v), max(u, v))
        if key in edges or deg[u] >= max_degree or deg[v] >= max_degree:
            continue
        edges.add(key)
        deg[u] += 1
        deg[v] += 1
    return from_edges(ids, sorted(edges))


def even_degree_random(n: int, max_degree: int, seed: int = 0,
                       cycles: Optional[int] = None) -> Graph:
    """Random graph in which every degree is even (union of edge-disjoint
    cycles), respecting the degree cap."""
    if max_degree < 2 or max_degree % 2:
        raise InvalidParams("even_degree_random needs an even max_degree >= 2")
    rng = random.Random(("even_degree", seed, n, max_degree))
    ids = _assign_ids(n, seed)
    deg = {v: 0 for v in ids}
    edges: Set[Tuple[int, int]] = set()
    want_cycles = cycles if cycles is not None else max(1, n // 4)
    built = 0
    for _ in range(20 * want_cycles):
        if built >= want_cycles:
            break
        avail = [v for v in ids if deg[v] <= max_degree - 2]
        if len(avail) < 3:
            break
        k = rng.randint(3, min(len(avail), max(3, n // 2)))
        cyc = rng.sample(avail, k)
        new = [(min(a, b), max(a, b))
               for a, b in zip(cyc, cyc[1:] + cyc[:1])]
        if len(set(new)) < k or any(e in edges for e in new):
            continue
        edges |= set(new)
        for a, b in new:
            deg[a] += 1
            deg[b] += 1
        built += 1
    return from_edges(ids, sorted(edges))


def bipartite_regular_pow2(n_side: int, delta: int, seed: int = 0) -> Graph:
    """Bipartite delta-regular graph (delta a power of two) on 2*n_side nodes,
    built as a union of delta pairwise-disjoint perfect matchings."""
    if delta < 1 or delta & (delta - 1):
        raise InvalidParams("delta must be a power of two")
    if n_side < delta + 1:
        raise InvalidParams("n_side too small for simple delta-regular graph")
    rng = random.Random(("bip_reg", seed, n_side, delta))
    ids = _assign_ids(2 * n_side, seed)
    left, right = ids[:n_side], ids[n_side:]
    used: Set[Tuple[int, int]] = set()
    edges: List[Tuple[int, int]] = []
    for _ in range(delta):
        for _attempt in range(200):
            perm = list(range(n_side))
            rng.shuffle(perm)
            match = [(left[i], right[perm[i]]) for i in range(n_side)]
            if all((a, b) not in used for a, b in match):
                break
        else:
            raise InvalidParams("could not build disjoint matchings")
        used |= set(match)
        edges += match
    return from_edges(ids, edges)


def three_colorable_random(n: int, max_degree: int, seed: int = 0,
                           extra_edges: Optional[int] = None,
                           backbone: bool = True) -> Graph:
    """Graph with a planted proper 3-coloring (classes fixed, only cross-class
    edges added).  With ``backbone`` a long cross-class path is laid down
    first so the color-2/3 side forms long strands; random cross edges are
    sprinkled on top up to the degree cap.  The planted classes can be
    recovered with :func:`planted_coloring`."""
    if n < 6:
        raise InvalidParams("three_colorable_random needs n >= 6")
    rng = random.Random(("three_col", seed, n, max_degree))
    ids = _assign_ids(n, seed)
    cls = {v: (i % 3) + 1 for i, v in enumerate(ids)}
    order = ids[:]
    rng.shuffle(order)
    deg = {v: 0 for v in ids}
    edges: Set[Tuple[int, int]] = set()

    def try_add(a: int, b: int) -> bool:
        if a == b or cls[a] == cls[b]:
            return False
        key = (min(a, b), max(a, b))
        if key in edges or deg[a] >= max_degree or deg[b] >= max_degree:
            return False
        edges.add(key)
        deg[a] += 1
        deg[b] += 1
        return True

    if backbone:
        for a, b in zip(order, order[1:]):
            if cls[a] != cls[b]:
                try_add(a, b)
    want = extra_edges if extra_edges is not None else n // 3
    for _ in range(20 * want + 20):
        if want <= 0:
            break
        if try_add(rng.choice(ids), rng.choice(ids)):
            want -= 1
    g = from_edges(ids, sorted(edges))
    _PLANTED[id(g)] = (g, dict(cls))
    return g


def delta_colorable_random(n: int, delta: int, seed: int = 0,
                           extra_edges: Optional[int] = None) -> Graph:
    """Graph with max degree <= delta and a planted proper delta-coloring."""
    if delta < 2 or n < 2 * delta:
        raise InvalidParams("need delta >= 2 and n >= 2*delta")
    rng = random.Random(("delta_col", seed, n, delta))
    ids = _assign_ids(n, seed)
    cls = {v: (i % delta) + 1 for i, v in enumerate(ids)}
    deg = {v: 0 for v in ids}
    edges: Set[Tuple[int, int]] = set()
    want = extra_edges if extra_edges is not None else (n * delta) // 3
    for _ in range(30 * want + 30):
        if want <= 0:
            break
        a, b = rng.sample(ids, 2)
        if cls[a] == cls[b] or deg[a] >= delta or deg[b] >= delta:
            continue
        key = (min(a, b), max(a, b))
        if key in edges:
            continue
        edges.add(key)
        deg[a] += 1
        deg[b] += 1
        want -= 1
    g = from_edges(ids, sorted(edges))
    _PLANTED[id(g)] = (g, dict(cls))
    return g


# Planted ground truths, keyed by graph identity.  The strong reference to the
# graph keeps id() stable for as long as the entry lives.
_PLANTED: Dict[int, Tuple[Graph, Dict[int, int]]] = {}


def planted_coloring(g: Graph) -> Optional[Dict[int, int]]:
    entry = _PLANTED.get(id(g))
    if entry is not None and entry[0] is g:
        return dict(entry[1])
    return None


# -- classic ops -----------------------------------------------------------

def power_graph(g: Graph, k: int) -> Graph:
    """Graph on the same nodes with edges between distinct nodes at hop
    distance <= k in g."""
    if k < 1:
        raise InvalidParams("power_graph needs k >= 1")
    adj = {v: [u for u in g.bfs_dist([v], cutoff=k) if u != v] for v in g.nodes}
    return Graph(adj)


def greedy_coloring(g: Graph, order: Optional[Sequence[int]] = None) -> Dict[int, int]:
    """Greedy proper coloring, colors 1-based, default order ascending ID."""
    colors: Dict[int, int] = {}
    for v in (order if order is not None else g.nodes):
        taken = {colors[u] for u in g.neighbors(v) if u in colors}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def distance_coloring(g: Graph, k: int, nodes: Optional[Iterable[int]] = None) -> Dict[int, int]:
    """Proper coloring of the k-th power of g (nodes at distance <= k get
    different colors), greedy by ascending ID.  Equivalent to
    ``greedy_coloring(power_graph(g, k))`` but without materializing the
    power graph."""
    chosen = sorted(nodes) if nodes is not None else g.nodes
    keep = set(chosen)
    colors: Dict[int, int] = {}
    for v in chosen:
        near = g.bfs_dist([v], cutoff=k)
        taken = {colors[u] for u in near if u in colors and u in keep}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def ruling_set(g: Graph, alpha: int, beta: int,
               nodes: Optional[Iterable[int]] = None) -> List[int]:
    """Greedy (alpha, beta)-ruling set: members pairwise >= alpha apart,
    every candidate within beta of a member.  Candidates default to all
    nodes; distances are always measured in g.  Greedy selection by
    ascending ID guarantees domination radius alpha-1, so beta >= alpha-1
    is required."""
    if alpha < 1 or beta < alpha - 1:
        raise InvalidParams(f"ruling_set needs beta >= alpha-1, got ({alpha}, {beta})")
    cand = sorted(nodes) if nodes is not None else list(g.nodes)
    cand_set = set(cand)
    blocked: Set[int] = set()
    chosen: List[int] = []
    for v in cand:
        if v in blocked:
            continue
        chosen.append(v)
        # Everything within alpha-1 of a member can no longer be selected.
        for u in g.bfs_dist([v], cutoff=alpha - 1):
            if u in cand_set:
                blocked.add(u)
    return chosen


# -- growth ----------------------------------------------------------------

@dataclass(frozen=True)
class GrowthProfile:
    """Certificate that balls grow at most like 2^(c*x) from radius x0 on."""
    c: float
    x0: int

    def bound(self, x: int) -> float:
        return 2.0 ** (self.c * x)


def check_growth(g: Graph, profile: GrowthProfile) -> Optional[str]:
    """Check |ball(v, x)| <= 2^(c*x) for every node and every x >= x0.
    Returns None when the certificate holds, else a description of the
    first violation."""
    for v in g.nodes:
        dist = g.bfs_dist([v])
        ecc = max(dist.values())
        counts = [0] * (ecc + 1)
        for d in dist.values():
            counts[d] += 1
        total = 0
        for x in range(ecc + 1):
            total += counts[x]
            if x >= profile.x0 and total > profile.bound(x):
                return (f"|ball({v},{x})| = {total} > 2^({profile.c}*{x})"
                        f" = {profile.bound(x):.1f}")
        # Beyond the eccentricity the ball is the whole component.
        x_tail = max(profile.x0, ecc)
        if total > profile.bound(x_tail):
            return (f"component of {v} has {total} nodes > 2^({profile.c}*{x_tail})")
    return None


def min_growth_threshold(g: Graph, c: float) -> Optional[int]:
    """Smallest x0 for which ``GrowthProfile(c, x0)`` holds on g, or None."""
    limit = g.diameter() + 1
    for x0 in range(0, limit + 1):
        if check_growth(g, GrowthProfile(c, x0)) is None:
            return x0
    return None


def family_growth_threshold(ball_size: Callable[[int], int], c: float,
                            search_limit: int = 100_000) -> Optional[int]:
    """Smallest x0 with ball_size(x) <= 2^(c*x) for all x >= x0, where
    ``ball_size`` is a worst-case ball-size bound for a graph family
    (e.g. ``lambda x: 2*x + 1`` for cycles).  Checks up to ``search_limit``
    and requires the margin to be widening there."""
    if c <= 0:
        return None
    good_from: Optional[int] = None
    for x in range(search_limit + 1):
        if ball_size(x) <= 2.0 ** (c * x):
            if good_from is None:
                good_from = x
        else:
            good_from = None
    if good_from is None:
        return None
    # The bound must genuinely dominate at the horizon, not just touch it.
    if ball_size(search_limit) * 2 > 2.0 ** (c * search_limit):
        return None
    return good_from


def cycle_family_threshold(c: float) -> Optional[int]:
    return family_growth_threshold(lambda x: 2 * x + 1, c)


def grid_family_threshold(c: float) -> Optional[int]:
    return family_growth_threshold(lambda x: 2 * x * x + 2 * x + 1, c)


def bits_for(value: int) -> int:
    """Number of bits in the standard binary representation of value >= 1."""
    if value < 1:
        raise InvalidParams("bits_for needs value >= 1")
    return value.bit_length()


def log2_ceil(value: int) -> int:
    if value < 1:
        raise InvalidParams("log2_ceil needs value >= 1")
    return (value - 1).bit_length()
