"""Instance model for rooted clique-tree representations.

An instance is a rooted host tree plus, for every graph vertex, a downward
path in that tree (given by its top and bottom node).  Two vertices are
adjacent exactly when their paths share a tree node; the graph itself is
never materialized.  A generalized instance may attach up to ``delta``
downward paths to one vertex (a subtree with at most ``delta`` leaves),
stored as a top node plus one bottom node per path.

Node ids and vertex ids are 1-based dense integers throughout.  Internal
per-node arrays have length ``node_count + 1`` with slot 0 unused.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union


class VertexPath(NamedTuple):
    """Downward path of one vertex: ``top`` is an ancestor of ``bottom``."""

    top: int
    bottom: int


class VertexSubtree(NamedTuple):
    """Vertex subtree split into downward paths sharing the top node."""

    top: int
    bottoms: tuple[int, ...]


Vertex = Union[VertexPath, VertexSubtree]


class HostTree:
    """Rooted ordered tree over nodes ``1..node_count``.

    Built from a parent array where entry ``i`` (0-based) is the parent of
    node ``i + 1`` and ``0`` marks the root.  Children keep the order in
    which they appear in the parent array; coordinates depend on it, so it
    is fixed once and never reordered.

    Construction is permissive (out-of-range parents, several roots and
    cycles are representable) so that :func:`validate_instance` can report
    violations instead of crashing.
    """

    __slots__ = ("node_count", "_parent", "_children")

    def __init__(self, parents: Sequence[int]):
        n = len(parents)
        self.node_count = n
        par = [0] * (n + 1)
        kids: list[list[int]] = [[] for _ in range(n + 1)]
        for i, p in enumerate(parents, start=1):
            par[i] = p
            if 1 <= p <= n:
                kids[p].append(i)
        self._parent = tuple(par)
        self._children = tuple(tuple(c) for c in kids)

    def parent(self, node: int) -> int:
        """Parent id of ``node``, or 0 for a root."""
        return self._parent[node]

    def children(self, node: int) -> tuple[int, ...]:
        return self._children[node]

    def parents(self) -> tuple[int, ...]:
        """Parent array in file order (entry k is the parent of node k+1)."""
        return self._parent[1:]

    def roots(self) -> list[int]:
        return [i for i in range(1, self.node_count + 1) if self._parent[i] == 0]

    @property
    def root(self) -> int:
        roots = self.roots()
        if len(roots) != 1:
            raise ValueError(f"tree has {len(roots)} roots, expected exactly one")
        return roots[0]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HostTree) and self._parent == other._parent

    def __hash__(self) -> int:
        return hash(self._parent)

    def __repr__(self) -> str:
        return f"HostTree({list(self.parents())!r})"


@dataclass(frozen=True)
class RdvInstance:
    """Host tree plus one downward path (or path bundle) per vertex.

    ``delta`` bounds the number of bottom nodes any vertex may carry;
    plain instances have ``delta == 1`` and every vertex a single bottom.
    Immutable after construction; safe to share across threads.
    """

    tree: HostTree
    vertices: tuple[Vertex, ...]
    delta: int = 1

    @property
    def n(self) -> int:
        return len(self.vertices)

    def top(self, v: int) -> int:
        return self.vertices[v - 1].top

    def bottoms(self, v: int) -> tuple[int, ...]:
        vert = self.vertices[v - 1]
        if isinstance(vert, VertexPath):
            return (vert.bottom,)
        return vert.bottoms

    def is_plain(self) -> bool:
        """True when every vertex is a single downward path."""
        return all(len(self.bottoms(v)) == 1 for v in range(1, self.n + 1))


class Matching:
    """Set of matched vertex pairs with no shared endpoint."""

    __slots__ = ("_pairs",)

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        seen: set[int] = set()
        norm: set[tuple[int, int]] = set()
        for a, b in pairs:
            if a == b:
                raise ValueError(f"vertex {a} cannot be matched to itself")
            if a in seen or b in seen:
                dup = a if a in seen else b
                raise ValueError(f"vertex {dup} appears in more than one pair")
            seen.add(a)
            seen.add(b)
            norm.add((a, b) if a < b else (b, a))
        self._pairs = frozenset(norm)

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return self._pairs

    def edges(self) -> list[tuple[int, int]]:
        """Pairs as (i, j) with i < j, sorted lexicographically."""
        return sorted(self._pairs)

    def vertices(self) -> set[int]:
        return {v for pair in self._pairs for v in pair}

    def to_text(self) -> str:
        lines = [f"matching {len(self._pairs)}"]
        lines.extend(f"e {i} {j}" for i, j in self.edges())
        return "\n".join(lines) + "\n"

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self):
        return iter(self.edges())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Matching):
            return self._pairs == other._pairs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        return f"Matching({self.edges()!r})"


class InvalidInstanceError(ValueError):
    """Raised by algorithms that require a well-formed instance."""

    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("invalid instance: " + "; ".join(violations))


def validate_instance(inst: RdvInstance) -> list[str]:
    """Check every structural invariant and return the violations found.

    An empty list means the instance is well-formed.  Violations carry the
    offending node/vertex ids.  Structural tree defects (multiple roots,
    cycles) suppress the per-vertex ancestry checks, which are only
    meaningful on a valid tree.
    """
    tree = inst.tree
    n_nodes = tree.node_count
    violations: list[str] = []

    if n_nodes < 1:
        return ["tree has no nodes"]

    for i in range(1, n_nodes + 1):
        p = tree.parent(i)
        if p != 0 and not (1 <= p <= n_nodes):
            violations.append(f"node {i}: parent {p} out of range 1..{n_nodes}")

    roots = tree.roots()
    if len(roots) == 0:
        violations.append("no root: every node has a parent (cycle)")
    elif len(roots) > 1:
        violations.append("multiple roots: nodes " + ", ".join(map(str, roots)))

    tree_ok = not violations
    tin = tout = None
    if tree_ok:
        reached, tin, tout = _euler_intervals(tree, roots[0])
        if reached != n_nodes:
            violations.append(
                f"only {reached} of {n_nodes} nodes reachable from root (cycle)"
            )
            tree_ok = False

    if inst.delta < 1:
        violations.append(f"delta must be at least 1, got {inst.delta}")

    for v in range(1, inst.n + 1):
        top = inst.top(v)
        bottoms = inst.bottoms(v)
        ids_ok = True
        for node in (top, *bottoms):
            if not (1 <= node <= n_nodes):
                violations.append(f"vertex {v}: node id {node} out of range")
                ids_ok = False
        if len(bottoms) == 0:
            violations.append(f"vertex {v}: no bottom nodes")
            continue
        if inst.delta == 1 and len(bottoms) != 1:
            violations.append(
                f"vertex {v}: {len(bottoms)} bottoms but delta=1 requires exactly one"
            )
        elif len(bottoms) > inst.delta:
            violations.append(
                f"vertex {v}: {len(bottoms)} bottoms exceeds delta={inst.delta}"
            )
        if tree_ok and ids_ok:
            for b in bottoms:
                if not (tin[top] <= tin[b] and tout[b] <= tout[top]):
                    violations.append(
                        f"vertex {v}: top {top} not ancestor of bottom {b}"
                    )
    return violations


def _euler_intervals(tree: HostTree, root: int):
    """Iterative DFS entry/exit times; ancestor tests become O(1).

    Returns (visited_count, tin, tout) where node a is an ancestor-or-self
    of node b iff tin[a] <= tin[b] and tout[b] <= tout[a].
    """
    n = tree.node_count
    tin = [0] * (n + 1)
    tout = [0] * (n + 1)
    clock = 0
    visited = 0
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            tout[node] = clock
            continue
        clock += 1
        tin[node] = clock
        visited += 1
        stack.append((node, True))
        for c in reversed(tree.children(node)):
            stack.append((c, False))
    return visited, tin, tout


def bottom_up_order(inst: RdvInstance, coords) -> list[int]:
    """Vertices sorted by decreasing depth of their top node.

    Ties are broken by ascending vertex id, which makes the order (and
    everything downstream of it) reproducible.  Bucket sort over depth
    values, linear in tree size plus vertex count.

    ``coords`` comes from :func:`rdvmatch.geometry.assign_coordinates`.
    """
    n = inst.n
    if n == 0:
        return []
    depth_of = coords.y
    max_depth = max(depth_of[inst.top(v)] for v in range(1, n + 1))
    buckets: list[list[int]] = [[] for _ in range(max_depth + 1)]
    for v in range(1, n + 1):
        buckets[depth_of[inst.top(v)]].append(v)
    out: list[int] = []
    for d in range(max_depth, -1, -1):
        out.extend(buckets[d])
    return out


def _walk_depth(tree: HostTree, node: int) -> int:
    d = 0
    while tree.parent(node) != 0:
        node = tree.parent(node)
        d += 1
    return d


def _covers(tree: HostTree, depths, u: int, t: int, b: int) -> bool:
    """True iff node u lies on the downward path from t to b."""
    du = depths[u]
    if depths[t] > du or depths[b] < du:
        return False
    node = b
    for _ in range(depths[b] - du):
        node = tree.parent(node)
    return node == u


def adjacency_oracle(inst: RdvInstance, i: int, j: int) -> bool:
    """Do the subtrees of vertices i and j share a host-tree node?

    Reference test working directly on the tree via parent walks; it never
    touches coordinates or segments, so it can independently check the
    geometric query path.  Costs O(depth) per constituent path pair, which
    is fine for an oracle but not for the fast matching route.
    """
    if i == j:
        raise ValueError("adjacency oracle requires two distinct vertices")
    tree = inst.tree
    depths: dict[int, int] = {}

    def depth(u: int) -> int:
        d = depths.get(u)
        if d is None:
            d = depths[u] = _walk_depth(tree, u)
        return d

    ti = inst.top(i)
    tj = inst.top(j)
    for bi in inst.bottoms(i):
        for bj in inst.bottoms(j):
            # the topmost node common to two downward paths is one of the
            # two top nodes, so checking both tops suffices
            for u, t, b in ((ti, tj, bj), (tj, ti, bi)):
                du, dt, db = depth(u), depth(t), depth(b)
                if dt <= du <= db:
                    node = b
                    for _ in range(db - du):
                        node = tree.parent(node)
                    if node == u:
                        return True
    return False


def oracle_adjacency(inst: RdvInstance) -> list[list[int]]:
    """Materialize neighbor lists by exhaustive pairwise oracle queries.

    Batch variant of :func:`adjacency_oracle` (same parent-walk logic, one
    shared depth precomputation).  Quadratic in the vertex count; meant for
    cross-checks, not for the matching fast path.
    """
    tree = inst.tree
    n = inst.n
    depths = _bfs_depths(tree)
    parent = tree.parent
    tops = [0] * (n + 1)
    bots: list[tuple[int, ...]] = [()] * (n + 1)
    for v in range(1, n + 1):
        tops[v] = inst.top(v)
        bots[v] = inst.bottoms(v)
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        ti = tops[i]
        for j in range(i + 1, n + 1):
            tj = tops[j]
            hit = False
            for u, t, other_bots in ((ti, tj, bots[j]), (tj, tops[i], bots[i])):
                if hit:
                    break
                du = depths[u]
                if depths[t] > du:
                    continue
                for b in other_bots:
                    if depths[b] < du:
                        continue
                    node = b
                    for _ in range(depths[b] - du):
                        node = parent(node)
                    if node == u:
                        hit = True
                        break
            if hit:
                adj[i].append(j)
                adj[j].append(i)
    return adj


def _bfs_depths(tree: HostTree) -> list[int]:
    depths = [0] * (tree.node_count + 1)
    queue = [tree.root]
    while queue:
        nxt: list[int] = []
        for node in queue:
            d = depths[node] + 1
            for c in tree.children(node):
                depths[c] = d
                nxt.append(c)
        queue = nxt
    return depths


def compress_tree(inst: RdvInstance) -> RdvInstance:
    """Shrink the host tree without changing the represented graph.

    Two reductions are applied until neither fires:

    * nodes used by no vertex are spliced out (their children reattach to
      the nearest used ancestor); if that leaves several top-level used
      components, a single fresh root joins them,
    * adjacent nodes used by exactly the same vertex set are merged.

    The result has at most ``2n`` nodes and is a fixpoint: compressing
    again returns a byte-identical instance.  Runs in time proportional to
    the total size of all vertex subtrees, which is fine at cross-check
    scale (the fast matching path never needs compression).
    """
    violations = validate_instance(inst)
    if violations:
        raise InvalidInstanceError(violations)
    tree = inst.tree
    n_nodes = tree.node_count

    users: list[set[int]] = [set() for _ in range(n_nodes + 1)]
    for v in range(1, inst.n + 1):
        top = inst.top(v)
        for b in inst.bottoms(v):
            node = b
            while True:
                users[node].add(v)
                if node == top:
                    break
                node = tree.parent(node)

    if inst.n == 0:
        return RdvInstance(HostTree([0]), (), inst.delta)

    # splice out unused nodes: up_used[u] = u if used, else nearest used
    # strict ancestor (0 if none); computed top-down in BFS order
    up_used = [0] * (n_nodes + 1)
    order = [tree.root]
    head = 0
    while head < len(order):
        node = order[head]
        head += 1
        p = tree.parent(node)
        if users[node]:
            up_used[node] = node
        else:
            up_used[node] = up_used[p] if p else 0
        order.extend(tree.children(node))

    used_children: list[list[int]] = [[] for _ in range(n_nodes + 1)]
    top_roots: list[int] = []
    for node in order:
        if not users[node]:
            continue
        p = up_used[tree.parent(node)] if tree.parent(node) else 0
        if p:
            used_children[p].append(node)
        else:
            top_roots.append(node)

    # merge adjacent equal-user-set nodes while assigning new ids in DFS
    # preorder; a fresh empty root joins several top-level components
    new_parents: list[int] = []
    rep = [0] * (n_nodes + 1)

    def new_node(parent_new: int) -> int:
        new_parents.append(parent_new)
        return len(new_parents)

    connector = new_node(0) if len(top_roots) > 1 else 0
    stack = [(r, connector) for r in reversed(top_roots)]
    while stack:
        node, parent_new = stack.pop()
        p_old = up_used[tree.parent(node)] if tree.parent(node) else 0
        if p_old and users[node] == users[p_old]:
            rep[node] = rep[p_old]
        else:
            rep[node] = new_node(parent_new)
        for c in reversed(used_children[node]):
            stack.append((c, rep[node]))

    new_tree = HostTree(new_parents)
    new_vertices: list[Vertex] = []
    for vert in inst.vertices:
        if isinstance(vert, VertexPath):
            new_vertices.append(VertexPath(rep[vert.top], rep[vert.bottom]))
        else:
            seen: list[int] = []
            for b in vert.bottoms:
                rb = rep[b]
                if rb not in seen:
                    seen.append(rb)
            new_vertices.append(VertexSubtree(rep[vert.top], tuple(seen)))
    return RdvInstance(new_tree, tuple(new_vertices), inst.delta)
