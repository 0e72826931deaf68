"""Exact brute-force solvers.

These are the ground truth every kernel and gadget is checked against.
They are exponential; each one refuses instances above its size guard.
Witness formats:

  vertex_cover, connected_vertex_cover, clique   sorted vertex list
  ivst, longest_path                             sorted edge list
  set_cover                                      sorted list of family indices
  treewidth                                      TreeDecomposition
  leaf_out_tree                                  sorted arc list
"""
import collections
import itertools
import logging

import networkx as nx
import numpy as np

from reoptkernel.graph_core import MAX, MIN, edge_key

log = logging.getLogger(__name__)

VC_MAX_VERTICES = 20
CVC_MAX_VERTICES = 30
IVST_MAX_VERTICES = 10
IVST_MAX_EDGES = 16
LONGEST_PATH_MAX_VERTICES = 16
CLIQUE_MAX_VERTICES = 20
SET_COVER_MAX_SETS = 20
TREEWIDTH_MAX_VERTICES = 10
LEAF_OUT_TREE_MAX_VERTICES = 8
LEAF_OUT_TREE_MAX_ARCS = 14

GRAPH = 'graph'
DIGRAPH = 'digraph'
SET_SYSTEM = 'set_cover'

class OracleError(Exception):
    pass

class SizeGuardExceeded(OracleError):
    """Instance too large for an exponential solver"""
    pass

OracleTooSlow = SizeGuardExceeded

class UnknownProblem(OracleError):
    pass

class ProblemKind(object):
    """A parameterized problem: its name, optimization direction and the
    shape of its instances"""
    def __init__(self, name, direction, shape, title):
        self.name = name
        self.direction = direction
        self.shape = shape
        self.title = title

    def __repr__(self):
        return '<ProblemKind %s>' % self.name

VERTEX_COVER = ProblemKind('vertex_cover', MIN, GRAPH, 'Vertex Cover')
CONNECTED_VERTEX_COVER = ProblemKind('connected_vertex_cover', MIN, GRAPH, 'Connected Vertex Cover')
IVST = ProblemKind('ivst', MAX, GRAPH, 'Internal Vertex Subtree')
LONGEST_PATH = ProblemKind('longest_path', MAX, GRAPH, 'Longest Path')
CLIQUE = ProblemKind('clique', MAX, GRAPH, 'Clique')
SET_COVER = ProblemKind('set_cover', MIN, SET_SYSTEM, 'Set Cover')
TREEWIDTH = ProblemKind('treewidth', MIN, GRAPH, 'Treewidth')
LEAF_OUT_TREE = ProblemKind('leaf_out_tree', MAX, DIGRAPH, 'Leaf Out Tree')

PROBLEM_KINDS = collections.OrderedDict((p.name, p) for p in [
    VERTEX_COVER, CONNECTED_VERTEX_COVER, IVST, LONGEST_PATH,
    CLIQUE, SET_COVER, TREEWIDTH, LEAF_OUT_TREE])

def problem_kind(name):
    if isinstance(name, ProblemKind):
        return name
    try:
        return PROBLEM_KINDS[name]
    except KeyError:
        raise UnknownProblem("unknown problem '%s' (known: %s)" % (name, ', '.join(PROBLEM_KINDS)))

Solution = collections.namedtuple('Solution', ['value', 'witness'])

def _guard(what, size, limit):
    if size > limit:
        raise SizeGuardExceeded("%s: instance size %d exceeds the exact solver limit %d" % (what, size, limit))

#Vertex Cover

def _cover_within(edges, budget, excluded=frozenset()):
    """Some vertex cover of edges with at most budget vertices avoiding
    excluded, or None. Branches on both ends of the first edge."""
    if not edges:
        return set()
    if budget <= 0:
        return None
    u, v = edges[0]
    for w in (u, v):
        if w in excluded:
            continue
        found = _cover_within([e for e in edges if w not in e], budget - 1, excluded)
        if found is not None:
            found.add(w)
            return found
    return None

def vertex_cover_number(g, max_vertices=VC_MAX_VERTICES):
    _guard('vertex cover', g.vertex_count, max_vertices)
    edges = g.sorted_edges()
    k = 0
    while _cover_within(edges, k) is None:
        k += 1
    return k

def min_vertex_cover(g, max_vertices=VC_MAX_VERTICES):
    """Minimum vertex cover, lexicographically smallest among the optimal ones"""
    value = vertex_cover_number(g, max_vertices)
    edges = g.sorted_edges()
    chosen, excluded = set(), set()
    for v in range(g.vertex_count):
        if len(chosen) == value:
            break
        if g.degree(v) == 0:
            excluded.add(v)
            continue
        trial = chosen | set([v])
        left = [e for e in edges if e[0] not in trial and e[1] not in trial]
        if _cover_within(left, value - len(trial), excluded) is not None:
            chosen = trial
        else:
            excluded.add(v)
    return Solution(value, sorted(chosen))

def minimum_vertex_covers(g, max_vertices=VC_MAX_VERTICES):
    """Every minimum vertex cover, in lexicographic order"""
    value = vertex_cover_number(g, max_vertices)
    candidates = [v for v in g.vertices() if g.degree(v) > 0]
    return [list(c) for c in itertools.combinations(candidates, value) if g.is_vertex_cover(c)]

#Connected Vertex Cover

def _is_connected_set(g, vertices):
    vertices = list(vertices)
    if len(vertices) <= 1:
        return True
    return nx.is_connected(g.to_networkx().subgraph(vertices))

def is_connected_vertex_cover(g, vertices):
    return g.is_vertex_cover(vertices) and _is_connected_set(g, vertices)

def _covers_branching(g, cover, budget):
    """Vertex covers containing cover with at most budget vertices. Branches
    on the first uncovered edge (u, v): either u joins or all of N(u) do."""
    uncovered = [e for e in g.sorted_edges() if e[0] not in cover and e[1] not in cover]
    if not uncovered:
        yield cover
        return
    if len(cover) >= budget:
        return
    u = uncovered[0][0]
    for found in _covers_branching(g, cover | frozenset([u]), budget):
        yield found
    with_neighbors = cover | g.neighbors(u)
    if len(with_neighbors) <= budget:
        for found in _covers_branching(g, with_neighbors, budget):
            yield found

def _connect(g, cover, extra):
    """Fewest vertices (at most extra) whose addition makes cover induce a
    connected subgraph, or None. The vertices outside a cover are
    independent, so each addition only merges components it touches."""
    nxg = g.to_networkx()
    comps = list(nx.connected_components(nxg.subgraph(cover)))
    if len(comps) <= 1:
        return []
    comp_of = {}
    for i, c in enumerate(comps):
        for x in c:
            comp_of[x] = i
    touching = {}
    for x in g.vertices():
        if x in cover:
            continue
        touched = set(comp_of[y] for y in g.neighbors(x) if y in comp_of)
        if len(touched) >= 2:
            touching[x] = touched
    candidates = sorted(touching)
    for size in range(1, min(extra, len(candidates)) + 1):
        for combo in itertools.combinations(candidates, size):
            joined = nx.utils.UnionFind(range(len(comps)))
            for x in combo:
                joined.union(*touching[x])
            if len(set(joined[i] for i in range(len(comps)))) == 1:
                return list(combo)
    return None

def min_connected_vertex_cover(g, max_vertices=CVC_MAX_VERTICES):
    """Minimum connected vertex cover; value None when the edges do not lie
    in a single component"""
    _guard('connected vertex cover', g.vertex_count, max_vertices)
    touched = [v for v in g.vertices() if g.degree(v) > 0]
    if not touched:
        return Solution(0, [])
    if not _is_connected_set(g, touched):
        return Solution(None, None)

    # the support of a leaf is in every connected cover of a component with
    # at least three vertices
    forced = set()
    if len(touched) >= 3:
        forced = set(next(iter(g.neighbors(v))) for v in touched if g.degree(v) == 1)

    budget = max(vertex_cover_number(g, max_vertices), len(forced))
    while True:
        best = None
        for cover in _covers_branching(g, frozenset(forced), budget):
            extra = _connect(g, cover, budget - len(cover))
            if extra is None:
                continue
            found = sorted(cover | set(extra))
            if len(found) <= budget and (best is None or (len(found), found) < (len(best), best)):
                best = found
        if best is not None:
            return Solution(len(best), best)
        budget += 1

#Internal Vertex Subtree

def _internal_count(edges):
    degree = collections.Counter()
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return sum(1 for d in degree.values() if d >= 2)

def _is_tree_edges(g, edges):
    if not edges:
        return True
    if any(not g.has_edge(u, v) for u, v in edges):
        return False
    return nx.is_tree(nx.Graph(list(edges)))

def max_internal_subtree(g, max_vertices=IVST_MAX_VERTICES, max_edges=IVST_MAX_EDGES):
    """Subtree with the most internal (degree >= 2) vertices. A maximum is
    always reached by a spanning tree of some component."""
    _guard('ivst', g.vertex_count, max_vertices)
    _guard('ivst edges', g.edge_count(), max_edges)
    best = Solution(0, [])
    nxg = g.to_networkx()
    for comp in sorted(sorted(c) for c in nx.connected_components(nxg)):
        if len(comp) - 2 <= best.value:
            continue
        comp_edges = sorted(edge_key(u, v) for u, v in nxg.subgraph(comp).edges())
        for combo in itertools.combinations(comp_edges, len(comp) - 1):
            joined = nx.utils.UnionFind(comp)
            acyclic = True
            for u, v in combo:
                if joined[u] == joined[v]:
                    acyclic = False
                    break
                joined.union(u, v)
            if not acyclic:
                continue
            internal = _internal_count(combo)
            if internal > best.value:
                best = Solution(internal, list(combo))
                if internal == len(comp) - 2:
                    break
    return best

#Longest Path

def longest_path(g, max_vertices=LONGEST_PATH_MAX_VERTICES):
    """Longest simple path, counted in edges, by dynamic programming over
    the set of visited vertices"""
    n = g.vertex_count
    _guard('longest path', n, max_vertices)
    if n == 0:
        return Solution(0, [])
    size = 1 << n
    reach = np.zeros((size, n), dtype=bool)
    parent = np.full((size, n), -1, dtype=np.int8)
    for v in range(n):
        reach[1 << v, v] = True

    best_length, best_end = 0, (1, 0)
    for mask in range(1, size):
        ends = np.flatnonzero(reach[mask])
        if len(ends) == 0:
            continue
        length = bin(mask).count('1') - 1
        if length > best_length:
            best_length, best_end = length, (mask, int(ends[0]))
        for v in ends:
            for w in g.neighbors(int(v)):
                if mask >> w & 1:
                    continue
                grown = mask | (1 << w)
                if not reach[grown, w]:
                    reach[grown, w] = True
                    parent[grown, w] = v

    mask, v = best_end
    edges = []
    while parent[mask, v] >= 0:
        p = int(parent[mask, v])
        edges.append(edge_key(p, v))
        mask ^= 1 << v
        v = p
    return Solution(best_length, sorted(edges))

def _is_path_edges(g, edges):
    if not edges:
        return True
    if not _is_tree_edges(g, edges):
        return False
    degree = collections.Counter(x for e in edges for x in e)
    return max(degree.values()) <= 2

#Clique

def max_clique(g, max_vertices=CLIQUE_MAX_VERTICES):
    _guard('clique', g.vertex_count, max_vertices)
    if g.vertex_count == 0:
        return Solution(0, [])
    cliques = [sorted(c) for c in nx.find_cliques(g.to_networkx())]
    best = min(cliques, key=lambda c: (-len(c), c))
    return Solution(len(best), best)

def is_clique(g, vertices):
    return all(g.has_edge(u, v) for u, v in itertools.combinations(sorted(set(vertices)), 2))

#Set Cover

def min_set_cover(sc, max_sets=SET_COVER_MAX_SETS):
    """Fewest family members covering {1..universe_size}; value None when
    the whole family does not cover the universe"""
    family = [set(f) for f in sc.family]
    _guard('set cover', len(family), max_sets)
    universe = set(range(1, sc.universe_size + 1))
    if not universe:
        return Solution(0, [])
    available = set().union(*family) if family else set()
    if not universe <= available:
        return Solution(None, None)
    for size in range(1, len(family) + 1):
        for combo in itertools.combinations(range(len(family)), size):
            if universe <= set().union(*[family[i] for i in combo]):
                return Solution(size, list(combo))
    return Solution(None, None)

#Treewidth

class TreeDecomposition(object):
    """Bags indexed 0..len-1 and the tree joining them"""
    def __init__(self, bags, tree_edges):
        self.bags = [frozenset(b) for b in bags]
        self.tree_edges = sorted(edge_key(a, b) for a, b in tree_edges)

    @property
    def width(self):
        if not self.bags:
            return 0
        return max(len(b) for b in self.bags) - 1

    def validate(self, g):
        """Violated clauses of the tree decomposition definition"""
        violations = []
        if not self.bags:
            if g.vertex_count:
                violations.append("no bags")
            return violations
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.bags)))
        tree.add_edges_from(self.tree_edges)
        if tree.number_of_nodes() != len(self.bags) or not nx.is_tree(tree):
            violations.append("bags are not joined by a tree")
            return violations
        if set().union(*self.bags) != set(g.vertices()):
            violations.append("bags do not cover the vertices")
        for u, v in g.sorted_edges():
            if not any(u in b and v in b for b in self.bags):
                violations.append("edge (%d, %d) in no bag" % (u, v))
                break
        for v in g.vertices():
            holding = [i for i, b in enumerate(self.bags) if v in b]
            if holding and not nx.is_connected(tree.subgraph(holding)):
                violations.append("bags holding %d are not connected" % v)
                break
        return violations

    def __eq__(self, other):
        return isinstance(other, TreeDecomposition) and self.bags == other.bags and \
            self.tree_edges == other.tree_edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<TreeDecomposition bags=%d width=%d>' % (len(self.bags), self.width)

def _reach_beyond(g, mask, v):
    """Vertices outside mask, other than v, reachable from v through mask"""
    seen = set([v])
    stack = [v]
    found = 0
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in seen:
                continue
            seen.add(y)
            if mask >> y & 1:
                stack.append(y)
            else:
                found += 1
    return found

def decomposition_from_order(g, order):
    """Tree decomposition of g from an elimination ordering"""
    position = dict((v, i) for i, v in enumerate(order))
    adj = dict((v, set(g.neighbors(v))) for v in g.vertices())
    bags, tree_edges, roots = [], [], []
    for i, v in enumerate(order):
        later = set(w for w in adj[v] if position[w] > i)
        bags.append(set([v]) | later)
        for a, b in itertools.combinations(later, 2):
            adj[a].add(b)
            adj[b].add(a)
        if later:
            tree_edges.append((i, min(position[w] for w in later)))
        else:
            roots.append(i)
    for r in roots[1:]:
        tree_edges.append((roots[0], r))
    return TreeDecomposition(bags, tree_edges)

def treewidth(g, max_vertices=TREEWIDTH_MAX_VERTICES):
    """Exact treewidth by dynamic programming over the set of vertices
    eliminated first"""
    n = g.vertex_count
    _guard('treewidth', n, max_vertices)
    if n == 0:
        return Solution(0, TreeDecomposition([], []))
    size = 1 << n
    best = np.full(size, n, dtype=np.int16)
    choice = np.zeros(size, dtype=np.int8)
    best[0] = -1
    for mask in range(1, size):
        for v in range(n):
            if not mask >> v & 1:
                continue
            before = mask ^ (1 << v)
            width = max(int(best[before]), _reach_beyond(g, before, v))
            if width < best[mask]:
                best[mask] = width
                choice[mask] = v

    mask = size - 1
    last_first = []
    while mask:
        v = int(choice[mask])
        last_first.append(v)
        mask ^= 1 << v
    td = decomposition_from_order(g, list(reversed(last_first)))
    value = int(best[size - 1])
    if td.width != value:
        raise OracleError("decomposition width %d differs from computed treewidth %d" % (td.width, value))
    return Solution(value, td)

#Leaf Out Tree

def _out_tree_leaves(arcs):
    tree = nx.DiGraph(list(arcs))
    if not nx.is_arborescence(tree):
        return None
    return sum(1 for x in tree.nodes() if tree.out_degree(x) == 0)

def max_leaf_out_tree(d, max_vertices=LEAF_OUT_TREE_MAX_VERTICES, max_arcs=LEAF_OUT_TREE_MAX_ARCS):
    """Out-tree with the most leaves. Only trees with at least one arc are
    considered, so an arcless digraph has value 0."""
    _guard('leaf out tree', d.vertex_count, max_vertices)
    _guard('leaf out tree arcs', len(d.arcs), max_arcs)
    arcs = d.sorted_arcs()
    best = Solution(0, [])
    for size in range(1, min(len(arcs), d.vertex_count - 1) + 1):
        for combo in itertools.combinations(arcs, size):
            leaves = _out_tree_leaves(combo)
            if leaves is not None and leaves > best.value:
                best = Solution(leaves, list(combo))
    return best

#Dispatch

SOLVERS = {
    'vertex_cover': min_vertex_cover,
    'connected_vertex_cover': min_connected_vertex_cover,
    'ivst': max_internal_subtree,
    'longest_path': longest_path,
    'clique': max_clique,
    'set_cover': min_set_cover,
    'treewidth': treewidth,
    'leaf_out_tree': max_leaf_out_tree,
}

def solve_exact(kind, instance, **limits):
    """Optimal value and a witness for it"""
    kind = problem_kind(kind)
    solution = SOLVERS[kind.name](instance, **limits)
    log.debug("%s optimum %r", kind.name, solution.value)
    return solution

def meets(kind, value, k):
    """Whether an objective value satisfies the parameter k"""
    if value is None:
        return False
    if problem_kind(kind).direction == MIN:
        return value <= k
    return value >= k

def is_member(kind, instance, k, **limits):
    return meets(kind, solve_exact(kind, instance, **limits).value, k)

def solution_cost(kind, instance, candidate):
    """Objective value of a feasible candidate, or None when it is not a
    solution at all"""
    name = problem_kind(kind).name
    if name == 'vertex_cover':
        return len(set(candidate)) if instance.is_vertex_cover(candidate) else None
    if name == 'connected_vertex_cover':
        return len(set(candidate)) if is_connected_vertex_cover(instance, candidate) else None
    if name == 'clique':
        vertices = set(candidate)
        if any(v < 0 or v >= instance.vertex_count for v in vertices) or not is_clique(instance, vertices):
            return None
        return len(vertices)
    if name == 'ivst':
        edges = set(edge_key(u, v) for u, v in candidate)
        return _internal_count(edges) if _is_tree_edges(instance, edges) else None
    if name == 'longest_path':
        edges = set(edge_key(u, v) for u, v in candidate)
        return len(edges) if _is_path_edges(instance, edges) else None
    if name == 'set_cover':
        chosen = set(candidate)
        if any(i < 0 or i >= len(instance.family) for i in chosen):
            return None
        covered = set()
        for i in chosen:
            covered |= set(instance.family[i])
        return len(chosen) if covered >= set(range(1, instance.universe_size + 1)) else None
    if name == 'treewidth':
        if not isinstance(candidate, TreeDecomposition) or candidate.validate(instance):
            return None
        return candidate.width
    if name == 'leaf_out_tree':
        arcs = set(tuple(a) for a in candidate)
        if not arcs:
            return 0
        if not arcs <= instance.arcs:
            return None
        return _out_tree_leaves(sorted(arcs))
    raise UnknownProblem(name)

def verify_solution(kind, instance, candidate, k=None):
    """True iff candidate is a solution, and when k is given, one whose cost
    satisfies k"""
    try:
        cost = solution_cost(kind, instance, candidate)
    except (TypeError, ValueError):
        return False
    if cost is None:
        return False
    return k is None or meets(kind, cost, k)

def validate_witness(inst):
    """Whether a reoptimization instance carries a witness that really
    solves its original instance at cost k. Bottom always passes."""
    if inst.witness is None:
        return True
    return verify_solution(inst.problem, inst.original, inst.witness, inst.k)

def verify_kernel_equivalence(kind, instance, k, result, **limits):
    """Oracle check that a kernel result answers (instance, k) correctly"""
    expected = is_member(kind, instance, k, **limits)
    if result.is_decided:
        return result.answer == expected
    return is_member(kind, result.graph, result.parameter, **limits) == expected
