"""Constructions behind the negative results: extremal graphs, reoptimization
instances that embed an arbitrary graph so that the modified instance is
exactly as hard as the embedded one, and the Set Cover to Connected Vertex
Cover gadget.
"""
import logging

from reoptkernel import oracles
from reoptkernel.graph_core import Digraph, EdgeAdd, EdgeDel, Graph, ReoptInstance, VertexAdd, \
    VertexDel, apply_modification, complete_graph, disjoint_union, edge_key, path_graph

log = logging.getLogger(__name__)

EDGE_DELETION = 'edge_del'
VERTEX_DELETION = 'vertex_del'

# problems whose extremal graphs are extremal for the complementary language
COMPLEMENT_EXTREMAL = frozenset(['treewidth'])

class GadgetError(Exception):
    pass

class UnsupportedProblem(GadgetError):
    pass

class UnsupportedCombination(GadgetError):
    pass

class InvalidSetCover(GadgetError):
    pass

class SetCoverInstance(object):
    """Universe {1..universe_size}, a family of subsets of it and a target k"""
    def __init__(self, universe_size, family, k):
        family = [frozenset(f) for f in family]
        for i, f in enumerate(family):
            bad = [x for x in f if x < 1 or x > universe_size]
            if bad:
                raise InvalidSetCover("family member %d holds %r outside 1..%d" % (i, sorted(bad), universe_size))
        if k < 0 or k > universe_size:
            raise InvalidSetCover("target %d must lie in 0..%d" % (k, universe_size))
        self.universe_size = universe_size
        self.family = family
        self.k = k

    def __repr__(self):
        return '<SetCoverInstance u=%d t=%d k=%d>' % (self.universe_size, len(self.family), self.k)

def build_extremal(problem, k):
    kind = oracles.problem_kind(problem)
    if k < 1:
        raise GadgetError("extremal graphs need k >= 1, got %d" % k)
    if kind.name == 'ivst':
        return path_graph(k + 2)
    if kind.name == 'clique':
        return complete_graph(k)
    if kind.name == 'treewidth':
        return complete_graph(k + 2)
    if kind.name == 'leaf_out_tree':
        return Digraph(k + 1, [(0, leaf) for leaf in range(1, k + 1)])
    raise UnsupportedProblem("no extremal construction for '%s'" % kind.name)

def canonical_instances(problem, k):
    """Smallest fixed yes- and no-instance of a graph problem for parameter
    k, as (graph, k) pairs. The no-instance is None when every graph
    answers yes, as for maximization at k = 0."""
    kind = oracles.problem_kind(problem)
    empty = Graph(0)
    if kind.name == 'vertex_cover':
        return (empty, k), (Graph(2 * k + 2, [(2 * i, 2 * i + 1) for i in range(k + 1)]), k)
    if kind.name == 'connected_vertex_cover':
        return (empty, k), (path_graph(k + 3), k)
    if kind.name == 'treewidth':
        return (empty, k), (complete_graph(k + 2), k)
    if kind.name == 'ivst':
        yes = path_graph(k + 2)
    elif kind.name == 'longest_path':
        yes = path_graph(k + 1)
    elif kind.name == 'clique':
        yes = complete_graph(k)
    else:
        raise UnsupportedProblem("no canonical graph instances for '%s'" % kind.name)
    if k == 0:
        return (yes, k), None
    return (yes, k), (empty, k)

def _single_deletions(g):
    if isinstance(g, Digraph):
        for a, b in g.sorted_arcs():
            yield Digraph(g.vertex_count, g.arcs - set([(a, b)]))
        for v in range(g.vertex_count):
            yield g.without_vertices([v])[0]
        return
    for e in g.sorted_edges():
        yield apply_modification(g, EdgeDel(*e))
    for v in g.vertices():
        yield apply_modification(g, VertexDel(v))

def _single_edge_additions(g):
    for u in g.vertices():
        for v in range(u + 1, g.vertex_count):
            if not g.has_edge(u, v):
                yield apply_modification(g, EdgeAdd(u, v))

MINIMAL_YES = 'minimal'
MAXIMAL_YES = 'maximal'

def is_extremal(g, problem, k, mode=MINIMAL_YES, complement=None):
    """Whether (g, k) is a yes-instance that every single deletion
    (MINIMAL_YES) or edge addition (MAXIMAL_YES) turns into a no-instance.
    With complement the language is replaced by its complement."""
    kind = oracles.problem_kind(problem)
    if complement is None:
        complement = kind.name in COMPLEMENT_EXTREMAL

    def member(h):
        return oracles.is_member(kind, h, k) != complement

    if not member(g):
        return False
    if mode == MINIMAL_YES:
        neighbours = _single_deletions(g)
    elif mode == MAXIMAL_YES:
        if isinstance(g, Digraph):
            raise UnsupportedCombination("edge additions are not defined on digraphs here")
        neighbours = _single_edge_additions(g)
    else:
        raise ValueError("unknown mode %r" % (mode,))
    for h in neighbours:
        if member(h):
            return False
    return True

def _block(kind, k):
    """(block graph, witness inside the block or None)"""
    if kind.name == 'longest_path':
        if k < 1:
            raise UnsupportedCombination("longest path block needs k >= 1")
        block = path_graph(k + 1)
        return block, block.sorted_edges()
    if kind.name == 'ivst':
        block = path_graph(k + 2)
        return block, block.sorted_edges()
    if kind.name == 'clique':
        block = complete_graph(k)
        return block, list(range(k))
    if kind.name == 'treewidth':
        return complete_graph(k + 2), None
    raise UnsupportedCombination("no negative reoptimization instance for '%s'" % kind.name)

def _shift_witness(kind, witness, offset):
    if witness is None:
        return None
    if kind.name == 'clique':
        return [v + offset for v in witness]
    return [edge_key(u + offset, v + offset) for u, v in witness]

def build_negative_reopt_instance(problem, g, k, modification=EDGE_DELETION):
    """Reoptimization instance ((g + B, k), s, (g + B', k)) with B a block
    that solves the problem (or, for treewidth, barely fails it) and B' the
    block after losing a canonical edge or vertex. The modified instance is
    a yes-instance exactly when (g, k) is."""
    kind = oracles.problem_kind(problem)
    block, witness = _block(kind, k)
    offset = g.vertex_count
    original = disjoint_union(g, block)

    if modification == EDGE_DELETION:
        edges = block.sorted_edges()
        if not edges:
            raise UnsupportedCombination("block for '%s' with k=%d has no edge to delete" % (kind.name, k))
        a, b = edges[(len(edges) - 1) // 2]
        m = EdgeDel(a + offset, b + offset)
    elif modification == VERTEX_DELETION:
        if kind.name in ('longest_path', 'ivst'):
            target = 1
        else:
            target = 0
        if target >= block.vertex_count:
            raise UnsupportedCombination("block for '%s' with k=%d has no vertex to delete" % (kind.name, k))
        m = VertexDel(target + offset)
    else:
        raise UnsupportedCombination("modification '%s' not supported for '%s'" % (modification, kind.name))

    return ReoptInstance(original, k, _shift_witness(kind, witness, offset), m, k, kind)

CLIQUE_EDGE_ADDITION = 'edge_add'
CLIQUE_VERTEX_ADDITION = 'vertex_add'

def build_clique_reopt_instance(g, k, mode=CLIQUE_EDGE_ADDITION):
    """Clique reoptimization instance whose modified instance asks whether
    g has a clique of size k.

    edge_add: K_{k+1} followed by g plus two vertices v1, v2 joined to all of
    g; the edge v1v2 is added and the parameter goes from k+1 to k+2.
    vertex_add: K_k followed by g; a vertex joined to all of g is added and
    the parameter goes from k to k+1.
    """
    n = g.vertex_count
    g_labels = list(g.labels) if g.labels is not None else ['g_%d' % i for i in range(n)]
    if mode == CLIQUE_EDGE_ADDITION:
        size = k + 1
        block = complete_graph(size)
        v1, v2 = size + n, size + n + 1
        edges = list(block.edges)
        edges += [(u + size, v + size) for u, v in g.edges]
        edges += [(x + size, v1) for x in range(n)]
        edges += [(x + size, v2) for x in range(n)]
        labels = ['k_%d' % i for i in range(size)] + g_labels + ['v1', 'v2']
        original = Graph(size + n + 2, edges, labels)
        return ReoptInstance(original, size, list(range(size)), EdgeAdd(v1, v2), k + 2, oracles.CLIQUE)
    if mode == CLIQUE_VERTEX_ADDITION:
        block = complete_graph(k)
        edges = list(block.edges) + [(u + k, v + k) for u, v in g.edges]
        labels = ['k_%d' % i for i in range(k)] + g_labels
        original = Graph(k + n, edges, labels)
        m = VertexAdd([x + k for x in range(n)], label='v1')
        return ReoptInstance(original, k, list(range(k)), m, k + 1, oracles.CLIQUE)
    raise UnsupportedCombination("clique reoptimization mode '%s' not supported" % mode)

class SetCoverCvcGadget(object):
    """Connected Vertex Cover graph built from a Set Cover instance.

    Vertex layout: grid u_{i,j} (i = 1..k+2, j = 0..u) row by row, their
    pendant leaves in the same order, f_1..f_t, x, v_1..v_{k+2}, f, y.
    """
    def __init__(self, sc):
        self.set_cover = sc
        u, k, t = sc.universe_size, sc.k, len(sc.family)
        rows, cols = k + 2, u + 1
        self.rows, self.cols = rows, cols
        grid_size = rows * cols
        self.grid = dict(((i, j), (i - 1) * cols + j) for i in range(1, rows + 1) for j in range(cols))
        self.leaves = dict((key, idx + grid_size) for key, idx in self.grid.items())
        self.f_sets = [2 * grid_size + l for l in range(t)]
        self.x = 2 * grid_size + t
        self.v = [self.x + i for i in range(1, rows + 1)]
        self.f = self.x + rows + 1
        self.y = self.f + 1
        n = self.y + 1

        labels = [None] * n
        for (i, j), idx in self.grid.items():
            labels[idx] = 'u_{%d,%d}' % (i, j)
            labels[self.leaves[(i, j)]] = "u'_{%d,%d}" % (i, j)
        for l, idx in enumerate(self.f_sets):
            labels[idx] = 'f_%d' % (l + 1)
        labels[self.x] = 'x'
        for i, idx in enumerate(self.v):
            labels[idx] = 'v_%d' % (i + 1)
        labels[self.f] = 'f'
        labels[self.y] = 'y'

        edges = []
        for key, idx in sorted(self.grid.items()):
            i, j = key
            edges.append((idx, self.leaves[key]))
            edges.append((idx, self.v[i - 1]))
            if j >= 1:
                edges.extend((idx, self.f_sets[l]) for l, members in enumerate(sc.family) if j in members)
            elif i <= rows - 1:
                edges.append((idx, self.x))
        edges.extend((self.f, fl) for fl in self.f_sets)
        edges.append((self.f, self.x))
        edges.append((self.f, self.y))
        edges.extend((self.y, vi) for vi in self.v)

        self.graph = Graph(n, edges, labels)
        self.edge = (self.x, self.grid[(rows, 0)])
        self.budget = rows * (u + 2)
        self.s1 = sorted(list(self.grid.values()) + [self.f] + self.v + [self.y])

    @property
    def modification(self):
        return EdgeAdd(*self.edge)

    def reopt_instance(self):
        """((G, c+2), S1, (G+e, c+1))"""
        return ReoptInstance(self.graph, self.budget + 2, self.s1, self.modification,
                             self.budget + 1, oracles.CONNECTED_VERTEX_COVER)

    def s2_from_cover(self, cover):
        """Connected vertex cover of G built from a set cover, given as
        family indices"""
        cover = sorted(set(cover))
        if any(i < 0 or i >= len(self.f_sets) for i in cover):
            raise InvalidSetCover("family indices %r out of range" % cover)
        chosen = [self.f_sets[i] for i in cover]
        return sorted(list(self.grid.values()) + chosen + [self.x, self.f, self.v[-1], self.y])

    def s2_after_edge(self, cover):
        """S2 without v_{k+2}: a connected vertex cover of G+e"""
        return [x for x in self.s2_from_cover(cover) if x != self.v[-1]]

    def check_invariants(self):
        """Violated structural clauses of the construction"""
        g = self.graph
        violations = []
        sc = self.set_cover
        for key, idx in self.grid.items():
            i, j = key
            if g.neighbors(self.leaves[key]) != frozenset([idx]):
                violations.append("leaf of u_{%d,%d} is not pendant" % key)
            if not g.has_edge(idx, self.v[i - 1]):
                violations.append("u_{%d,%d} not joined to v_%d" % (i, j, i))
            for l, members in enumerate(sc.family):
                if j >= 1 and g.has_edge(idx, self.f_sets[l]) != (j in members):
                    violations.append("u_{%d,%d} ~ f_%d disagrees with the family" % (i, j, l + 1))
            if j == 0 and g.has_edge(idx, self.x) != (i <= self.rows - 1):
                violations.append("x ~ u_{%d,0} wrong" % i)
        if g.neighbors(self.f) != frozenset(self.f_sets + [self.x, self.y]):
            violations.append("f has the wrong neighbourhood")
        if g.neighbors(self.y) != frozenset(self.v + [self.f]):
            violations.append("y has the wrong neighbourhood")
        if g.has_edge(*self.edge):
            violations.append("reoptimization edge already present")
        if len(self.s1) != self.budget + 2:
            violations.append("|S1| = %d, expected %d" % (len(self.s1), self.budget + 2))
        if not oracles.is_connected_vertex_cover(g, self.s1):
            violations.append("S1 is not a connected vertex cover")
        return violations

def build_setcover_cvc(sc):
    gadget = SetCoverCvcGadget(sc)
    log.debug("set cover gadget: %d vertices, budget %d", gadget.graph.vertex_count, gadget.budget)
    return gadget
