"""Graphs, local modifications, reoptimization instances and kernel results.

Every type in here is an immutable value: modifications and subgraph
extraction return new objects and never touch their inputs.
"""
import itertools
import logging

import networkx as nx

log = logging.getLogger(__name__)

MIN = 'min'
MAX = 'max'

class GraphError(Exception):
    """Base class for malformed graphs, modifications and instances"""
    pass

class InvalidGraph(GraphError):
    """Self-loop, duplicate edge or bad labelling at construction"""
    pass

class VertexOutOfRange(GraphError):
    """A vertex index outside 0..n-1 was referenced"""
    pass

class ModificationInvalid(GraphError):
    """A local modification does not apply to the graph it was given"""
    pass

def edge_key(u, v):
    """Canonical (min, max) form of an undirected edge"""
    if u < v:
        return (u, v)
    return (v, u)

def default_labels(n, start=0):
    return [str(i) for i in range(start, start + n)]

class Graph(object):
    """Undirected simple graph on the dense vertex set 0..vertex_count-1.

    Labels are optional; when present there is exactly one per vertex and
    they follow the vertices through every modification.
    """
    def __init__(self, vertex_count, edges=(), labels=None):
        if vertex_count < 0:
            raise InvalidGraph("negative vertex count %d" % vertex_count)
        keys = set()
        for edge in edges:
            u, v = edge
            if u == v:
                raise InvalidGraph("self-loop at vertex %d" % u)
            for x in (u, v):
                if x < 0 or x >= vertex_count:
                    raise VertexOutOfRange("edge (%d, %d) leaves a graph on %d vertices" % (u, v, vertex_count))
            key = edge_key(u, v)
            if key in keys:
                raise InvalidGraph("duplicate edge (%d, %d)" % key)
            keys.add(key)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != vertex_count:
                raise InvalidGraph("%d labels given for %d vertices" % (len(labels), vertex_count))

        self._n = vertex_count
        self._edges = frozenset(keys)
        self._labels = labels
        adj = [set() for _ in range(vertex_count)]
        for u, v in keys:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def vertex_count(self):
        return self._n

    @property
    def edges(self):
        return self._edges

    @property
    def labels(self):
        return self._labels

    def __len__(self):
        return self._n

    def vertices(self):
        return range(self._n)

    def sorted_edges(self):
        return sorted(self._edges)

    def edge_count(self):
        return len(self._edges)

    def check_vertex(self, v):
        if v < 0 or v >= self._n:
            raise VertexOutOfRange("vertex %d not in a graph on %d vertices" % (v, self._n))

    def neighbors(self, v):
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v):
        return len(self.neighbors(v))

    def has_edge(self, u, v):
        return edge_key(u, v) in self._edges

    def label(self, v):
        self.check_vertex(v)
        if self._labels is None:
            return str(v)
        return self._labels[v]

    def find(self, label):
        """Returns the index of the vertex carrying label"""
        if self._labels is None:
            raise KeyError(label)
        try:
            return self._labels.index(label)
        except ValueError:
            raise KeyError(label)

    def isolated_vertices(self):
        return [v for v in range(self._n) if not self._adj[v]]

    def is_independent(self, vertices):
        vertices = set(vertices)
        return not any(u in vertices and v in vertices for u, v in self._edges)

    def is_vertex_cover(self, vertices):
        vertices = set(vertices)
        return all(u in vertices or v in vertices for u, v in self._edges)

    def induced_subgraph(self, vertices):
        """Returns (subgraph, index_map) where index_map[i] is the vertex of
        this graph that became vertex i of the subgraph. Vertices keep their
        relative order."""
        index_map = sorted(set(vertices))
        for v in index_map:
            self.check_vertex(v)
        position = dict((v, i) for i, v in enumerate(index_map))
        edges = [(position[u], position[v]) for u, v in self._edges
                 if u in position and v in position]
        labels = None
        if self._labels is not None:
            labels = [self._labels[v] for v in index_map]
        return Graph(len(index_map), edges, labels), index_map

    def without_vertices(self, vertices):
        removed = set(vertices)
        return self.induced_subgraph(v for v in range(self._n) if v not in removed)

    def to_networkx(self):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self._n))
        nxg.add_edges_from(self._edges)
        return nxg

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges and self._labels == other._labels

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._n, self._edges, self._labels))

    def __repr__(self):
        return '<Graph n=%d m=%d>' % (self._n, len(self._edges))

class Digraph(object):
    """Directed graph without self-loops on vertices 0..vertex_count-1"""
    def __init__(self, vertex_count, arcs=()):
        arcs = frozenset(tuple(a) for a in arcs)
        for u, v in arcs:
            if u == v:
                raise InvalidGraph("self-loop at vertex %d" % u)
            for x in (u, v):
                if x < 0 or x >= vertex_count:
                    raise VertexOutOfRange("arc (%d, %d) leaves a digraph on %d vertices" % (u, v, vertex_count))
        self._n = vertex_count
        self._arcs = arcs

    @property
    def vertex_count(self):
        return self._n

    @property
    def arcs(self):
        return self._arcs

    def sorted_arcs(self):
        return sorted(self._arcs)

    def without_vertices(self, vertices):
        removed = set(vertices)
        index_map = [v for v in range(self._n) if v not in removed]
        position = dict((v, i) for i, v in enumerate(index_map))
        arcs = [(position[a], position[b]) for a, b in self._arcs if a in position and b in position]
        return Digraph(len(index_map), arcs), index_map

    def to_networkx(self):
        nxg = nx.DiGraph()
        nxg.add_nodes_from(range(self._n))
        nxg.add_edges_from(self._arcs)
        return nxg

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._n, self._arcs))

    def __repr__(self):
        return '<Digraph n=%d arcs=%d>' % (self._n, len(self._arcs))

def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])

def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))

def from_networkx(nxg):
    """Relabels the nodes of a networkx graph densely in sorted order"""
    nodes = sorted(nxg.nodes())
    position = dict((v, i) for i, v in enumerate(nodes))
    return Graph(len(nodes), [(position[u], position[v]) for u, v in nxg.edges() if u != v])

class LocalModification(object):
    """Base class of the four local modifications"""
    KIND = None
    IS_ADDITION = False

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.KIND, self._key()))

    def __repr__(self):
        return '<%s %r>' % (type(self).__name__, self._key())

class EdgeAdd(LocalModification):
    KIND = 'edge_add'
    IS_ADDITION = True
    def __init__(self, u, v):
        self.u, self.v = u, v
    def _key(self):
        return (self.u, self.v)
    def edge(self):
        return edge_key(self.u, self.v)

class EdgeDel(LocalModification):
    KIND = 'edge_del'
    def __init__(self, u, v):
        self.u, self.v = u, v
    def _key(self):
        return (self.u, self.v)
    def edge(self):
        return edge_key(self.u, self.v)

class VertexDel(LocalModification):
    KIND = 'vertex_del'
    def __init__(self, vertex):
        self.vertex = vertex
    def _key(self):
        return (self.vertex,)

class VertexAdd(LocalModification):
    KIND = 'vertex_add'
    IS_ADDITION = True
    def __init__(self, neighbors, label=None):
        self.neighbors = frozenset(neighbors)
        self.label = label
    def _key(self):
        return (tuple(sorted(self.neighbors)),)

def check_modification(g, m):
    """Raises ModificationInvalid unless m applies to g"""
    n = g.vertex_count
    if isinstance(m, (EdgeAdd, EdgeDel)):
        if not (0 <= m.u < n and 0 <= m.v < n):
            raise ModificationInvalid("edge (%d, %d) out of range" % (m.u, m.v))
        if m.u == m.v:
            raise ModificationInvalid("edge (%d, %d) is a self-loop" % (m.u, m.v))
        present = g.has_edge(m.u, m.v)
        if isinstance(m, EdgeAdd) and present:
            raise ModificationInvalid("edge (%d, %d) already present" % (m.u, m.v))
        if isinstance(m, EdgeDel) and not present:
            raise ModificationInvalid("edge (%d, %d) not present" % (m.u, m.v))
    elif isinstance(m, VertexDel):
        if not 0 <= m.vertex < n:
            raise ModificationInvalid("vertex %d out of range" % m.vertex)
    elif isinstance(m, VertexAdd):
        bad = [x for x in m.neighbors if not 0 <= x < n]
        if bad:
            raise ModificationInvalid("new vertex neighbors %r out of range" % sorted(bad))
    else:
        raise ModificationInvalid("unknown modification %r" % (m,))

def apply_modification(g, m):
    """Returns the graph obtained from g by the local modification m"""
    check_modification(g, m)
    if isinstance(m, EdgeAdd):
        return Graph(g.vertex_count, g.edges | set([m.edge()]), g.labels)
    if isinstance(m, EdgeDel):
        return Graph(g.vertex_count, g.edges - set([m.edge()]), g.labels)
    if isinstance(m, VertexDel):
        return g.without_vertices([m.vertex])[0]
    # VertexAdd appends index n
    n = g.vertex_count
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [m.label if m.label is not None else str(n)]
    return Graph(n + 1, list(g.edges) + [(x, n) for x in m.neighbors], labels)

def components(g):
    """Connected components as ascending vertex lists, ordered by their
    smallest vertex"""
    comps = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    comps.sort()
    return comps

def component_of(g, item):
    """Induced subgraph of the component holding a vertex or an edge, with
    the index map back to g"""
    if isinstance(item, tuple):
        u, v = item
        g.check_vertex(u)
        g.check_vertex(v)
        if not g.has_edge(u, v):
            raise GraphError("edge (%d, %d) not in graph" % (u, v))
        vertex = u
    else:
        vertex = item
        g.check_vertex(vertex)
    comp = nx.node_connected_component(g.to_networkx(), vertex)
    return g.induced_subgraph(comp)

def disjoint_union(g1, g2):
    """g1 followed by g2, whose indices are shifted by len(g1)"""
    n1 = g1.vertex_count
    edges = list(g1.edges) + [(u + n1, v + n1) for u, v in g2.edges]
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = list(g1.labels or default_labels(n1)) + \
                 list(g2.labels or default_labels(g2.vertex_count, n1))
    return Graph(n1 + g2.vertex_count, edges, labels)

class ReoptInstance(object):
    """((x,k), witness or None for bottom, (x_lm, k'))

    problem is a tag object carrying at least a direction attribute (see
    oracles.ProblemKind). The witness itself is checked by
    oracles.validate_witness, not here.
    """
    def __init__(self, original, k, witness, modification, k_prime, problem, direction=None):
        if direction is None:
            direction = getattr(problem, 'direction', MIN)
        if direction not in (MIN, MAX):
            raise GraphError("unknown direction %r" % (direction,))
        if k < 0 or k_prime < 0:
            raise GraphError("parameters must be natural numbers")
        if direction == MIN and k_prime > k:
            raise GraphError("minimization instance needs k' <= k (got k=%d, k'=%d)" % (k, k_prime))
        if direction == MAX and k_prime < k:
            raise GraphError("maximization instance needs k' >= k (got k=%d, k'=%d)" % (k, k_prime))
        check_modification(original, modification)

        self.original = original
        self.k = k
        self.witness = witness
        self.modification = modification
        self.k_prime = k_prime
        self.problem = problem
        self.direction = direction
        self._modified = None

    @property
    def has_witness(self):
        return self.witness is not None

    @property
    def modified(self):
        if self._modified is None:
            self._modified = apply_modification(self.original, self.modification)
        return self._modified

    def __repr__(self):
        return '<ReoptInstance %s %r k=%d k\'=%d witness=%s>' % (
            getattr(self.problem, 'name', self.problem), self.modification,
            self.k, self.k_prime, 'yes' if self.has_witness else 'bottom')

class KernelResult(object):
    """Either Decided or Reduced"""
    is_decided = False
    branch = None

class Decided(KernelResult):
    is_decided = True

    def __init__(self, answer, branch=None):
        self.answer = bool(answer)
        self.branch = branch

    def materialize(self, yes_instance, no_instance):
        """Concrete (graph, parameter) pair standing for this answer"""
        if self.answer:
            return yes_instance
        return no_instance

    def __eq__(self, other):
        return isinstance(other, Decided) and self.answer == other.answer

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.answer)

    def __repr__(self):
        return '<Decided %s%s>' % ('yes' if self.answer else 'no',
                                   ' (%s)' % self.branch if self.branch else '')

class Reduced(KernelResult):
    def __init__(self, graph, parameter, size_bound, branch=None):
        if graph.vertex_count > size_bound:
            raise GraphError("kernel with %d vertices exceeds its bound %d" % (graph.vertex_count, size_bound))
        if parameter < 0:
            raise GraphError("kernel parameter %d is negative" % parameter)
        self.graph = graph
        self.parameter = parameter
        self.size_bound = size_bound
        self.branch = branch

    def __eq__(self, other):
        return isinstance(other, Reduced) and self.graph == other.graph and \
            self.parameter == other.parameter and self.size_bound == other.size_bound

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.graph, self.parameter, self.size_bound))

    def __repr__(self):
        return '<Reduced n=%d k=%d bound=%d%s>' % (self.graph.vertex_count, self.parameter,
                                                   self.size_bound, ' (%s)' % self.branch if self.branch else '')
