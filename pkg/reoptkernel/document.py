"""Instance documents.

The canonical format is a flat JSON object (see InstanceDocument). A
DIMACS-like edge list (``c`` comments, ``p edge n m``, ``e u v`` with
1-based vertices) is accepted for plain graphs.
"""
import json
import logging

from reoptkernel import oracles
from reoptkernel.crown import CrownDecomposition
from reoptkernel.gadgets import GadgetError, SetCoverInstance
from reoptkernel.graph_core import Decided, Digraph, EdgeAdd, EdgeDel, Graph, GraphError, Reduced, \
    ReoptInstance, VertexAdd, VertexDel, check_modification
from reoptkernel.matching import Matching, MatchingError
from reoptkernel.oracles import TreeDecomposition

log = logging.getLogger(__name__)

FORMAT_VERSION = 1

class ParseError(Exception):
    pass

class InstanceDocument(object):
    """Everything one file can carry about an instance"""
    def __init__(self, problem='vertex_cover', graph=None, digraph=None, set_cover=None, k=None,
                 k_prime=None, witness=None, modification=None, crown=None, result=None,
                 tree_decomposition=None, version=FORMAT_VERSION):
        self.version = version
        self.problem = oracles.problem_kind(problem)
        self.graph = graph
        self.digraph = digraph
        self.set_cover = set_cover
        self.k = k
        self.k_prime = k_prime
        self.witness = witness
        self.modification = modification
        self.crown = crown
        self.result = result
        self.tree_decomposition = tree_decomposition

    @property
    def instance(self):
        """The graph, digraph or set system the problem is posed on"""
        if self.problem.shape == oracles.DIGRAPH:
            return self.digraph
        if self.problem.shape == oracles.SET_SYSTEM:
            return self.set_cover
        return self.graph

    def reopt_instance(self):
        if self.modification is None:
            raise ParseError("field 'modification': required for a reoptimization instance")
        if self.k is None:
            raise ParseError("field 'k': required for a reoptimization instance")
        if self.graph is None:
            raise ParseError("field 'n': reoptimization instances are posed on a graph")
        k_prime = self.k if self.k_prime is None else self.k_prime
        witness = self.tree_decomposition if self.problem.name == 'treewidth' else self.witness
        try:
            return ReoptInstance(self.graph, self.k, witness, self.modification, k_prime, self.problem)
        except GraphError as e:
            raise ParseError("reoptimization instance: %s" % e)

    def copy(self, **changes):
        fields = dict(self.__dict__)
        fields['problem'] = self.problem.name
        fields.update(changes)
        return InstanceDocument(**fields)

    def __eq__(self, other):
        return isinstance(other, InstanceDocument) and to_json_object(self) == to_json_object(other)

    def __ne__(self, other):
        return not self.__eq__(other)

def _field(name, message):
    return ParseError("field '%s': %s" % (name, message))

def _natural(data, name, required=False):
    value = data.get(name)
    if value is None:
        if required:
            raise _field(name, "missing")
        return None
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise _field(name, "expected a natural number, got %r" % (value,))
    return value

def _pairs(data, name, n):
    value = data.get(name, [])
    if not isinstance(value, list):
        raise _field(name, "expected a list of pairs")
    pairs = []
    for i, pair in enumerate(value):
        if not isinstance(pair, list) or len(pair) != 2 or \
                not all(isinstance(x, int) and not isinstance(x, bool) for x in pair):
            raise _field(name, "entry %d is not a pair of integers" % i)
        for x in pair:
            if x < 0 or x >= n:
                raise _field(name, "entry %d references vertex %d outside 0..%d" % (i, x, n - 1))
        pairs.append(tuple(pair))
    return pairs

def _vertices(value, name, n):
    if not isinstance(value, list):
        raise _field(name, "expected a list of vertices")
    for x in value:
        if isinstance(x, bool) or not isinstance(x, int) or x < 0 or x >= n:
            raise _field(name, "vertex %r outside 0..%d" % (x, n - 1))
    return list(value)

def _modification(value, n):
    if not isinstance(value, dict):
        raise _field('modification', "expected an object")
    kind = value.get('type')
    try:
        if kind == EdgeAdd.KIND:
            return EdgeAdd(_natural(value, 'u', True), _natural(value, 'v', True))
        if kind == EdgeDel.KIND:
            return EdgeDel(_natural(value, 'u', True), _natural(value, 'v', True))
        if kind == VertexDel.KIND:
            return VertexDel(_natural(value, 'vertex', True))
        if kind == VertexAdd.KIND:
            return VertexAdd(_vertices(value.get('neighbors', []), 'modification.neighbors', n),
                             value.get('label'))
    except ParseError as e:
        raise _field('modification', str(e))
    raise _field('modification', "unknown type %r" % (kind,))

def _labels(value):
    if value is None:
        return None
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise _field('labels', "expected a list of strings")
    seen = set()
    for label in value:
        if label in seen:
            raise _field('labels', "duplicate label %r" % label)
        seen.add(label)
    return value

def _witness(problem, value, n):
    if value is None:
        return None
    if problem.name in ('vertex_cover', 'connected_vertex_cover', 'clique'):
        return sorted(_vertices(value, 'witness', n))
    if problem.name in ('ivst', 'longest_path'):
        return sorted(_pairs({'witness': value}, 'witness', n))
    if problem.name == 'leaf_out_tree':
        return sorted(_pairs({'witness': value}, 'witness', n))
    if problem.name == 'set_cover':
        if not isinstance(value, list) or not all(isinstance(i, int) for i in value):
            raise _field('witness', "expected a list of family indices")
        return sorted(value)
    raise _field('witness', "problem '%s' carries its witness in 'tree_decomposition'" % problem.name)

def _crown(value, n):
    if not isinstance(value, dict):
        raise _field('crown', "expected an object")
    try:
        parts = [_vertices(value.get(key, []), 'crown.' + key, n) for key in ('crown', 'head', 'rest')]
        saturating = Matching(_pairs(value, 'matching', n))
    except MatchingError as e:
        raise _field('crown', str(e))
    return CrownDecomposition(parts[0], parts[1], parts[2], saturating)

def _result(value):
    if not isinstance(value, dict):
        raise _field('result', "expected an object")
    kind = value.get('kind')
    if kind == 'decided':
        answer = value.get('answer')
        if not isinstance(answer, bool):
            raise _field('result', "decided result needs a boolean 'answer'")
        return Decided(answer, value.get('branch'))
    if kind == 'reduced':
        n = _natural(value, 'n', True)
        try:
            graph = Graph(n, _pairs(value, 'edges', n), _labels(value.get('labels')))
            return Reduced(graph, _natural(value, 'k', True), _natural(value, 'size_bound', True),
                           value.get('branch'))
        except (GraphError, ParseError) as e:
            raise _field('result', str(e))
    raise _field('result', "unknown kind %r" % (kind,))

def _tree_decomposition(value, n):
    if not isinstance(value, dict):
        raise _field('tree_decomposition', "expected an object")
    bags = value.get('bags', [])
    if not isinstance(bags, list):
        raise _field('tree_decomposition', "'bags' must be a list")
    bags = [_vertices(b, 'tree_decomposition.bags', n) for b in bags]
    tree = _pairs(value, 'tree', max(len(bags), 1))
    return TreeDecomposition(bags, tree)

def from_json_object(data):
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    version = data.get('version', FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise _field('version', "unsupported version %r (expected %d)" % (version, FORMAT_VERSION))
    try:
        problem = oracles.problem_kind(data.get('problem', 'vertex_cover'))
    except oracles.UnknownProblem as e:
        raise _field('problem', str(e))

    doc = InstanceDocument(problem.name, version=version)
    doc.k = _natural(data, 'k')
    doc.k_prime = _natural(data, 'k_prime')

    n = 0
    if 'set_cover' in data:
        sc = data['set_cover']
        if not isinstance(sc, dict):
            raise _field('set_cover', "expected an object")
        try:
            doc.set_cover = SetCoverInstance(_natural(sc, 'universe', True),
                                             [list(f) for f in sc.get('family', [])],
                                             doc.k if doc.k is not None else 0)
        except (GadgetError, TypeError) as e:
            raise _field('set_cover', str(e))
    if 'n' in data or problem.shape != oracles.SET_SYSTEM:
        n = _natural(data, 'n', True)
        try:
            if problem.shape == oracles.DIGRAPH:
                doc.digraph = Digraph(n, _pairs(data, 'arcs', n))
            else:
                doc.graph = Graph(n, _pairs(data, 'edges', n), _labels(data.get('labels')))
        except GraphError as e:
            raise _field('edges', str(e))

    doc.witness = _witness(problem, data.get('witness'), n)
    if data.get('modification') is not None:
        doc.modification = _modification(data['modification'], n)
        if doc.graph is not None:
            try:
                check_modification(doc.graph, doc.modification)
            except GraphError as e:
                raise _field('modification', str(e))
    if data.get('crown') is not None:
        doc.crown = _crown(data['crown'], n)
    if data.get('result') is not None:
        doc.result = _result(data['result'])
    if data.get('tree_decomposition') is not None:
        doc.tree_decomposition = _tree_decomposition(data['tree_decomposition'], n)
    return doc

def parse_dimacs(text):
    """Graph from a DIMACS-like edge list"""
    n = m = header = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0] == 'c':
            continue
        try:
            if fields[0] == 'p':
                if len(fields) != 4 or fields[1] not in ('edge', 'col'):
                    raise ParseError("line %d: expected 'p edge <n> <m>'" % lineno)
                n, m, header = int(fields[2]), int(fields[3]), lineno
            elif fields[0] == 'e':
                if n is None:
                    raise ParseError("line %d: edge before the 'p' line" % lineno)
                if len(fields) != 3:
                    raise ParseError("line %d: expected 'e <u> <v>'" % lineno)
                u, v = int(fields[1]), int(fields[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise ParseError("line %d: vertex out of range 1..%d" % (lineno, n))
                edges.append((u - 1, v - 1))
            else:
                raise ParseError("line %d: unknown line type '%s'" % (lineno, fields[0]))
        except ValueError:
            raise ParseError("line %d: expected integers" % lineno)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    if len(edges) != m:
        raise ParseError("line %d: header announces %d edges, found %d" % (header, m, len(edges)))
    try:
        return Graph(n, edges)
    except GraphError as e:
        raise ParseError(str(e))

def parse_instance(text):
    """InstanceDocument from either supported format"""
    stripped = text.lstrip()
    if stripped.startswith('{'):
        try:
            data = json.loads(text)
        except ValueError as e:
            raise ParseError("invalid JSON: %s" % e)
        return from_json_object(data)
    return InstanceDocument('vertex_cover', graph=parse_dimacs(text))

def _modification_object(m):
    out = {'type': m.KIND}
    if isinstance(m, (EdgeAdd, EdgeDel)):
        out['u'], out['v'] = m.u, m.v
    elif isinstance(m, VertexDel):
        out['vertex'] = m.vertex
    else:
        out['neighbors'] = sorted(m.neighbors)
        if m.label is not None:
            out['label'] = m.label
    return out

def result_object(result):
    if result.is_decided:
        out = {'kind': 'decided', 'answer': result.answer}
    else:
        out = {'kind': 'reduced',
               'n': result.graph.vertex_count,
               'edges': [list(e) for e in result.graph.sorted_edges()],
               'k': result.parameter,
               'size_bound': result.size_bound}
        if result.graph.labels is not None:
            out['labels'] = list(result.graph.labels)
    if result.branch is not None:
        out['branch'] = result.branch
    return out

def _jsonable(witness):
    if witness is None:
        return None
    return [list(x) if isinstance(x, tuple) else x for x in witness]

def to_json_object(doc):
    out = {'version': doc.version, 'problem': doc.problem.name}
    if doc.graph is not None:
        out['n'] = doc.graph.vertex_count
        out['edges'] = [list(e) for e in doc.graph.sorted_edges()]
        if doc.graph.labels is not None:
            out['labels'] = list(doc.graph.labels)
    if doc.digraph is not None:
        out['n'] = doc.digraph.vertex_count
        out['arcs'] = [list(a) for a in doc.digraph.sorted_arcs()]
    if doc.set_cover is not None:
        out['set_cover'] = {'universe': doc.set_cover.universe_size,
                            'family': [sorted(f) for f in doc.set_cover.family]}
    if doc.k is not None:
        out['k'] = doc.k
    if doc.k_prime is not None:
        out['k_prime'] = doc.k_prime
    if doc.witness is not None:
        out['witness'] = _jsonable(doc.witness)
    if doc.modification is not None:
        out['modification'] = _modification_object(doc.modification)
    if doc.crown is not None:
        out['crown'] = {'crown': sorted(doc.crown.crown), 'head': sorted(doc.crown.head),
                        'rest': sorted(doc.crown.rest),
                        'matching': [list(p) for p in doc.crown.matching.pairs]}
    if doc.result is not None:
        out['result'] = result_object(doc.result)
    if doc.tree_decomposition is not None:
        out['tree_decomposition'] = {'bags': [sorted(b) for b in doc.tree_decomposition.bags],
                                     'tree': [list(e) for e in doc.tree_decomposition.tree_edges]}
    return out

def dumps(obj):
    """Canonical JSON text: sorted keys, fixed indentation"""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(',', ': ')) + '\n'

def emit_instance(doc):
    return dumps(to_json_object(doc))

def emit_dimacs(graph, comment=None):
    lines = []
    if comment:
        lines.extend('c ' + line for line in comment.splitlines())
    lines.append('p edge %d %d' % (graph.vertex_count, graph.edge_count()))
    lines.extend('e %d %d' % (u + 1, v + 1) for u, v in graph.sorted_edges())
    return '\n'.join(lines) + '\n'
