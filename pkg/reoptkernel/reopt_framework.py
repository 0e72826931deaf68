"""Reoptimization kernels for problems that compose over disjoint unions.

For an OR-compositional problem a graph is a yes-instance iff one of its
components is; for AND iff all of them are. A local modification only
changes the components it touches (its environment), so the answer on the
modified graph follows from the old answer plus a kernel of the
environment, or directly from the old answer when the problem is closed
under the modification.
"""
import collections
import logging

import networkx as nx

from reoptkernel import oracles
from reoptkernel.graph_core import Decided, EdgeAdd, EdgeDel, Graph, Reduced, VertexAdd, VertexDel, \
    apply_modification, check_modification, component_of, disjoint_union, from_networkx
from reoptkernel.vc_kernels import KernelError

log = logging.getLogger(__name__)

MAX_ENVIRONMENT_COMPONENTS = 8

MONOTONE = 'monotone'
COMONOTONE = 'comonotone'
NEITHER = 'neither'
OR = 'or'
AND = 'and'

class SpecModificationMismatch(KernelError):
    """The problem's closure properties do not cover this modification"""
    pass

class DegreeTooHigh(KernelError):
    """A vertex deletion splits the graph into too many components"""
    pass

class ProblemSpec(object):
    """A problem together with the structural properties the kernels rely on"""
    def __init__(self, kind, monotonicity, compositionality, oracle=None):
        self.kind = oracles.problem_kind(kind)
        if monotonicity not in (MONOTONE, COMONOTONE, NEITHER):
            raise ValueError("unknown monotonicity %r" % (monotonicity,))
        if compositionality not in (OR, AND, NEITHER):
            raise ValueError("unknown compositionality %r" % (compositionality,))
        self.monotonicity = monotonicity
        self.compositionality = compositionality
        self._oracle = oracle

    @property
    def name(self):
        return self.kind.name

    @property
    def direction(self):
        return self.kind.direction

    def verify(self, graph, k, candidate):
        return oracles.verify_solution(self.kind, graph, candidate, k)

    def value(self, graph):
        if self._oracle is not None:
            return self._oracle(graph)
        return oracles.solve_exact(self.kind, graph).value

    def is_member(self, graph, k):
        return oracles.meets(self.kind, self.value(graph), k)

    def declared(self, monotonicity=None, compositionality=None):
        """Copy with overridden labels"""
        return ProblemSpec(self.kind, monotonicity or self.monotonicity,
                           compositionality or self.compositionality, self._oracle)

    def __repr__(self):
        return '<ProblemSpec %s %s %s>' % (self.name, self.compositionality, self.monotonicity)

REGISTRY = collections.OrderedDict((s.name, s) for s in [
    ProblemSpec(oracles.IVST, COMONOTONE, OR),
    ProblemSpec(oracles.LONGEST_PATH, COMONOTONE, OR),
    ProblemSpec(oracles.CLIQUE, COMONOTONE, OR),
    ProblemSpec(oracles.TREEWIDTH, MONOTONE, AND),
    ProblemSpec(oracles.VERTEX_COVER, MONOTONE, NEITHER),
])

def problem_spec(name):
    try:
        return REGISTRY[oracles.problem_kind(name).name]
    except KeyError:
        raise SpecModificationMismatch("no composition properties known for '%s'" % name)

class ComponentKernelizer(object):
    """Kernel for a single connected component"""
    def __init__(self, name):
        self.name = name

    def size_bound(self, k):
        """Must be overriden by subclasses"""
        raise NotImplementedError()

    def kernelize(self, graph, k):
        """Must be overriden by subclasses. Returns KernelResult"""
        raise NotImplementedError()

class ExactComponentKernelizer(ComponentKernelizer):
    """Decides each component with the exact oracle. Not polynomial, but
    always correct at the sizes the oracles accept."""
    def __init__(self, spec):
        super(ExactComponentKernelizer, self).__init__('exact-' + spec.name)
        self.spec = spec

    def size_bound(self, k):
        return 0

    def kernelize(self, graph, k):
        return Decided(self.spec.is_member(graph, k), 'component-oracle')

def environment(g_before, m):
    """Components of the modified graph touched by m, each as an induced
    subgraph with its index map into the modified graph"""
    check_modification(g_before, m)
    g_after = apply_modification(g_before, m)
    if isinstance(m, EdgeAdd):
        return [component_of(g_after, m.edge())]
    if isinstance(m, VertexAdd):
        return [component_of(g_after, g_before.vertex_count)]
    if isinstance(m, EdgeDel):
        anchors = [m.u, m.v]
    else:
        anchors = [x - 1 if x > m.vertex else x for x in sorted(g_before.neighbors(m.vertex))]
    found = []
    seen = set()
    for x in anchors:
        if x in seen:
            continue
        sub, index_map = component_of(g_after, x)
        seen.update(index_map)
        found.append((sub, index_map))
    found.sort(key=lambda item: item[1][0])
    return found

def combine(results, mode, branch='environment'):
    """Answer for a disjoint union from the answers of its parts"""
    decisive = mode == OR
    remaining = []
    for r in results:
        if r.is_decided:
            if r.answer == decisive:
                return Decided(decisive, branch)
        else:
            remaining.append(r)
    if not remaining:
        return Decided(not decisive, branch)
    parameters = set(r.parameter for r in remaining)
    if len(parameters) != 1:
        raise KernelError("component kernels disagree on the parameter: %r" % sorted(parameters))
    graph = Graph(0)
    for r in remaining:
        graph = disjoint_union(graph, r.graph)
    return Reduced(graph, parameters.pop(), sum(r.size_bound for r in remaining), branch)

def _require_same_parameter(inst):
    if inst.k != inst.k_prime:
        raise SpecModificationMismatch("branches using the witness need k' = k (got k=%d, k'=%d)" % (
            inst.k, inst.k_prime))

def compositional_reopt_kernelize(inst, spec, ck=None, max_components=MAX_ENVIRONMENT_COMPONENTS):
    """Kernel for the modified instance of an OR- or AND-compositional problem.

    OR: a witness answers yes outright when the problem is closed under the
    modification; bottom means every old component was a no-instance, so
    only the environment matters. AND mirrors this with yes and no swapped.
    """
    if spec.compositionality == NEITHER:
        raise SpecModificationMismatch("'%s' is not compositional" % spec.name)
    m = inst.modification
    addition = m.IS_ADDITION
    closure = COMONOTONE if addition else MONOTONE

    if spec.compositionality == OR and inst.has_witness:
        if spec.monotonicity != closure:
            raise SpecModificationMismatch("OR-compositional '%s' needs to be %s for %s with a witness" % (
                spec.name, closure, m.KIND))
        _require_same_parameter(inst)
        return Decided(True, 'witness-yes')

    if spec.compositionality == AND and not inst.has_witness:
        closure = MONOTONE if addition else COMONOTONE
        if spec.monotonicity != closure:
            raise SpecModificationMismatch("AND-compositional '%s' needs to be %s for %s without a witness" % (
                spec.name, closure, m.KIND))
        return Decided(False, 'bottom-no')

    if spec.compositionality == AND:
        _require_same_parameter(inst)

    if ck is None:
        ck = ExactComponentKernelizer(spec)
    env = environment(inst.original, m)
    if isinstance(m, VertexDel) and len(env) > max_components:
        raise DegreeTooHigh("deleting vertex %d leaves %d environment components (limit %d)" % (
            m.vertex, len(env), max_components))
    log.debug("%s: kernelizing %d environment component(s) with %s", spec.name, len(env), ck.name)
    return combine([ck.kernelize(sub, inst.k_prime) for sub, _ in env], spec.compositionality)

def ivst_reopt_kernelize_eplus(inst, ck=None, original_kernel=None):
    """Kernel for an IVST instance after an edge addition.

    With original_kernel, a kernel of the original instance, the result is
    its disjoint union with the environment kernel.
    """
    if inst.problem is not oracles.IVST and getattr(inst.problem, 'name', None) != 'ivst':
        raise SpecModificationMismatch("expected an IVST instance, got %r" % (inst.problem,))
    if not isinstance(inst.modification, EdgeAdd):
        raise SpecModificationMismatch("expected an edge addition, got %r" % (inst.modification,))
    spec = REGISTRY['ivst']
    if inst.has_witness:
        _require_same_parameter(inst)
        return Decided(True, 'witness-yes')
    if ck is None:
        ck = ExactComponentKernelizer(spec)
    sub, _ = environment(inst.original, inst.modification)[0]
    result = ck.kernelize(sub, inst.k_prime)
    if original_kernel is None:
        return result
    return combine([original_kernel, result], OR, 'environment+original')

Counterexample = collections.namedtuple('Counterexample', ['first', 'second', 'k'])

def small_graphs(size_bound):
    """Every graph on at most size_bound vertices, up to isomorphism"""
    if size_bound > 7:
        raise ValueError("the graph atlas only reaches 7 vertices")
    return [from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() <= size_bound]

def check_composition(spec, mode, size_bound):
    """First counterexample to OR/AND compositionality over all pairs of
    graphs with at most size_bound vertices, or None when it holds"""
    graphs = small_graphs(size_bound)
    values = [spec.value(h) for h in graphs]
    for i, g1 in enumerate(graphs):
        for j, g2 in enumerate(graphs):
            union_value = spec.value(disjoint_union(g1, g2))
            for k in range(size_bound + 1):
                a = oracles.meets(spec.kind, values[i], k)
                b = oracles.meets(spec.kind, values[j], k)
                expected = (a or b) if mode == OR else (a and b)
                if oracles.meets(spec.kind, union_value, k) != expected:
                    return Counterexample(g1, g2, k)
    return None

def _closure_steps(g, closure):
    if closure == MONOTONE:
        for e in g.sorted_edges():
            yield apply_modification(g, EdgeDel(*e))
        for v in g.vertices():
            yield apply_modification(g, VertexDel(v))
    else:
        for u in g.vertices():
            for v in range(u + 1, g.vertex_count):
                if not g.has_edge(u, v):
                    yield apply_modification(g, EdgeAdd(u, v))
        yield apply_modification(g, VertexAdd([]))

def check_monotonicity(spec, closure, size_bound):
    """First yes-instance that a single deletion (MONOTONE) or addition
    (COMONOTONE) turns into a no-instance, or None"""
    for g in small_graphs(size_bound):
        value = spec.value(g)
        if value is None:
            continue
        for h in _closure_steps(g, closure):
            if not oracles.meets(spec.kind, spec.value(h), value):
                return Counterexample(g, h, value)
    return None
