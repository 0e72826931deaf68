"""Vertex Cover kernels.

``vc_kernelize_3k`` is the crown-lemma kernel for plain (G, k) instances.
``reopt_vc_kernelize_2k`` kernelizes the instance obtained by adding one
edge to a graph whose vertex cover A is known; it splits the graph around
a maximum matching between A and the independent rest B and picks a crown
decomposition of G+e depending on where the new edge lands.
"""
import logging

from reoptkernel import matching
from reoptkernel.crown import CrownDecomposition, InvalidCrown, InternalInvariantBroken, \
    crown_or_matching, validate_crown
from reoptkernel.graph_core import Decided, EdgeAdd, Graph, Reduced, edge_key

log = logging.getLogger(__name__)

MAX_REMATCHES = 2

class KernelError(Exception):
    pass

class WitnessNotACover(KernelError):
    pass

class ModificationMismatch(KernelError):
    pass

class NotACover(KernelError):
    pass

UNMATCHED = 'B_unmatched'
B1 = 'B1'
B2 = 'B2'
B3 = 'B3'

class ReoptPartition(object):
    """Split of a graph around a vertex cover and a maximum matching.

    A1 holds the matched cover vertices reachable by alternating paths from
    the unmatched independent vertices, A2 those reachable from the
    unmatched cover vertices, A3 the remaining matched ones; B1, B2, B3
    are their partners.
    """
    def __init__(self, cover, independent, saturating, a_unmatched, b_unmatched, a1, b1, a2, b2, a3, b3):
        self.cover = frozenset(cover)
        self.independent = frozenset(independent)
        self.matching = saturating
        self.a_unmatched = frozenset(a_unmatched)
        self.b_unmatched = frozenset(b_unmatched)
        self.a1, self.b1 = frozenset(a1), frozenset(b1)
        self.a2, self.b2 = frozenset(a2), frozenset(b2)
        self.a3, self.b3 = frozenset(a3), frozenset(b3)

    def classify(self, b):
        if b in self.b_unmatched:
            return UNMATCHED
        if b in self.b1:
            return B1
        if b in self.b2:
            return B2
        if b in self.b3:
            return B3
        raise KeyError(b)

    def crown1(self):
        crown = self.b_unmatched | self.b1 | self.b3
        head = self.a1 | self.a3
        rest = self.a_unmatched | self.a2 | self.b2
        return CrownDecomposition(crown, head, rest, self.matching.restricted_to(crown | head))

    def crown2(self):
        crown = self.b_unmatched | self.b1
        head = self.a1
        rest = (self.cover | self.independent) - crown - head
        return CrownDecomposition(crown, head, rest, self.matching.restricted_to(crown | head))

    def __repr__(self):
        return '<ReoptPartition A_unmatched=%r B_unmatched=%r A1=%r A2=%r A3=%r>' % (
            sorted(self.a_unmatched), sorted(self.b_unmatched),
            sorted(self.a1), sorted(self.a2), sorted(self.a3))

def build_reopt_partition(g, cover, saturating=None):
    """Partition g around the vertex cover. Uses the given maximum matching
    between cover and the rest, or computes one."""
    cover = set(cover)
    if not g.is_vertex_cover(cover):
        raise NotACover("vertex set %r does not cover every edge" % sorted(cover))
    independent = set(g.vertices()) - cover
    m = saturating
    if m is None:
        m = matching.maximum_bipartite_matching(g, cover, independent)

    a_unmatched = set(a for a in cover if not m.is_matched(a))
    b_unmatched = set(b for b in independent if not m.is_matched(b))
    a1, b1 = matching.alternating_reachability(g, cover, independent, m, matching.FROM_UNMATCHED_B)
    a2, b2 = matching.alternating_reachability(g, cover, independent, m, matching.FROM_UNMATCHED_A)
    if a1 & a2 or a1 & a_unmatched or b2 & b_unmatched:
        raise InternalInvariantBroken("matching between cover and rest is not maximum")
    a3 = set(a for a in cover if m.is_matched(a)) - a1 - a2
    b3 = set(m.partner(a) for a in a3)
    return ReoptPartition(cover, independent, m, a_unmatched, b_unmatched, a1, b1, a2, b2, a3, b3)

def crown_reduce_vc(g, k, cd):
    """(G - (H u C), k - |H|); the parameter may come out negative"""
    violations = validate_crown(g, cd)
    if violations:
        raise InvalidCrown(violations)
    return g.induced_subgraph(cd.rest)[0], k - len(cd.head)

def strip_isolated(g):
    return g.without_vertices(g.isolated_vertices())

def vc_kernelize_3k(g, k):
    """Kernel with at most 3k vertices, or a decision"""
    while True:
        g = strip_isolated(g)[0]
        if k < 0:
            return Decided(False, 'classic')
        if g.vertex_count == 0:
            return Decided(True, 'classic')
        if g.vertex_count <= 3 * k:
            return Reduced(g, k, 3 * k, 'classic')
        found = crown_or_matching(g, k)
        if isinstance(found, matching.Matching):
            log.debug("matching of size %d exceeds k=%d", len(found), k)
            return Decided(False, 'classic')
        g, k = crown_reduce_vc(g, k, found)

def _finish(g, k, cd, size_bound, branch):
    """Crown-reduce g with cd unless its crown is empty"""
    if cd.crown:
        residual, k = crown_reduce_vc(g, k, cd)
    else:
        residual = g.induced_subgraph(cd.rest)[0]
    if k < 0:
        return Decided(False, branch)
    if residual.vertex_count == 0:
        return Decided(True, branch)
    return Reduced(residual, k, size_bound, branch)

def cover_crown_reduce(g, cover, k, branch='cover'):
    """Crown reduction driven by a known vertex cover of g. The kernel has at
    most 2|cover| vertices."""
    g, index_map = strip_isolated(g)
    position = dict((v, i) for i, v in enumerate(index_map))
    cover = set(position[a] for a in cover if a in position)
    if k < 0:
        return Decided(False, branch)
    if g.vertex_count == 0:
        return Decided(True, branch)
    part = build_reopt_partition(g, cover)
    return _finish(g, k, part.crown2(), 2 * len(cover), branch)

def _check_witness(inst):
    if not isinstance(inst.modification, EdgeAdd):
        raise ModificationMismatch("expected an edge addition, got %r" % (inst.modification,))
    if getattr(inst.problem, 'name', inst.problem) != 'vertex_cover':
        raise ModificationMismatch("expected a vertex cover instance, got %r" % (inst.problem,))
    if inst.witness is None:
        raise WitnessNotACover("no vertex cover given for the original graph")
    cover = set(inst.witness)
    if not inst.original.is_vertex_cover(cover) or len(cover) > inst.k:
        raise WitnessNotACover("witness %r is not a vertex cover of size <= %d" % (sorted(cover), inst.k))
    return cover

def reopt_vc_kernelize_2k(inst):
    """Kernel for (G+e, k') given a vertex cover A of G with |A| <= k.

    The kernel has at most 2|A| vertices, except in the branch where the
    only alternating path out of one endpoint runs into the other one,
    which allows 2|A|+1.
    """
    cover = _check_witness(inst)
    original = inst.original
    modified = inst.modified
    u, v = inst.modification.edge()
    k_prime = inst.k_prime

    if u in cover or v in cover:
        if len(cover) <= k_prime:
            return Decided(True, 'trivial')
        return cover_crown_reduce(modified, cover, k_prime, 'trivial')

    if original.degree(u) == 0 or original.degree(v) == 0:
        # the new edge hangs a leaf off its other endpoint
        support = v if original.degree(u) == 0 else u
        if k_prime == 0:
            return Decided(False, 'isolated-leaf')
        remainder, index_map = modified.without_vertices([support])
        remaining_cover = set(i for i, x in enumerate(index_map) if x in cover)
        return cover_crown_reduce(remainder, remaining_cover, k_prime - 1, 'isolated-leaf')

    g, index_map = strip_isolated(original)
    position = dict((x, i) for i, x in enumerate(index_map))
    cover = set(position[a] for a in cover if a in position)
    u, v = position[u], position[v]
    g_plus = Graph(g.vertex_count, list(g.edges) + [edge_key(u, v)], g.labels)
    return _reopt_dispatch(g, g_plus, cover, u, v, k_prime)

def _reopt_dispatch(g, g_plus, cover, u, v, k_prime):
    bound = 2 * len(cover)
    independent = set(g.vertices()) - cover
    part = build_reopt_partition(g, cover)
    _check_partition_sizes(g, cover, part)

    branch = None
    rematches = 0
    while True:
        cu, cv = part.classify(u), part.classify(v)
        case = _which_case(cu, cv)
        if branch is None:
            branch = case
        log.debug("edge (%d, %d) lands in %s/%s: %s", u, v, cu, cv, case)

        if case == 'case1':
            cd = part.crown2()
            break

        if case == 'case2':
            cd1 = part.crown1()
            cd = CrownDecomposition(cd1.crown - set([u]), cd1.head | set([u]), cd1.rest,
                                    cd1.matching.with_pair(u, v))
            break

        if case == 'case3':
            x = u if cu == UNMATCHED else v
            cd2 = part.crown2()
            cd = CrownDecomposition(cd2.crown - set([x]), cd2.head, cd2.rest | set([x]), cd2.matching)
            break

        if rematches >= MAX_REMATCHES:
            raise InternalInvariantBroken("more than %d rematches for edge (%d, %d)" % (MAX_REMATCHES, u, v))

        if case == 'case4':
            x, y = (u, v) if cu == B1 else (v, u)
            m = matching.rematch_to_expose(g, cover, independent, part.matching, x, forbidden=y)
            if m is None:
                raise InternalInvariantBroken("no alternating path out of B1 vertex %d" % x)
        else:
            # case5
            if cu == B1 and cv == B1:
                x, y = v, u
                m = matching.rematch_to_expose(g, cover, independent, part.matching, x, forbidden=y)
                if m is None:
                    raise InternalInvariantBroken("no alternating path out of B1 vertex %d" % x)
            else:
                x, y = (u, v) if cu == B1 else (v, u)
                m = matching.rematch_to_expose(g, cover, independent, part.matching, x, forbidden=y)
                if m is None:
                    cd = _degenerate_crown(g, cover, independent, part, y)
                    bound += 1
                    branch = 'case5-degenerate'
                    log.warning("edge (%d, %d): every alternating path from %d ends in %d, "
                                "kernel bound relaxed to %d", u, v, x, y, bound)
                    break
        rematches += 1
        part = build_reopt_partition(g, cover, m)

    if cd.crown:
        violations = validate_crown(g_plus, cd)
        if violations:
            raise InvalidCrown(violations)
    return _finish(g_plus, k_prime, cd, bound, branch)

def _which_case(cu, cv):
    classes = set([cu, cv])
    if classes <= set([B2, B3]):
        return 'case1'
    if classes == set([UNMATCHED]):
        return 'case2'
    if UNMATCHED in classes and classes & set([B2, B3]):
        return 'case3'
    if B1 in classes and classes & set([B2, B3]):
        return 'case4'
    return 'case5'

def _degenerate_crown(g, cover, independent, part, y):
    """Crown of G+e when the only exit of the B1 endpoint is y"""
    a1_kept, b1_kept = matching.alternating_reachability(
        g, cover, independent, part.matching, matching.FROM_UNMATCHED_B, exclude=[y])
    b_lost = part.b1 - b1_kept
    a_lost = set(part.matching.partner(b) for b in b_lost)
    cd2 = part.crown2()
    crown = cd2.crown - b_lost - set([y])
    head = cd2.head - a_lost
    rest = cd2.rest | b_lost | a_lost | set([y])
    return CrownDecomposition(crown, head, rest, part.matching.restricted_to(crown | head))

def _check_partition_sizes(g, cover, part):
    if not part.b_unmatched:
        return
    cd2 = part.crown2()
    n = g.vertex_count
    if len(cd2.rest) > 2 * len(cover) - 2 or len(cd2.crown) < n - 2 * len(cover) + 1:
        raise InternalInvariantBroken("partition sizes |R2|=%d |C2|=%d out of range for n=%d |A|=%d" % (
            len(cd2.rest), len(cd2.crown), n, len(cover)))
