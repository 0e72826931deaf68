"""Crown decompositions and the crown lemma"""
import logging

from reoptkernel import matching

log = logging.getLogger(__name__)

class CrownError(Exception):
    pass

class PreconditionViolated(CrownError):
    pass

class InternalInvariantBroken(CrownError):
    """A construction produced something it is proven never to produce"""
    pass

class InvalidCrown(CrownError):
    def __init__(self, violations):
        super(InvalidCrown, self).__init__("; ".join(violations))
        self.violations = violations

class CrownDecomposition(object):
    """Partition (crown, head, rest) with a matching saturating the head"""
    def __init__(self, crown, head, rest, saturating):
        self.crown = frozenset(crown)
        self.head = frozenset(head)
        self.rest = frozenset(rest)
        self.matching = saturating

    def __repr__(self):
        return '<CrownDecomposition C=%r H=%r R=%r>' % (
            sorted(self.crown), sorted(self.head), sorted(self.rest))

def validate_crown(g, cd):
    """Every violated clause of the crown definition, as messages. An empty
    list means cd is a crown decomposition of g."""
    violations = []
    C, H, R = cd.crown, cd.head, cd.rest

    if not C:
        violations.append("C is empty")
    if not g.is_independent(C):
        violations.append("C not independent")
    for u, v in g.sorted_edges():
        if (u in C and v in R) or (u in R and v in C):
            violations.append("edge between C and R (%d, %d)" % (u, v))
            break

    everything = set(g.vertices())
    if C & H or C & R or H & R or (C | H | R) != everything:
        violations.append("C, H, R do not partition V")

    m = cd.matching
    if not m.is_valid_for(g):
        violations.append("matching uses a non-edge")
    for u, v in m.pairs:
        if not ((u in C and v in H) or (u in H and v in C)):
            violations.append("matching edge (%d, %d) not between C and H" % (u, v))
            break
    unsaturated = [h for h in sorted(H) if not m.is_matched(h)]
    if unsaturated or len(m) != len(H):
        violations.append("head not saturated (|M|=%d, |H|=%d)" % (len(m), len(H)))
    return violations

def is_crown(g, cd):
    return not validate_crown(g, cd)

def crown_or_matching(g, k):
    """Either a matching of exactly k+1 edges or a crown decomposition of g.

    g must have no isolated vertices and at least 3k+1 vertices.
    """
    n = g.vertex_count
    isolated = g.isolated_vertices()
    if isolated:
        raise PreconditionViolated("isolated vertex %d" % isolated[0])
    if n < 3 * k + 1:
        raise PreconditionViolated("too few vertices: %d < 3k+1 = %d" % (n, 3 * k + 1))

    m1 = matching.greedy_maximal_matching(g)
    if len(m1) >= k + 1:
        return matching.Matching(m1.pairs[:k + 1])

    # V(M1) covers every edge, so the rest is independent
    covered = m1.matched_vertices()
    independent = set(g.vertices()) - covered
    m2 = matching.maximum_bipartite_matching(g, covered, independent)
    if len(m2) >= k + 1:
        return matching.Matching(m2.pairs[:k + 1])

    exposed = set(v for v in independent if not m2.is_matched(v))
    if not exposed:
        raise InternalInvariantBroken("no unmatched independent vertex with |M2| <= k and n >= 3k+1")

    head, reached = matching.alternating_reachability(g, covered, independent, m2)
    if any(not m2.is_matched(h) for h in head):
        raise InternalInvariantBroken("augmenting path left in a maximum matching")

    crown = exposed | reached
    rest = set(g.vertices()) - crown - head
    absorbed = set(v for v in rest if g.neighbors(v) <= head)
    crown |= absorbed
    rest -= absorbed

    cd = CrownDecomposition(crown, head, rest, m2.restricted_to(crown | head))
    log.debug("crown lemma: |C|=%d |H|=%d |R|=%d", len(crown), len(head), len(rest))
    return cd
