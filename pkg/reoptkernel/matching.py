"""Bipartite matchings and alternating paths.

All routines only look at edges running between the two sides; edges with
both ends on one side may exist in the host graph and are ignored. Vertices
and neighbours are always scanned in ascending order so every result is
reproducible.
"""
import collections
import logging

from reoptkernel.graph_core import edge_key

log = logging.getLogger(__name__)

FROM_UNMATCHED_B = 'B'
FROM_UNMATCHED_A = 'A'

class MatchingError(Exception):
    pass

class SidesOverlap(MatchingError):
    """The two sides of a bipartition share a vertex"""
    pass

class TargetUnmatched(MatchingError):
    """The vertex to expose is not matched"""
    pass

class Matching(object):
    """A set of pairwise vertex-disjoint edges"""
    def __init__(self, pairs=()):
        partner = {}
        for u, v in pairs:
            if u == v or u in partner or v in partner:
                raise MatchingError("pair (%d, %d) is not vertex-disjoint from the others" % (u, v))
            partner[u] = v
            partner[v] = u
        self._partner = partner

    @property
    def pairs(self):
        return sorted(set(edge_key(u, v) for u, v in self._partner.items()))

    def __len__(self):
        return len(self._partner) // 2

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, edge):
        u, v = edge
        return self._partner.get(u) == v

    def partner(self, v):
        return self._partner.get(v)

    def is_matched(self, v):
        return v in self._partner

    def matched_vertices(self):
        return set(self._partner)

    def restricted_to(self, vertices):
        vertices = set(vertices)
        return Matching(p for p in self.pairs if p[0] in vertices and p[1] in vertices)

    def with_pair(self, u, v):
        return Matching(self.pairs + [(u, v)])

    def is_valid_for(self, g):
        return all(g.has_edge(u, v) for u, v in self.pairs)

    def __eq__(self, other):
        return isinstance(other, Matching) and self._partner == other._partner

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(self.pairs))

    def __repr__(self):
        return '<Matching %r>' % (self.pairs,)

def _check_sides(sideA, sideB):
    sideA, sideB = set(sideA), set(sideB)
    common = sideA & sideB
    if common:
        raise SidesOverlap("vertices %r lie on both sides" % sorted(common))
    return sideA, sideB

def greedy_maximal_matching(g, vertices=None):
    """Maximal matching taking edges in ascending (min, max) order"""
    matched = set()
    pairs = []
    for u, v in g.sorted_edges():
        if vertices is not None and (u not in vertices or v not in vertices):
            continue
        if u in matched or v in matched:
            continue
        matched.update((u, v))
        pairs.append((u, v))
    return Matching(pairs)

def maximum_bipartite_matching(g, sideA, sideB):
    """Maximum matching between sideA and sideB by repeated augmenting-path
    search.

    Each A vertex, in ascending order, tries its B neighbours in ascending
    order and displaces an earlier match whenever that match can be moved
    elsewhere.

    Parameters
    ----------
    g : graph_core.Graph
    sideA, sideB : iterable of int
        Disjoint vertex sets.

    Returns
    -------
    Matching
    """
    sideA, sideB = _check_sides(sideA, sideB)
    match_of_b = {}

    def augment(a, seen):
        for b in sorted(g.neighbors(a)):
            if b not in sideB or b in seen:
                continue
            seen.add(b)
            if b not in match_of_b or augment(match_of_b[b], seen):
                match_of_b[b] = a
                return True
        return False

    for a in sorted(sideA):
        augment(a, set())

    return Matching((a, b) for b, a in match_of_b.items())

def alternating_reachability(g, sideA, sideB, m, start=FROM_UNMATCHED_B, exclude=()):
    """Breadth-first closure of the alternating paths starting at the
    unmatched vertices of one side.

    Paths leave the starting side along non-matching edges and come back
    along matching edges. Vertices in exclude are treated as absent from
    the graph.

    Returns (reached A vertices, reached B vertices); the unmatched starting
    vertices themselves are not reported.
    """
    sideA, sideB = _check_sides(sideA, sideB)
    excluded = set(exclude)
    if start == FROM_UNMATCHED_B:
        own, other = sideB, sideA
    elif start == FROM_UNMATCHED_A:
        own, other = sideA, sideB
    else:
        raise ValueError("unknown start side %r" % (start,))

    sources = sorted(x for x in own if not m.is_matched(x) and x not in excluded)
    reached_own = set()
    reached_other = set()
    queue = collections.deque(sources)
    visited = set(sources)
    while queue:
        x = queue.popleft()
        for y in sorted(g.neighbors(x)):
            if y not in other or y in excluded or y in reached_other:
                continue
            if m.partner(x) == y:
                continue
            reached_other.add(y)
            z = m.partner(y)
            if z is None or z in excluded or z in visited:
                continue
            visited.add(z)
            reached_own.add(z)
            queue.append(z)

    if start == FROM_UNMATCHED_B:
        return reached_other, reached_own
    return reached_own, reached_other

def rematch_to_expose(g, sideA, sideB, m, target, forbidden=None):
    """Matching of the same size in which target is unmatched.

    Flips the shortest alternating path that starts at target's partner and
    ends in an unmatched B vertex other than forbidden. Returns None when no
    such path exists.
    """
    sideA, sideB = _check_sides(sideA, sideB)
    if target not in sideB or not m.is_matched(target):
        raise TargetUnmatched("vertex %d is not a matched B vertex" % target)

    start = m.partner(target)
    parent = {start: None}
    queue = collections.deque([start])
    seen_b = set([target])
    end = None
    while queue and end is None:
        a = queue.popleft()
        for b in sorted(g.neighbors(a)):
            if b not in sideB or b in seen_b:
                continue
            seen_b.add(b)
            nxt = m.partner(b)
            if nxt is None:
                if b == forbidden:
                    continue
                parent[b] = a
                end = b
                break
            if nxt in parent:
                continue
            parent[b] = a
            parent[nxt] = b
            queue.append(nxt)

    if end is None:
        return None

    partner = dict((u, v) for u, v in m.pairs)
    partner.update((v, u) for u, v in m.pairs)
    b = end
    while b is not None:
        a = parent[b]
        old = partner.get(a)
        if old is not None:
            del partner[old]
        partner[a] = b
        partner[b] = a
        b = parent[a]
    partner.pop(target, None)

    pairs = set(edge_key(u, v) for u, v in partner.items())
    log.debug("exposed %d by flipping an alternating path ending at %d", target, end)
    return Matching(pairs)
