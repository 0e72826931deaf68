from reoptkernel.filters.base_filters import KernelFilter, library_errors
from reoptkernel.crown import crown_or_matching
from reoptkernel.matching import Matching
from reoptkernel.vc_kernels import strip_isolated

def FilterGenerator():
    class FindCrownFilter(KernelFilter):
        def __init__(self):
            super(FindCrownFilter, self).__init__('find_crown', 'Runs the crown lemma on the graph with parameter k: a crown decomposition or a matching of size k+1')
        def apply(self, session):
            doc = session.document
            g = session.require('graph', doc.graph)
            k = session.require('parameter k', doc.k)
            with library_errors():
                if g.isolated_vertices():
                    # crowns are searched on the graph without isolated vertices
                    g = strip_isolated(g)[0]
                found = crown_or_matching(g, k)
            if isinstance(found, Matching):
                session.report['crown_lemma'] = {'outcome': 'matching', 'matching': [list(p) for p in found.pairs]}
                session.document = doc.copy(graph=g, crown=None)
            else:
                session.report['crown_lemma'] = {'outcome': 'crown', 'crown': sorted(found.crown),
                                                 'head': sorted(found.head), 'rest': sorted(found.rest)}
                session.document = doc.copy(graph=g, crown=found)
            return session
    return FindCrownFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
