from reoptkernel.filters.base_filters import GadgetFilter, UsageException, library_errors
from reoptkernel.gadgets import build_setcover_cvc
from reoptkernel.oracles import is_connected_vertex_cover, min_set_cover

def setCoverReport(gadget):
    sc = gadget.set_cover
    info = {'construction': 'setcover_cvc',
            'universe': sc.universe_size,
            'sets': len(sc.family),
            'k': sc.k,
            'n': gadget.graph.vertex_count,
            'budget': gadget.budget,
            's1_size': len(gadget.s1),
            'violations': gadget.check_invariants()}
    best = min_set_cover(sc)
    info['set_cover_optimum'] = best.value
    if best.value is not None and best.value <= sc.k:
        s2 = gadget.s2_from_cover(best.witness)
        after = gadget.s2_after_edge(best.witness)
        modified = gadget.reopt_instance().modified
        info['s2_size'] = len(s2)
        info['s2_valid'] = is_connected_vertex_cover(gadget.graph, s2)
        info['s2_after_edge_valid'] = is_connected_vertex_cover(modified, after)
    return info

def FilterGenerator():
    class SetCoverCvcFilter(GadgetFilter):
        def __init__(self):
            super(SetCoverCvcFilter, self).__init__('gadget_setcover_cvc', 'Turns a set cover instance into the connected vertex cover reoptimization gadget')
        def apply(self, session):
            doc = session.document
            if doc.problem.name != 'set_cover' or doc.set_cover is None:
                raise UsageException("gadget_setcover_cvc needs a set_cover instance")
            with library_errors():
                gadget = build_setcover_cvc(doc.set_cover)
                inst = gadget.reopt_instance()
                session.report['gadget'] = setCoverReport(gadget)
            session.document = doc.copy(problem='connected_vertex_cover', graph=gadget.graph, set_cover=None,
                                        k=inst.k, k_prime=inst.k_prime, witness=inst.witness,
                                        modification=inst.modification)
            return session
    return SetCoverCvcFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
