from reoptkernel.args import ChoiceArgument
from reoptkernel.filters.base_filters import GadgetFilter, library_errors
from reoptkernel.gadgets import CLIQUE_EDGE_ADDITION, CLIQUE_VERTEX_ADDITION, build_clique_reopt_instance

def FilterGenerator():
    class CliqueReoptFilter(GadgetFilter):
        def __init__(self):
            super(CliqueReoptFilter, self).__init__('gadget_clique_reopt', 'Embeds the graph into a clique reoptimization instance (edge or vertex addition)')
            self.arguments.append(ChoiceArgument('mode', 'Modification', [CLIQUE_EDGE_ADDITION, CLIQUE_VERTEX_ADDITION]))
        def apply(self, session, mode):
            doc = session.document
            g = session.require('graph', doc.graph)
            k = session.require('parameter k', doc.k)
            with library_errors():
                inst = build_clique_reopt_instance(g, k, mode)
            session.document = doc.copy(problem='clique', graph=inst.original, k=inst.k, k_prime=inst.k_prime,
                                        witness=inst.witness, modification=inst.modification,
                                        crown=None, result=None)
            session.report['gadget'] = {'construction': 'clique_reopt', 'mode': mode, 'k': k,
                                        'n': inst.original.vertex_count}
            return session
    return CliqueReoptFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
