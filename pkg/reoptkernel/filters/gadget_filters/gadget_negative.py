from reoptkernel.args import ChoiceArgument
from reoptkernel.filters.base_filters import GadgetFilter, library_errors
from reoptkernel.gadgets import EDGE_DELETION, VERTEX_DELETION, build_negative_reopt_instance

PROBLEMS = ['longest_path', 'ivst', 'clique', 'treewidth']

def FilterGenerator():
    class NegativeGadgetFilter(GadgetFilter):
        def __init__(self):
            super(NegativeGadgetFilter, self).__init__('gadget_negative', 'Embeds the graph into a reoptimization instance that deletes part of a solution block')
            self.arguments.append(ChoiceArgument('problem', 'Problem', PROBLEMS))
            self.arguments.append(ChoiceArgument('modification', 'Deletion kind', [EDGE_DELETION, VERTEX_DELETION]))
        def apply(self, session, problem, modification):
            doc = session.document
            g = session.require('graph', doc.graph)
            k = session.require('parameter k', doc.k)
            with library_errors():
                inst = build_negative_reopt_instance(problem, g, k, modification)
            session.document = doc.copy(problem=problem, graph=inst.original, k=inst.k, k_prime=inst.k_prime,
                                        witness=inst.witness, modification=inst.modification,
                                        crown=None, result=None)
            session.report['gadget'] = {'construction': 'negative', 'problem': problem,
                                        'modification': modification, 'k': k,
                                        'n': inst.original.vertex_count,
                                        'witness': 'present' if inst.has_witness else 'bottom'}
            return session
    return NegativeGadgetFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
