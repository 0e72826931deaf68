from reoptkernel.args import ChoiceArgument, NaturalArgument
from reoptkernel.filters.base_filters import GadgetSourceFilter, Session, library_errors
from reoptkernel.document import InstanceDocument
from reoptkernel.gadgets import build_extremal, is_extremal
from reoptkernel.graph_core import Digraph
from reoptkernel.oracles import SizeGuardExceeded

PROBLEMS = ['ivst', 'clique', 'treewidth', 'leaf_out_tree']

def FilterGenerator():
    class ExtremalGadgetFilter(GadgetSourceFilter):
        def __init__(self):
            super(ExtremalGadgetFilter, self).__init__('gadget_extremal', 'Builds the extremal graph of a problem for parameter k')
            self.arguments.append(ChoiceArgument('problem', 'Problem', PROBLEMS))
            self.arguments.append(NaturalArgument('k', 'Parameter'))
        def apply(self, problem, k):
            with library_errors():
                g = build_extremal(problem, k)
            if isinstance(g, Digraph):
                doc = InstanceDocument(problem, digraph=g, k=k)
            else:
                doc = InstanceDocument(problem, graph=g, k=k)
            try:
                extremal = is_extremal(g, problem, k)
            except SizeGuardExceeded:
                extremal = None
            session = Session(doc)
            session.report['gadget'] = {'construction': 'extremal', 'problem': problem, 'k': k,
                                        'n': g.vertex_count, 'extremal': extremal}
            return session
    return ExtremalGadgetFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
