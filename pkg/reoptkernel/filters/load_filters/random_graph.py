import networkx as nx

from reoptkernel.args import FloatArgument, NaturalArgument
from reoptkernel.filters.base_filters import GenerateFilter, Session
from reoptkernel.document import InstanceDocument
from reoptkernel.graph_core import from_networkx

def randomGraph(n, density, seed):
    """G(n, p) graph; the same seed always gives the same graph"""
    return from_networkx(nx.gnp_random_graph(n, density, seed=seed))

def FilterGenerator():
    class RandomGraphFilter(GenerateFilter):
        def __init__(self):
            super(RandomGraphFilter, self).__init__('random_graph', 'Generates a seeded random graph for test corpora')
            self.arguments.append(NaturalArgument('n', 'Number of vertices'))
            self.arguments.append(FloatArgument('density', 'Edge probability'))
            self.arguments.append(NaturalArgument('seed', 'Random seed'))
        def apply(self, n, density, seed):
            graph = randomGraph(n, density, seed)
            session = Session(InstanceDocument('vertex_cover', graph=graph))
            session.report['input'] = {'generator': 'gnp', 'n': n, 'density': density, 'seed': seed,
                                       'edges': graph.edge_count()}
            return session
    return RandomGraphFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
