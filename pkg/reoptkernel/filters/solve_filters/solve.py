from reoptkernel.filters.base_filters import SolveFilter, library_errors
from reoptkernel.graph_core import apply_modification
from reoptkernel.oracles import TreeDecomposition, meets, solve_exact

def solutionReport(kind, solution, k):
    info = {'value': solution.value}
    if isinstance(solution.witness, TreeDecomposition):
        info['width'] = solution.witness.width
        info['bags'] = [sorted(b) for b in solution.witness.bags]
    elif solution.witness is not None:
        info['witness'] = [list(x) if isinstance(x, tuple) else x for x in sorted(solution.witness)]
    if k is not None:
        info['k'] = k
        info['member'] = meets(kind, solution.value, k)
    return info

def FilterGenerator():
    class SolveExactFilter(SolveFilter):
        def __init__(self):
            super(SolveExactFilter, self).__init__('solve', 'Solves the instance (and its modified version, if any) with the size-guarded exact oracle')
        def apply(self, session):
            doc = session.document
            instance = session.require(doc.problem.shape, doc.instance)
            kind = doc.problem
            with library_errors():
                solution = solve_exact(kind, instance)
                report = solutionReport(kind, solution, doc.k)
                if doc.modification is not None and doc.graph is not None:
                    modified = apply_modification(doc.graph, doc.modification)
                    k_prime = doc.k if doc.k_prime is None else doc.k_prime
                    report['modified'] = solutionReport(kind, solve_exact(kind, modified), k_prime)
            session.report['solve'] = dict(report, problem=kind.name)
            if isinstance(solution.witness, TreeDecomposition):
                session.document = doc.copy(tree_decomposition=solution.witness)
            elif solution.witness is not None and doc.witness is None and doc.modification is None:
                # a reoptimization witness must stay the caller's
                session.document = doc.copy(witness=sorted(solution.witness))
            return session
    return SolveExactFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
