from reoptkernel.filters.base_filters import FilterException, OpFilter, UsageException, library_errors
from reoptkernel.filters.verify_filters.verify_kernel_equivalence import kernelTarget
from reoptkernel.gadgets import canonical_instances

def FilterGenerator():
    class MaterializeKernelFilter(OpFilter):
        def __init__(self):
            super(MaterializeKernelFilter, self).__init__('materialize_kernel', 'Replaces the instance by its kernel; a decided kernel becomes the canonical yes- or no-instance')
        def apply(self, session):
            doc = session.document
            result = doc.result
            if result is None:
                raise UsageException("no kernel result to materialize")
            if result.is_decided:
                session.require('graph', doc.graph)
                session.require('parameter k', doc.k)
                with library_errors():
                    yes, no = canonical_instances(doc.problem, kernelTarget(doc)[1])
                chosen = result.materialize(yes, no)
                if chosen is None:
                    raise FilterException("'%s' has no no-instance for k=%d" % (doc.problem.name, yes[1]))
                graph, k = chosen
            else:
                graph, k = result.graph, result.parameter
            session.document = doc.copy(graph=graph, k=k, k_prime=None, witness=None, modification=None,
                                        crown=None, result=None, tree_decomposition=None)
            session.report['materialize_kernel'] = {'n': graph.vertex_count, 'k': k, 'branch': result.branch}
            return session
    return MaterializeKernelFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
