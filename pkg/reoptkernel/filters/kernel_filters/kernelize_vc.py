from reoptkernel.args import ChoiceArgument
from reoptkernel.filters.base_filters import KernelFilter, UsageException, library_errors
from reoptkernel.document import result_object
from reoptkernel.vc_kernels import reopt_vc_kernelize_2k, vc_kernelize_3k

CLASSIC = 'classic3k'
REOPT = 'reopt2k'

def FilterGenerator():
    class KernelizeVcFilter(KernelFilter):
        def __init__(self):
            super(KernelizeVcFilter, self).__init__('kernelize_vc', 'Vertex cover kernel: crown lemma (classic3k) or edge-addition reoptimization (reopt2k)')
            self.arguments.append(ChoiceArgument('mode', 'Kernel', [CLASSIC, REOPT]))
        def apply(self, session, mode):
            doc = session.document
            if doc.problem.name != 'vertex_cover':
                raise UsageException("kernelize_vc needs a vertex_cover instance, got '%s'" % doc.problem.name)
            g = session.require('graph', doc.graph)
            k = session.require('parameter k', doc.k)
            with library_errors():
                if mode == CLASSIC:
                    result = vc_kernelize_3k(g, k)
                else:
                    result = reopt_vc_kernelize_2k(doc.reopt_instance())
            session.document = doc.copy(result=result)
            session.report['kernel'] = dict(result_object(result), mode=mode)
            return session
    return KernelizeVcFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
