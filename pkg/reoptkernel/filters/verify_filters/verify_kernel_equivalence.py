import os

from reoptkernel.args import FileArgument
from reoptkernel.filters.base_filters import FilterException, UsageException, ValidationException, VerifyFilter, \
    library_errors
from reoptkernel.filters.load_filters.load_instance import loadInstance
from reoptkernel.graph_core import apply_modification
from reoptkernel.oracles import verify_kernel_equivalence

CURRENT = '-'

def kernelTarget(doc):
    """The (graph, parameter) pair a kernel of doc must be equivalent to"""
    if doc.modification is not None:
        k_prime = doc.k if doc.k_prime is None else doc.k_prime
        return apply_modification(doc.graph, doc.modification), k_prime
    return doc.graph, doc.k

def checkKernel(doc, result):
    if doc.graph is None or doc.k is None:
        raise UsageException("the instance has no graph and parameter k")
    with library_errors():
        graph, k = kernelTarget(doc)
        equivalent = verify_kernel_equivalence(doc.problem, graph, k, result)
    return {'equivalent': equivalent, 'k': k, 'branch': result.branch}

def checkDirectory(dirname):
    """Checks every saved kernel document (*.json holding an instance and its
    result) in a directory against its own instance"""
    names = sorted(name for name in os.listdir(dirname) if name.endswith('.json'))
    if not names:
        raise FilterException("no .json documents in directory '%s'" % dirname)
    checked = []
    for name in names:
        doc = loadInstance(os.path.join(dirname, name))
        if doc.result is None:
            raise UsageException("'%s' holds no kernel result" % name)
        checked.append(dict(checkKernel(doc, doc.result), file=name))
    return checked

def FilterGenerator():
    class VerifyKernelEquivalenceFilter(VerifyFilter):
        def __init__(self):
            super(VerifyKernelEquivalenceFilter, self).__init__('verify_kernel_equivalence', "Checks with the exact oracle that a kernel result (from file, or '-' for the chain's own) answers the instance correctly; a directory checks each saved kernel document in it")
            self.arguments.append(FileArgument('file', "Document holding the kernel result, '-', or a directory of kernel documents"))
        def apply(self, session, filename):
            if filename != CURRENT and os.path.isdir(filename):
                checked = checkDirectory(filename)
                failed = [c['file'] for c in checked if not c['equivalent']]
                session.report['verify_kernel_equivalence'] = {'equivalent': not failed, 'count': len(checked),
                                                               'documents': checked}
                if failed:
                    raise ValidationException("kernel results disagree with the exact oracle in %s" % ', '.join(failed))
                return session

            doc = session.document
            if filename == CURRENT:
                result = doc.result
            else:
                result = loadInstance(filename).result
            if result is None:
                raise UsageException("no kernel result to verify")
            session.require('graph', doc.graph)
            session.require('parameter k', doc.k)
            checked = checkKernel(doc, result)
            session.report['verify_kernel_equivalence'] = checked
            if not checked['equivalent']:
                raise ValidationException("kernel result (branch %s) disagrees with the exact oracle" % result.branch)
            return session
    return VerifyKernelEquivalenceFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
