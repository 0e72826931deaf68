from reoptkernel.filters.base_filters import ValidationException, VerifyFilter, library_errors
from reoptkernel.oracles import solution_cost, meets

def FilterGenerator():
    class VerifySolutionFilter(VerifyFilter):
        def __init__(self):
            super(VerifySolutionFilter, self).__init__('verify_solution', 'Checks that the witness (or tree decomposition) solves the instance within k')
        def apply(self, session):
            doc = session.document
            instance = session.require(doc.problem.shape, doc.instance)
            if doc.problem.name == 'treewidth':
                candidate = session.require('tree decomposition', doc.tree_decomposition)
            else:
                candidate = session.require('witness', doc.witness)
            with library_errors():
                try:
                    cost = solution_cost(doc.problem, instance, candidate)
                except (TypeError, ValueError):
                    cost = None
            valid = cost is not None and (doc.k is None or meets(doc.problem, cost, doc.k))
            session.report['verify_solution'] = {'valid': valid, 'cost': cost, 'k': doc.k}
            if cost is None:
                raise ValidationException("the witness is not a %s solution" % doc.problem.title)
            if not valid:
                raise ValidationException("the witness costs %d, which does not meet k = %d" % (cost, doc.k))
            return session
    return VerifySolutionFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
