import logging

from reoptkernel.args import ChoiceArgument
from reoptkernel.filters.base_filters import KernelFilter, ValidationException, library_errors
from reoptkernel.document import result_object
from reoptkernel.oracles import validate_witness
from reoptkernel.reopt_framework import AND, COMONOTONE, MONOTONE, OR, compositional_reopt_kernelize, \
    ivst_reopt_kernelize_eplus, problem_spec

log = logging.getLogger(__name__)

MONOTONICITY = {'m': MONOTONE, 'c': COMONOTONE}

def FilterGenerator():
    class ReoptKernelizeFilter(KernelFilter):
        def __init__(self):
            super(ReoptKernelizeFilter, self).__init__('reopt_kernelize', 'Environment kernel for compositional problems (ivst: edge-addition IVST; generic: declared composition and closure)')
            self.arguments.append(ChoiceArgument('mode', 'Kernelizer', ['ivst', 'generic']))
            self.arguments.append(ChoiceArgument('comp', 'Compositionality', [OR, AND]))
            self.arguments.append(ChoiceArgument('mono', 'Closure (m = monotone, c = comonotone)', sorted(MONOTONICITY)))
        def apply(self, session, mode, comp, mono):
            doc = session.document
            session.require('graph', doc.graph)
            with library_errors():
                inst = doc.reopt_instance()
                valid = validate_witness(inst)
            if not valid:
                raise ValidationException("the witness does not solve the original instance within k=%d" % inst.k)
            with library_errors():
                if mode == 'ivst':
                    result = ivst_reopt_kernelize_eplus(inst)
                    spec = problem_spec('ivst')
                else:
                    known = problem_spec(doc.problem)
                    spec = known.declared(MONOTONICITY[mono], comp)
                    if (spec.monotonicity, spec.compositionality) != (known.monotonicity, known.compositionality):
                        log.warning("'%s' declared %s/%s but is known to be %s/%s", spec.name,
                                    spec.compositionality, spec.monotonicity,
                                    known.compositionality, known.monotonicity)
                    result = compositional_reopt_kernelize(inst, spec)
            session.document = doc.copy(result=result)
            session.report['kernel'] = dict(result_object(result), mode=mode,
                                            compositionality=spec.compositionality,
                                            monotonicity=spec.monotonicity)
            return session
    return ReoptKernelizeFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
