from reoptkernel.filters.base_filters import ValidationException, VerifyFilter
from reoptkernel.crown import validate_crown

def FilterGenerator():
    class VerifyCrownFilter(VerifyFilter):
        def __init__(self):
            super(VerifyCrownFilter, self).__init__('verify_crown', 'Checks that the crown decomposition carried by the instance is valid')
        def apply(self, session):
            doc = session.document
            g = session.require('graph', doc.graph)
            cd = session.require('crown decomposition', doc.crown)
            violations = validate_crown(g, cd)
            session.report['verify_crown'] = {'valid': not violations, 'violations': violations}
            if violations:
                raise ValidationException("invalid crown decomposition: %s" % '; '.join(violations))
            return session
    return VerifyCrownFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
