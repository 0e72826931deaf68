from reoptkernel.args import NaturalArgument
from reoptkernel.filters.base_filters import OpFilter

def FilterGenerator():
    class SetParameterFilter(OpFilter):
        def __init__(self):
            super(SetParameterFilter, self).__init__('set_parameter', 'Sets the parameter k of the current instance')
            self.arguments.append(NaturalArgument('k', 'Parameter'))
        def apply(self, session, k):
            session.document = session.document.copy(k=k)
            return session
    return SetParameterFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
