import sys

from reoptkernel.filters.base_filters import PrintFilter
from reoptkernel.document import emit_instance

def FilterGenerator():
    class PrintInstanceFilter(PrintFilter):
        def __init__(self):
            super(PrintInstanceFilter, self).__init__('print_instance', 'Prints the current instance document')
        def apply(self, session):
            sys.stdout.write(emit_instance(session.document))
            return session
    return PrintInstanceFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
