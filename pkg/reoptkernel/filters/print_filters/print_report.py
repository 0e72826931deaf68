import sys

from reoptkernel.filters.base_filters import PrintFilter
from reoptkernel.document import dumps

def FilterGenerator():
    class PrintReportFilter(PrintFilter):
        def __init__(self):
            super(PrintReportFilter, self).__init__('print_report', 'Prints the report gathered by the chain as canonical JSON')
        def apply(self, session):
            sys.stdout.write(dumps(session.report))
            return session
    return PrintReportFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
