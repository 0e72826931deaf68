import os

from reoptkernel.filters.base_filters import FilterException, LoadFilter, Session, library_errors
from reoptkernel.document import parse_instance
from reoptkernel.util import read_text

def loadInstance(filename):
    if not os.path.isfile(filename):
        raise FilterException("argument is not a valid file")
    with library_errors():
        return parse_instance(read_text(filename))

def FilterGenerator():
    class InstanceLoadFilter(LoadFilter):
        def __init__(self):
            super(InstanceLoadFilter, self).__init__('load_instance', 'Loads an instance document (JSON, or a DIMACS edge list)')
        def apply(self, filename):
            session = Session(loadInstance(filename))
            session.report['input'] = {'file': os.path.basename(filename),
                                       'problem': session.document.problem.name}
            return session
    return InstanceLoadFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
