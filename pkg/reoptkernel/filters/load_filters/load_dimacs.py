import os

from reoptkernel.filters.base_filters import FilterException, LoadFilter, Session, library_errors
from reoptkernel.document import InstanceDocument, parse_dimacs
from reoptkernel.util import read_text

def FilterGenerator():
    class DimacsLoadFilter(LoadFilter):
        def __init__(self):
            super(DimacsLoadFilter, self).__init__('load_dimacs', 'Loads a graph from a DIMACS edge list (p edge n m / e u v)')
        def apply(self, filename):
            if not os.path.isfile(filename):
                raise FilterException("argument is not a valid file")
            with library_errors():
                graph = parse_dimacs(read_text(filename))
            session = Session(InstanceDocument('vertex_cover', graph=graph))
            session.report['input'] = {'file': os.path.basename(filename), 'problem': 'vertex_cover'}
            return session
    return DimacsLoadFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
