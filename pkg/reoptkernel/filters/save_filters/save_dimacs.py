import os

from reoptkernel.filters.base_filters import FilterException, SaveFilter
from reoptkernel.document import emit_dimacs
from reoptkernel.util import write_text

def FilterGenerator():
    class DimacsSaveFilter(SaveFilter):
        def __init__(self):
            super(DimacsSaveFilter, self).__init__('save_dimacs', 'Saves the graph as a DIMACS edge list (labels and reoptimization data are dropped)')
        def apply(self, session, filename):
            if os.path.exists(filename):
                raise FilterException("specified filename already exists")
            doc = session.document
            g = session.require('graph', doc.graph)
            comment = None
            if doc.k is not None:
                comment = '%s k=%d' % (doc.problem.name, doc.k)
            write_text(filename, emit_dimacs(g, comment))
            return session
    return DimacsSaveFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
