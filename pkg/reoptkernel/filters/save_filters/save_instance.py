import os

from reoptkernel.filters.base_filters import FilterException, SaveFilter
from reoptkernel.document import emit_instance
from reoptkernel.util import write_text

def FilterGenerator():
    class InstanceSaveFilter(SaveFilter):
        def __init__(self):
            super(InstanceSaveFilter, self).__init__('save_instance', 'Saves the instance as a JSON document')
        def apply(self, session, filename):
            if os.path.exists(filename):
                raise FilterException("specified filename already exists")
            write_text(filename, emit_instance(session.document))
            return session
    return InstanceSaveFilter()
from reoptkernel.filters import factory
factory.register(FilterGenerator().name, FilterGenerator)
