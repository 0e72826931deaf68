import collections
import contextlib

from reoptkernel.args import FileArgument
from reoptkernel.crown import CrownError
from reoptkernel.document import ParseError
from reoptkernel.gadgets import GadgetError
from reoptkernel.graph_core import GraphError
from reoptkernel.matching import MatchingError
from reoptkernel.oracles import OracleError, SizeGuardExceeded
from reoptkernel.vc_kernels import KernelError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_SIZE_GUARD = 3
EXIT_VALIDATION = 4

class FilterException(Exception):
    """Exception message thrown by a filter"""
    EXIT_CODE = EXIT_FAILURE

class UsageException(FilterException):
    """The chain asks a filter for something its input does not have"""
    EXIT_CODE = EXIT_USAGE

class SizeGuardException(FilterException):
    """An exact solver refused the instance"""
    EXIT_CODE = EXIT_SIZE_GUARD

class ValidationException(FilterException):
    """A verification filter found the input invalid"""
    EXIT_CODE = EXIT_VALIDATION

@contextlib.contextmanager
def library_errors():
    """Turns library exceptions into filter exceptions"""
    try:
        yield
    except SizeGuardExceeded as e:
        raise SizeGuardException(str(e))
    except (GraphError, MatchingError, CrownError, KernelError, GadgetError, OracleError, ParseError) as e:
        raise FilterException(str(e))

class Session(object):
    """What flows through a filter chain: the current instance document and
    the report the filters fill in"""
    def __init__(self, document):
        self.document = document
        self.report = collections.OrderedDict()

    def require(self, what, value):
        if value is None:
            raise UsageException("the instance has no %s" % what)
        return value

class Filter(object):
    """Base class for a filter"""
    def __init__(self, name, description):
        self.name = name
        self.description = description
        self.arguments = []

class SourceFilter(Filter):
    """Base class for a filter that starts a chain. Returns a Session"""
    def apply(self, *args):
        """Must be overriden by subclasses. Returns Session instance"""
        raise NotImplementedError()

    CATEGORY = 'Loading'

class LoadFilter(SourceFilter):
    """Base class for a filter that loads an instance"""
    def __init__(self, name, description):
        super(LoadFilter, self).__init__(name, description)
        self.arguments.append(FileArgument("file", "Path of the file to load"))

class GenerateFilter(SourceFilter):
    """Base class for a filter that builds an instance from its arguments"""
    pass

class OpFilter(Filter):
    """Base class for a filter that takes a Session as input and output"""
    def __init__(self, name, description):
        super(OpFilter, self).__init__(name, description)
    def apply(self, session, *args):
        """Must be overriden by subclasses. Returns Session instance"""
        raise NotImplementedError()

    CATEGORY = 'Operations'

class GadgetFilter(OpFilter):
    """Base class for a filter that replaces the instance by a construction"""

    CATEGORY = 'Gadgets'

class GadgetSourceFilter(GenerateFilter):
    """Base class for a construction that needs no input instance"""

    CATEGORY = 'Gadgets'

class KernelFilter(OpFilter):
    """Base class for a filter that kernelizes"""

    CATEGORY = 'Kernels'

class SolveFilter(OpFilter):
    """Base class for a filter that runs exact solvers"""

    CATEGORY = 'Solving'

class VerifyFilter(OpFilter):
    """Base class for a filter that validates; fails with ValidationException"""

    CATEGORY = 'Verifying'

class PrintFilter(OpFilter):
    """Base class for a filter that prints things"""

    CATEGORY = 'Printing'

class SaveFilter(OpFilter):
    """Base class for a filter that saves an instance"""
    def __init__(self, name, description):
        super(SaveFilter, self).__init__(name, description)
        self.arguments.append(FileArgument("file", "Path where the file should be saved to"))

    CATEGORY = 'Saving'

class FilterFactory(object):
    """Factor for registering and retrieving filters"""
    def __init__(self):
        self.registrar = {}
        #keeping a list of names to preserve ordering
        self.nameList = []
    def register(self, name, filter_generator):
        self.registrar[name] = filter_generator
        self.nameList.append(name)
    def getInstance(self, name):
        if name in self.registrar:
            return self.registrar[name]()
        else:
            return None
    def getFilterNames(self):
        return self.nameList
