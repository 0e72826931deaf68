class FilterArgument(object):
    """Base class for arguments to filters"""
    def __init__(self, name, description):
        self.name = name
        self.description = description
    def parse(self, value):
        """Converts the command line string. Raises ValueError when invalid"""
        return value
    def __str__(self):
        return "<FilterArgument (name=%s, desc=%s)>" % (self.name, self.description)

class FileArgument(FilterArgument):
    """Argument that should be a file path"""
    def __init__(self, name, description):
        super(FileArgument, self).__init__(name, description)
    def __str__(self):
        return "<FileArgument (name=%s, desc=%s)>" % (self.name, self.description)

class NaturalArgument(FilterArgument):
    """Argument that should be a non-negative integer"""
    def parse(self, value):
        number = int(value)
        if number < 0:
            raise ValueError("%s must be non-negative, got %d" % (self.name, number))
        return number
    def __str__(self):
        return "<NaturalArgument (name=%s, desc=%s)>" % (self.name, self.description)

class FloatArgument(FilterArgument):
    """Argument that should be a number in [0, 1]"""
    def parse(self, value):
        number = float(value)
        if not 0.0 <= number <= 1.0:
            raise ValueError("%s must lie in [0, 1], got %s" % (self.name, value))
        return number
    def __str__(self):
        return "<FloatArgument (name=%s, desc=%s)>" % (self.name, self.description)

class ChoiceArgument(FilterArgument):
    """Argument restricted to a fixed set of words"""
    def __init__(self, name, description, choices):
        super(ChoiceArgument, self).__init__(name, description)
        self.choices = list(choices)
    def parse(self, value):
        if value not in self.choices:
            raise ValueError("%s must be one of %s, got '%s'" % (self.name, '|'.join(self.choices), value))
        return value
    def __str__(self):
        return "<ChoiceArgument (name=%s, choices=%s)>" % (self.name, '|'.join(self.choices))
