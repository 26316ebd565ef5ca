class HopfCombError(Exception):
    pass

class ValidationError(HopfCombError):
    pass

class ResourceLimitError(HopfCombError):
    pass

class UnknownAlgebraError(HopfCombError):
    pass

class ConfigurationError(HopfCombError):
    pass

class VerificationError(HopfCombError):
    def __init__(self, message, report=None):
        super(VerificationError, self).__init__(message)
        self.report = report

def throw(msg, exc=ValidationError):
    raise exc(msg)
