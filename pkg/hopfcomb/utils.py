import importlib
import logging

from hopfcomb import hooks
from hopfcomb.exceptions import throw, UnknownAlgebraError

def get_logger(module=None):
    return logging.getLogger(module or "hopfcomb")

def get_hooks(hook):
    return getattr(hooks, hook, None)

def get_attr(method_string):
    """Resolve a dotted path such as `hopfcomb.hopf_algebras.eqsym.EQSym`."""
    if "." not in method_string:
        throw("Invalid method path {0}".format(method_string), UnknownAlgebraError)
    modulename, methodname = method_string.rsplit(".", 1)
    module = importlib.import_module(modulename)
    if not hasattr(module, methodname):
        throw("{0} has no attribute {1}".format(modulename, methodname), UnknownAlgebraError)
    return getattr(module, methodname)

def entries(nested):
    """The points of cycles, blocks or matchings of them, however deeply nested in tuples and lists."""
    for item in nested:
        if isinstance(item, (tuple, list)):
            yield from entries(item)
        else:
            yield item
