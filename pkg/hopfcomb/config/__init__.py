"""
Configuration for resource guards
"""

import os

from hopfcomb.exceptions import throw, ConfigurationError, ResourceLimitError

ENV_MAX_DEGREE = "HOPFCOMB_MAX_DEGREE"

class _dict(dict):
	"""dict like object that exposes keys as attributes"""
	def __getattr__(self, key):
		ret = self.get(key)
		if not ret and key.startswith("__"):
			raise AttributeError()
		return ret

	def __setattr__(self, key, value):
		self[key] = value

	def copy(self):
		return _dict(dict(self).copy())

local = _dict()

def set_limit(limit=None):
	"""Session-wide max_degree override, as set by the CLI --limit flag."""
	local.max_degree = int(limit) if limit is not None else None

def get_conf(limit=None):
	from hopfcomb.utils import get_hooks

	conf = _dict(get_hooks("resource_limits") or {})

	env_value = os.environ.get(ENV_MAX_DEGREE)
	if env_value:
		try:
			conf.max_degree = int(env_value)
		except ValueError:
			throw("{0} must be an integer, got {1!r}".format(ENV_MAX_DEGREE, env_value), ConfigurationError)

	if local.max_degree is not None:
		conf.max_degree = local.max_degree

	if limit is not None:
		conf.max_degree = int(limit)

	return conf

def check_degree(n, what="degree", limit=None):
	max_degree = limit if limit is not None else get_conf().max_degree
	if n < 0:
		throw("{0} must be nonnegative, got {1}".format(what, n))
	if n > max_degree:
		throw("{0} {1} exceeds the configured limit {2}".format(what, n, max_degree), ResourceLimitError)
	return n
