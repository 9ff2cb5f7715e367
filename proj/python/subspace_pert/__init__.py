from ._subspace import *  # noqa: F401,F403
from ._subspace import __doc__  # noqa: F401
