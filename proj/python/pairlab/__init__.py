from ._pairlab import *  # noqa: F401,F403
from ._pairlab import __doc__  # noqa: F401
