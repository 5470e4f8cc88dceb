"""Virtual knot invariants, biracks and virtual braids."""

from ._core import *  # noqa: F401,F403
from ._core import VknotError, __version__  # noqa: F401
