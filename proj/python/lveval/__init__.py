"""Long-form text-to-video evaluation toolkit."""

from ._lveval import *  # noqa: F401,F403
from ._lveval import __version__  # noqa: F401
