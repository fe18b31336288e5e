from ._normalmt import *  # noqa: F401,F403
