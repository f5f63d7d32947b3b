"""Small graphs with prescribed girth and chromatic number.

The heavy lifting lives in the C++ extension ``ngk._core``; this package
re-exports its surface. When working from a plain CMake build tree (no
``pip install``), point ``NGK_EXT_DIR`` at the directory containing the
built extension before importing.
"""

import os
import sys

_ext_dir = os.environ.get("NGK_EXT_DIR")
if _ext_dir and _ext_dir not in sys.path:
    sys.path.insert(0, _ext_dir)

try:
    from _core import *  # type: ignore[import-not-found]  # noqa: F401,F403
    from _core import Graph, LcfScheme  # noqa: F401
except ImportError:
    from ngk._core import *  # noqa: F401,F403
    from ngk._core import Graph, LcfScheme  # noqa: F401

__version__ = "0.1.0"
