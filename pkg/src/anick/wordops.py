"""Word kernel selection: compiled extension if available, pure Python otherwise.

Set ANICK_PURE_PYTHON=1 to force the fallback.
"""

import os

if os.environ.get("ANICK_PURE_PYTHON") == "1":
    from . import _wordops_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _wordops as _impl

        BACKEND = "c"
    except ImportError:
        from . import _wordops_py as _impl

        BACKEND = "python"

find_subword = _impl.find_subword
first_match = _impl.first_match
all_matches = _impl.all_matches
is_normal = _impl.is_normal
