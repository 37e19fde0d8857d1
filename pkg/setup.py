"""Build script: compiles the optional fast kernels.

The package is fully functional without the compiled extension (a pure-Python
twin of every kernel ships in ``fanogon._kernels.pure``); the extension only
accelerates the integer scan loops.  If Cython or a C compiler is unavailable
the build degrades to pure Python with a warning instead of failing.
"""

import sys

from setuptools import Extension, setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError as exc:  # pragma: no cover - build-environment dependent
        print(f"warning: Cython unavailable, building without compiled kernels ({exc})",
              file=sys.stderr)
        return []
    return cythonize(
        [Extension("fanogon._kernels._speed", ["src/fanogon/_kernels/_speed.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=_extensions())
