"""Best-effort build of the optional compiled F_p kernel.

The package is pure Python plus one optional Cython extension
(eigenalg._fpkernel_c).  If Cython or a C compiler is unavailable the build
proceeds without it and the pure-Python fallback is used at runtime.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/eigenalg/_fpkernel_c.pyx"], language_level=3)
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
