import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; linalg falls back to _echelon_py
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("MODULI_KAPPA_PURE_PYTHON"):
    ext_modules = cythonize(
        [Extension("moduli_kappa._echelon", ["src/moduli_kappa/_echelon.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
