from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("ibex._treecore", ["src/ibex/_treecore.pyx"])],
        compiler_directives={"language_level": "3", "boundscheck": False,
                             "wraparound": False, "cdivision": True},
    )
except ImportError:
    # Pure-Python install still works; the search engines fall back to the
    # interpreted sweep at import time.
    extensions = []

setup(ext_modules=extensions)
