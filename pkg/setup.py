from setuptools import setup

# The compiled kernel is optional: without Cython the package installs with
# the pure-Python fallback selected at import.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/powerdom/_kernel_c.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
