from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # the package falls back to the pure-Python ray-shooting backend
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("rdvmatch.rayshoot._cy", ["src/rdvmatch/rayshoot/_cy.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
