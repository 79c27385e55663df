from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "sheafbm._rref_cy",
                ["src/sheafbm/_rref_cy.pyx"],
                extra_compile_args=["-O3"],
                language="c",
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    # Pure-Python kernel is selected at import when the extension is missing.
    ext_modules = []

setup(ext_modules=ext_modules)
