"""Build script: compiles the optional arithmetic kernels (rational scalars
and integer coordinate tensors).

The package works without the extensions (pure-Python kernels are selected
at import time), so any build failure here downgrades to a warning instead
of aborting the install.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that tolerates a missing compiler toolchain."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - deliberately broad
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the compiled rational kernel failed ({exc}); "
            "falling back to the pure-Python implementation.",
            file=sys.stderr,
        )


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "WARNING: Cython not available; installing with the pure-Python "
            "rational kernel only.",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [
            Extension(
                "hypercircles._ratcore",
                ["src/hypercircles/_ratcore.pyx"],
                extra_compile_args=["-O3"],
            ),
            Extension(
                "hypercircles._tensorcore",
                ["src/hypercircles/_tensorcore.pyx"],
                extra_compile_args=["-O3"],
            ),
        ],
        language_level=3,
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
