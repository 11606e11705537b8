"""Build hook for the optional compiled kernels.

The package works without a compiler: when Cython or a C toolchain is
missing the extension is skipped and the pure-Python kernels are used.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self.announce(f"skipping compiled kernels: {exc}", level=3)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self.announce(f"skipping {ext.name}: {exc}", level=3)


def extensions():
    if os.environ.get("CMFIELDS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(["src/cmfields/_kernels.pyx"], quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
