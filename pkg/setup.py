import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the compiled kernels if possible; the package works without them."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self.warn(f"compiled kernels not built ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self.warn(f"{ext.name} not built ({exc}); using pure-Python fallback")


def extensions():
    if os.environ.get("PWMIRROR_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("Cython not available; skipping compiled kernels\n")
        return []
    from setuptools import Extension

    ext = Extension(
        "pwmirror.poly._kernels",
        ["src/pwmirror/poly/_kernels.pyx"],
        language="c++",
        extra_compile_args=["-O3", "-std=c++17"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"}, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
