"""Builds the hipbreak extension module by driving the project's CMake build.

The wheel contains the extension module alone; the C++ test suites and the
command-line tool stay in the CMake tree.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        source_dir = Path(__file__).parent.resolve()
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}{os.sep}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DSKBUILD=ON",  # tests and the CLI are not part of the wheel
            "-DHIP_BUILD_PYTHON=ON",
        ]
        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "hipbreak", "--config", cfg],
            cwd=build_dir,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("hipbreak")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
