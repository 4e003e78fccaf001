"""CMake-driven build of the polarchan._core extension (pybind11)."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        package_dir = ext_path.parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DPOLARCHAN_BUILD_TESTS=OFF",
            "-DPOLARCHAN_BUILD_CLI=OFF",
            "-DPOLARCHAN_BUILD_PYTHON=ON",
            f"-DPOLARCHAN_INSTALL_PYTHON_DIR={package_dir}",
        ]
        env_cmake_args = os.environ.get("CMAKE_ARGS")
        if env_cmake_args:
            cmake_args += env_cmake_args.split()

        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "-j"], cwd=build_dir, check=True
        )
        package_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            ["cmake", "--install", ".", "--component", "Unspecified"],
            cwd=build_dir,
            check=False,
        )
        # cmake installs the module next to the package sources
        built = list(build_dir.glob("_core*.so"))
        if built:
            self.copy_file(str(built[0]), str(ext_path))


setup(
    ext_modules=[CMakeExtension("polarchan._core")],
    cmdclass={"build_ext": CMakeBuild},
)
