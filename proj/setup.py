"""CMake bridge: builds the pybind11 extension through the project's CMake
tree and drops the staged module into the wheel layout."""

import shutil
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
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DHAMVC_BUILD_TESTS=OFF",
                "-DHAMVC_BUILD_CLI=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "hamvc_pyext",
             "--parallel"],
            check=True,
        )
        staged = build_dir / "python_pkg" / "hamvc"
        built = sorted(staged.glob("_core*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core module")
        ext_path = Path(self.get_ext_fullpath(ext.name))
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], ext_path)


setup(
    packages=["hamvc"],
    package_dir={"hamvc": "python/hamvc"},
    ext_modules=[CMakeExtension("hamvc._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
