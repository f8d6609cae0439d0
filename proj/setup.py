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
        ext_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        configure = [
            "cmake",
            str(source_dir),
            "-DCMAKE_BUILD_TYPE={}".format("Debug" if self.debug else "Release"),
            "-DENTCORR_PYTHON_WHEEL=ON",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(configure, cwd=build_dir, check=True)
        subprocess.run(
            [
                "cmake",
                "--build",
                ".",
                "--target",
                "entcorr_pymodule",
                "--parallel",
                str(os.cpu_count() or 2),
            ],
            cwd=build_dir,
            check=True,
        )


setup(
    packages=["entcorr"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("entcorr._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
