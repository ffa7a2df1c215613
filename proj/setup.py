from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "petalstar._petalstar",
    [
        "bindings/module.cpp",
        "src/kernel.cpp",
        "src/petal.cpp",
        "src/radii.cpp",
        "src/extremal.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
