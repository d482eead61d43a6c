from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "psmat._psmat",
    [
        "bindings/module.cpp",
        "src/psmat/classify.cpp",
        "src/psmat/construct.cpp",
        "src/psmat/ncpoly.cpp",
        "src/psmat/nilflag.cpp",
        "src/psmat/quat.cpp",
        "src/psmat/serialize.cpp",
        "src/psmat/verify.cpp",
    ],
    include_dirs=["src", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
    packages=["psmat"],
    package_dir={"": "python"},
)
