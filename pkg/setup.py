"""
abelzeta
Exact zeta functions, class numbers and bound checks for Kummer and
Artin-Schreier covers of the rational function field over a finite field.
"""
from setuptools import setup, find_packages

short_description = __doc__.strip().split("\n")

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except IOError:
    long_description = "\n".join(short_description[1:])

version = {}

with open("abelzeta/_version.py") as handle:
    exec(handle.read(), version)


setup(
    # Self-descriptive entries which should always be present
    name='abelzeta',
    description=" ".join(short_description[1:]),
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version["__version__"],
    license='MIT',

    # Which Python importable modules should be included when your package is installed
    packages=find_packages(),

    # The sweep plans which ship with the package
    package_data={"abelzeta": ["data/plans/*.json"]},

    entry_points={"console_scripts": ["abelzeta=abelzeta.cli:main"]},

    install_requires=[
        "numpy",
        "pandas",
        "sympy",
        "mpmath",
        "matplotlib",
        "dask",
        "distributed",
    ],
    python_requires=">=3.7",
    zip_safe=False,
)
