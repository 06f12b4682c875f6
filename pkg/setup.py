from distutils.core import setup

from setuptools import find_packages

setup(
    name="concordia",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    license="MIT",
    description="Lower bounds on the concordance Z-genus of knots from 2-fold branched covers, in exact arithmetic.",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    install_requires=[
        "pydantic>=1.8.0,<2.0.0",
        "sympy>=1.9",
    ],
    entry_points={"console_scripts": ["concordia=concordia.cli:main"]},
    python_requires=">=3.9",
)
