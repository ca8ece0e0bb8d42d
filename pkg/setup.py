# setup.py
from setuptools import find_packages, setup

setup(
    name="chromapath",
    version="0.1.0",
    description="Certifying digraph algorithms: exact colorings, maximal out-forests, two-block paths",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "pandas",
        "scipy>=1.9",
        "networkx>=3.0",
        "python-dotenv>=1.0.1",
    ],
    extras_require={"test": ["pytest>=7.4", "hypothesis>=6.80"]},
    entry_points={"console_scripts": ["chromapath=chromapath.cli:main"]},
)
