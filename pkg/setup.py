"""The setup script for installing the package."""

from setuptools import find_packages, setup

# read the contents of the README
with open("README.md") as README_md:
    README = README_md.read()


setup(
    name="dag_zeropad",
    version="1.0.0",
    description="Zero-padding of directed acyclic graphs for graph Fourier analysis",
    long_description=README,
    long_description_content_type="text/markdown",
    keywords=" ".join(
        [
            "Graph-Signal-Processing",
            "Directed-Acyclic-Graph",
            "Graph-Fourier-Transform",
            "Zero-Padding",
            "Graph-Filter",
        ]
    ),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Operating System :: MacOS :: MacOS X",
        "Operating System :: POSIX :: Linux",
        "Operating System :: Microsoft :: Windows",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=["tests", "*.tests", "*.tests.*"]),
    python_requires=">=3.10",
    install_requires=["numpy>=1.22", "sympy>=1.10", "tqdm>=4.19.5"],
    entry_points={
        "console_scripts": [
            "dag_zeropad = dag_zeropad._app.cli:main",
        ],
    },
)
