"""
Setup configuration for dp-pursuit.
"""
from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="dp-pursuit",
    version="0.1.0",
    description="Exact solvers and structural recognizers for cop and fast "
                "robber games on graphs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    include_package_data=True,
    python_requires=">=3.10",
    install_requires=[
        "click>=8.0.0",
        "python-dotenv>=1.0.0",
        "jsonpickle>=3.0.3",
        "psutil>=5.9.6",
        "networkx>=3.0",
        "numpy>=1.24",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "hypothesis>=6.80",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Typing :: Typed",
    ],
    entry_points={
        "console_scripts": [
            "dp-pursuit=dp.pursuit.cli.cli:main",
        ],
    },
)
