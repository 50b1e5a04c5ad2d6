"""A setuptools based setup module.
See:
https://packaging.python.org/guides/distributing-packages-using-setuptools/
"""

from setuptools import setup

# Get the long description from the README file
long_description = open('README.md').read()
# Get the version number from the VERSION file
version_number = open('VERSION').read().strip()

setup(
    name="agreeable-sets",
    version=version_number,
    license='MIT',
    description="Small agreeable item sets for ordinal, oracle and additive preferences",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="fair division, agreeable sets, set cover, covering designs",
    package_dir={"agreeable": "src"},
    packages=["agreeable", "agreeable.oracles", "agreeable.solvers"],
    python_requires=">=3.9",
    install_requires=[
        "attrs>=21.3",
        "numpy>=1.20",
        "pandas>=1.5",
        "scipy>=1.6",
        "sympy>=1.8",
    ],
    extras_require={
        "test": ["pytest>=6.2", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["agreeable=agreeable.cli:main"],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
)
