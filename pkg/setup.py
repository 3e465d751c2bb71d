# pylint: disable = C0111
from setuptools import find_packages, setup

with open("README.md", "r", encoding="utf-8") as f:
    DESCRIPTION = f.read()

# Required dependencies
install = ["numpy>=1.22.0", "scipy>=1.12.0", "pyyaml>=5.3"]

# Reporting and console dependencies
install += ["pandas>=1.1.0", "rich>=12.0.1"]

# Optional dependencies
extras = {}

# Development dependencies - not included in "all" install
extras["dev"] = [
    "black",
    "coverage",
    "mkdocs-material",
    "mkdocstrings[python]",
    "pre-commit",
    "pylint",
]

extras["cholmod"] = ["scikit-sparse>=0.4.8"]

extras["all"] = extras["cholmod"]

setup(
    name="walltension",
    version="1.0.0",
    description="Maximum principal wall tension of thin-walled vessel surfaces with flat-facet shell finite elements",
    long_description=DESCRIPTION,
    long_description_content_type="text/markdown",
    license="Apache 2.0: http://www.apache.org/licenses/LICENSE-2.0",
    packages=find_packages(where="src/python"),
    package_dir={"": "src/python"},
    keywords="finite-elements shell biomechanics aneurysm wall-tension mesh",
    python_requires=">=3.9",
    install_requires=install,
    extras_require=extras,
    entry_points={"console_scripts": ["walltension = walltension.console.__main__:main"]},
    classifiers=[
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Medical Science Apps.",
        "Topic :: Scientific/Engineering :: Physics",
        "Topic :: Utilities",
    ],
)
