from setuptools import find_packages, setup

install_requires = []

try: import networkx
except ImportError: install_requires.append('networkx>=2.0')

try: import numpy
except ImportError: install_requires.append('numpy')

try: import argparse
except ImportError: install_requires.append('argparse')

setup(
    name = "reoptkernel",
    version = "0.1",
    description = "Kernels, reduction gadgets and exact oracles for reoptimization of parameterized graph problems",
    platforms=["any"],
    license="BSD",
    install_requires=install_requires,
    entry_points = {
        'console_scripts':[
            'reoptkernel = reoptkernel.__main__:main'
        ]
    },
    packages = find_packages()
)
