from setuptools import setup, find_packages

import importlib.util
import importlib.machinery


def load_source(modname, filename):
    loader = importlib.machinery.SourceFileLoader(modname, filename)
    spec = importlib.util.spec_from_file_location(modname, filename, loader=loader)
    module = importlib.util.module_from_spec(spec)
    loader.exec_module(module)
    return module


version = load_source('frameforge.version', 'frameforge/version.py')

setup(
    name='frameforge',
    version=version.version,
    description='Spanning and independent partitions of finite frames, with verifiable certificates',
    author='frameforge development crew',
    packages=find_packages(exclude=['tests']),
    package_data={'': ['schemata/*.json']},
    long_description='Spanning and independent partitions of finite frames, with verifiable certificates',
    classifiers=[
        "License :: OSI Approved :: ISC License (ISCL)",
        "Programming Language :: Python",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12"
    ],
    keywords='frames parseval matroid partition paving',
    license='ISC',
    python_requires='>=3.9',
    install_requires=[
        'pandas>=1.5',
        'sortedcontainers>=2.0.0',
        'jsonschema>=3.0.0',
        'numpy>=1.17',
        'decorator',
        'simanneal>=0.5',
    ],
    extras_require={
        'docs': ['numpydoc', 'sphinx_rtd_theme'],
        'tests': ['pytest', 'pytest-cov', 'hypothesis'],
    },
    scripts=['scripts/frameforge']
)
