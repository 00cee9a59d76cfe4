from setuptools import setup, find_packages

setup(
    name='accyclic',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={
        'accyclic': ['data/*.toml', 'data/groups/*.group'],
    },
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'sympy',
        'typing_extensions',
        'toml; python_version < "3.11"',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={ 
        'console_scripts': ['accyclic = accyclic.__main__:main' ] 
    },
)
