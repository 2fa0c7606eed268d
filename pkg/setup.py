"""
Configuration de l'installation du package.
"""
from setuptools import setup, find_packages

setup(
    name='rlnc-bounds',
    version='0.1.0',
    description="Bornes exactes sur la probabilité d'échec du codage réseau linéaire aléatoire",
    author='',
    author_email='',
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.24',
        'networkx>=3.1',
    ],
    extras_require={
        'dev': [
            'pytest>=7.4.0',
            'pytest-cov>=4.1.0',
            'hypothesis>=6.80',
            'flake8>=6.1.0',
            'black>=23.7.0',
        ]
    },
    entry_points={
        'console_scripts': [
            'rlnc-bounds=rlnc_bounds.main:run',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],
)
