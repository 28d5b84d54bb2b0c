import setuptools

with open('README.md', 'r', encoding='utf-8') as fh:
    long_description = fh.read()

setuptools.setup(
    name='hausdorffpy',
    version='1.0.0',
    author='hausdorffpy contributors',
    description='Python library and command-line tool for discrete Hausdorff operators on compact abelian groups with ordered duals.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(exclude=['tests']),
    package_data={
        'hausdorffpy': ['py.typed'],
    },
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.17',
    ],
    entry_points={
        'console_scripts': [
            'hausdorffpy = hausdorffpy.cli:main',
        ],
    },
    classifiers=[
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
)
