import os

from setuptools import find_packages, setup


def _read_version(root_dir):
    scope = {}
    with open(os.path.join(root_dir, 'cvcomp', '_version.py')) as f:
        exec(f.read(), scope)  # pylint: disable=exec-used
    return scope['__version__']


def main():
    root_dir = os.path.dirname(os.path.abspath(__file__))

    with open(os.path.join(root_dir, 'requirements.txt')) as f:
        requirements = [r.strip() for r in f if r.strip()]
        setup(
            name='cv-complementarity',
            version=_read_version(root_dir),
            description='Complementarity relations for truncated two-mode squeezed states',
            author='cv-complementarity authors',
            long_description='Closed forms, Gaussian variance-matrix tools and homodyne estimation for '
                             'single-party and bipartite complementarity of two-mode squeezed states.',
            license='Apache License 2.0',
            install_requires=requirements,
            python_requires='>=3.8',
            packages=find_packages(exclude=['tests', 'tests.*']),
            entry_points={
                'console_scripts': [
                    'cvcomp = cvcomp_cli.main:main',
                ],
            },
            classifiers=[
                'Development Status :: 4 - Beta',
                'Environment :: Console',
                'Intended Audience :: Science/Research',
                'License :: OSI Approved :: Apache Software License',
                'Operating System :: POSIX',
                'Operating System :: MacOS',
                'Operating System :: Unix',
                'Operating System :: Microsoft :: Windows',
                'Programming Language :: Python',
                'Programming Language :: Python :: 3',
                'Topic :: Scientific/Engineering :: Physics',
            ]
        )


if __name__ == "__main__":
    main()
