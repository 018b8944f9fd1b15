from setuptools import setup


def readme():
    with open('README.rst') as f:
        return f.read()


setup(name='bescat',
      version='1.0a1',
      description='Base-extension semantics for intuitionistic propositional logic, categorically',
      long_description=readme(),
      classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
      ],
      keywords='logic intuitionistic proof-theoretic-semantics kripke presheaf',
      license='MIT',
      packages=['bescat'],
      python_requires='>=3.7',
      install_requires=[
          'numpy',
          'scipy'
      ],
      setup_requires=['pytest-runner'],
      tests_require=['pytest', 'hypothesis'],
      entry_points={'console_scripts': ['bescat=bescat.cli:main']},
      include_package_data=True,
      zip_safe=True)
