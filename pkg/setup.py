from setuptools import setup
setup(
  name = 'hiwalks',
  packages = ['hiwalks'],
  version = '0.1.0',
  description = 'Higher-dimensional walks on countable ordinals.',
  keywords = ['ordinals', 'walks', 'coherent sequences', 'set theory'],
  classifiers = [],
  extras_require = {
    'test': ['hypothesis'],
  },
  tests_require = ['hypothesis'],
  test_suite = 'tests',
  entry_points = {
    'console_scripts': ['hiwalks = hiwalks.cli:main'],
  },
)
