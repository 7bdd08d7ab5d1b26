#! /usr/bin/env python

"""Local test runner.

Discovers the `*_test.py` modules under tests/ and runs them with logging silenced.

Example invocation:

    $ python run_tests.py
    $ python run_tests.py --test-path tests/linear
"""

import argparse
import logging
import os
import sys
import unittest


def main(test_path, test_pattern):
    # Make the hwk package importable however the runner is started.
    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

    # Disable logging when running tests
    logging.disable(logging.CRITICAL)

    # Discover and run tests.
    suite = unittest.loader.TestLoader().discover(test_path, test_pattern,
                                                  top_level_dir=os.path.dirname(os.path.abspath(__file__)))
    return unittest.TextTestRunner(verbosity=2).run(suite)


if __name__ == '__main__':
    parser = argparse.ArgumentParser(
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument(
        '--test-path',
        help='The path to look for tests, defaults to tests/.',
        default=os.path.join(os.path.dirname(os.path.abspath(__file__)), 'tests'))
    parser.add_argument(
        '--test-pattern',
        help='The file pattern for test modules, defaults to *_test.py.',
        default='*_test.py')

    args = parser.parse_args()

    result = main(args.test_path, args.test_pattern)

    if not result.wasSuccessful():
        sys.exit(1)
