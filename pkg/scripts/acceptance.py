#!/usr/bin/env python3
"""Print the PASS/FAIL line of every acceptance criterion (or of those given)."""

import os
import runpy
import sys

here = os.path.dirname(os.path.abspath(__file__))
sys.argv[0] = os.path.join(here, "..", "tests", "test_acceptance.py")
runpy.run_path(sys.argv[0], run_name="__main__")
