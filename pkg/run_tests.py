"""Run the grouplab test suite.

    python run_tests.py               # all tests
    python run_tests.py theorems      # tests/test_theorems.py only
"""
import unittest
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

pattern = f"test_{sys.argv[1]}.py" if len(sys.argv) > 1 else 'test_*.py'
loader = unittest.TestLoader()
suite = loader.discover('tests', pattern=pattern)

runner = unittest.TextTestRunner(verbosity=2)
result = runner.run(suite)

# Exit with appropriate code
sys.exit(0 if result.wasSuccessful() else 1)
