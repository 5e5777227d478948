"""
Configuration settings for semidecomp.

This module contains configuration settings and constants used throughout the tool.
Every setting has a default, so no environment variable is required.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Logging configuration
LOGGER_NAME = 'semidecomp'
LOG_LEVEL = os.getenv('SEMIDECOMP_LOG_LEVEL', 'WARNING')
LOG_FILE = os.getenv('SEMIDECOMP_LOG_FILE')  # None -> stderr only
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Semigroup tables
TABLE_CAPACITY = int(os.getenv('SEMIDECOMP_TABLE_CAPACITY', 2 ** 20))  # largest dense table, in elements

# Oversemigroup enumeration
DEFAULT_CAP = int(os.getenv('SEMIDECOMP_DEFAULT_CAP', 5_000_000))

# Largest a_k whose factorial the half-line witness search will compute
FACTORIAL_LIMIT = 1000

# Brute-force h(S) oracle is only run when the xi product stays below this
XI_PRODUCT_LIMIT = 10 ** 6

# Reproduction harness
CLAIMS_DIR = os.getenv(
    'SEMIDECOMP_CLAIMS_DIR',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'claims')
)

REQUIRED_CLAIM_FIELDS = [
    'id', 'title', 'kind', 'params', 'expect'
]

CLAIM_KINDS = [
    'prime_square_exact',
    'skn_lower_bound',
    'gap_lemma',
    'halfline_singletons',
    'halfline_exact',
    'two_generator_frobenius',
]

# Output
OUTPUT_FORMATS = ['table', 'json', 'csv']
DECOMPOSE_MODES = ['exact', 'construct', 'bounds']

# Exit codes
EXIT_OK = 0
EXIT_REPRO_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_CAP_EXCEEDED = 3
