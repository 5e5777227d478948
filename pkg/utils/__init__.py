"""
Utils package for semidecomp.

This package contains utility modules for the tool.
"""

from utils.bitset import *
from utils.cover import *
from utils.report_builder import *
from utils.yaml_parser import *
