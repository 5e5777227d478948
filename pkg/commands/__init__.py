"""
Commands package for semidecomp.

This package contains the sub-commands of the command-line tool.
"""
