"""
Entry point for running pnilrep as a module.

Usage:
    python -m pnilrep COMMAND [OPTIONS]
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
