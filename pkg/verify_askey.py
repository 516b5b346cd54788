#!/usr/bin/env python3
"""Run the verification suites from the command line.

Usage:
    python verify_askey.py [--families MP,AW] [--suites basic,christoffel] [--n-max 6]

Example:
    python verify_askey.py --families all --format structured --report report.json
"""
import sys

from src.askey.cli import main


if __name__ == "__main__":
    sys.exit(main())
