#!/usr/bin/env python3
"""Convenience script to run logmono during development."""

import sys

if __name__ == "__main__":
    sys.path.insert(0, "src")
    from logmono.__main__ import main

    sys.exit(main())
