#!/usr/bin/env python3
"""
Entry point for kronvpf CLI when called as `python -m kronvpf`
"""

from kronvpf.cli import main

if __name__ == "__main__":
    main()
