"""
Entry point for arithmat, simply passes control up
to the root click command.
"""

from __future__ import annotations

from arithmat.cli.root import main

main()
