"""Main entry point for the :mod:`fairbound` command line tool.

Commands: ``bounds``, ``refine``, ``oracle``, ``plotdata``,
``example-instance`` and ``list-modes``.
"""
from __future__ import annotations

from .cli import app


def main() -> None:
    """Run the :mod:`fairbound` CLI."""
    app()


if __name__ == "__main__":  # pragma: no cover
    main()
