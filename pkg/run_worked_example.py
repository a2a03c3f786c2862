"""Example script showing how to run the bound computations programmatically."""
from __future__ import annotations

from pathlib import Path

from fairbound.experiments import WorkedExampleConfig
from fairbound.utils import setup_logging


def main() -> None:
    """Configure and execute the three-agent example."""
    setup_logging()
    # Lower random_samples or set oracle_cells=None for a quicker run.
    WorkedExampleConfig(out=Path("results/worked_example"), progress=True).run()


if __name__ == "__main__":
    main()
