"""unit_dimension file for ensuring the package is executable
as `unit-dimension` and `python -m unit_dimension`
"""
import sys
from typing import Any

from .cli import cli


def main(*args, **kwargs) -> Any:
    interactive = hasattr(sys, 'ps1')
    kwargs["standalone_mode"] = not interactive
    return cli(*args, **kwargs)


if __name__ == "__main__":
    main()
