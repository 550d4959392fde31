"""Fetch the bundled dataset fixtures: ``python -m nnselect.datasets``."""

from . import available, fetch

if __name__ == "__main__":
    fetch()
    for name, present in sorted(available().items()):
        print(f"{name}: {'ok' if present else 'MISSING'}")
