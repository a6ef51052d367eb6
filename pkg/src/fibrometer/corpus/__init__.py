"""Small library of presentations used by the tests, demos and CLI.

Knot groups are tagged aspherical (knot exteriors are aspherical 3-manifolds).
"""

from importlib import resources

from ..presentation import parse_presentation

ASPHERICAL = frozenset({"trefoil", "figure_eight", "knot52"})


def names() -> list[str]:
    return sorted(f.name[:-4] for f in resources.files(__name__).iterdir() if f.name.endswith(".grp"))


def text(name: str) -> str:
    return resources.files(__name__).joinpath(f"{name}.grp").read_text()


def load(name: str):
    """``(Presentation, PhiMap)`` for a named fixture."""
    return parse_presentation(text(name))
