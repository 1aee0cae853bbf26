"""homlift: lifting properties, cylinders and homotopy on finite categories."""

from . import corpora, dsl, fincat, finrel, homotopy, lifting, suites
from .config import Bounds, DEFAULT_BOUNDS
from .errors import BoundExceeded, HomliftError

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "BoundExceeded",
    "DEFAULT_BOUNDS",
    "HomliftError",
    "corpora",
    "dsl",
    "fincat",
    "finrel",
    "homotopy",
    "lifting",
    "suites",
]
