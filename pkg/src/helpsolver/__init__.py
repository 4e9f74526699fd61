"""Luthar-Passi (HeLP) solver for torsion units in integral group rings."""

from .cyclotomic import Cyclotomic, root_of_unity
from .tables import GroupData, load_bundled, parse_group_data

__version__ = "0.1.0"

__all__ = ["Cyclotomic", "GroupData", "load_bundled", "parse_group_data", "root_of_unity"]
