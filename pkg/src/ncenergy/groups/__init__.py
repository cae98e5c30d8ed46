from .coset import CosetEnumerationError, Presentation, parse_presentation, todd_coxeter
from .families import build, dihedral_table, presentation_for
from .iso import iso_check_small
from .spec import GroupSpec, SpecError
from .table import (
    GroupError,
    GroupTable,
    center,
    centralizer,
    centralizer_count,
    commutativity_degree,
    conjugacy_class_count,
    direct_product,
    element_orders,
    quotient_by_center,
    quotient_by_normal,
)

__all__ = [
    "CosetEnumerationError",
    "GroupError",
    "GroupSpec",
    "GroupTable",
    "Presentation",
    "SpecError",
    "build",
    "center",
    "centralizer",
    "centralizer_count",
    "commutativity_degree",
    "conjugacy_class_count",
    "dihedral_table",
    "direct_product",
    "element_orders",
    "iso_check_small",
    "parse_presentation",
    "presentation_for",
    "quotient_by_center",
    "quotient_by_normal",
    "todd_coxeter",
]
