"""Global regularity of second-order twisted differential operators.

The top level re-exports the pieces most scripts need::

    from twistreg import CoeffTable, TwistedFrame, classify_twisted
    v = classify_twisted(CoeffTable(a20=-1, a02=-1), TwistedFrame(-1, -0.5, 1, -0.5))
    v.twisted_regular
"""

from .classify import Verdict, classify_source, classify_table, classify_twisted
from .errors import (
    AccuracyError,
    AmbiguityError,
    AnomalyError,
    CaseError,
    DomainError,
    FrameError,
    InputError,
    SectorError,
    TwistRegError,
)
from .operators import (
    CoeffTable,
    DeltaCase,
    TwistedFrame,
    WeylSymbol,
    discriminants,
    leading_form,
    solution_basis,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "AmbiguityError",
    "AnomalyError",
    "CaseError",
    "CoeffTable",
    "DeltaCase",
    "DomainError",
    "FrameError",
    "InputError",
    "SectorError",
    "TwistRegError",
    "TwistedFrame",
    "Verdict",
    "WeylSymbol",
    "classify_source",
    "classify_table",
    "classify_twisted",
    "discriminants",
    "leading_form",
    "solution_basis",
]
