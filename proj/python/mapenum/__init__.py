"""Exact map-enumeration generating functions from recurrence asymptotics."""

from ._mapenum import (  # noqa: F401
    ConsistencyError,
    ShortfallError,
    __version__,
    cm_expand,
    counts,
    derive_zg,
    freud_polynomial,
    genus0_closed,
    golden_tables,
    orbit_x,
    q_roots,
    verify,
    z0_series,
)
