"""
Symbol evaluation and validation

Self-map checks sample circles of radius 1 - 2^-k; rho is the
pseudo-hyperbolic distance between the two self-maps' values.
"""

import math
from typing import Optional

import numpy as np
from loguru import logger

from ..geometry.disk import as_complex
from ..models.quadrature import RegionMask
from ..models.symbol import AnalyticSymbol, SelfMapReport, SymbolQuadruple, SymbolRole
from ..utils.config import config
from ..utils.errors import SelfMapError


def eval_symbol(s: AnalyticSymbol, z, order: int = 0):
    """s^{(order)}(z)"""
    value = s.evaluate(as_complex(z), order)
    return value.item() if np.ndim(value) == 0 else value


def validation_points(levels: Optional[int] = None, angles: Optional[int] = None) -> np.ndarray:
    """Circles of radius 1 - 2^-k, k = 1..levels, flattened level by level"""
    levels = levels or int(config.get("symbols", "validation_levels", default=20))
    angles = angles or int(config.get("symbols", "validation_angles", default=4096))
    radii = 1.0 - 2.0 ** -np.arange(1, levels + 1, dtype=float)
    theta = 2.0 * np.pi * np.arange(angles) / angles
    return (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()


def validate_self_map(
    s: AnalyticSymbol, levels: Optional[int] = None, angles: Optional[int] = None
) -> SelfMapReport:
    """
    Sample |s| on circles approaching the boundary

    The witness is the first sampled point with |s| > 1, or failing that the
    first with |s| = 1.
    """
    points = validation_points(levels, angles)
    modulus = np.abs(s(points))
    top = int(np.argmax(modulus))

    witness = None
    outside = np.flatnonzero(modulus > 1.0)
    touching = np.flatnonzero(modulus >= 1.0)
    if len(outside):
        witness = complex(points[outside[0]])
    elif len(touching):
        witness = complex(points[touching[0]])

    return SelfMapReport(
        passed=witness is None,
        sup_value=float(modulus[top]),
        sup_location=complex(points[top]),
        witness=witness,
        samples=len(points),
    )


def require_self_map(s: AnalyticSymbol, name: str = "phi") -> SelfMapReport:
    report = validate_self_map(s)
    if not report.passed:
        raise SelfMapError(
            f"{name} is not a self-map of the disk: |{name}| = {abs(s(report.witness)):.6g} "
            f"at z = {report.witness:.6g}",
            witness=report.witness,
        )
    logger.debug(f"{name} validated, sampled sup {report.sup_value:.6g}")
    return report


def build_quadruple(
    u: AnalyticSymbol,
    v: AnalyticSymbol,
    phi: AnalyticSymbol,
    psi: AnalyticSymbol,
    label: str = "",
    validate: bool = True,
) -> SymbolQuadruple:
    """Assemble (u, v, phi, psi) with roles set and both self-maps validated"""
    phi = phi.as_role(SymbolRole.SELF_MAP)
    psi = psi.as_role(SymbolRole.SELF_MAP)
    if validate:
        require_self_map(phi, "phi")
        require_self_map(psi, "psi")
    return SymbolQuadruple(
        u=u.as_role(SymbolRole.WEIGHT),
        v=v.as_role(SymbolRole.WEIGHT),
        phi=phi,
        psi=psi,
        label=label,
    )


def pseudo_distance_values(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """|a - b| / |1 - conj(a) b| without boundary checks, 0 where a == b"""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    numerator = np.abs(a - b)
    denominator = np.abs(1.0 - np.conj(a) * b)
    return np.divide(numerator, denominator, out=np.zeros(np.shape(numerator)), where=numerator > 0)


def rho(q4: SymbolQuadruple, z) -> np.ndarray:
    """rho(z) = d(phi(z), psi(z))"""
    z = as_complex(z)
    if q4.phi == q4.psi:
        return np.zeros(np.shape(z))
    return pseudo_distance_values(q4.phi(z), q4.psi(z))


def rho_at(q4: SymbolQuadruple, z) -> float:
    value = rho(q4, z)
    return float(value) if np.ndim(value) == 0 else value


def g_region_mask(q4: SymbolQuadruple, r: float) -> RegionMask:
    """G_r = {z : beta(phi(z), psi(z)) < r} = {rho < tanh r}"""
    s = math.tanh(r)
    return RegionMask(label=f"G_{r:g}", predicate=lambda z: rho(q4, z) < s)
