"""Exact hyper-Catalan series: counting and enumerating subdigons, the
vertex/edge/face layered series, truncated zero identities, a series root
solver and SVG animation of the merge operator."""

from .hypercatalan import (
    TruncationSpec, TypeVector, VEF, catalan_row, enumerate_types, hyper_catalan, vef,
)
from .multipoly import E, F, MultiPoly, T, V, Variable
from .series import build_S, build_S_layered, verify_layer_zero
from .solver import GeometricPoly, approx_root, newton_root
from .subdigon import NULL, Node, Subdigon, decompose, enumerate_subdigons, nabla, type_of

__version__ = "0.1.0"
