"""Exact verification of Askey-Wilson dualities, algebra relations and limits."""
from .core import Laurent, LinOp, Mat2, QaskeyError, Seq, Vec2, VerificationReport
from .families import P1, P2, P2_PAIR, P2_TRIPLE, ParamSet, eigenvalue, eval_family, make_params

__version__ = "0.1.0"

__all__ = [
    "Laurent", "LinOp", "Mat2", "QaskeyError", "Seq", "Vec2", "VerificationReport",
    "P1", "P2", "P2_PAIR", "P2_TRIPLE", "ParamSet", "eigenvalue", "eval_family", "make_params",
]
