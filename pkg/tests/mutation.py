"""Source-level mutants of the transcribed operator coefficients."""
from __future__ import annotations

import ast
import inspect
import textwrap
from dataclasses import dataclass
from fractions import Fraction

from qaskey import operators

TARGETS = ("_L_aw", "_Y", "_Yinv", "_Y11", "_Y12", "_Y21", "_Y22", "_matrix_Z")
_PLUMBING = {"_P", "_zfacs", "gen", "_L_aw", "_with"}
FACTOR = Fraction(8, 7)


@dataclass(frozen=True)
class Mutant:
    func: str
    kind: str  # "scale" (coefficient times 8/7) or "literal" (integer literal plus one)
    index: int
    label: str


def _tree(func):
    return ast.parse(textwrap.dedent(inspect.getsource(getattr(operators, func))))


def _is_plumbing(value):
    for node in ast.walk(value):
        if isinstance(node, ast.Call):
            f = node.func
            name = f.attr if isinstance(f, ast.Attribute) else getattr(f, "id", "")
            if name in _PLUMBING:
                return True
    return False


def _coef_assigns(fdef):
    return [s for s in fdef.body if isinstance(s, ast.Assign) and len(s.targets) == 1
            and isinstance(s.targets[0], ast.Name) and not _is_plumbing(s.value)]


def _int_literals(fdef):
    out = []
    for s in fdef.body:
        if isinstance(s, ast.Assign) and _is_plumbing(s.value):
            continue
        for node in ast.walk(s):
            if isinstance(node, ast.Constant) and type(node.value) is int:
                out.append(node)
    return out


def mutants():
    out = []
    for func in TARGETS:
        fdef = _tree(func).body[0]
        for i, s in enumerate(_coef_assigns(fdef)):
            out.append(Mutant(func, "scale", i, f"{func}:{s.targets[0].id}*8/7"))
        for i, c in enumerate(_int_literals(fdef)):
            out.append(Mutant(func, "literal", i, f"{func}:line{c.lineno}:{c.value}->{c.value + 1}"))
    return out


def build(m: Mutant):
    tree = _tree(m.func)
    fdef = tree.body[0]
    if m.kind == "scale":
        s = _coef_assigns(fdef)[m.index]
        s.value = ast.BinOp(left=s.value, op=ast.Mult(), right=ast.Name(id="_MUT", ctx=ast.Load()))
    else:
        c = _int_literals(fdef)[m.index]
        c.value = c.value + 1
    ast.fix_missing_locations(tree)
    ns = dict(vars(operators))
    ns["_MUT"] = FACTOR
    exec(compile(tree, f"<mutant {m.label}>", "exec"), ns)
    return ns[m.func]


def install(monkeypatch, m: Mutant):
    fn = build(m)
    monkeypatch.setattr(operators, m.func, fn)
    if m.func == "_L_aw":
        monkeypatch.setitem(operators._L_BUILDERS, "AW", fn)
