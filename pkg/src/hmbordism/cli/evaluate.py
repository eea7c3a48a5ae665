"""Evaluate parsed expressions against the library and render results."""

from __future__ import annotations

import json
from fractions import Fraction

from .. import checks
from ..bordism import TopClass, cp_generator, omega_coordinates, signature, top_product
from ..charclasses import (
    Basis,
    BigradedClass,
    CharNumbers,
    PPolynomial,
    convert_char_basis,
    genus_inverse_polynomial,
    l_polynomial,
)
from ..exact import DEFAULT_MAX_DIM, format_rational, l_characteristic_series, rational_json
from ..homology import (
    Coords,
    HClass,
    canonical_top_representative,
    h_product,
    naive_psi_product,
    product_pontrjagin_class,
    star,
)
from ..tables import (
    Decision,
    GroupDescriptor,
    ObstructionElement,
    dual_transverse_decision,
    l_group,
    resolvability,
    script_l_homotopy,
    transversality_invariant,
)
from .parser import (
    BinOp,
    Call,
    ExpressionError,
    Generator,
    Lift,
    ListExpr,
    Node,
    Number,
    Scale,
    Symbol,
    TupleExpr,
)


class EvaluationError(ExpressionError):
    exit_code = 2


class Omega(list):
    """omega coordinates of one class, or a dict of them per index."""


class Evaluator:
    def __init__(self, max_dim: int = DEFAULT_MAX_DIM):
        self.max_dim = max_dim

    def __call__(self, node: Node):
        try:
            return self.eval(node)
        except ExpressionError:
            raise
        except (ValueError, ArithmeticError) as exc:
            raise EvaluationError(str(exc), *node.pos) from exc

    def _wrap(self, node: Node, fn, *args):
        try:
            return fn(*args)
        except (ValueError, ArithmeticError) as exc:
            raise EvaluationError(f"{exc}", *node.pos) from exc

    def eval(self, node: Node):
        if isinstance(node, Number):
            return node.value
        if isinstance(node, Generator):
            return self._wrap(node, cp_generator, node.k, self.max_dim)
        if isinstance(node, Symbol):
            return node.name
        if isinstance(node, Lift):
            return HClass.lift(self.eval(node.body), node.index)
        if isinstance(node, Scale):
            return self.eval(node.body) * node.coefficient
        if isinstance(node, BinOp):
            return self._wrap(node, self._binop, node.op, self.eval(node.left), self.eval(node.right))
        if isinstance(node, (ListExpr, TupleExpr)):
            return [self.eval(x) for x in node.items]
        if isinstance(node, Call):
            args = [self.eval(a) for a in node.args]
            return self._wrap(node, getattr(self, f"fn_{node.name}"), *args)
        raise EvaluationError(f"cannot evaluate {node!r}", *node.pos)

    def _binop(self, op, a, b):
        if isinstance(a, TopClass) and isinstance(b, HClass):
            a = HClass.lift(a)
        if isinstance(b, TopClass) and isinstance(a, HClass):
            b = HClass.lift(b)
        if op == "*":
            if isinstance(a, TopClass) and isinstance(b, TopClass):
                return top_product(a, b, self.max_dim)
            if isinstance(a, HClass) and isinstance(b, HClass):
                return h_product(a, b, self.max_dim)
            if isinstance(a, Fraction) and not isinstance(b, Fraction):
                return b * a
            return a * b
        if op == "+":
            return a + b
        return a - b

    @staticmethod
    def _psi_terms(x):
        if isinstance(x, TopClass):
            return {None: x}
        return dict(x.to(Coords.PSI).terms)

    def fn_sig(self, x):
        return sum((signature(t) for t in self._psi_terms(x).values()), Fraction(0))

    def fn_omega(self, x):
        terms = self._psi_terms(x)
        if len(terms) == 1:
            return Omega(omega_coordinates(next(iter(terms.values()))))
        return {i: Omega(omega_coordinates(t)) for i, t in terms.items()}

    def _numbers(self, x, basis):
        terms = self._psi_terms(x)
        if len(terms) == 1:
            return convert_char_basis(next(iter(terms.values())).numbers, basis)
        if not terms:
            return convert_char_basis(CharNumbers(x.dimension), basis)
        return {i: convert_char_basis(t.numbers, basis) for i, t in terms.items()}

    def fn_pnum(self, x):
        return self._numbers(x, Basis.P)

    def fn_lnum(self, x):
        return self._numbers(x, Basis.L)

    def fn_Lpoly(self, k):
        return l_polynomial(int(k))

    def fn_Linv(self, k):
        return genus_inverse_polynomial(l_characteristic_series(int(k)), int(k))

    def fn_pclass(self, m_x, i_x, m_y, i_y, k):
        return product_pontrjagin_class(*(int(v) for v in (m_x, i_x, m_y, i_y, k)))

    def fn_canon(self, left, i, right, j):
        return canonical_top_representative(left, int(i), right, int(j))

    def fn_psi(self, h):
        return h.to(Coords.PSI)

    def fn_phi(self, h):
        return h.to(Coords.PHI)

    def fn_naive(self, a, b):
        return naive_psi_product(a, b, self.max_dim)

    def fn_star(self, i, j):
        return Fraction(star(int(i), int(j)))

    def fn_itilde(self, pairs):
        return transversality_invariant((int(d), int(i)) for d, i in pairs)

    def fn_decide_transverse(self, m, inv):
        return dual_transverse_decision(int(m), inv)

    def fn_resolvable(self, i, m):
        return resolvability(int(i), int(m))

    def fn_lgroup(self, m, variant="quadratic"):
        return l_group(int(m), variant)

    def fn_slh(self, m):
        return script_l_homotopy(int(m))

    def fn_check(self, n):
        return checks.run_check(int(n))


# --- rendering ----------------------------------------------------------------


def to_text(value) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Omega):
        return "(" + ", ".join(format_rational(v) for v in value) + ")"
    if isinstance(value, dict):
        return "\n".join(f"[{i}] {to_text(v)}" for i, v in value.items())
    if isinstance(value, list):
        return "[" + ", ".join(to_text(v) for v in value) + "]"
    return str(value)


def _type_name(value) -> str:
    names = {
        Fraction: "rational",
        Omega: "omega",
        TopClass: "top_class",
        HClass: "h_class",
        CharNumbers: "char_numbers",
        PPolynomial: "polynomial",
        BigradedClass: "bigraded_class",
        ObstructionElement: "obstruction_element",
        Decision: "decision",
        GroupDescriptor: "group",
        checks.CheckResult: "check",
    }
    if isinstance(value, dict):
        return "indexed_" + _type_name(next(iter(value.values())))
    return names.get(type(value), type(value).__name__)


def to_jsonable(value):
    if isinstance(value, Fraction):
        return rational_json(value)
    if isinstance(value, (Decision, GroupDescriptor)):
        return value.value
    if isinstance(value, checks.CheckResult):
        return {"number": value.number, "title": value.title, "passed": value.passed,
                "detail": value.detail}
    if isinstance(value, dict):
        return [{"index": i, "value": to_jsonable(v)} for i, v in value.items()]
    if isinstance(value, list):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


def to_json(value, expression: str) -> str:
    doc = {"expression": expression, "type": _type_name(value), "value": to_jsonable(value)}
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)
