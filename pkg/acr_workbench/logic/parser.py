"""Text grammar for GML∃ formulas, parsed with lark.

Grammar: ``T``, ``p<int>``, ``!f``, ``(f & f)``, ``(f | f)``, ``<>=<int> f``,
``E>=<int> f``; whitespace is ignored between tokens. Disjunction is sugar
and parses to ``!(!f & !g)``.
"""
from __future__ import annotations

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from acr_workbench.errors import FormulaSyntaxError, InvalidParameterError
from acr_workbench.logic.syntax import TOP, And, Diamond, Formula, GlobalExists, Not, Prop, disjunction

GRAMMAR = r"""
?start: formula

?formula: "T"                          -> top
        | PROP                         -> prop
        | "!" formula                  -> neg
        | "(" formula "&" formula ")"  -> conj
        | "(" formula "|" formula ")"  -> disj
        | "<>=" INT formula            -> diamond
        | "E>=" INT formula            -> exists

PROP: /p[0-9]+/

%import common.INT
%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser="lalr", propagate_positions=False)


@v_args(inline=True)
class _FormulaBuilder(Transformer):
    def top(self) -> Formula:
        return TOP

    def prop(self, token: Token) -> Formula:
        index = int(token[1:])
        if index < 1:
            raise FormulaSyntaxError("proposition indices start at 1", token.start_pos)
        return Prop(index)

    def neg(self, body: Formula) -> Formula:
        return Not(body)

    def conj(self, left: Formula, right: Formula) -> Formula:
        return And(left, right)

    def disj(self, left: Formula, right: Formula) -> Formula:
        return disjunction([left, right])

    def diamond(self, grade: Token, body: Formula) -> Formula:
        return Diamond(_grading(grade), body)

    def exists(self, grade: Token, body: Formula) -> Formula:
        return GlobalExists(_grading(grade), body)


def _grading(token: Token) -> int:
    value = int(token)
    if value < 1:
        raise FormulaSyntaxError("grading must be at least 1", token.start_pos)
    return value


def parse_formula(text: str) -> Formula:
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as exc:
        position = getattr(exc, "pos_in_stream", None)
        raise FormulaSyntaxError(f"cannot parse formula: {exc.__class__.__name__}", position) from exc
    try:
        return _FormulaBuilder().transform(tree)
    except VisitError as exc:
        original = exc.orig_exc
        if isinstance(original, FormulaSyntaxError):
            raise original from None
        if isinstance(original, InvalidParameterError):
            raise FormulaSyntaxError(str(original)) from original
        raise


__all__ = ["GRAMMAR", "parse_formula"]
