# expression.py - the small wave-number expression language: tokenizer, parser, printer, evaluator
#
# sum   ::= prod (('+' | '-') prod)*
# prod  ::= unary (('*' | '/' | 'circ') unary)*
# unary ::= func '(' args ')' | atom
# atom  ::= 'w(' rational ',' rational ')' | number | '(' sum ')'
#
# Numbers are integers, decimals or p/q rationals, optionally signed and
# optionally suffixed with 'i' for an imaginary literal; a bare 'i' is the
# imaginary unit. Offsets in syntax errors are 1-based character positions.
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .exceptions import ArgumentError, EvaluationError, ExpressionSyntaxError, InvalidRationalError, WaveNumberError
from .integral import integral
from .multiplicative import IDENTITY, MultWave, mw_inverse, mw_product, mw_reflect_I, mw_reflect_R, mw_root, mw_sample
from .periodic import PeriodicSeq, as_seq, conj, ew_product, ew_quotient, inverse, norm, orth_conj, root_n
from .polar import Term
from .rational import format_rational, reduce
from .sieve import circ_product

logger = logging.getLogger(__name__)

FUNCTIONS = {
    'conj': 1,
    'orthconj': 1,
    'inv': 1,
    'root': 2,
    'integral': 1,
    'norm': 1,
}

PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2, 'circ': 2}

_TOKEN = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>\d+/\d+i?|\d+(?:\.\d+)?i?)
  | (?P<name>[A-Za-z_]+)
  | (?P<op>[-+*/(),])
''', re.VERBOSE)

_ATOM_START = ('number', 'i', 'w(', '(', '-', '+') + tuple(FUNCTIONS)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


@dataclass(frozen=True)
class Number:
    value: Fraction
    imaginary: bool = False


@dataclass(frozen=True)
class Wave:
    f: Fraction
    g: Fraction


@dataclass(frozen=True)
class Call:
    func: str
    args: Tuple['Expr', ...]


@dataclass(frozen=True)
class Binary:
    op: str
    left: 'Expr'
    right: 'Expr'


Expr = Union[Number, Wave, Call, Binary]
Value = Union[MultWave, PeriodicSeq, float]


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ExpressionSyntaxError(pos + 1, ('number', 'name', 'operator'), text[pos])
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), pos + 1))
        pos = match.end()
    tokens.append(Token('end', '', len(text) + 1))
    return tokens


def _literal(token: Token) -> Fraction:
    text = token.text.rstrip('i')
    if '/' not in text:
        return Fraction(text)
    num, den = text.split('/')
    try:
        return reduce(int(num), int(den))
    except InvalidRationalError:
        raise ExpressionSyntaxError(token.offset, ['nonzero denominator'], token.text) from None


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, ahead: int = 1) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        self.pos += 1
        return token

    def fail(self, expected) -> None:
        raise ExpressionSyntaxError(self.current.offset, expected, self.current.text)

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            self.fail([text])
        return self.advance()

    def parse(self) -> Expr:
        expr = self.sum()
        if self.current.kind != 'end':
            self.fail(['+', '-', '*', '/', 'circ', 'end of input'])
        return expr

    def sum(self) -> Expr:
        left = self.prod()
        while self.current.kind == 'op' and self.current.text in '+-':
            op = self.advance().text
            left = Binary(op, left, self.prod())
        return left

    def prod(self) -> Expr:
        left = self.unary()
        while (self.current.kind == 'op' and self.current.text in '*/') or \
                (self.current.kind == 'name' and self.current.text == 'circ'):
            op = self.advance().text
            left = Binary(op, left, self.unary())
        return left

    def unary(self) -> Expr:
        token = self.current
        if token.kind == 'name' and token.text in FUNCTIONS:
            self.advance()
            self.expect('(')
            args = [self.sum()]
            while self.current.text == ',' and self.current.kind == 'op':
                self.advance()
                args.append(self.argument(token.text))
            self.expect(')')
            if len(args) != FUNCTIONS[token.text]:
                raise ExpressionSyntaxError(
                    token.offset, [f'{FUNCTIONS[token.text]} argument(s) for {token.text}'], token.text)
            return Call(token.text, tuple(args))
        return self.atom()

    def argument(self, func: str) -> Expr:
        if func == 'root':
            start = self.current
            value = self.rational()
            if value.denominator != 1 or value < 1:
                raise ExpressionSyntaxError(start.offset, ['positive integer root order'], start.text)
            return Number(value)
        return self.sum()

    def atom(self) -> Expr:
        token = self.current
        if token.kind == 'name' and token.text == 'w' and self.peek().text == '(':
            self.advance()
            self.advance()
            f = self.rational()
            self.expect(',')
            g = self.rational()
            self.expect(')')
            return Wave(f, g)
        if token.kind == 'op' and token.text == '(':
            self.advance()
            expr = self.sum()
            self.expect(')')
            return expr
        if token.kind == 'number' or (token.kind == 'name' and token.text == 'i') or \
                (token.kind == 'op' and token.text in '+-' and self.peek().kind in ('number', 'name')):
            return self.number()
        self.fail(_ATOM_START)

    def signed(self) -> int:
        if self.current.kind == 'op' and self.current.text in '+-':
            return -1 if self.advance().text == '-' else 1
        return 1

    def number(self) -> Number:
        sign = self.signed()
        token = self.current
        if token.kind == 'name' and token.text == 'i':
            self.advance()
            return Number(Fraction(sign), imaginary=True)
        if token.kind != 'number':
            self.fail(['number', 'i'])
        self.advance()
        imaginary = token.text.endswith('i')
        return Number(sign * _literal(token), imaginary)

    def rational(self) -> Fraction:
        sign = self.signed()
        token = self.current
        if token.kind != 'number' or token.text.endswith('i'):
            self.fail(['rational'])
        self.advance()
        return sign * _literal(token)


def parse(text: str) -> Expr:
    return Parser(text).parse()


def _print_number(node: Number) -> str:
    if node.imaginary:
        if node.value == 1:
            return 'i'
        if node.value == -1:
            return '-i'
        return f'{format_rational(node.value)}i'
    return format_rational(node.value)


def to_text(node: Expr, parent: int = 0, right: bool = False) -> str:
    """Canonical text; parse(to_text(e)) == e"""
    if isinstance(node, Number):
        return _print_number(node)
    if isinstance(node, Wave):
        return f'w({format_rational(node.f)},{format_rational(node.g)})'
    if isinstance(node, Call):
        return f'{node.func}({", ".join(to_text(a) for a in node.args)})'
    level = PRECEDENCE[node.op]
    text = f'{to_text(node.left, level)} {node.op} {to_text(node.right, level, right=True)}'
    if level < parent or (right and level == parent):
        return f'({text})'
    return text


def _sampled(value: Value) -> PeriodicSeq:
    if isinstance(value, MultWave):
        return mw_sample(value)
    return as_seq(value)


def _constant(node: Number) -> PeriodicSeq:
    value = complex(node.value) * (1j if node.imaginary else 1)
    return PeriodicSeq.constant(value)


def _call(node: Call, args: List[Value]) -> Value:
    func, x = node.func, args[0]
    if func == 'norm':
        return float(norm(_sampled(x)))
    if func == 'integral':
        return integral(_sampled(x))
    if func == 'conj':
        return mw_reflect_R(x) if isinstance(x, MultWave) else conj(_sampled(x))
    if func == 'orthconj':
        return mw_reflect_I(x) if isinstance(x, MultWave) else orth_conj(_sampled(x))
    if func == 'inv':
        return mw_inverse(x) if isinstance(x, MultWave) else inverse(_sampled(x))
    order = int(node.args[1].value)
    return mw_root(x, order) if isinstance(x, MultWave) else root_n(_sampled(x), order)


def _binary(op: str, a: Value, b: Value) -> Value:
    both_waves = isinstance(a, MultWave) and isinstance(b, MultWave)
    if op == 'circ':
        if not both_waves:
            raise ArgumentError('circ needs two multiplicative wave numbers')
        return circ_product(a, b)
    if op == '*':
        return mw_product(a, b) if both_waves else ew_product(_sampled(a), _sampled(b))
    if op == '/':
        return mw_product(a, mw_inverse(b)) if both_waves else ew_quotient(_sampled(a), _sampled(b))
    if op == '+':
        return _sampled(a) + _sampled(b)
    return _sampled(a) - _sampled(b)


def evaluate_value(node: Expr) -> Value:
    """Evaluate keeping wave literals exact; products and quotients of waves stay waves"""
    try:
        if isinstance(node, Number):
            return _constant(node)
        if isinstance(node, Wave):
            return MultWave(node.f, node.g)
        if isinstance(node, Call):
            args = [evaluate_value(node.args[0])]
            return _call(node, args)
        return _binary(node.op, evaluate_value(node.left), evaluate_value(node.right))
    except EvaluationError:
        raise
    except WaveNumberError as error:
        raise EvaluationError(to_text(node), error) from error


def evaluate(node: Union[Expr, str]) -> Union[PeriodicSeq, float]:
    if isinstance(node, str):
        node = parse(node)
    value = evaluate_value(node)
    logger.debug(f'evaluated {to_text(node)}')
    return value if isinstance(value, float) else _sampled(value)


def _summands(node: Expr, sign: int = 1) -> List[Tuple[int, Expr]]:
    if isinstance(node, Binary) and node.op in '+-':
        right_sign = sign if node.op == '+' else -sign
        return _summands(node.left, sign) + _summands(node.right, right_sign)
    return [(sign, node)]


def _as_term(sign: int, node: Expr) -> Term:
    """A summand as (coefficient, wave): a wave, a coefficient times a wave, or a bare coefficient"""
    value = evaluate_value(node)
    if isinstance(value, MultWave):
        return sign, value
    if isinstance(node, Binary) and node.op == '*':
        left, right = evaluate_value(node.left), evaluate_value(node.right)
        if isinstance(right, MultWave) and not isinstance(left, MultWave):
            return sign * _sampled(left), right
        if isinstance(left, MultWave) and not isinstance(right, MultWave):
            return sign * _sampled(right), left
    return sign * _sampled(value), IDENTITY


def collect_terms(node: Union[Expr, str]) -> List[Term]:
    """Split a sum expression into polar-sum terms"""
    if isinstance(node, str):
        node = parse(node)
    return [_as_term(sign, summand) for sign, summand in _summands(node)]

