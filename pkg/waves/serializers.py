from rest_framework import serializers

from .basis import MAX_BASIS_ORDER
from .conf import get_wave_settings
from .expression import parse
from .exceptions import ExpressionSyntaxError, InvalidRationalError
from .integral import WindowedSeq
from .multiplicative import MultWave
from .periodic import PeriodicSeq
from .rational import format_rational, parse_rational

SIGNIFICANT_DIGITS = 12
ZERO_CUTOFF = 1e-12


def clean_float(x):
    """12 significant digits; |x| < 1e-12 is written as 0 and integral values as ints"""
    x = float(x)
    if abs(x) < ZERO_CUTOFF:
        return 0
    rounded = float(f'{x:.{SIGNIFICANT_DIGITS}g}')
    if rounded.is_integer():
        return int(rounded)
    return rounded


def format_complex(z) -> str:
    """Short text form: 1, -i, 0.5+0.866025403784i"""
    z = complex(z)
    re, im = clean_float(z.real), clean_float(z.imag)
    if im == 0:
        return str(re)
    imag = {1: 'i', -1: '-i'}.get(im, f'{im}i')
    if re == 0:
        return imag
    sign = '-' if im < 0 else '+'
    magnitude = 'i' if abs(im) == 1 else f'{abs(im)}i'
    return f'{re}{sign}{magnitude}'


def format_seq(seq: PeriodicSeq) -> str:
    return '{' + ', '.join(format_complex(z) for z in seq.values) + '}'


class RoundedFloatField(serializers.FloatField):
    def to_representation(self, value):
        return clean_float(value)


class ComplexPairField(serializers.Field):
    """A complex value as [re, im]"""

    default_error_messages = {
        'invalid': 'Expected a pair [re, im] of numbers.',
    }

    def to_representation(self, value):
        z = complex(value)
        return [clean_float(z.real), clean_float(z.imag)]

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            self.fail('invalid')
        try:
            return complex(float(data[0]), float(data[1]))
        except (TypeError, ValueError):
            self.fail('invalid')


class RationalField(serializers.CharField):
    """A rational in its "p/q" text form"""

    def to_representation(self, value):
        return format_rational(value)

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return parse_rational(text)
        except InvalidRationalError as e:
            raise serializers.ValidationError(str(e))


class PeriodicSeqSerializer(serializers.Serializer):
    period = serializers.IntegerField(min_value=1)
    values = serializers.ListField(child=ComplexPairField(), min_length=1)

    def validate(self, attrs):
        if len(attrs['values']) != attrs['period']:
            raise serializers.ValidationError('values must hold exactly one element per phase')
        return attrs

    def to_seq(self) -> PeriodicSeq:
        return PeriodicSeq.of(self.validated_data['values'])


class WindowedSeqSerializer(serializers.Serializer):
    lo = serializers.IntegerField()
    hi = serializers.IntegerField()
    values = serializers.ListField(child=ComplexPairField(), min_length=1)

    def validate(self, attrs):
        if attrs['lo'] > attrs['hi']:
            raise serializers.ValidationError('lo must not exceed hi')
        if len(attrs['values']) != attrs['hi'] - attrs['lo'] + 1:
            raise serializers.ValidationError('values must cover the window exactly')
        return attrs

    def to_window(self) -> WindowedSeq:
        data = self.validated_data
        return WindowedSeq(data['lo'], data['hi'], data['values'])


class PolarFormSerializer(serializers.Serializer):
    amplitude = PeriodicSeqSerializer()
    carrier = serializers.CharField()


class BasisSetSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    orthonormal = serializers.BooleanField()
    elements = PeriodicSeqSerializer(many=True)


class NGonTraceSerializer(serializers.Serializer):
    t = serializers.IntegerField(min_value=1)
    vertices = PeriodicSeqSerializer()
    edge_norm = RoundedFloatField(min_value=0)
    vertex_norm = RoundedFloatField(min_value=0)


class SieveTraceRowSerializer(serializers.Serializer):
    step = serializers.IntegerField(min_value=1)
    N = serializers.IntegerField(min_value=1)
    p_next = serializers.IntegerField(min_value=2)
    range_lo = serializers.IntegerField(min_value=2)
    range_hi = serializers.IntegerField(min_value=3)
    found = serializers.IntegerField(min_value=0)
    cum_count = serializers.IntegerField(min_value=1)


class SieveResultSerializer(serializers.Serializer):
    limit = serializers.IntegerField(min_value=3)
    count = serializers.IntegerField(min_value=0)
    primes = serializers.ListField(child=serializers.IntegerField(min_value=2))
    trace = SieveTraceRowSerializer(many=True, required=False)

    def validate(self, attrs):
        if attrs['count'] != len(attrs['primes']):
            raise serializers.ValidationError('count must equal the number of primes')
        return attrs


class FrontierSerializer(serializers.Serializer):
    frontier = serializers.ListField(child=serializers.IntegerField(min_value=2), min_length=1)


class ValueSerializer(serializers.Serializer):
    """A real result such as a norm"""

    value = RoundedFloatField()


class WaveField(serializers.CharField):
    """A wave number in its "w(f,g)" text form"""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return MultWave.parse(text)
        except InvalidRationalError as e:
            raise serializers.ValidationError(str(e))


class QuadraticRootsSerializer(serializers.Serializer):
    """Solver output: both roots, their residuals and the phases where they coincide"""

    roots = PeriodicSeqSerializer(many=True)
    residuals = serializers.ListField(child=RoundedFloatField(min_value=0), min_length=2, max_length=2)
    vanishing_factors = serializers.ListField(source='double_phases', child=serializers.IntegerField(min_value=1))
    double_root = serializers.BooleanField()
    poles = serializers.ListField(child=serializers.IntegerField(min_value=1))


class TwoTermSolutionSerializer(serializers.Serializer):
    """Serializes the dict built by two_term_report"""

    f2 = RationalField()
    g2 = RationalField()
    df = RationalField()
    dg = RationalField()
    roots = serializers.ListField(child=WaveField(), min_length=1)
    residuals = serializers.ListField(child=RoundedFloatField(min_value=0), min_length=1)
    vanishing_factors = serializers.ListField(child=serializers.IntegerField(min_value=1))
    stated_residual = RoundedFloatField(min_value=0)


def two_term_report(solution, residual, stated_residual) -> dict:
    return {
        'f2': solution.f2,
        'g2': solution.g2,
        'df': solution.df,
        'dg': solution.dg,
        'roots': [solution.member()],
        'residuals': [residual],
        'vanishing_factors': list(solution.vanishing_phases()),
        'stated_residual': stated_residual,
    }


class FactoredConditionsSerializer(serializers.Serializer):
    factors = PeriodicSeqSerializer(many=True)
    residual = RoundedFloatField(min_value=0)
    vanishing_factors = serializers.ListField(source='vanishing', child=serializers.IntegerField(min_value=1))


class ExpressionSerializer(serializers.Serializer):
    expression = serializers.CharField(max_length=4096)

    def validate_expression(self, value):
        try:
            parse(value)
        except ExpressionSyntaxError as e:
            raise serializers.ValidationError(str(e))
        return value


class BasisRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1, max_value=MAX_BASIS_ORDER)
    orthonormal = serializers.BooleanField(default=False)

    def validate(self, attrs):
        if attrs['n'] < 2 and not attrs['orthonormal']:
            raise serializers.ValidationError('an orthogonal basis needs n >= 2')
        return attrs


class SieveRequestSerializer(serializers.Serializer):
    limit = serializers.IntegerField(min_value=3)
    trace = serializers.BooleanField(default=False)

    def validate_limit(self, value):
        cap = get_wave_settings().max_sieve_limit
        if value > cap:
            raise serializers.ValidationError(f'limit must be <= {cap}')
        return value
