import logging

from rest_framework import permissions, status
from rest_framework.response import Response
from rest_framework.views import APIView

from .basis import orthogonal_basis, orthonormal_basis
from .exceptions import WaveNumberError
from .expression import collect_terms, evaluate, parse
from .integral import integral
from .periodic import as_seq
from .polar import polar_decompose_sum
from .serializers import (
    BasisRequestSerializer, BasisSetSerializer, ExpressionSerializer, PeriodicSeqSerializer, PolarFormSerializer,
    SieveRequestSerializer, SieveResultSerializer, ValueSerializer,
)
from .sieve import sieve_trace

logger = logging.getLogger(__name__)


class WaveAPIView(APIView):
    """Shared plumbing: request validation and domain errors as 400 {'error': message}"""
    permission_classes = [permissions.AllowAny]
    authentication_classes = []
    request_serializer = None

    def post(self, request):
        serializer = self.request_serializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        try:
            return Response(self.compute(serializer.validated_data))
        except WaveNumberError as e:
            logger.info(f'{type(self).__name__} rejected request: {e}')
            return Response({'error': str(e), 'kind': e.kind}, status=status.HTTP_400_BAD_REQUEST)

    def compute(self, data):
        raise NotImplementedError


class EvaluateView(WaveAPIView):
    """Evaluate an expression to a sequence (or a real for norm)"""
    request_serializer = ExpressionSerializer

    def compute(self, data):
        value = evaluate(data['expression'])
        if isinstance(value, float):
            return ValueSerializer({'value': value}).data
        return PeriodicSeqSerializer(value).data


class PolarView(WaveAPIView):
    request_serializer = ExpressionSerializer

    def compute(self, data):
        form = polar_decompose_sum(collect_terms(data['expression']))
        return PolarFormSerializer(form).data


class IntegralView(WaveAPIView):
    request_serializer = ExpressionSerializer

    def compute(self, data):
        value = evaluate(parse(data['expression']))
        return PeriodicSeqSerializer(integral(as_seq(value))).data


class BasisView(WaveAPIView):
    request_serializer = BasisRequestSerializer

    def compute(self, data):
        if data['orthonormal']:
            basis = orthonormal_basis(data['n'])
        else:
            basis = orthogonal_basis(data['n'])
        return BasisSetSerializer(basis).data


class SieveView(WaveAPIView):
    request_serializer = SieveRequestSerializer

    def compute(self, data):
        state, rows = sieve_trace(data['limit'])
        primes = [p for p in state.known_primes if p <= data['limit']]
        payload = {'limit': data['limit'], 'count': len(primes), 'primes': primes}
        if data['trace']:
            payload['trace'] = rows
        return SieveResultSerializer(payload).data
