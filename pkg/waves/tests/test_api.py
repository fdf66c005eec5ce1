from django.test import override_settings
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from waves.basis import MAX_BASIS_ORDER


class EvaluateViewTests(APISimpleTestCase):
    def test_evaluate(self):
        response = self.client.post(reverse('waves-evaluate'), {'expression': 'w(1/4,0)'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json(), {'period': 4, 'values': [[0, 1], [-1, 0], [0, -1], [1, 0]]})

    def test_norm_is_a_value(self):
        response = self.client.post(reverse('waves-evaluate'), {'expression': 'norm(3)'}, format='json')
        self.assertEqual(response.json(), {'value': 3})

    def test_syntax_error_is_a_validation_error(self):
        response = self.client.post(reverse('waves-evaluate'), {'expression': 'w(1/2,)'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('offset 7', response.json()['expression'][0])

    def test_zero_denominator_is_a_validation_error(self):
        for text, offset in (('1/0', 1), ('w(1/0,0)', 3)):
            with self.subTest(text=text):
                response = self.client.post(reverse('waves-evaluate'), {'expression': text}, format='json')
                self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
                self.assertIn(f'offset {offset}', response.json()['expression'][0])
        response = self.client.post(reverse('waves-polar'), {'expression': 'w(1/0,0) + 1'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_domain_error(self):
        response = self.client.post(reverse('waves-evaluate'), {'expression': '1 / (w(1/2,0) + 1)'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()['kind'], 'division-by-zero-element')

    def test_missing_field(self):
        response = self.client.post(reverse('waves-evaluate'), {}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('expression', response.json())


class PolarAndIntegralViewTests(APISimpleTestCase):
    def test_polar(self):
        response = self.client.post(reverse('waves-polar'), {'expression': 'w(0,0) + w(0,1/2)'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json(), {'amplitude': {'period': 1, 'values': [[0, 0]]}, 'carrier': 'w(0,1/4)'})

    def test_integral(self):
        response = self.client.post(reverse('waves-integral'), {'expression': 'w(1/4,0)'}, format='json')
        self.assertEqual(response.json()['values'], [[0, 1], [-1, 1], [-1, 0], [0, 0]])


class BasisViewTests(APISimpleTestCase):
    def test_orthogonal(self):
        response = self.client.post(reverse('waves-basis'), {'n': 3}, format='json')
        data = response.json()
        self.assertEqual(data['n'], 3)
        self.assertFalse(data['orthonormal'])
        self.assertEqual(data['elements'][0]['values'], [[3, 0], [0, 0], [0, 0]])

    def test_orthonormal_of_order_one(self):
        response = self.client.post(reverse('waves-basis'), {'n': 1, 'orthonormal': True}, format='json')
        self.assertEqual(response.json()['elements'], [{'period': 1, 'values': [[1, 0]]}])

    def test_orthogonal_needs_two(self):
        response = self.client.post(reverse('waves-basis'), {'n': 1}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_order_is_capped(self):
        response = self.client.post(reverse('waves-basis'), {'n': MAX_BASIS_ORDER + 1}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('n', response.json())


class SieveViewTests(APISimpleTestCase):
    def test_sieve(self):
        response = self.client.post(reverse('waves-sieve'), {'limit': 50, 'trace': True}, format='json')
        data = response.json()
        self.assertEqual(data['count'], 15)
        self.assertEqual(data['primes'][-1], 47)
        self.assertEqual(len(data['trace']), 3)

    def test_trace_is_optional(self):
        response = self.client.post(reverse('waves-sieve'), {'limit': 10}, format='json')
        self.assertNotIn('trace', response.json())

    @override_settings(WAVES={'max_sieve_limit': 1000})
    def test_limit_cap(self):
        response = self.client.post(reverse('waves-sieve'), {'limit': 5000}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('limit', response.json())
