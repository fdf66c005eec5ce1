from django.urls import path

from . import views

urlpatterns = [
    path('evaluate/', views.EvaluateView.as_view(), name='waves-evaluate'),
    path('polar/', views.PolarView.as_view(), name='waves-polar'),
    path('integral/', views.IntegralView.as_view(), name='waves-integral'),
    path('basis/', views.BasisView.as_view(), name='waves-basis'),
    path('sieve/', views.SieveView.as_view(), name='waves-sieve'),
]
