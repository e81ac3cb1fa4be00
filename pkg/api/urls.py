from django.urls import path
from . import views

urlpatterns = [
    path('analyze/', views.analyze, name='analyze'),
    path('phi/', views.phi, name='phi'),
    path('reduce/', views.reduce, name='reduce'),
    path('dimension/', views.dimension, name='dimension'),
]
