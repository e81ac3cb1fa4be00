"""
URL configuration for the Leavitt engine project.

Every endpoint lives under /api/ (see api/urls.py) and takes a POST with a JSON body
carrying the graph.
"""
from django.urls import path, include

urlpatterns = [
    path('api/', include('api.urls')),
]
