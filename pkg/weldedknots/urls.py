"""weldedknots URL Configuration

The `urlpatterns` list routes URLs to views. The API itself is defined in
``weldedknots.welded.urls``.
"""
from django.urls import include, path

from .welded import urls

urlpatterns = [
    path('', include(urls))
]
