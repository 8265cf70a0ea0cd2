from django.urls import include, path
from rest_framework import routers
from rest_framework_nested.routers import NestedSimpleRouter

from weldedknots.welded.views import DiagramCertificateViewSet, DiagramViewSet, PlanarViewSet

router = routers.DefaultRouter()

router.register('diagram', DiagramViewSet, basename='diagram')
diagram_router = NestedSimpleRouter(router, r'diagram', lookup='diagram')
diagram_router.register(r'certificate', DiagramCertificateViewSet, basename='diagram-certificate')

router.register('planar', PlanarViewSet, basename='planar')

urlpatterns = [path('', include(router.urls)), path('', include(diagram_router.urls))]
