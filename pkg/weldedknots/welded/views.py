import logging

import django.db.utils
from django.conf import settings
from django.db import transaction
from rest_framework import status, viewsets
from rest_framework.exceptions import ValidationError
from rest_framework.pagination import LimitOffsetPagination
from rest_framework.response import Response

from .errors import EmptyDiagram, GaussCodeError, InvalidPD, LimitsExceeded
from .gauss import parse_gauss_code
from .models import Certificate, Diagram
from .reports import build_report
from .serializers import GaussCodeSerializer, PlanarDiagramSerializer, SearchLimitsSerializer

logger = logging.getLogger(__name__)


def _paginator():
    config = settings.APP_CONFIG
    paginator = LimitOffsetPagination()
    paginator.max_limit = config.max_limit
    paginator.default_limit = config.default_limit
    return paginator


def _page(paginator, entries):
    return Response(data={'entries': [x.to_dict() for x in entries], 'limit': paginator.limit,
                          'offset': paginator.offset, 'overall_count': paginator.count},
                    status=status.HTTP_200_OK)


class DiagramViewSet(viewsets.ViewSet):
    """ViewSet for Gauss diagrams

    Diagrams are stored by their canonical Gauss code, so two codes differing
    only in basepoint or labels describe the same entry.
    """
    @staticmethod
    def create(request) -> Response:
        """Store a diagram

        :param request: HTTP Request carrying ``code``
        :return: Response
        """
        if request.data.get('code') is None:
            return Response(data={'msg': "No code provided"}, status=status.HTTP_400_BAD_REQUEST)
        serializer = GaussCodeSerializer(data={'code': request.data.get('code')})
        try:
            serializer.is_valid(raise_exception=True)
        except GaussCodeError as e:
            return Response(data={'msg': str(e)}, status=status.HTTP_400_BAD_REQUEST)
        except ValidationError as e:
            return Response(data={'msg': str(e.detail)}, status=status.HTTP_400_BAD_REQUEST)
        diagram = Diagram(code=serializer.canonical, chords=serializer.validated_data['code'].n)
        try:
            diagram.save()
        except django.db.utils.IntegrityError:
            return Response(data={'msg': "diagram {} already exists".format(diagram.code)},
                            status=status.HTTP_409_CONFLICT)
        return Response(data=diagram.to_dict(), status=status.HTTP_201_CREATED)

    @staticmethod
    def list(request) -> Response:
        """List diagrams

        :param request: HTTP Request
        :return: Response
        """
        paginator = _paginator()
        return _page(paginator, paginator.paginate_queryset(Diagram.objects.order_by('id'), request))

    @staticmethod
    def retrieve(request, pk=None) -> Response:
        try:
            diagram = Diagram.objects.get(id=pk)
        except Diagram.DoesNotExist:
            return Response(data={'msg': 'diagram {} not found'.format(pk)}, status=status.HTTP_404_NOT_FOUND)
        return Response(data=diagram.to_dict())


class DiagramCertificateViewSet(viewsets.ViewSet):
    """ViewSet for certificates per diagram

    The url must provide a primary key for a diagram. Creating a certificate
    runs the requested computation synchronously and stores its text report.
    """
    @staticmethod
    def list(request, diagram_pk=None) -> Response:
        try:
            diagram = Diagram.objects.get(id=diagram_pk)
        except Diagram.DoesNotExist:
            return Response(data={'msg': 'diagram {} not found'.format(diagram_pk)},
                            status=status.HTTP_404_NOT_FOUND)
        paginator = _paginator()
        return _page(paginator, paginator.paginate_queryset(Certificate.objects.filter(diagram=diagram), request))

    @staticmethod
    def retrieve(request, pk=None, diagram_pk=None) -> Response:
        certificates = list(Certificate.objects.filter(diagram_id=diagram_pk, id=pk))
        if len(certificates) == 0:
            return Response(data={'msg': 'certificate not found'}, status=status.HTTP_404_NOT_FOUND)
        return Response(data=certificates[0].to_dict())

    @staticmethod
    @transaction.atomic
    def create(request, diagram_pk=None) -> Response:
        """Compute and store a certificate

        :param request: Request carrying ``kind`` and optional search limits
        :param diagram_pk: Primary key to identify a diagram
        :return: Response
        """
        try:
            diagram = Diagram.objects.get(pk=diagram_pk)
        except Diagram.DoesNotExist:
            return Response(data={'msg': 'diagram {} not found'.format(diagram_pk)},
                            status=status.HTTP_404_NOT_FOUND)
        serializer = SearchLimitsSerializer(data=request.data)
        if not serializer.is_valid():
            return Response(data={'msg': str(serializer.errors)}, status=status.HTTP_400_BAD_REQUEST)
        kind = serializer.validated_data['kind']
        try:
            report = build_report(kind, parse_gauss_code(diagram.code), serializer.to_limits())
        except (EmptyDiagram, LimitsExceeded) as e:
            return Response(data={'msg': str(e)}, status=status.HTTP_422_UNPROCESSABLE_ENTITY)
        certificate = Certificate.from_report(diagram, report)
        certificate.save()
        logger.info("%s certificate for diagram %s: %s", kind, diagram.id, report.status)
        return Response(data=certificate.to_dict(), status=status.HTTP_201_CREATED)


class PlanarViewSet(viewsets.ViewSet):
    """Validation of planar diagram codes and their Gauss images"""

    @staticmethod
    def create(request) -> Response:
        serializer = PlanarDiagramSerializer(data=request.data)
        try:
            valid = serializer.is_valid()
        except InvalidPD as e:
            return Response(data={'msg': str(e)}, status=status.HTTP_400_BAD_REQUEST)
        if not valid:
            return Response(data={'msg': str(serializer.errors)}, status=status.HTTP_400_BAD_REQUEST)
        report = serializer.report()
        if not report['valid']:
            return Response(data=report, status=status.HTTP_422_UNPROCESSABLE_ENTITY)
        return Response(data=report, status=status.HTTP_200_OK)
