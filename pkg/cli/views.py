# cli/views.py
import logging

from django.conf import settings
from rest_framework import permissions, status
from rest_framework.response import Response
from rest_framework.views import APIView

from cli.serializers import EqualityRequestSerializer, SuiteRequestSerializer, TermRequestSerializer
from cli.services import run_eq, run_nf
from cli.tasks import run_suite
from utils.validators import PropcalcError

logger = logging.getLogger(__name__)


class CalculusView(APIView):
    """Validates the body with `serializer_class` and answers domain errors with 400"""
    permission_classes = [permissions.AllowAny]
    serializer_class = None

    def post(self, request):
        serializer = self.serializer_class(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        try:
            return self.perform(serializer.validated_data)
        except PropcalcError as e:
            logger.warning(f"{type(self).__name__} rejected a request: {str(e)}")
            return Response({"error": str(e)}, status=status.HTTP_400_BAD_REQUEST)

    def perform(self, data):
        raise NotImplementedError


class NormalizeView(CalculusView):
    """POST {"term", "category", "family", "group"} -> normal form"""
    serializer_class = TermRequestSerializer

    def perform(self, data):
        payload, _ = run_nf(data['term'], data['category'], data['family_obj'])
        return Response(payload)


class EqualityView(CalculusView):
    """POST {"left", "right", "category", "family", "group"} -> {"equal": ...}"""
    serializer_class = EqualityRequestSerializer

    def perform(self, data):
        payload, _ = run_eq(data['left'], data['right'], data['category'], data['family_obj'])
        return Response(payload)


class SuiteView(CalculusView):
    """POST {"suite", ...} -> report; queued (202) when tasks are not eager"""
    serializer_class = SuiteRequestSerializer

    def perform(self, data):
        result = run_suite.delay(**data)
        if settings.CELERY_TASK_ALWAYS_EAGER:
            report = result.get()
            code = status.HTTP_200_OK if 'error' not in report else status.HTTP_400_BAD_REQUEST
            return Response(report, status=code)
        return Response({"task_id": result.id, "suite": data['suite']}, status=status.HTTP_202_ACCEPTED)
