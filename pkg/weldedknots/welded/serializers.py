from django.conf import settings

from rest_framework import serializers

from .gauss import canonical_code, parse_gauss_code
from .planar import pd_from_json, pd_to_gauss, validate_pd
from .reports import KINDS
from .search import SearchLimits


class GaussCodeSerializer(serializers.Serializer):
    code = serializers.CharField(allow_blank=True, trim_whitespace=True)

    def validate_code(self, code):
        return parse_gauss_code(code)

    @property
    def canonical(self):
        return canonical_code(self.validated_data['code'])


class SearchLimitsSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=KINDS)
    max_chords = serializers.IntegerField(required=False, allow_null=True, min_value=1)
    max_states = serializers.IntegerField(required=False, min_value=1)
    max_depth = serializers.IntegerField(required=False, min_value=1)

    def to_limits(self) -> SearchLimits:
        config = settings.APP_CONFIG
        data = self.validated_data
        return SearchLimits(max_chords=data.get('max_chords'),
                            max_states=data.get('max_states', config.max_states),
                            max_depth=data.get('max_depth', config.max_depth),
                            chord_margin=config.chord_margin)


class PlanarDiagramSerializer(serializers.Serializer):
    crossings = serializers.ListField(child=serializers.DictField())

    def validate(self, data):
        return pd_from_json(data)

    def report(self):
        P = self.validated_data
        violations = validate_pd(P)
        if violations:
            return {'valid': False, 'violations': [{'kind': v.kind, 'detail': v.detail} for v in violations]}
        gauss = pd_to_gauss(P)
        return {'valid': True, 'violations': [], 'gauss': canonical_code(gauss), 'chords': gauss.n,
                'crossings': P.m, 'classical': P.classical_count()}
