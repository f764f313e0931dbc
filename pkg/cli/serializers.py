# cli/serializers.py
from rest_framework import serializers

from crossed.services import CrossedFamily
from groups.serializers import resolve_group
from semantics.serializers import resolve_model
from utils.constants import FAMILIES, SYMMETRIC
from utils.validators import PropcalcError

from cli.services import CATEGORIES, SPANS, SUITES


# ============= REQUEST SERIALIZERS =============
class FamilyMixin(serializers.Serializer):
    """Resolves "family" and "group" into a CrossedFamily under data['family_obj']"""

    family = serializers.ChoiceField(choices=FAMILIES, default=SYMMETRIC)
    group = serializers.JSONField(required=False, default='trivial')

    def validate(self, data):
        group = resolve_group(data['group'])
        data['group_obj'] = group
        data['family_obj'] = CrossedFamily(data['family'], group)
        return data


class TermRequestSerializer(FamilyMixin):
    term = serializers.CharField()
    category = serializers.ChoiceField(choices=CATEGORIES, default=SPANS)


class EqualityRequestSerializer(FamilyMixin):
    left = serializers.CharField()
    right = serializers.CharField()
    category = serializers.ChoiceField(choices=CATEGORIES, default=SPANS)


class SuiteRequestSerializer(serializers.Serializer):
    suite = serializers.ChoiceField(choices=SUITES)
    family = serializers.ChoiceField(choices=FAMILIES, default=SYMMETRIC)
    group = serializers.JSONField(required=False, default='c2')
    model = serializers.JSONField(required=False)
    max_n = serializers.IntegerField(min_value=0, max_value=5, required=False)
    samples = serializers.IntegerField(min_value=1, max_value=5000, required=False)
    seed = serializers.IntegerField(required=False)

    def validate_group(self, value):
        resolve_group(value)
        return value

    def validate_model(self, value):
        try:
            resolve_model(value)
        except PropcalcError as e:
            raise serializers.ValidationError(str(e))
        return value
