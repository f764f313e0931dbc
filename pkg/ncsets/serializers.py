# ncsets/serializers.py
from rest_framework import serializers

from ncsets.services import GFMap, NCSetMap
from utils.validators import PropcalcError


# ============= FIBER SERIALIZERS =============
class FiberMapSerializer(serializers.Serializer):
    """
    {"cod": m, "fibers": [[[elt, "label"], ...], ...]} with 1-based elements.

    GF maps are read with "ordered": false; their fibers are dumped sorted.
    """

    cod = serializers.IntegerField(min_value=0)
    fibers = serializers.ListField(child=serializers.ListField(child=serializers.ListField()))
    ordered = serializers.BooleanField(default=True)

    def validate_fibers(self, value):
        for fiber in value:
            for pair in fiber:
                if len(pair) != 2 or not isinstance(pair[0], int) or isinstance(pair[0], bool):
                    raise serializers.ValidationError(f"Expected [element, label] pairs, got {pair!r}")
        return value

    def validate(self, data):
        group = self.context['group']
        if len(data['fibers']) != data['cod']:
            raise serializers.ValidationError(
                {"fibers": f"Expected {data['cod']} fibers, got {len(data['fibers'])}"}
            )
        cls = NCSetMap if data['ordered'] else GFMap
        try:
            fibers = tuple(
                tuple((element - 1, group.element(label)) for element, label in fiber)
                for fiber in data['fibers']
            )
            domain = sum(len(fiber) for fiber in fibers)
            data['map'] = cls(group, domain, data['cod'], fibers)
        except PropcalcError as e:
            raise serializers.ValidationError({"fibers": str(e)})
        return data

    def create(self, validated_data):
        return validated_data['map']

    def to_representation(self, f):
        return {
            'cod': f.codomain,
            'fibers': [[[e + 1, f.group.name_of(a)] for e, a in fiber] for fiber in f.fibers],
            'ordered': f.ordered,
        }


class SpanClassSerializer(serializers.Serializer):
    """Read-only dump of a span class with both legs in fiber form"""

    def to_representation(self, span):
        return {
            'variant': span.variant,
            'group': span.group.name,
            'domain': span.domain,
            'codomain': span.codomain,
            'middle': span.middle,
            'in': FiberMapSerializer(span.in_leg).data,
            'out': FiberMapSerializer(span.out_leg).data,
        }
