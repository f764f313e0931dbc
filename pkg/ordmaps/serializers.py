# ordmaps/serializers.py
from rest_framework import serializers

from ordmaps.services import OrderedMap, decompose, parse_ordered_map
from utils.validators import PropcalcError


# ============= ORDERED MAP SERIALIZERS =============
class OrderedMapField(serializers.Field):
    """Reads and writes the textual form "[v1,v2,...]:n->m" """

    default_error_messages = {
        'invalid': 'Expected an ordered map such as "[1,2,2]:3->2": {message}',
    }

    def to_internal_value(self, data):
        if isinstance(data, OrderedMap):
            return data
        try:
            return parse_ordered_map(str(data))
        except PropcalcError as e:
            self.fail('invalid', message=str(e))

    def to_representation(self, value):
        return str(value)


class OrderedMapSerializer(serializers.Serializer):
    domain = serializers.IntegerField(min_value=0)
    codomain = serializers.IntegerField(min_value=0)
    values = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=True)

    def validate(self, data):
        try:
            data['map'] = OrderedMap(
                data['domain'], data['codomain'], tuple(v - 1 for v in data['values'])
            )
        except PropcalcError as e:
            raise serializers.ValidationError({"values": str(e)})
        return data

    def create(self, validated_data):
        return validated_data['map']

    def to_representation(self, f):
        return {
            'domain': f.domain,
            'codomain': f.codomain,
            'values': [v + 1 for v in f.values],
            'word': str(decompose(f)),
        }
