# braids/serializers.py
from rest_framework import serializers

from braids.services import braid_normal_form, parse_braid, parse_ribbon, ribbon_normal_form
from utils.validators import PropcalcError


# ============= BRAID SERIALIZERS =============
class BraidWordSerializer(serializers.Serializer):
    """{"word": "s1 s2' s1", "strands": 3}; ribbon words may start with tw(...)"""

    word = serializers.CharField(allow_blank=True)
    strands = serializers.IntegerField(min_value=0, required=False)
    ribbon = serializers.BooleanField(default=False)

    def validate(self, data):
        text = data['word'].strip() or 'e'
        parse = parse_ribbon if data['ribbon'] else parse_braid
        try:
            data['braid'] = parse(text, data.get('strands'))
        except PropcalcError as e:
            raise serializers.ValidationError({"word": str(e)})
        return data

    def create(self, validated_data):
        return validated_data['braid']


class NormalFormSerializer(serializers.Serializer):
    """Read-only dump of a braid or ribbon braid normal form"""

    def to_representation(self, braid):
        if hasattr(braid, 'twists'):
            twists, form = ribbon_normal_form(braid)
        else:
            twists, form = None, braid_normal_form(braid)
        data = {
            'strands': form.strands,
            'infimum': form.infimum,
            'canonical_length': form.canonical_length,
            'factors': [[v + 1 for v in factor] for factor in form.factors],
            'word': str(form.to_word()),
        }
        if twists is not None:
            data['twists'] = list(twists)
        return data
