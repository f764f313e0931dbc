# composites/serializers.py
from rest_framework import serializers

from groups.serializers import LabelledPermutationSerializer


def element_representation(family, elt):
    """JSON form of a middle element; braid words are dumped in normal form"""
    if not family.braided:
        return LabelledPermutationSerializer(elt).data
    elt = family.canonical(elt)
    data = {
        'labels': [elt.group.name_of(a) for a in elt.labels.entries],
        'word': str(elt.word),
    }
    if elt.ribbon:
        data['twists'] = list(elt.braid.twists)
    return data


# ============= COMPOSITE SERIALIZERS =============
class DJGMorphismSerializer(serializers.Serializer):
    """Read-only dump of a pair (φ, j)"""

    def to_representation(self, morphism):
        return {
            'family': morphism.family.tag,
            'group': morphism.family.group.name,
            'domain': morphism.domain,
            'codomain': morphism.codomain,
            'mono': str(morphism.mono),
            'elt': element_representation(morphism.family, morphism.elt),
        }


class CompositeMorphismSerializer(serializers.Serializer):
    """Canonical JSON dump of a triple (in, elt, out)"""

    def to_representation(self, morphism):
        return {
            'family': morphism.family.tag,
            'group': morphism.family.group.name,
            'domain': morphism.domain,
            'codomain': morphism.codomain,
            'middle': morphism.middle,
            'in': str(morphism.in_mono),
            'elt': element_representation(morphism.family, morphism.elt),
            'out': str(morphism.out_mono),
        }
