# groups/serializers.py
import json
import logging
from pathlib import Path

from rest_framework import serializers

from groups.services import (
    BUILTIN_NAMES, FiniteGroup, GroupTuple, LabelledPermutation, builtin_group,
)
from utils.validators import PropcalcError

logger = logging.getLogger(__name__)


# ============= GROUP SERIALIZERS =============
class GroupSerializer(serializers.Serializer):
    """Group JSON: {"order": k, "table": [...row-major...], "names": [...]}"""

    name = serializers.CharField(required=False, default='G')
    order = serializers.IntegerField(min_value=1)
    table = serializers.ListField(child=serializers.JSONField())
    names = serializers.ListField(child=serializers.CharField(), required=False)

    def validate_table(self, value):
        if value and all(isinstance(row, list) for row in value):
            flat = [entry for row in value for entry in row]
        else:
            flat = list(value)
        if not all(isinstance(entry, int) and not isinstance(entry, bool) for entry in flat):
            raise serializers.ValidationError("Table entries must be integers")
        return flat

    def validate(self, data):
        order = data['order']
        flat = data['table']
        if len(flat) != order * order:
            raise serializers.ValidationError(
                {"table": f"Expected {order * order} entries, got {len(flat)}"}
            )
        names = data.get('names') or ()
        if names and len(names) != order:
            raise serializers.ValidationError({"names": f"Expected {order} names"})
        rows = tuple(tuple(flat[r * order:(r + 1) * order]) for r in range(order))
        try:
            data['group'] = FiniteGroup(data['name'], rows, tuple(names))
        except PropcalcError as e:
            raise serializers.ValidationError({"table": str(e)})
        return data

    def create(self, validated_data):
        return validated_data['group']

    def to_representation(self, group):
        return {
            'name': group.name,
            'order': group.order,
            'table': [entry for row in group.table for entry in row],
            'names': list(group.names),
        }


def resolve_group(value):
    """
    Turn a CLI/API group argument into a FiniteGroup.

    Accepts a builtin name (trivial, c2, c3, s3), a path to a group JSON
    file, or an already parsed JSON dict.
    """
    if isinstance(value, FiniteGroup):
        return value
    if isinstance(value, str) and value in BUILTIN_NAMES:
        return builtin_group(value)
    if isinstance(value, str):
        path = Path(value)
        if not path.exists():
            raise serializers.ValidationError(
                f"Group {value!r} is neither a builtin ({', '.join(BUILTIN_NAMES)}) nor a file"
            )
        value = json.loads(path.read_text())
        value.setdefault('name', path.stem)
    serializer = GroupSerializer(data=value)
    serializer.is_valid(raise_exception=True)
    group = serializer.save()
    logger.debug(f"Loaded group {group.name} of order {group.order}")
    return group


# ============= LABELLED PERMUTATION SERIALIZERS =============
class LabelledPermutationSerializer(serializers.Serializer):
    """{"labels": ["g","e"], "perm": [2,1], "flags": "-+"}; perm is 1-based"""

    labels = serializers.ListField(child=serializers.CharField())
    perm = serializers.ListField(child=serializers.IntegerField(min_value=1))
    flags = serializers.RegexField(r'^[+-]*$', required=False, allow_blank=True)

    def validate(self, data):
        group = self.context['group']
        try:
            labels = GroupTuple.from_names(group, data['labels'])
            flags = None
            if 'flags' in data:
                flags = tuple(1 if f == '-' else 0 for f in data['flags'])
            data['element'] = LabelledPermutation(
                labels, tuple(v - 1 for v in data['perm']), flags
            )
        except PropcalcError as e:
            raise serializers.ValidationError(str(e))
        return data

    def create(self, validated_data):
        return validated_data['element']

    def to_representation(self, element):
        data = {
            'labels': [element.group.name_of(a) for a in element.labels.entries],
            'perm': [v + 1 for v in element.perm],
        }
        if element.flags is not None:
            data['flags'] = ''.join('-' if f else '+' for f in element.flags)
        return data
