# semantics/serializers.py
import json
import logging
from pathlib import Path

import numpy as np
from rest_framework import serializers

from groups.serializers import GroupSerializer, resolve_group
from groups.services import builtin_group, conjugation_action
from semantics.services import (
    BimonoidModel, exterior_model, group_algebra_model, trivial_model,
)
from utils.constants import BRAIDINGS, FLIP
from utils.helpers import setting
from utils.validators import PropcalcError

logger = logging.getLogger(__name__)

BUILTIN_MODELS = ('trivial', 'exterior', 'k[c2]', 'k[c3]', 'k[s3]', 'k[s3]:c2')


def _matrix(value):
    return np.asarray(value, dtype=np.int64).tolist()


# ============= MODEL SERIALIZERS =============
class BimonoidModelSerializer(serializers.Serializer):
    """
    Model JSON: {"p": 5, "dim": d, "mult": d×d², "unit": d×1, "comult": d²×d,
    "counit": 1×d, "group": <group>, "action": {"g": d×d, ...}, "braiding",
    "parity", "twist", "involution"}.

    Acting elements missing from "action" act as the identity.
    """

    name = serializers.CharField(required=False, default='model')
    p = serializers.IntegerField(required=False)
    dim = serializers.IntegerField(min_value=1)
    mult = serializers.JSONField()
    unit = serializers.JSONField()
    comult = serializers.JSONField()
    counit = serializers.JSONField()
    group = serializers.JSONField(required=False, default='trivial')
    action = serializers.DictField(child=serializers.JSONField(), required=False, default=dict)
    braiding = serializers.ChoiceField(choices=BRAIDINGS, default=FLIP)
    parity = serializers.ListField(child=serializers.IntegerField(), required=False)
    twist = serializers.JSONField(required=False)
    involution = serializers.JSONField(required=False)

    def validate(self, data):
        try:
            group = resolve_group(data['group'])
        except serializers.ValidationError as e:
            raise serializers.ValidationError({"group": e.detail})
        d = data['dim']
        matrices = []
        for g in group.elements():
            name = group.name_of(g)
            matrices.append(data['action'].get(name, np.eye(d, dtype=np.int64)))
        unknown = set(data['action']) - {group.name_of(g) for g in group.elements()}
        if unknown:
            raise serializers.ValidationError({"action": f"Unknown elements of {group.name}: {sorted(unknown)}"})
        try:
            data['model'] = BimonoidModel(
                data.get('p') or setting('PRIME'), d,
                data['mult'], data['unit'], data['comult'], data['counit'],
                group, tuple(matrices),
                braiding=data['braiding'],
                parity=data.get('parity'),
                twist=data.get('twist'),
                involution=data.get('involution'),
                name=data['name'],
            )
        except PropcalcError as e:
            raise serializers.ValidationError(str(e))
        return data

    def create(self, validated_data):
        return validated_data['model']

    def to_representation(self, model):
        group = model.group
        data = {
            'name': model.name,
            'p': model.p,
            'dim': model.dim,
            'mult': _matrix(model.mult),
            'unit': _matrix(model.unit),
            'comult': _matrix(model.comult),
            'counit': _matrix(model.counit),
            'group': GroupSerializer(group).data,
            'action': {group.name_of(g): _matrix(model.act(g)) for g in group.elements()},
            'braiding': model.braiding,
            'parity': list(model.parity),
            'twist': _matrix(model.twist),
        }
        if model.involution is not None:
            data['involution'] = _matrix(model.involution)
        return data


def builtin_model(name, p=None):
    """The shipped models; "k[s3]:c2" is k[S3] with C2 acting by conjugation with 213"""
    p = p or setting('PRIME')
    if name == 'trivial':
        return trivial_model(p)
    if name == 'exterior':
        return exterior_model(p)
    if name == 'k[s3]:c2':
        s3 = builtin_group('s3')
        return group_algebra_model(p, s3, conjugation_action(builtin_group('c2'), s3, s3.element('213')))
    if name in BUILTIN_MODELS:
        return group_algebra_model(p, builtin_group(name[2:-1]))
    raise serializers.ValidationError(
        f"Model {name!r} is neither a builtin ({', '.join(BUILTIN_MODELS)}) nor a file"
    )


def resolve_model(value, p=None):
    """
    Turn a CLI/API model argument into a BimonoidModel.

    Accepts a builtin name, a path to a model JSON file, or a parsed dict.
    """
    if isinstance(value, BimonoidModel):
        return value
    if isinstance(value, str) and value in BUILTIN_MODELS:
        return builtin_model(value, p)
    if isinstance(value, str):
        path = Path(value)
        if not path.exists():
            return builtin_model(value, p)
        value = json.loads(path.read_text())
        value.setdefault('name', path.stem)
    if p is not None:
        value = {**value, 'p': p}
    serializer = BimonoidModelSerializer(data=value)
    serializer.is_valid(raise_exception=True)
    model = serializer.save()
    logger.debug(f"Loaded {model}")
    return model
