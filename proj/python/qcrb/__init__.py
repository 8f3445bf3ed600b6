# Copyright 2026 The qcrb Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the qcrb analysis library. Reports come back as dicts."""

import json

from ._qcrb import Error, catalog_ids, qfim, version
from . import _qcrb

__all__ = ["Error", "analyze", "catalog_ids", "catalog_list", "export_model",
           "optimize", "povm_report", "qfim", "version"]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def export_model(entry_id):
    return json.loads(_qcrb.export_model(entry_id))


def catalog_list():
    return json.loads(_qcrb.catalog_list())


def analyze(model, **kwargs):
    """`model` is a model dict, a JSON string or "catalog:<id>"."""
    return json.loads(_qcrb.analyze(_text(model), **kwargs))


def povm_report(model, povm):
    """Returns (report, error_code or None)."""
    text, code = _qcrb.povm_report(_text(model), _text(povm))
    return json.loads(text), code


def optimize(model, **kwargs):
    return json.loads(_qcrb.optimize(_text(model), **kwargs))
