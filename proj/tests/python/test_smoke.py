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

import numpy as np
import pytest

import qcrb


def test_version_and_catalog():
    assert qcrb.version()
    ids = qcrb.catalog_ids()
    assert {"A", "B", "C", "D", "E", "D-appendix"} <= set(ids)
    listed = qcrb.catalog_list()
    assert [e["id"] for e in listed] == list(ids)


def test_analyze_b_attainable():
    report = qcrb.analyze("catalog:B")
    assert report["classification"] == "Attainable"
    assert report["sldcrb"] == pytest.approx(1.0, abs=1e-9)
    assert report["povm_trace_inverse"] == pytest.approx(1.0, abs=1e-8)


def test_analyze_model_dict_roundtrip():
    model = qcrb.export_model("A")
    report = qcrb.analyze(model, search=False)
    assert report["sldcrb"] == pytest.approx(60 / 91, abs=1e-9)
    assert report["classification"] == "CertifiedUnattainable"


def test_qfim_matches_closed_form_for_pure_qubit():
    rho = np.array([[1, 0], [0, 0]], dtype=complex)
    d1 = np.array([[0, 1], [1, 0]], dtype=complex)
    d2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
    j, cs = qcrb.qfim(rho, [d1, d2])
    np.testing.assert_allclose(j, 4 * np.eye(2), atol=1e-12)
    assert cs == pytest.approx(0.5, abs=1e-12)


def test_povm_report_and_optimizer():
    model = qcrb.export_model("B")
    report = qcrb.analyze(model)
    povm_json = report["povm"]
    povm, code = qcrb.povm_report(model, povm_json)
    assert code is None
    assert povm["trace_inverse"] == pytest.approx(1.0, abs=1e-8)
    opt = qcrb.optimize(model, restarts=2, max_evals=2000, seed=3)
    assert opt["best_value"] >= 1.0 - 1e-6


def test_errors_raise():
    with pytest.raises(qcrb.Error):
        qcrb.export_model("nope")
    with pytest.raises(ValueError):
        qcrb.analyze("{not json")
