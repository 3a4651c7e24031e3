import json
import shutil

import pytest

from coho.realform import (DEFAULT_DATA_DIR, ParseError, ValidationError, cartan_decomp_dims, load_catalog, q0,
                           restricted_root_system)


def test_catalog_size_and_ids(catalog):
    assert len(catalog) == 75
    ids = [f.id for f in catalog]
    assert len(set(ids)) == len(ids)


@pytest.mark.parametrize("name,expected", [("sl(2,R)", 1), ("su(2,1)", 2), ("sl(3,R)", 2),
                                           ("complex:A1", 1), ("sp(6,R)", 6)])
def test_q0(form, name, expected):
    # q0 = (dim s - (rank g - rank k)) / 2
    assert q0(form(name)) == expected


def test_su21_restricted_system(form):
    rs = restricted_root_system(form("su(2,1)"))
    assert rs.non_reduced
    assert rs.mult == {(1,): 2, (-1,): 2, (2,): 1, (-2,): 1}


def test_cartan_decomposition_dims(catalog):
    for f in catalog:
        k, s = cartan_decomp_dims(f)
        assert k + s == f.dim_g
        assert k == f.expected["dim_k"]


@pytest.fixture
def copy_catalog(tmp_path):
    d = tmp_path / "forms"
    shutil.copytree(DEFAULT_DATA_DIR, d)
    return d


def test_bad_dim_k_is_validation_error(copy_catalog):
    p = copy_catalog / "sl_3_r.json"
    doc = json.loads(p.read_text())
    doc["expected"]["dim_k"] = 4
    p.write_text(json.dumps(doc))
    with pytest.raises(ValidationError, match=r"sl\(3,R\)"):
        load_catalog(copy_catalog)


def test_bad_multiplicity_is_validation_error(copy_catalog):
    p = copy_catalog / "su_2_1.json"
    doc = json.loads(p.read_text())
    doc["satake"]["double_mult"] = 3
    p.write_text(json.dumps(doc))
    with pytest.raises(ValidationError, match="dimension identity"):
        load_catalog(copy_catalog)


def test_malformed_json_is_parse_error(copy_catalog):
    (copy_catalog / "g.json").write_text("{ not json")
    with pytest.raises(ParseError):
        load_catalog(copy_catalog)


def test_missing_directory(tmp_path):
    with pytest.raises(ParseError):
        load_catalog(tmp_path / "nope")


def test_env_var_default(copy_catalog, monkeypatch):
    (copy_catalog / "g.json").unlink()
    monkeypatch.setenv("COHO_DATA_DIR", str(copy_catalog))
    assert len(load_catalog()) == 74
