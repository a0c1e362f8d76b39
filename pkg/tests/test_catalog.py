import shutil

import pytest

from finegrad.catalog import DEFAULT_CATALOG, file_digest, load_catalog, parse_expression, parse_mat4
from finegrad.errors import CatalogCorrupt, UnknownName
from finegrad.exact import I
from finegrad.mat import I4, E, Mat4, pauli_tensor


def test_counts(cat):
    assert len(cat.gradings) == 8
    assert len(cat.real_forms) == 12
    assert len(cat.displayed) == 9
    assert len(cat.coefficients) == 23
    assert sum(cat.grading("gamma5").grading().dims) == 15


def test_expressions():
    assert parse_mat4("kron(s3, s3)") == pauli_tensor(3, 3)
    assert parse_mat4("E12 - 2*E21") == E(1, 2) - E(2, 1) * 2
    assert parse_mat4("diag(1, i, -1, -i)") == Mat4.diag(1, I, -1, -I)
    assert parse_mat4("I4") == I4
    assert parse_mat4("P^2", {"P": Mat4.diag(1, I, -1, -I)}) == Mat4.diag(1, -1, 1, -1)
    with pytest.raises(Exception):
        parse_expression("kron(s1")


def test_unknown_names(cat):
    with pytest.raises(UnknownName):
        cat.grading("gamma9")
    with pytest.raises(UnknownName):
        cat.real_form("su50")


def test_checksum_mismatch(tmp_path):
    path = tmp_path / "catalog.yaml"
    shutil.copy(DEFAULT_CATALOG, path)
    shutil.copy(str(DEFAULT_CATALOG) + ".sha256", str(path) + ".sha256")
    assert load_catalog(path).gradings.keys() == load_catalog().gradings.keys()
    path.write_text(path.read_text() + "\n# edited\n")
    with pytest.raises(CatalogCorrupt):
        load_catalog(path)


def _rewrite(tmp_path, old, new):
    text = DEFAULT_CATALOG.read_text().replace(old, new, 1)
    path = tmp_path / "catalog.yaml"
    path.write_text(text)
    (tmp_path / "catalog.yaml.sha256").write_text(file_digest(path) + "\n")
    return path


def test_validation_catches_bad_signature(tmp_path):
    path = _rewrite(tmp_path, "E31_1: \"1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 -1\"",
                    "E31_1: \"1 0 0 0; 0 1 0 0; 0 0 -1 0; 0 0 0 -1\"")
    with pytest.raises(CatalogCorrupt):
        load_catalog(path)


def test_errata_recorded(cat):
    (e,) = cat.errata
    assert (e.grading, e.form, e.part) == ("gamma8", "su31", "L7")
    t = cat.coefficient_table("gamma8", "su31")
    fixed = cat.corrected_table(t)
    assert fixed.alphas[6] == I and t.alphas[6] == 1
