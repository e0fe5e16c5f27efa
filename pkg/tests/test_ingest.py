import hashlib
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from citerhythm import (
    AlignmentError,
    Collective,
    DomainError,
    LayoutError,
    ManifestError,
    MatrixParseError,
    PCMatrix,
    add,
    build_collective,
    fixture_path,
    load_manifest,
    observed_all,
    parse_manifest,
    parse_matrix,
    read_matrix_file,
    write_matrix,
)
from helpers import random_matrix

FIXTURES = [
    "china.csv",
    "scim_minus_china.csv",
    "brazil.csv",
    "netherlands.csv",
    "scim_minus_brazil_netherlands.csv",
    "scim_total.csv",
]


class TestParse:
    def test_china_fixture(self, china):
        assert china.first_year == 2015
        assert china.n == 10
        assert china.pub_count(2015) == 74
        assert china.cite_count(2015, 2016) == 104
        assert sum(china.cites[0]) == 2149

    def test_minimal_one_year_document(self):
        m = parse_matrix("year,pubs,2020\n2020,10,5\n")
        assert m.n == 1
        assert m.pubs == (10.0,)
        assert m.cites == ((5.0,),)

    def test_explicit_zero_is_parsed_as_zero(self, netherlands):
        assert netherlands.cite_count(2022, 2022) == 0.0

    def test_non_numeric_cell_position_reported(self):
        text = "year,pubs,2020,2021\n2020,1,2,x\n2021,1,,3\n"
        with pytest.raises(MatrixParseError) as err:
            parse_matrix(text)
        assert err.value.line == 2
        assert err.value.column == 4

    def test_negative_value_rejected(self):
        text = "year,pubs,2020,2021\n2020,1,2,-3\n2021,1,,3\n"
        with pytest.raises(DomainError):
            parse_matrix(text)

    def test_below_diagonal_must_be_blank(self):
        text = "year,pubs,2020,2021\n2020,1,2,3\n2021,1,0,3\n"
        with pytest.raises(LayoutError) as err:
            parse_matrix(text)
        assert err.value.line == 3

    def test_missing_cell_above_diagonal_rejected(self):
        text = "year,pubs,2020,2021\n2020,1,,3\n2021,1,,3\n"
        with pytest.raises(MatrixParseError):
            parse_matrix(text)

    def test_ragged_row_rejected(self):
        text = "year,pubs,2020,2021\n2020,1,2\n2021,1,,3\n"
        with pytest.raises(LayoutError):
            parse_matrix(text)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "pubs,year,2020\n",
            "year,pubs,2020,abc\n",
            "year,pubs,2020,2022\n",  # gap in citing years
            "year,pubs,2020\n",  # no data rows
            "year,pubs,2020\n2021,1,2\n",  # wrong publication year
        ],
    )
    def test_layout_errors(self, text):
        with pytest.raises(LayoutError):
            parse_matrix(text)


class TestWrite:
    @pytest.mark.parametrize("name", FIXTURES)
    def test_fixtures_roundtrip_byte_identical(self, name):
        raw = fixture_path(name).read_bytes()
        m = parse_matrix(raw.decode("utf-8"))
        assert write_matrix(m).encode("utf-8") == raw

    def test_zero_matrix_layout(self):
        text = write_matrix(PCMatrix.zero(2000, 2))
        assert text == "year,pubs,2000,2001\n2000,0,0,0\n2001,0,,0\n"

    def test_fractional_counts_roundtrip(self):
        m = PCMatrix(first_year=2000, pubs=(2.5,), cites=((0.1,),))
        text = write_matrix(m)
        assert "2.5" in text and "0.1" in text
        assert parse_matrix(text) == m

    @given(st.integers(0, 60))
    def test_integers_written_without_decimal_point(self, v):
        m = PCMatrix(first_year=2000, pubs=(float(v),), cites=((0.0,),))
        assert f"\n2000,{v}," in write_matrix(m)

    def test_roundtrip_random(self):
        rng = random.Random(99)
        for _ in range(200):
            m = random_matrix(
                rng,
                n=rng.randint(1, 15),
                min_pubs=0,
                fractional=rng.random() < 0.5,
            )
            assert parse_matrix(write_matrix(m)) == m


class TestMatrixFile:
    def test_checksum_and_default_label(self):
        path = fixture_path("china.csv")
        mf = read_matrix_file(path)
        assert mf.matrix.label == "china"
        assert mf.sha256 == hashlib.sha256(path.read_bytes()).hexdigest()

    def test_explicit_label(self):
        mf = read_matrix_file(fixture_path("china.csv"), label="People's Republic")
        assert mf.matrix.label == "People's Republic"


class TestFixtureCorpus:
    @pytest.mark.parametrize(
        "name,key",
        [
            ("china.csv", "china"),
            ("scim_minus_china.csv", "scim_minus_china"),
            ("brazil.csv", "brazil"),
            ("netherlands.csv", "netherlands"),
            ("scim_minus_brazil_netherlands.csv", "scim_minus_brazil_netherlands"),
        ],
    )
    def test_observed_columns_match_published(self, name, key, golden):
        m = read_matrix_file(fixture_path(name)).matrix
        assert list(observed_all(m)) == golden["actors"][key]["observed"]
        assert list(m.pubs) == golden["actors"][key]["pubs"]

    def test_partition_cross_check(
        self, china, scim_minus_china, brazil, netherlands, scim_minus_brazil_netherlands
    ):
        assert add(china, scim_minus_china) == add(
            add(brazil, netherlands), scim_minus_brazil_netherlands
        )

    def test_missing_fixture(self):
        with pytest.raises(FileNotFoundError):
            fixture_path("atlantis.csv")


class TestManifest:
    def test_parse_shipped_manifest(self):
        man = parse_manifest(fixture_path("scim.manifest"))
        assert man.label == "SCIM"
        assert man.total_path.name == "scim_total.csv"
        assert [a.actor_id for a in man.actors] == ["china", "brazil", "netherlands"]
        assert man.assert_partition is False

    def test_load_shipped_manifest(self, scim):
        assert isinstance(scim, Collective)
        assert scim.actor_ids == ("china", "brazil", "netherlands")
        assert scim.total.label == "SCIM"
        assert scim.actor("netherlands").label == "Netherlands"

    def _write(self, tmp_path, body, name="test.manifest"):
        p = tmp_path / name
        p.write_text(body, encoding="utf-8")
        return p

    def test_missing_matrix_file_names_path(self, tmp_path):
        p = self._write(
            tmp_path,
            "[collective]\nlabel = X\n\n[actor]\nid = a\nlabel = A\npath = gone.csv\n",
        )
        with pytest.raises(ManifestError) as err:
            load_manifest(p)
        assert "gone.csv" in str(err.value)

    def test_window_mismatch_rejected(self, tmp_path, china, brazil):
        (tmp_path / "a.csv").write_text(write_matrix(china))
        shifted = PCMatrix(first_year=2016, pubs=brazil.pubs, cites=brazil.cites)
        (tmp_path / "b.csv").write_text(write_matrix(shifted))
        p = self._write(
            tmp_path,
            "[collective]\nlabel = X\n\n[actor]\nid = a\nlabel = A\npath = a.csv\n"
            "\n[actor]\nid = b\nlabel = B\npath = b.csv\n",
        )
        with pytest.raises(AlignmentError):
            load_manifest(p)

    def test_subset_violation_fails_load(self, tmp_path, china, brazil):
        (tmp_path / "total.csv").write_text(write_matrix(brazil))
        (tmp_path / "big.csv").write_text(write_matrix(china))
        p = self._write(
            tmp_path,
            "[collective]\nlabel = X\ntotal = total.csv\n\n"
            "[actor]\nid = big\nlabel = Big\npath = big.csv\n",
        )
        with pytest.raises(ManifestError) as err:
            load_manifest(p)
        assert "exceeds the total" in str(err.value)

    def test_assert_partition_residual_fails(self, tmp_path, china, scim_minus_china):
        (tmp_path / "total.csv").write_text(write_matrix(add(china, scim_minus_china)))
        (tmp_path / "china.csv").write_text(write_matrix(china))
        p = self._write(
            tmp_path,
            "[collective]\nlabel = X\ntotal = total.csv\nassert_partition = true\n\n"
            "[actor]\nid = china\nlabel = China\npath = china.csv\n",
        )
        with pytest.raises(ManifestError) as err:
            load_manifest(p)
        assert "partition residual" in str(err.value)

    def test_no_total_reconstructs_sum(self, tmp_path, china, brazil):
        (tmp_path / "a.csv").write_text(write_matrix(china))
        (tmp_path / "b.csv").write_text(write_matrix(brazil))
        p = self._write(
            tmp_path,
            "[collective]\nlabel = Sum\nassert_partition = true\n\n"
            "[actor]\nid = a\nlabel = A\npath = a.csv\n"
            "\n[actor]\nid = b\nlabel = B\npath = b.csv\n",
        )
        c = load_manifest(p)
        assert c.total == add(china, brazil)

    @pytest.mark.parametrize(
        "body,needle",
        [
            ("[actor]\nid = a\nlabel = A\npath = x.csv\n", "no [collective]"),
            ("[collective]\ntotal = t.csv\n", "needs a label"),
            ("[collective]\nlabel = X\n", "no actors"),
            (
                "[collective]\nlabel = X\n[actor]\nid = a\nlabel = A\n",
                "missing path",
            ),
            (
                "[collective]\nlabel = X\n"
                "[actor]\nid = a\nlabel = A\npath = x.csv\n"
                "[actor]\nid = a\nlabel = B\npath = y.csv\n",
                "duplicate actor id",
            ),
            ("[collective]\nlabel = X\nassert_partition = maybe\n", "true or false"),
            ("label = X\n", "outside any section"),
            ("[banana]\n", "unknown section"),
            ("[collective]\nlabel X\n", "expected key = value"),
            ("[collective]\nlabel = X\n[collective]\nlabel = Y\n", "duplicate [collective]"),
        ],
    )
    def test_malformed_manifests(self, tmp_path, body, needle):
        p = self._write(tmp_path, body)
        with pytest.raises(ManifestError) as err:
            parse_manifest(p)
        assert needle in str(err.value)

    def test_build_without_validation(self, tmp_path, china, brazil):
        # build_collective skips validation so callers can inspect reports
        (tmp_path / "total.csv").write_text(write_matrix(brazil))
        (tmp_path / "big.csv").write_text(write_matrix(china))
        p = self._write(
            tmp_path,
            "[collective]\nlabel = X\ntotal = total.csv\n\n"
            "[actor]\nid = big\nlabel = Big\npath = big.csv\n",
        )
        c = build_collective(parse_manifest(p))
        assert c.actor_ids == ("big",)
