import pytest

from s3kit.metadata import (
    AccessRole,
    IndexOutOfRange,
    RaggedMatrix,
    UnknownRole,
    loop_usage,
    parse_loop_matrix,
)


class TestParseLoopMatrix:
    def test_lake_fixture_shape(self, loop_matrix_text):
        m = parse_loop_matrix(loop_matrix_text)
        assert [s.label for s in m.sections] == [
            "LakeTemperature",
            "soilthermprop_",
            "LakeTemperature",
        ]
        assert [s.loop_count for s in m.sections] == [8, 4, 9]
        assert len(m.variables) == 8
        assert m.total_loops == 21

    def test_single_cell(self):
        m = parse_loop_matrix(" |S|\nx |ro|\n")
        assert m.sections[0].loop_count == 1
        assert m.cells == ((AccessRole.READ_ONLY,),)

    def test_unknown_role(self):
        with pytest.raises(UnknownRole):
            parse_loop_matrix(" |S|\nx |xx|\n")

    def test_ragged(self):
        with pytest.raises(RaggedMatrix):
            parse_loop_matrix(" |S|\nx |ro ro|\ny |ro|\n")

    def test_unnamed_section_gets_label(self):
        m = parse_loop_matrix(" ||\nx |ro wo|\n")
        assert m.sections[0].label == "section0"

    def test_every_cell_has_one_role(self, loop_matrix_text):
        m = parse_loop_matrix(loop_matrix_text)
        for row in m.cells:
            assert len(row) == m.total_loops
            assert all(isinstance(c, AccessRole) for c in row)

    def test_duplicate_section_label_allowed(self, loop_matrix_text):
        m = parse_loop_matrix(loop_matrix_text)
        labels = [s.label for s in m.sections]
        assert labels.count("LakeTemperature") == 2


class TestLoopUsage:
    def test_first_loop_of_lake_section(self, loop_matrix_text):
        m = parse_loop_matrix(loop_matrix_text)
        usage = loop_usage(m, 0, 0)
        assert len(usage) == 8
        roles = dict(usage)
        assert roles["filter_lakec"] is AccessRole.READ_ONLY
        write_only = [v for v, r in usage if r is AccessRole.WRITE_ONLY]
        assert len(write_only) == 7
        assert write_only == [
            "lake_col_to_filter",
            "ocvts",
            "puddle",
            "frzn",
            "bottomconvect",
            "hc_soisno",
            "hc_soi",
        ]

    def test_all_unused_column(self):
        m = parse_loop_matrix(" |S|\nx |- -|\ny |- ro|\n")
        assert loop_usage(m, 0, 0) == []

    def test_second_section_first_loop(self, loop_matrix_text):
        m = parse_loop_matrix(loop_matrix_text)
        usage = loop_usage(m, 1, 0)
        assert usage == [("filter_lakec", AccessRole.READ_ONLY)]

    def test_read_write_role(self, loop_matrix_text):
        m = parse_loop_matrix(loop_matrix_text)
        usage = dict(loop_usage(m, 2, 0))
        assert usage["ocvts"] is AccessRole.READ_WRITE

    def test_index_out_of_range(self, loop_matrix_text):
        m = parse_loop_matrix(loop_matrix_text)
        with pytest.raises(IndexOutOfRange):
            loop_usage(m, 3, 0)
        with pytest.raises(IndexOutOfRange):
            loop_usage(m, 0, 8)
