import random

from hypothesis import given, settings
from hypothesis import strategies as st

from s3kit.corpus import scan_tree
from s3kit.fql import (
    CheckQuery,
    FileFilter,
    FqlQuery,
    MatchOptions,
    Pattern,
    execute,
    parse_fql,
)

import golden


class TestCheckExecution:
    def test_openmp_hit(self, hpc_tree):
        snap = scan_tree(hpc_tree)
        report = execute(parse_fql(golden.TABLE1_OPENMP), snap)
        assert report.matched
        terms = {h.term for h in report.hits}
        assert "pragma omp" in terms
        assert "!$OMP" in terms  # matches case-insensitively

    def test_empty_corpus(self):
        snap = golden.make_snapshot({})
        report = execute(parse_fql(golden.TABLE1_OPENMP), snap)
        assert not report.matched
        assert report.hits == ()

    def test_case_sensitivity_flag(self):
        snap = golden.make_snapshot({"a.f90": ["!$omp parallel"]})
        q = parse_fql("CHECK (!$OMP) WHERE (*)")
        assert execute(q, snap).matched
        assert not execute(q, snap, MatchOptions(case_sensitive=True)).matched

    def test_pragma_matches_hash_pragma(self):
        snap = golden.make_snapshot({"k.c": ["#pragma omp parallel for"]})
        report = execute(parse_fql("CHECK (pragma omp) WHERE (*)"), snap)
        assert report.matched and report.hits[0].line == 1

    def test_glob_filter(self):
        snap = golden.make_snapshot({"a.c": ["use mpi"], "b.f90": ["use mpi"]})
        report = execute(parse_fql("CHECK (use mpi) WHERE (*.f90)"), snap)
        assert [h.file for h in report.hits] == ["b.f90"]

    def test_hit_order_deterministic(self):
        snap = golden.make_snapshot(
            {"b.c": ["x", "x"], "a.c": ["x"], "c.c": ["no", "x"]}
        )
        report = execute(parse_fql("CHECK (x) WHERE (*)"), snap)
        assert [(h.file, h.line) for h in report.hits] == [
            ("a.c", 1),
            ("b.c", 1),
            ("b.c", 2),
            ("c.c", 2),
        ]

    def test_excerpt_capped(self):
        snap = golden.make_snapshot({"a.c": ["x" + "y" * 500]})
        report = execute(parse_fql("CHECK (x) WHERE (*)"), snap)
        assert len(report.hits[0].excerpt) == 200


class TestMaxExecution:
    def test_winner_31(self, hpc_tree):
        snap = scan_tree(hpc_tree)
        report = execute(parse_fql(golden.TABLE1_MPI_MAX), snap)
        assert report.winner is not None
        assert (report.winner.tag.major, report.winner.tag.minor) == (3, 1)

    def test_winner_20_after_removing_31_marker(self, mpi2_tree):
        snap = scan_tree(mpi2_tree)
        report = execute(parse_fql(golden.TABLE1_MPI_MAX), snap)
        assert (report.winner.tag.major, report.winner.tag.minor) == (2, 0)

    def test_no_match_winner_absent(self):
        snap = golden.make_snapshot({"a.c": ["nothing here"]})
        report = execute(parse_fql(golden.TABLE1_MPI_MAX), snap)
        assert report.winner is None

    def test_winner_dominates_all_matched(self):
        snap = golden.make_snapshot({"a.c": ["mpi.h", "MPI_AINT_ADD"]})
        report = execute(parse_fql(golden.TABLE1_MPI_MAX), snap)
        for check in report.checks:
            if check.matched:
                from s3kit.fql import normalize_version

                assert report.winner.tag >= normalize_version(check.tag)


class TestListExecution:
    def test_entries_preserve_order(self):
        snap = golden.make_snapshot({"a.c": ["schedule(runtime)"]})
        q = parse_fql(golden.TABLE1_SCHEDULING, mode="lenient")
        report = execute(q, snap)
        assert [e.tag for e in report.entries] == ["Static", "Dynamic", "Runtime"]
        assert [e.matched for e in report.entries] == [False, False, True]

    def test_matched_iff_hit_count_positive(self):
        snap = golden.make_snapshot({"a.c": ["schedule(static)", "schedule(static)"]})
        q = parse_fql(golden.TABLE1_SCHEDULING, mode="lenient")
        report = execute(q, snap)
        for e in report.entries:
            assert e.matched == (e.hit_count > 0)
        assert report.entries[0].hit_count == 2


# -- oracle equivalence and monotonicity --------------------------------

_LINE_WORDS = ["mpi", "omp", "pragma", "do", "end", "call", "x", "zz", "!$"]


def _random_corpus(rng, max_files=20, max_lines=50):
    files = {}
    for i in range(rng.randint(0, max_files)):
        lines = [
            " ".join(rng.choices(_LINE_WORDS, k=rng.randint(0, 5)))
            for _ in range(rng.randint(0, max_lines))
        ]
        files[f"f{i}.c"] = lines
    return files


def _random_check(rng):
    terms = tuple(rng.choice(_LINE_WORDS) for _ in range(rng.randint(1, 4)))
    return CheckQuery(Pattern(terms), FileFilter.wildcard(), None)


def test_oracle_equivalence_500_cases():
    rng = random.Random(1234)
    for _ in range(500):
        snap = golden.make_snapshot(_random_corpus(rng))
        check = _random_check(rng)
        report = execute(FqlQuery("check", (check,)), snap)
        got = [(h.file, h.line, h.term) for h in report.hits]
        assert got == golden.brute_force_hits(check, snap)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_monotonicity_adding_file_never_removes_hits(seed):
    rng = random.Random(seed)
    files = _random_corpus(rng, max_files=5, max_lines=10)
    check = _random_check(rng)
    q = FqlQuery("check", (check,))
    before = set(
        (h.file, h.line, h.term) for h in execute(q, golden.make_snapshot(files)).hits
    )
    files["zzz_new.c"] = ["mpi omp extra line"]
    after = set(
        (h.file, h.line, h.term) for h in execute(q, golden.make_snapshot(files)).hits
    )
    assert before <= after


def test_determinism_repeat_runs():
    rng = random.Random(7)
    snap = golden.make_snapshot(_random_corpus(rng))
    q = parse_fql(golden.TABLE1_MPI_MAX)
    assert execute(q, snap).to_dict() == execute(q, snap).to_dict()
