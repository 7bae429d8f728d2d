import os

import pytest

from s3kit.corpus import (
    ExclusionRules,
    RootNotFound,
    identify_language,
    scan_tree,
    stats,
)


@pytest.fixture
def small_tree(tmp_path):
    (tmp_path / "a.f90").write_text("program a\nx = 1\nend program\n")
    (tmp_path / "b.c").write_text("int main() {\n}\n")
    return tmp_path


class TestScanTree:
    def test_two_file_fixture(self, small_tree):
        snap = scan_tree(small_tree)
        assert [f.path for f in snap.files] == ["a.f90", "b.c"]
        s = stats(snap)
        assert s.per_language == {"Fortran": (1, 3), "C": (1, 2)}
        assert (s.total_files, s.total_lines) == (2, 5)

    def test_empty_directory(self, tmp_path):
        snap = scan_tree(tmp_path)
        assert snap.files == ()
        assert stats(snap).total_files == 0

    def test_missing_root(self, tmp_path):
        with pytest.raises(RootNotFound):
            scan_tree(tmp_path / "nope")

    def test_oversize_file_excluded(self, tmp_path):
        (tmp_path / "big.f90").write_text("x\n" * (3 * 1024 * 1024))
        snap = scan_tree(tmp_path)
        assert snap.files == ()
        assert ("big.f90", "size") in snap.excluded

    def test_binary_file_excluded(self, tmp_path):
        (tmp_path / "blob.c").write_bytes(b"int\x00main")
        snap = scan_tree(tmp_path)
        assert ("blob.c", "binary") in snap.excluded

    def test_hidden_and_build_dirs_skipped(self, tmp_path):
        (tmp_path / ".git").mkdir()
        (tmp_path / ".git" / "x.c").write_text("x\n")
        (tmp_path / "build-debug").mkdir()
        (tmp_path / "build-debug" / "y.c").write_text("y\n")
        snap = scan_tree(tmp_path)
        assert snap.files == ()
        reasons = dict(snap.excluded)
        assert reasons[".git"] == "hidden"
        assert reasons["build-debug"] == "build-dir"

    def test_symlink_not_followed(self, tmp_path):
        (tmp_path / "real.c").write_text("x\n")
        os.symlink(tmp_path / "real.c", tmp_path / "link.c")
        snap = scan_tree(tmp_path)
        assert [f.path for f in snap.files] == ["real.c"]
        assert ("link.c", "symlink") in snap.excluded

    def test_glob_exclusion(self, tmp_path):
        (tmp_path / "gen.c").write_text("x\n")
        snap = scan_tree(tmp_path, ExclusionRules(globs=("gen.*",)))
        assert ("gen.c", "glob") in snap.excluded

    def test_non_utf8_decoded_lossy(self, tmp_path):
        (tmp_path / "legacy.f").write_bytes(b"      DATA X /\xff\xfe/\n")
        snap = scan_tree(tmp_path)
        assert snap.files[0].line_count == 1

    def test_partition_every_file_accounted(self, tmp_path):
        (tmp_path / "keep.c").write_text("x\n")
        (tmp_path / "blob.c").write_bytes(b"\x00")
        (tmp_path / "sub").mkdir()
        (tmp_path / "sub" / "deep.f90").write_text("y\n")
        snap = scan_tree(tmp_path)
        included = {f.path for f in snap.files}
        excluded = {p for p, _ in snap.excluded}
        assert included | excluded == {"keep.c", "blob.c", "sub/deep.f90"}
        assert included & excluded == set()

    def test_idempotent(self, small_tree):
        assert scan_tree(small_tree) == scan_tree(small_tree)


class TestStats:
    def test_unknown_extension_is_other(self, tmp_path):
        (tmp_path / "data.unknown").write_text("a\nb\n")
        snap = scan_tree(tmp_path)
        assert stats(snap).per_language == {"Other": (1, 2)}

    def test_stats_match_brute_force(self, small_tree):
        snap = scan_tree(small_tree)
        s = stats(snap)
        by_hand: dict[str, tuple[int, int]] = {}
        for f in snap.files:
            cur = by_hand.get(f.language, (0, 0))
            by_hand[f.language] = (cur[0] + 1, cur[1] + len(f.lines))
        assert s.per_language == by_hand


class TestLanguageMap:
    @pytest.mark.parametrize(
        "path,lang",
        [
            ("x.f90", "Fortran"),
            ("x.F90", "Fortran"),
            ("y.c", "C"),
            ("y.hpp", "C++"),
            ("z.py", "Python"),
            ("run.sh", "Shell"),
            ("Makefile", "Make"),
            ("CMakeLists.txt", "CMake"),
            ("notes.rst", "Other"),
        ],
    )
    def test_mapping(self, path, lang):
        assert identify_language(path) == lang
