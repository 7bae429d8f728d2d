import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def elm_dot() -> str:
    return (FIXTURES / "callgraph.dot").read_text()


@pytest.fixture
def components_csv() -> str:
    return (FIXTURES / "components.csv").read_text()


@pytest.fixture
def derived_csv() -> str:
    return (FIXTURES / "derived_types.csv").read_text()


@pytest.fixture
def loop_matrix_text() -> str:
    return (FIXTURES / "lake_loop_matrix.txt").read_text()


@pytest.fixture
def lake_doc() -> str:
    return (FIXTURES / "lake_temperature.md").read_text()


@pytest.fixture
def distractor_doc() -> str:
    return (FIXTURES / "distractors.md").read_text()


@pytest.fixture
def hpc_tree(tmp_path: Path) -> Path:
    """Small mixed-language tree with OpenMP and MPI feature markers."""
    root = tmp_path / "hpc"
    root.mkdir()
    (root / "solver.f90").write_text(
        "program solver\n"
        "  use mpi\n"
        "  !$OMP PARALLEL DO\n"
        "  do i = 1, n\n"
        "  end do\n"
        "end program\n"
    )
    (root / "kernel.c").write_text(
        "#include <mpi.h>\n"
        "void step(void) {\n"
        "#pragma omp parallel for schedule(static)\n"
        "  for (int i = 0; i < n; i++) {}\n"
        "  MPI_Aint d = MPI_AINT_DIFF(a, b);\n"
        "}\n"
    )
    return root


@pytest.fixture
def mpi2_tree(hpc_tree: Path) -> Path:
    """Same tree with the MPI 3.1 marker line removed."""
    kernel = hpc_tree / "kernel.c"
    lines = [ln for ln in kernel.read_text().splitlines() if "MPI_AINT_DIFF" not in ln]
    kernel.write_text("\n".join(lines) + "\n")
    return hpc_tree
