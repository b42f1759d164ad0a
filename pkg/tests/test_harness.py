import pytest

from streamcolor import (
    CompleteGraph,
    Edge,
    ExperimentSpec,
    GreedyStreamColorer,
    UniformRandomPermutation,
    ValidationError,
    run_experiment,
    run_stream,
    verify,
)
from streamcolor.harness import CSV_COLUMNS, CSV_VERSION, rows_to_csv


class TestGreedyBaseline:
    def test_announces_immediately_with_smallest_free_colour(self):
        colorer = GreedyStreamColorer(4)
        [(_, c0)] = colorer.feed(Edge(0, 1))
        [(_, c1)] = colorer.feed(Edge(1, 2))
        [(_, c2)] = colorer.feed(Edge(0, 2))
        assert (c0.local, c1.local, c2.local) == (0, 1, 2)

    def test_bound_and_properness(self):
        from streamcolor import generate

        header, edges = generate(CompleteGraph(20), UniformRandomPermutation(), 0)
        colorer = GreedyStreamColorer(20)
        transcript = run_stream(colorer, edges, header)
        report = verify(transcript)
        assert report.proper
        assert report.distinct_colours <= 2 * report.max_degree - 1

    def test_meter_grows_with_stream(self):
        from streamcolor import generate

        header, edges = generate(CompleteGraph(16), UniformRandomPermutation(), 1)
        colorer = GreedyStreamColorer(16)
        run_stream(colorer, edges, header)
        # two colour words per edge: the baseline's space is linear in m,
        # which is exactly why it is only a baseline
        assert colorer.meter.peak_words == 2 * len(edges) + 1


class TestExperimentSpec:
    def test_validation(self):
        base = dict(family=CompleteGraph(8), order=UniformRandomPermutation(), seeds=[0])
        with pytest.raises(ValidationError):
            ExperimentSpec(algo="quantum", **base)
        with pytest.raises(ValidationError):
            ExperimentSpec(algo="chunk", seeds=[], family=CompleteGraph(8), order=UniformRandomPermutation())
        with pytest.raises(ValidationError):
            ExperimentSpec(algo="chunk", s=4, **base)
        with pytest.raises(ValidationError):
            ExperimentSpec(algo="bipartite", alpha=2, **base)

    def test_single_seed_chunk_row(self):
        spec = ExperimentSpec(
            family=CompleteGraph(8),
            order=UniformRandomPermutation(),
            algo="chunk",
            alpha=1,
            seeds=[0],
        )
        [row] = run_experiment(spec)
        assert row["proper"] == 1
        assert row["n"] == 8
        assert row["m"] == 28
        assert row["error"] == ""

    def test_identical_seeds_give_identical_rows(self):
        spec = ExperimentSpec(
            family=CompleteGraph(8),
            order=UniformRandomPermutation(),
            algo="chunk",
            alpha=1,
            seeds=[3, 3],
        )
        rows = run_experiment(spec)
        a, b = rows
        for col in CSV_COLUMNS:
            if col != "wall_time_s":  # timing is reported, not reproducible
                assert a[col] == b[col], col

    def test_bipartite_rows_report_overflow(self):
        spec = ExperimentSpec(
            family=CompleteGraph(12),
            order=UniformRandomPermutation(),
            algo="bipartite",
            s=2,  # tiny width: identical signatures are common
            seeds=[0],
        )
        [row] = run_experiment(spec)
        assert row["proper"] == 1
        assert row["overflow"] >= 0

    def test_failure_becomes_error_row(self):
        from streamcolor import RandomRegular

        spec = ExperimentSpec(
            family=RandomRegular(5, 3),  # odd n*d: generation fails
            order=UniformRandomPermutation(),
            algo="chunk",
            seeds=[0, 1],
        )
        rows = run_experiment(spec)
        assert all(r["error"].startswith("ValidationError") for r in rows)
        assert all(r["proper"] == 0 for r in rows)

    def test_transcripts_written_when_requested(self, tmp_path):
        spec = ExperimentSpec(
            family=CompleteGraph(6),
            order=UniformRandomPermutation(),
            algo="chunk",
            alpha=1,
            seeds=[0],
            out_dir=tmp_path,
        )
        run_experiment(spec)
        files = list(tmp_path.glob("*.transcript"))
        assert len(files) == 1


class TestCsv:
    def test_versioned_header(self):
        text = rows_to_csv([])
        lines = text.splitlines()
        assert lines[0] == f"# {CSV_VERSION}"
        assert lines[1] == ",".join(CSV_COLUMNS)

    def test_row_order_matches_columns(self):
        spec = ExperimentSpec(
            family=CompleteGraph(6),
            order=UniformRandomPermutation(),
            algo="greedy-baseline",
            seeds=[1],
        )
        rows = run_experiment(spec)
        text = rows_to_csv(rows)
        line = text.splitlines()[2].split(",")
        assert line[0] == "greedy-baseline"
        assert line[CSV_COLUMNS.index("seed")] == "1"
