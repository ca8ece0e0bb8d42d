# tests/test_reports.py — summary tables and report files
from chromapath.harness import VerificationReport
from chromapath.reports import COLUMNS, format_text, load_report, save_reports, summary_frame


def make_report(name="bondy", failures=()):
    return VerificationReport(name, {"orders": [3, 4], "classes": 6, "samples": 2, "seed": 9},
                              failures=list(failures),
                              observations=[{"arclist": "1 0\n", "detail": "seen"},
                                            {"arclist": "2 0\n", "detail": "seen"}],
                              elapsed_ms=12)


def test_summary_frame():
    df = summary_frame([make_report(), make_report("cor32", [{"arclist": "1 0\n", "detail": "bad"}])])
    assert list(df.columns) == COLUMNS
    assert df["passed"].tolist() == [True, False]
    assert df.loc[0, "orders"] == "3,4"
    assert df.loc[1, "failures"] == 1


def test_summary_without_timing():
    df = summary_frame([make_report()], timing=False)
    assert df["elapsed_ms"].isna().all()


def test_text_groups_identical_details():
    text = format_text(make_report())
    assert "bondy" in text
    assert "observations:" in text
    assert "2  seen" in text
    assert "failures:" not in text


def test_save_and_load(tmp_path):
    report = make_report()
    csv = save_reports([report], tmp_path / "out")
    assert csv.name == "summary.csv"
    assert csv.read_text().splitlines()[0] == ",".join(COLUMNS)
    loaded = load_report(tmp_path / "out" / "bondy.json")
    assert loaded.to_json() == report.to_json()


def test_saved_reports_can_drop_timing(tmp_path):
    save_reports([make_report()], tmp_path, timing=False)
    assert load_report(tmp_path / "bondy.json").elapsed_ms is None
