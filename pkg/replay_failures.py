# replay_failures.py
# Re-checks every failure witness stored in artifacts/reports/*.json with the
# campaign's own per-instance check, so a reported counterexample can be confirmed
# (or shown to be fixed) without rerunning the whole campaign.
from chromapath.config import ART_DIR, configure_logging
from chromapath.harness import CAMPAIGNS, replay_failure
from chromapath.reports import load_report

REPORTS = ART_DIR / "reports"


def main():
    configure_logging(verbose=False)
    if not REPORTS.exists():
        raise SystemExit("Missing artifacts/reports. Run run_campaigns.py first.")

    confirmed = cleared = 0
    for path in sorted(REPORTS.glob("*.json")):
        report = load_report(path)
        if report.campaign not in CAMPAIGNS:
            continue
        for entry in report.failures:
            if not entry.get("arclist"):
                continue
            still = replay_failure(report.campaign, entry)
            if still:
                confirmed += 1
                print(f"[{report.campaign}] still failing: {still}")
            else:
                cleared += 1
                print(f"[{report.campaign}] no longer failing: {entry['detail']}")

    print(f"{confirmed} confirmed, {cleared} cleared")
    if confirmed:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
