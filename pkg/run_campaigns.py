# run_campaigns.py
# Runs every verification campaign at its default scope and writes
# artifacts/reports/<campaign>.json plus artifacts/reports/summary.csv.
import sys
from chromapath.config import ART_DIR, SEED, JOBS, configure_logging
from chromapath.harness import CAMPAIGNS, run_campaign
from chromapath.reports import save_reports, summary_frame

OUT = ART_DIR / "reports"


def main():
    configure_logging(verbose=False)
    names = sys.argv[1:] or list(CAMPAIGNS)
    unknown = [n for n in names if n not in CAMPAIGNS]
    if unknown:
        raise SystemExit(f"Unknown campaign(s): {', '.join(unknown)}. Choose from {', '.join(CAMPAIGNS)}.")

    reports = []
    for name in names:
        print(f"[{name}] running (seed={SEED}, jobs={JOBS}) ...")
        r = run_campaign(name, seed=SEED, jobs=JOBS)
        status = "pass" if r.passed else f"FAIL ({len(r.failures)} failures)"
        print(f"[{name}] {status}; {r.scope['classes']} classes, {r.scope['samples']} samples, {r.elapsed_ms} ms")
        reports.append(r)

    csv = save_reports(reports, OUT)
    print(summary_frame(reports).to_string(index=False))
    print(f"Saved reports to {OUT}")
    print(f"Saved summary to {csv}")
    if not all(r.passed for r in reports):
        raise SystemExit(1)


if __name__ == "__main__":
    main()
