"""Run the full claim harness and write claims.json / claims.md.

    python3 scripts/run_claims.py --k-range 2..5 --out results/
"""

import argparse
import logging
import sys
from pathlib import Path

from foldedodd.claims import HarnessConfig, exit_status, reports_to_json, reports_to_markdown, run_all
from foldedodd.cli import parse_k_range

log = logging.getLogger("run_claims")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-range", type=parse_k_range, default=parse_k_range("2..5"))
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--max-aut-n", type=int, default=70)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    cfg = HarnessConfig(max_aut_n=args.max_aut_n)
    log.info("running claims for k in %s..%s", args.k_range.start, args.k_range.stop - 1)
    reports = run_all(args.k_range, config=cfg, jobs=args.jobs)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "claims.json").write_text(reports_to_json(reports) + "\n")
    (args.out / "claims.md").write_text(reports_to_markdown(reports))
    for r in reports:
        log.info("%s k=%d %s (%.0f ms)", r.claim_id, r.k, r.verdict, r.runtime_ms)
    return exit_status(reports)


if __name__ == "__main__":
    sys.exit(main())
