"""
The jordan-kit command
======================

Construct a group file, analyze it, and run the checks, all through the
same entry point the ``jordan-kit`` script uses.
"""

import json
import tempfile
from pathlib import Path

from jordan_kit.cli import main

work = Path(tempfile.mkdtemp())
main(["construct", "--family", "symmetric", "--n", "5", "--out", str(work / "s5.group.json")])
main(["analyze", str(work / "s5.group.json"), "--report", str(work / "s5.report.json")])
print(json.loads((work / "s5.report.json").read_text())["jordan_constant"])

main(["tables", "--collins", "--min-n", "2", "--max-n", "8"])
code = main(["verify", "--suite", "zarhin", "--factors-max", "4", "--out", str(work / "records")])
print("verify exit status", code, sorted(p.name for p in (work / "records").iterdir()))
