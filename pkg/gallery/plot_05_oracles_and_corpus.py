"""
Oracle sweeps and the golden corpus
===================================

Every product formula has an independent oracle. The command runner wraps
the sweeps together with a corpus of worked examples.
"""

from structconst.checks import oracle_check
from structconst.cli import run_command, run_corpus

for basis in ("schur", "hl", "uc"):
    report = oracle_check(basis, 4)
    print(basis, report.cases, "cases, ok =", report.ok)

print(run_corpus()[1])

code, text = run_command(["straighten", "--basis", "hl", "--alpha", "1,5"])
print(code)
print(text)
