"""Run the command line driver on a shipped file and show the DOT output."""
import sys
import tempfile
from pathlib import Path

from taulattice.cli import main

alg = Path(__file__).resolve().parent.parent / "algebras" / "a2.alg"
print(alg.read_text())
with tempfile.TemporaryDirectory() as tmp:
    dot = Path(tmp) / "a2.dot"
    rc = main([str(alg), "--dot", str(dot)])
    print(dot.read_text())
sys.exit(rc)
