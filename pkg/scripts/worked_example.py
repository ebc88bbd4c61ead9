"""Run every stage on B = <(2,0),(0,1),(3,1),(1,2)> and print the text report."""
from pathlib import Path

from simplicial_cm.cli import parse_spec, run, to_text

spec = parse_spec((Path(__file__).parent / "inputs" / "worked.json").read_text())
report, code = run(spec, "verify", bound=6)
print(to_text(report), end="")
probe, _ = run(spec, "probe-minimality", samples=200, seed=0)
p = probe["probe"]
print(f"minimality probe: {p['cm_found']} of {p['samples']} extensions CM, "
      f"{len(p['violations'])} missed the closure")
