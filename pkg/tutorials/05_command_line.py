"""The batch front end, driven from Python."""

# %%
import io
import json

from coendcalc.cli import run

out = io.StringIO()
code = run(["end", "bifunctors/delta1.json", "--format", "json"], out=out)
rep = json.loads(out.getvalue())
print(code, rep["size"], rep["cross_check"])

# %% Every acceptance suite with a fixed seed; the text report is stable run to run.
out = io.StringIO()
code = run(["check", "all", "--seed", "0", "--format", "json"], out=out)
for s in json.loads(out.getvalue())["suites"]:
    print(f"{s['check']:16s} {s['verdict']}  {s['passed']}/{s['cases']}")
