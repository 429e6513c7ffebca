"""CLI contract: exit codes, documented examples, and outputs against the shipped schemas."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMAS, EXAMPLES = sys.argv[1:4]
failures = []


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        s = json.load(f)
    # the one cross-file reference
    props = s.get("properties", {})
    if "calculation" in props:
        props["calculation"] = {"anyOf": [{"type": "null"}, schema("calc_string")]}
    return s


def run(args, code, kind=None):
    p = subprocess.run([BIN] + args, capture_output=True, text=True)
    label = " ".join(args)
    if p.returncode != code:
        failures.append(f"{label}: exit {p.returncode}, wanted {code}; {p.stderr.strip()}")
        return None
    if kind is None:
        return None
    try:
        out = json.loads(p.stdout)
        jsonschema.validate(out, schema(kind))
    except Exception as e:  # noqa: BLE001
        failures.append(f"{label}: {e}")
        return None
    return out


def expect(cond, what):
    if not cond:
        failures.append(what)


ex = lambda name: os.path.join(EXAMPLES, name)

# inputs shipped with the tool conform to the input schemas
for name, kind in [("identity.json", "step_functional"), ("e2_n3.json", "step_functional"),
                   ("undefined_on_trajectory.json", "step_functional"), ("zero_depth3.json", "depth_oracle"),
                   ("constant_depth3.json", "depth_oracle"), ("depth2.json", "depth_oracle"), ("env_oracle.json", "env")]:
    with open(ex(name)) as f:
        try:
            jsonschema.validate(json.load(f), schema(kind))
        except Exception as e:  # noqa: BLE001
            failures.append(f"{name}: {e}")

out = run(["induct", ex("identity.json")], 0, "ind_trace")
expect(out and out["stages"] == ["0x0"] and out["closed"], "identity trace")
out = run(["induct", ex("e2_n3.json")], 0, "ind_trace")
expect(out and len(out["stages"]) == 4, "e2 trace has four stages")
run(["induct", ex("undefined_on_trajectory.json")], 4, "ind_trace")

out = run(["eval", "--index", "(S2 5)"], 0, "eval_result")
expect(out and out["value"] == 5, "(S2 5) evaluates to 5")
out = run(["eval", "--battery", "chain", "--norm"], 0, "eval_result")
expect(out and out["norm"] > 0, "norm reported")
out = run(["eval", "--battery", "diagonal", "--trace", "--budget", "300"], 15, "eval_result")
expect(out and len(out["trace"]["frames"]) == 300, "diagonal trace has budget frames")
for item in ["partial-null", "partial-loop", "partial-noindex"]:
    out = run(["eval", "--battery", item, "--total"], 14, "eval_result")
    expect(out and out["error"] == "TotalityViolation", item + " violates totality")
    run(["eval", "--battery", item], 0, "eval_result")
run(["eval", "--battery", "not-an-index"], 10, "eval_result")
run(["eval", "--battery", "oracle-undefined"], 11, "eval_result")
run(["eval", "--index", "(S4 (S1)"], 3)
run(["eval", "--index", "(S1)", "--env", ex("missing.json")], 3)

with tempfile.TemporaryDirectory() as tmp:
    calc = os.path.join(tmp, "calc.json")
    run(["procedure", "compile", "--battery", "oracle-of-ind", "--out", calc], 0)
    with open(calc) as f:
        c = json.load(f)
    try:
        jsonschema.validate(c, schema("calc_string"))
    except Exception as e:  # noqa: BLE001
        failures.append(f"compile output: {e}")
    out = run(["procedure", "validate", "--battery", "oracle-of-ind", calc], 0, "verdict")
    value = run(["eval", "--battery", "oracle-of-ind"], 0, "eval_result")
    expect(out and value and out["verdict"] == "accept" and out["value"] == value["value"], "round trip accepts")
    # swap the first two positions of the order
    d = c["D"]
    d[0], d[1] = d[1], d[0]
    c["order"] = [[d[i], d[i + 1]] for i in range(len(d) - 1)]
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        json.dump(c, f)
    out = run(["procedure", "validate", "--battery", "oracle-of-ind", bad], 0, "verdict")
    expect(out and out["verdict"] == "reject", "mutated representation rejected")
    with open(bad, "w") as f:
        f.write('{"D": [0], "order": [], "entries": {"0": {"f": [1], "a": -2}}, "value": 0}')
    run(["procedure", "validate", "--battery", "oracle-of-ind", bad], 3)

out = run(["procedure", "consistency", "--battery", "oracle-compose"], 0, "consistency")
expect(out and out["consistent"] and out["members"] > 1, "compiled family consistent")
out = run(["procedure", "honest", "--battery", "chain"], 0, "honest")
expect(out and out["agrees"], "honest history decodes to the calculation")
out = run(["procedure", "delay", "--battery", "oracle-compose"], 0, "delay")
expect(out and all(d == 0 for d in out["delays"]), "no delay without induction")
run(["procedure", "compile", "--battery", "diagonal"], 6)

out = run(["realiser", "hb", ex("zero_depth3.json")], 0, "hb")
expect(out and len(out["cover"]) == 1, "F = 0 gives a one-element cover")
out = run(["realiser", "pincherle", ex("constant_depth3.json")], 0, "pincherle")
expect(out and out["bound"] == 3, "F = L gives L")
run(["realiser", "pincherle", ex("depth2.json")], 0, "pincherle")
out = run(["realiser", "recover", ex("e2_n3.json")], 0, "recover")
expect(out and out["agreement"], "recover agrees on the chain")

# determinism
a = subprocess.run([BIN, "selftest", "--seed", "3"], capture_output=True, text=True)
b = subprocess.run([BIN, "selftest", "--seed", "3"], capture_output=True, text=True)
expect(a.returncode == 0 and a.stdout == b.stdout, "selftest passes and repeats")
run(["selftest"], 0, "selftest")
run([], 2)
run(["selftest", "--budget", "0"], 2)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
