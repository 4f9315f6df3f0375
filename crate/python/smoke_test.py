"""Smoke test for the pyckcenter extension module.

Build and install first, e.g.
    maturin build --release -m crates/python/Cargo.toml -o dist && pip install dist/*.whl
"""

import json

import pyckcenter

g4 = pyckcenter.Graph(
    ["v1", "v2", "v3", "v4", "v5"],
    [("a", "v1", "v2"), ("b", "v2", "v3"), ("c", "v3", "v4"), ("d", "v4", "v2"), ("f", "v1", "v5")],
)
assert g4.sinks() == ["v5"]
assert g4.ne_cycles() == [["b", "c", "d"]]
assert not g4.is_simple()
assert g4.simplicity_witness() == ("hereditary_saturated", ["v5"])
assert g4.arrival_paths(["v5"]) == (True, ["v5", "f"])

elements, atoms = g4.lattice()
assert elements == [[], ["v5"], ["v2", "v3", "v4"], ["v1", "v2", "v3", "v4", "v5"]]
assert atoms == [["v5"], ["v2", "v3", "v4"]]

report = json.loads(g4.center_json())
assert (report["c_count"], report["t_count"]) == (1, 1)
assert report["verified"]
for gen in report["generators"]:
    assert g4.is_central(gen)
assert not g4.is_central("a")

g2 = pyckcenter.Graph.from_json(json.dumps(
    {"vertices": ["v1", "v2"], "edges": [{"id": "c", "src": "v1", "dst": "v1"}, {"id": "f", "src": "v1", "dst": "v2"}]}
))
assert g2.arrival_paths(["v2"]) == (False, ["c"])
assert g2.normal_form("c·c^*") == "1 v1 − 1 f·f^*"
assert g2.multiply("c^*", "c") == "1 v1"

try:
    pyckcenter.Graph(["v"], [("e", "v", "w")])
except ValueError as e:
    assert "w" in str(e)
else:
    raise AssertionError("unknown endpoint accepted")

print("pyckcenter smoke test passed")
