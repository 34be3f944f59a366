"""The law suite and the counterexample searches.

Asserted laws hold everywhere; recorded laws are searched and the
verdict — witness or exhaustion certificate — is the output.

Run as: python demos/06_laws_and_searches.py
"""

from ambrel.hyperspace import space
from ambrel.laws import check_laws, search_law

X, Y, Z = space("x1", "x2"), space("y1", "y2"), space("z1", "z2")

print("sampled law suite at sizes (2,2,2):")
for name, res in check_laws(X, Y, Z, trials=150, seed=1).items():
    tag = "asserted" if res.asserted else "recorded"
    state = "holds" if res.holds else f"counterexample after {res.checked}"
    print(f"  {name:28s} [{tag}]  {state}")

print()
print("exhaustive searches over every representation triple at (2,2,2):")
for law in ("modular", "meet-distributivity"):
    verdict = search_law(law, X, Y, Z, exhaustive=True)
    print(f"  {law}: {verdict['verdict']} after {verdict['instances_checked']} instances")
    if verdict["witness"]:
        args = {k: v for k, v in verdict["witness"].items() if k == "argument"}
        print("    witness stored with full representation payloads", args or "")
