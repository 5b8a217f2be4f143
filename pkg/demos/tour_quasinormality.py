"""Tour: s-permutability, hypercenter quasinormality, and the solubility
criterion (theorem id L3.1).

Run:  python3 demos/tour_quasinormality.py
"""

from grouplab import (
    builtin_group,
    f_hypercenter,
    is_fs_quasinormal,
    is_s_permutable,
    to_cycles,
    verify_case,
)
from grouplab.context import context_of

S3 = builtin_group("symmetric(3)")
H = context_of(S3).generated([S3.generators[0]])  # a transposition
v = is_s_permutable(S3, H)
print(f"<(1 2)> s-permutable in S3: {v.holds}")
print(f"  failing Sylow witness: "
      f"<{', '.join(to_cycles(g) for g in v.witness.generators)}>")

v2 = is_fs_quasinormal(S3, H, "U")
print(f"<(1 2)> U_s-quasinormal in S3: {v2.holds} "
      f"(witness T of order {v2.witness.order})")
print(f"  reading: {v2.detail}")

for name in ["symmetric(4)", "alternating(5)"]:
    G = builtin_group(name)
    for F in "NUS":
        print(f"Z_inf^{F}({name}) has order {f_hypercenter(G, F).order}")

# the solubility criterion: hypothesis <=> conclusion, both directions shown
for name in ["symmetric(4)", "alternating(5)"]:
    r = verify_case(builtin_group(name), "L3.1", {})
    print(f"L3.1 on {name}: hypothesis={r.hypothesis_value} "
          f"conclusion={r.conclusion_value} verdict={r.verdict}")
    for w in r.witnesses:
        print(f"  witness: {w['kind']} — subgroup of order "
              f"{w['subgroup']['order']} (rechecked={w['rechecked']})")
