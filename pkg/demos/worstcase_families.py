"""Adversarial insertion sequences that realize worst-case bounds.

Three constructed families:
  * adfs1  -- under an adversarial repair order, ADFS1 pays ~n^1.5 m^0.5;
              ADFS2's shallowest-first order defuses the same sequence.
  * fdfs   -- a DAG family where each of n/2 triggers forces a Theta(m)
              partial rebuild, totalling ~ m n.
  * sdfs3  -- a family where probing the smaller subtree backfires and the
              total work grows like m^2.

Run:  python3 demos/worstcase_families.py
"""
from incdfs import (
    ADFS1,
    ADFS2,
    gen_worstcase_adfs1,
    gen_worstcase_fdfs,
    gen_worstcase_sdfs3,
    make_algorithm,
)


def run(algo, seq):
    for u, v in seq.edges:
        algo.insert(u, v)
    return algo.counters.edges_processed


print("ADFS1 adversarial family (m = 4n):")
print(f"{'n':>5} {'adversarial':>12} {'default order':>14} {'ratio':>6}")
for n in (64, 128, 256):
    seq = gen_worstcase_adfs1(n, 4 * n)
    bad = ADFS1(n, adversarial_order=True)
    c1 = run(bad, seq)
    c2 = run(ADFS2(n), seq)
    print(f"{n:>5} {c1:>12} {c2:>14} {c1 / c2:>6.2f}")

print("\nFDFS family (m = n^2/8), total ~ m n:")
for n in (32, 64, 128):
    seq = gen_worstcase_fdfs(n, n * n // 8)
    total = run(make_algorithm("fdfs", n, "dag"), seq)
    print(f"  n={n:>4}  total={total:>9}  total/(m n)={total / (len(seq.edges) * n):.3f}")

print("\nSDFS3 family, total ~ m^2:")
for k in (8, 12, 16):
    m = 2 * k * k
    seq = gen_worstcase_sdfs3(m // 2, m)
    total = run(make_algorithm("sdfs3", seq.n, "undirected"), seq)
    print(f"  k={k:>3}  m={len(seq.edges):>4}  total={total:>8}  "
          f"total/m^2={total / len(seq.edges) ** 2:.4f}")
