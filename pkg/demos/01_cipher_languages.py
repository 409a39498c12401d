"""
A family of cipher languages
============================

Three synthetic languages share one concept space. Each renders a concept
sentence through its own token bijection and then reverses blocks of a fixed
length, so translating between any two of them is exact and we always have a
perfect reference to score against.
"""

from crossmt.experiment import ExperimentConfig, synth
from crossmt.synthlang import oracle_translate

# The default experiment family: L0 is unrelated to the reference cipher,
# L1 is the reference itself and L2 keeps 80% of it.
cfg = ExperimentConfig(corpora={"n_mono": 50, "n_parallel": 50, "n_test": 10})
family, corpora = synth(cfg)
for d in family:
    print(f"{d.lang}: similarity {d.similarity}, block period {d.reorder_period}")

# One concept sentence in all three languages. L0 and L2 reverse pairs of
# tokens, L1 keeps the concept order.
concepts = [3, 14, 15, 9, 2, 6]
for d in family:
    print(d.lang, d.render(concepts).tokens)

# The oracle composes: going L0 -> L1 -> L2 lands on the direct L0 -> L2
# translation, which is why pivoting is lossless on this family.
L0, L1, L2 = family
x = L0.render(concepts)
via = oracle_translate(oracle_translate(x, L0, L1), L1, L2)
print("pivot equals direct:", via == oracle_translate(x, L0, L2))

# How close are the ciphers? Count concepts mapped to the same token.
shared = sum(a == b for a, b in zip(L1.cipher, L2.cipher)) / len(L1.cipher)
print(f"L1/L2 share {shared:.0%} of their cipher, L0/L1 share "
      f"{sum(a == b for a, b in zip(L0.cipher, L1.cipher)) / len(L1.cipher):.0%}")

# The generated corpora: disjoint monolingual pools, one parallel corpus for
# the supervised pair and a held-out test set for every pair.
for lang, m in corpora.mono.items():
    print("mono", lang, len(m))
for pair, p in corpora.parallel.items():
    print("parallel", *pair, len(p))
for pair, p in corpora.test.items():
    print("test", *pair, len(p))
