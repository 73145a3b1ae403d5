"""Type embeddings pulled apart by the contrastive cosine loss alone.

Run:  python demos/type_embeddings.py
"""
import torch

from qtypemix.type_embed import te_loss
from qtypemix.verify import te_descent

# The loss on a few hand-made pairs.  Same-type vectors that align and
# cross-type vectors that point apart both reach the minimum of -4;
# orthogonal cross-type vectors sit at -2.
for emb, types in [([[1.0, 0.0], [1.0, 0.0]], [0, 0]),
                   ([[1.0, 0.0], [0.0, 1.0]], [0, 1]),
                   ([[1.0, 0.0], [-1.0, 0.0]], [0, 1])]:
    print(f"types {types}  embeddings {emb}  loss {te_loss(torch.tensor([emb]), torch.tensor(types)).item():+.4f}")

# Now train an extractor on noisy observations of two agent types.
for steps in (50, 200, 500):
    first, last, intra, inter = te_descent(seed=0, steps=steps)
    if steps == 50:
        print(f"before training    loss {first:+8.3f}")
    print(f"after {steps:3d} steps  loss {last:+8.3f}  cos within type {intra:+.3f}  across types {inter:+.3f}")
