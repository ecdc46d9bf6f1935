#!/usr/bin/env python3
"""FLOP accounting for the MLP: forward pass, training, evaluation, inference.

Each layer transition costs two FLOPs per edge plus two per destination
node; training multiplies that by samples and epochs, then by three to
budget the backward pass.
"""

from ecal import (
    DEFAULT_PROCESSING_UNIT,
    MlpArchitecture,
    evaluation_energy,
    forward_flops,
    inference_energy,
    inference_flops,
    make_split,
    training_energy,
    training_forward_flops,
    training_total_flops,
    uniform_architecture,
)

arch = MlpArchitecture((6, 5, 5, 5, 3))
print(f"architecture {arch.layer_sizes}: {forward_flops(arch).flops} FLOPs per forward pass")
for fan_in, width in zip(arch.layer_sizes, arch.layer_sizes[1:]):
    print(f"  {fan_in:>2} -> {width:<2}: 2*{fan_in}*{width} + 2*{width} "
          f"= {2 * fan_in * width + 2 * width}")

split = make_split(256, 0.7)
print(f"\n256 samples split 70/30 -> {split.train_count} train / {split.eval_count} eval")

m_fwd = training_forward_flops(arch, 10, split.train_count)
print(f"10 epochs x {split.train_count} samples x 226 = {m_fwd.flops} forward FLOPs")
print(f"with backward at 2x forward: {training_total_flops(m_fwd).flops} training FLOPs")

pu = DEFAULT_PROCESSING_UNIT
e_train, e_train_b = training_energy(arch, 10, split.train_count, pu, 64)
e_eval, e_eval_b = evaluation_energy(arch, split.eval_count, pu, 64)
e_inf = inference_energy(arch, split.eval_count, pu)
print(f"\nat {pu.flops_per_joule:.4g} FLOPs/J:")
print(f"  training   {e_train.joules:.4g} J ({e_train_b.joules_per_bit:.3g} J/b per sample pass)")
print(f"  evaluation {e_eval.joules:.4g} J ({e_eval_b.joules_per_bit:.3g} J/b)")
print(f"  inference  {e_inf.joules:.4g} J for a {split.eval_count}-sample request "
      f"({inference_flops(arch, split.eval_count).flops} FLOPs)")
print(f"  training / inference ratio: {e_train.joules / e_inf.joules:.1f}x")

# Width is quadratic, depth adds a fixed quadratic-in-width block per layer.
print("\nforward FLOPs over uniform hidden width (3 hidden layers):")
for width in (2, 4, 8, 16):
    cost = forward_flops(uniform_architecture(6, width, 3, 3)).flops
    print(f"  width {width:>2}: {cost:>6}")
print("forward FLOPs over hidden depth (width 5):")
for depth in (1, 2, 4, 8):
    cost = forward_flops(uniform_architecture(6, 5, depth, 3)).flops
    print(f"  depth {depth:>2}: {cost:>6}")
