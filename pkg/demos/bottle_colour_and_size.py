"""
Colour and size of a bottle from one braided diagram
====================================================

Four initial shapes are rewritten into a cap and a three-part body. The body
is glued together, braided twice around the cap, and the whole thing is
joined. Every crossing leaves a scalar behind, and that scalar is the design.
"""

from qdesign import decode_color, decode_size, evaluate, fixtures
from qdesign.design import render_word

diagram = fixtures.load_diagram("figure2")
vocab = fixtures.load_vocabulary("coca")
print(diagram.serialize())

# With q_st = w^(g_s g_t) for a primitive 7th root w, the scalar is a power
# of w, and the 7 powers name the colours of the rainbow.
Q = fixtures.load_qmatrix("coca")
result = evaluate(diagram, Q)
print("shapes:", ", ".join(render_word(vocab, result.words[0])))
print("symbolic scalar:", result.global_coeff)
print("class:", result.value(Q), "->", decode_color(result.value(Q)))

# The very same diagram under a constant real q = 2 reads as a scale factor:
# six crossings of single letters, so the bottle grows by 2^6.
Q_size = fixtures.load_qmatrix("coca_size")
print("size factor:", decode_size(evaluate(diagram, Q_size).value(Q_size)))

# Each layer can be inspected on the way down.
for k, wires in enumerate(result.trace):
    print(f"after {k} layers:", " | ".join(str(w) for w in wires))
