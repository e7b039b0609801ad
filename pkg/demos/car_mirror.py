"""
Left and right halves of a car
==============================

Only the left-hand components of a car are drawn, each one twice. Braiding
the frame through the copies multiplies the picture by q once for each copy
it passes, and every power of q flips one copy to the right-hand side.
"""

from qdesign import decode_mirror, evaluate, fixtures

Q = fixtures.load_qmatrix("car")
vocab = fixtures.load_vocabulary("car")

# The frame is generator 10 here. q_(t,10) = 2 for the mirrored parts.
result = evaluate(fixtures.load_diagram("figure4"), Q)
print("scalar:", result.value(Q), "=", result.global_coeff)
for c in decode_mirror(result, [3, 5, 7, 9], vocab, Q):
    print(" ", c.label)

# One extra crossing before the frame meets the rest mirrors the steering
# wheel too; the scalar picks up a fifth factor.
result = evaluate(fixtures.load_diagram("figure4_wheel"), Q)
print("scalar:", result.value(Q))
for c in decode_mirror(result, [1, 3, 5, 7, 9], vocab, Q):
    print(" ", c.label)
