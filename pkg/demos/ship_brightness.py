"""
Lighting the floors of a ship
=============================

A brightness generator is braided leftwards past every floor. The crossing
scalar it leaves on each floor is that floor's brightness, in units of the
undecorated floor.
"""

from qdesign import decode_brightness, evaluate, fixtures

Q = fixtures.load_qmatrix("ship")
vocab = fixtures.load_vocabulary("ship")
result = evaluate(fixtures.load_diagram("figure5"), Q)

for wire, (shape, units) in zip(result.wires, decode_brightness(result.wires, Q, vocab)):
    tag = "" if wire.coeff.is_identity else f"  ({wire.coeff})"
    print(f"{shape:>22}: {units} unit{tag}")

# Dimming one floor is a single matrix edit.
dim = [list(row) for row in Q.entries]
dim[3][4] = dim[3][4] / 2
Q_dim = type(Q).rational(dim)
print("negative first floor dimmed to", decode_brightness(result.wires, Q_dim, vocab)[-1][1])
