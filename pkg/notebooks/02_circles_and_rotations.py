"""
Unit circles in three geometries
================================

Over F_q the blue circle x^2 + y^2 = 1, the red circle x^2 - y^2 = 1 and
the green circle xy = 1 are finite cyclic groups.  Their rotation matrices
preserve the matching quadratic form and move [1,0] (green: [1,1]) to every
point exactly once.
"""

from chromasum import field_make
from chromasum.chromogeometry import (
    act,
    base_point,
    circle_enumerate,
    cyclic_generator,
    form_matrix,
    point_order,
    rotation_matrices,
)

F = field_make(13)
for color in ("blue", "red", "green"):
    circle = circle_enumerate(color, F)
    print(color, len(circle), " ".join(str(pt) for pt in circle))

# -1 is not a square mod 7, so the blue circle has q + 1 points there
print("blue F_7:", len(circle_enumerate("blue", field_make(7))))

# extension fields work the same way
F27 = field_make(3, 3, [1, 1, 0, -1])
print("blue F_27:", len(circle_enumerate("blue", F27)))

# rotations preserve the form and the orbit of the base point is the circle
M = form_matrix("red", F)
mats = rotation_matrices("red", F)
print(all(h * M * h.transpose() == M for h in mats))
orbit = {act(base_point("red", F), h) for h in mats}
print(orbit == set(circle_enumerate("red", F)))

g = cyclic_generator("red", F)
print("generator", g, "of order", point_order("red", g))
