"""Polar-space Kneser graphs: totally singular subspaces under a form.

Builds the graph on totally singular lines of the hyperbolic orthogonal
space of type D_4 over F_2 (x ~ y iff perp(x) meets y trivially), whose
apartment is a perfect matching on 24 coordinate-frame lines, and the
two oriflamme families of maximal totally singular subspaces.
"""

from kneserlab import build_polar_kneser, check_ucep, g2_points
from kneserlab.buildings import polar_model

lines = build_polar_kneser("D", 4, 2, 2)
print("totally singular lines of D_4 over F_2:", lines.num_vertices)
print("apartment: %d frame lines, %d edges among them"
      % (len(lines.sigma), sum(
          1 for a in lines.sigma for b in lines.sigma
          if a < b and lines.is_adjacent(a, b)
      )))
print("UCEP over all 2^12 apartment cocliques:",
      check_ucep(lines, mode="all").verdict)

model = polar_model("D", 4, 2)
plus = build_polar_kneser("D", 4, 4, 2, "plus")
minus = build_polar_kneser("D", 4, 4, 2, "minus")
print("\noriflamme families of maximal totally singular subspaces:")
print("  plus family:", plus.num_vertices, "members,",
      check_ucep(plus).verdict)
print("  minus family:", minus.num_vertices, "members,",
      check_ucep(minus).verdict)
print("  reference space:", model.reference_maximal().basis)

points = build_polar_kneser("B", 3, 1, 3)
print("\nsingular points of the B_3 quadric over F_3:", points.num_vertices)
print("UCEP:", check_ucep(points).verdict)

hexagon = g2_points(3)
print("G_2 hexagon points (same graph, by the B_3 identification):",
      hexagon.num_vertices, "-", check_ucep(hexagon).verdict)
