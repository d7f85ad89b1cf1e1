#pragma once

#include <cstddef>
#include <vector>

#include "cuboid/charpoly.hpp"

namespace cuboid {

enum class Axis { real, imaginary };

/// Lattice node (m, r) of a monomial A_{m,r}(p,B) q^r t^m.
struct NewtonNode {
  int m = 0;  // t-degree
  int r = 0;  // q-degree
  MultiPoly coeff;  // nonzero polynomial in (p, B)
};

struct NewtonSegment {
  int m1 = 0, r1 = 0, m2 = 0, r2 = 0;  // endpoints, m1 < m2
  BigRat slope;
  std::vector<std::size_t> node_indices;  // nodes lying on the segment
};

struct NewtonPolygon {
  std::vector<NewtonNode> nodes;              // every node, ascending (m, r)
  std::vector<NewtonSegment> upper_segments;  // left to right, slopes strictly decreasing
  /// Indices of nodes lying on the upper boundary.
  std::vector<std::size_t> upper_boundary_nodes() const;
  /// True when every node lies on or below the upper hull.
  bool all_nodes_under_hull() const;
};

/// Newton polygon of a transformed characteristic polynomial viewed as a
/// polynomial in (t, q) with coefficients in (p, B); only the upper part
/// of the boundary is computed.
NewtonPolygon newton_polygon(const CharPoly& poly);

/// alpha_i = -slope for each upper segment, ascending.
std::vector<BigRat> candidate_exponents(const NewtonPolygon& np);

/// Root of an edge equation: value = scale * B^b_power, purely imaginary
/// when axis == imaginary.
struct EdgeRoot {
  QuadRat scale;
  int b_power = 0;
  Axis axis = Axis::real;
  int multiplicity = 1;
};

struct EdgeSolution {
  BigRat alpha;
  MultiPoly edge_poly;          // in C with coefficients in Z[B], content cancelled
  std::vector<EdgeRoot> roots;  // filled by solve_edge; filtered to the tracked half
};

/// Sum over the segment's nodes of A_{m,r} C^m, with the common C-power and
/// B-content cancelled and the leading C-coefficient made positive.
EdgeSolution edge_polynomial(const NewtonPolygon& np, std::size_t segment_index);

/// Solves a (bi)quadratic edge equation in closed form over Q(sqrt 2) and
/// keeps the roots selected by the half-plane condition (real > 0, or
/// imaginary part > 0). Throws on unsupported shapes.
EdgeSolution solve_edge(EdgeSolution edge);

}  // namespace cuboid
