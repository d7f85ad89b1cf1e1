#include "cuboid/newton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cuboid {

namespace {

// r-coordinate of the line through (m1,r1),(m2,r2) at m, as exact rational.
BigRat line_at(int m1, int r1, int m2, int r2, int m) {
  return BigRat(r1) + BigRat(r2 - r1, m2 - m1) * BigRat(m - m1);
}

}  // namespace

std::vector<std::size_t> NewtonPolygon::upper_boundary_nodes() const {
  std::vector<std::size_t> out;
  for (const auto& seg : upper_segments)
    for (std::size_t idx : seg.node_indices)
      if (out.empty() || out.back() != idx) out.push_back(idx);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool NewtonPolygon::all_nodes_under_hull() const {
  for (const auto& node : nodes) {
    bool covered = upper_segments.empty();
    for (const auto& seg : upper_segments) {
      if (node.m < seg.m1 || node.m > seg.m2) continue;
      covered = true;
      if (BigRat(node.r) > line_at(seg.m1, seg.r1, seg.m2, seg.r2, node.m)) return false;
    }
    if (!covered) return false;
  }
  return true;
}

NewtonPolygon newton_polygon(const CharPoly& poly) {
  if (poly.kind == CharKind::original)
    throw std::invalid_argument("newton_polygon: expects a transformed polynomial");
  const MultiPoly& body = poly.body;
  const auto& vars = body.variables();
  int ti = -1, qi = -1;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == "t") ti = static_cast<int>(i);
    else if (vars[i] == "q") qi = static_cast<int>(i);
    else rest.push_back(i);
  }
  if (ti < 0 || qi < 0) throw std::invalid_argument("newton_polygon: needs variables t and q");

  std::vector<std::string> param_vars;
  for (std::size_t i : rest) param_vars.push_back(vars[i]);

  std::map<std::pair<int, int>, MultiPolyBuilder> groups;
  for (const auto& [e, c] : body.terms()) {
    auto key = std::make_pair(e[static_cast<std::size_t>(ti)], e[static_cast<std::size_t>(qi)]);
    auto it = groups.find(key);
    if (it == groups.end()) it = groups.emplace(key, MultiPolyBuilder(param_vars)).first;
    MultiPoly::Exponents pe;
    for (std::size_t i : rest) pe.push_back(e[i]);
    it->second.add(pe, c);
  }

  NewtonPolygon np;
  for (auto& [key, builder] : groups) {
    MultiPoly coeff = builder.take();
    if (coeff.is_zero()) continue;  // exact cancellation: no node
    np.nodes.push_back(NewtonNode{key.first, key.second, std::move(coeff)});
  }
  std::sort(np.nodes.begin(), np.nodes.end(), [](const NewtonNode& a, const NewtonNode& b) {
    return a.m != b.m ? a.m < b.m : a.r < b.r;
  });

  // highest node per t-degree
  std::map<int, int> top;  // m -> r
  for (const auto& n : np.nodes) {
    auto it = top.find(n.m);
    if (it == top.end() || it->second < n.r) top[n.m] = n.r;
  }
  std::vector<std::pair<int, int>> pts(top.begin(), top.end());

  // upper convex hull, left to right (monotone chain); collinear interior
  // points are dropped from the vertex list and re-attached per segment.
  std::vector<std::pair<int, int>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull[hull.size() - 1];
      long cross = static_cast<long>(x2 - x1) * (pt.second - y1) -
                   static_cast<long>(y2 - y1) * (pt.first - x1);
      if (cross >= 0) hull.pop_back();  // not a strict right turn: pop
      else break;
    }
    hull.push_back(pt);
  }

  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    NewtonSegment seg;
    seg.m1 = hull[k].first;
    seg.r1 = hull[k].second;
    seg.m2 = hull[k + 1].first;
    seg.r2 = hull[k + 1].second;
    seg.slope = BigRat(seg.r2 - seg.r1, seg.m2 - seg.m1);
    for (std::size_t i = 0; i < np.nodes.size(); ++i) {
      const auto& n = np.nodes[i];
      if (n.m < seg.m1 || n.m > seg.m2) continue;
      if (BigRat(n.r) == line_at(seg.m1, seg.r1, seg.m2, seg.r2, n.m))
        seg.node_indices.push_back(i);
    }
    np.upper_segments.push_back(std::move(seg));
  }
  return np;
}

std::vector<BigRat> candidate_exponents(const NewtonPolygon& np) {
  std::vector<BigRat> alphas;
  for (const auto& seg : np.upper_segments) alphas.push_back(-seg.slope);
  std::sort(alphas.begin(), alphas.end());
  return alphas;
}

EdgeSolution edge_polynomial(const NewtonPolygon& np, std::size_t segment_index) {
  if (segment_index >= np.upper_segments.size())
    throw std::invalid_argument("edge_polynomial: no such segment");
  const NewtonSegment& seg = np.upper_segments[segment_index];

  const std::vector<std::string> uniBC{"B", "C"};
  MultiPoly edge{uniBC};
  for (std::size_t idx : seg.node_indices) {
    const NewtonNode& n = np.nodes[idx];
    // coefficients on the upper boundary must not involve p
    MultiPoly c = n.coeff;
    const auto& cv = c.variables();
    for (std::size_t i = 0; i < cv.size(); ++i)
      if (cv[i] == "p" && c.max_exponent("p") != 0)
        throw std::runtime_error("edge_polynomial: p-dependent boundary coefficient");
    MultiPoly term{uniBC};
    for (const auto& [e, q] : c.terms()) {
      int eb = 0;
      for (std::size_t i = 0; i < cv.size(); ++i)
        if (cv[i] == "B") eb = e[i];
      term = term + MultiPoly::monomial(uniBC, {eb, n.m}, q);
    }
    edge = edge + term;
  }

  // cancel the common C power and B power, divide by integer content,
  // normalize the sign of the highest C-term to +.
  int cmin = edge.min_exponent("C"), bmin = edge.min_exponent("B");
  MultiPoly shifted{uniBC};
  for (const auto& [e, q] : edge.terms())
    shifted = shifted + MultiPoly::monomial(uniBC, {e[0] - bmin, e[1] - cmin}, q);
  BigRat cont = shifted.content();
  shifted = shifted * QuadRat(BigRat(1) / cont);
  // sign: highest C exponent term
  int cmax = shifted.max_exponent("C");
  QuadRat leadsum(0);
  for (const auto& [e, q] : shifted.terms())
    if (e[1] == cmax) leadsum += q;
  if (leadsum.sign() < 0) shifted = -shifted;

  EdgeSolution sol;
  sol.alpha = -seg.slope;
  sol.edge_poly = std::move(shifted);
  return sol;
}

EdgeSolution solve_edge(EdgeSolution edge) {
  const MultiPoly& P = edge.edge_poly;
  // collect y = C^2 representation: C-exponent -> (scalar, B-power)
  struct Term { QuadRat coeff; int bpow; };
  std::map<int, Term> by_k;  // k = C-exp / 2
  for (const auto& [e, q] : P.terms()) {
    int eb = 0, ec = 0;
    const auto& vars = P.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == "B") eb = e[i];
      if (vars[i] == "C") ec = e[i];
    }
    if (ec % 2 != 0)
      throw std::runtime_error("solve_edge: unsupported shape (odd C power)");
    auto [it, fresh] = by_k.emplace(ec / 2, Term{q, eb});
    if (!fresh) throw std::runtime_error("solve_edge: unsupported shape (mixed B powers)");
  }
  if (by_k.size() < 2 || by_k.rbegin()->first - by_k.begin()->first > 2)
    throw std::runtime_error("solve_edge: unsupported shape (degree)");

  // homogenize with C = gamma * B^j
  int k0 = by_k.begin()->first;
  int e0 = by_k.begin()->second.bpow;
  int j = 0;
  {
    auto it = by_k.rbegin();
    int kHi = it->first, eHi = it->second.bpow;
    int num = e0 - eHi, den = 2 * (kHi - k0);
    if (num % den != 0)
      throw std::runtime_error("solve_edge: unsupported shape (non-integral homogenization)");
    j = num / den;
    for (const auto& [k, term] : by_k)
      if (term.bpow + 2 * j * k != e0 + 2 * j * k0)
        throw std::runtime_error("solve_edge: unsupported shape (inhomogeneous)");
  }

  // quadratic (or linear) in w = gamma^2, after stripping gamma^(2 k0):
  QuadRat a = by_k.count(k0 + 2) ? by_k[k0 + 2].coeff : QuadRat(0);
  QuadRat b = by_k.count(k0 + 1) ? by_k[k0 + 1].coeff : QuadRat(0);
  QuadRat c = by_k[k0].coeff;
  if (!a.is_rational() || !b.is_rational() || !c.is_rational())
    throw std::runtime_error("solve_edge: unsupported shape (irrational edge coefficients)");

  struct WRoot { QuadRat w; int mult; };
  std::vector<WRoot> ws;
  if (a.is_zero()) {
    ws.push_back({-c / b, 1});
  } else {
    QuadRat disc = b * b - QuadRat(4) * a * c;
    if (disc.is_zero()) {
      ws.push_back({-b / (QuadRat(2) * a), 2});
    } else if (disc.sign() > 0) {
      auto sq = disc.sqrt();
      if (!sq) throw std::runtime_error("solve_edge: discriminant has no closed form in Q(sqrt2)");
      ws.push_back({(-b + *sq) / (QuadRat(2) * a), 1});
      ws.push_back({(-b - *sq) / (QuadRat(2) * a), 1});
    } else {
      throw std::runtime_error("solve_edge: complex C^2 roots unsupported");
    }
  }

  for (const auto& wr : ws) {
    if (wr.w.is_zero()) continue;  // C = 0 never admissible in the expansions
    if (wr.w.sign() > 0) {
      auto g = wr.w.sqrt();
      if (!g) throw std::runtime_error("solve_edge: root has no closed form in Q(sqrt2)");
      // keep the positive real root only (half-plane condition)
      edge.roots.push_back(EdgeRoot{*g, j, Axis::real, wr.mult});
    } else {
      auto g = (-wr.w).sqrt();
      if (!g) throw std::runtime_error("solve_edge: root has no closed form in Q(sqrt2)");
      // gamma = +- i sqrt(-w); keep positive imaginary part
      edge.roots.push_back(EdgeRoot{*g, j, Axis::imaginary, wr.mult});
    }
  }

  // exactness check: substitute C -> scale * B^j (or its imaginary variant)
  for (const auto& root : edge.roots) {
    QuadRat w = root.scale * root.scale;  // gamma^2 (sign applied below)
    if (root.axis == Axis::imaginary) w = -w;
    // evaluate sum over k of coeff_k * w^k * B^(bpow + 2 j k) at symbolic B:
    // homogeneous, so the scalar sum must vanish.
    QuadRat sum(0);
    for (const auto& [k, term] : by_k) sum += term.coeff * w.pow(k - k0);
    if (!sum.is_zero()) throw std::logic_error("solve_edge: root does not satisfy edge equation");
  }
  return edge;
}

}  // namespace cuboid
