#pragma once

#include <algorithm>
#include <vector>

#include "matrix.hpp"
#include "plumbing.hpp"

namespace ovalsig {

/// The arrow vector s: at each vertex, the signed number of arrows based
/// there (0 at vertices without arrows).
inline std::vector<Int> arrow_vector(const PlumbingTree& g) {
  std::vector<Int> s(g.size(), Int(0));
  for (const Arrow& a : g.arrows) s[static_cast<std::size_t>(a.tail)] += a.sign;
  return s;
}

/// Characteristic data of a decorated tree:
///   delta = 2 s A^{-1} s^T   and   c = -2 s A^{-1},
/// both integral for the trees this library builds (asserted).
struct CharData {
  Int delta;
  std::vector<Int> c;
  std::vector<Int> s;
};

namespace detail {

// Leaves-first elimination order (reverse breadth-first from vertex 0).
// Plumbing matrices are tree-sparse; factoring in this order keeps Gaussian
// elimination essentially fill-free, which matters for the large trees the
// degree-prohibition scans produce.
inline std::vector<std::size_t> leaves_first_order(const PlumbingTree& g) {
  auto adj = g.adjacency();
  std::vector<std::size_t> order;
  order.reserve(g.size());
  std::vector<char> seen(g.size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[static_cast<std::size_t>(h)];
    order.push_back(static_cast<std::size_t>(v));
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
  }
  if (order.size() != g.size())
    throw BadParametersError("plumbing graph is not connected");
  std::reverse(order.begin(), order.end());
  return order;
}

// Solve A x = b for the plumbing matrix of g, permuted leaves-first.
inline Vec solve_plumbing(const PlumbingTree& g, const Vec& b) {
  const std::vector<std::size_t> order = leaves_first_order(g);
  const std::size_t n = g.size();
  std::vector<std::size_t> pos(n);  // vertex -> permuted index
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  Mat a(n, n);
  for (std::size_t v = 0; v < n; ++v) a(pos[v], pos[v]) = g.vertices[v].weight;
  for (auto [u, v] : g.edges) {
    auto i = pos[static_cast<std::size_t>(u)], j = pos[static_cast<std::size_t>(v)];
    a(i, j) = 1;
    a(j, i) = 1;
  }
  Vec pb(n);
  for (std::size_t v = 0; v < n; ++v) pb[pos[v]] = b[v];
  Vec px = solve(a, pb);
  Vec x(n);
  for (std::size_t v = 0; v < n; ++v) x[v] = px[pos[v]];
  return x;
}

}  // namespace detail

inline CharData char_data(const PlumbingTree& g) {
  const std::size_t n = g.size();
  CharData cd;
  cd.s = arrow_vector(g);
  Vec b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = Rational(cd.s[i]);
  const Vec y = detail::solve_plumbing(g, b);  // y = A^{-1} s^T

  cd.c.resize(n);
  Rational delta = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational ci = -2 * y[i];
    if (boost::multiprecision::denominator(ci) != 1)
      throw NonIntegralCharDataError("characteristic vector entry " +
                                     std::to_string(i) + " is not integral");
    cd.c[i] = boost::multiprecision::numerator(ci);
    delta += Rational(cd.s[i]) * y[i];
  }
  delta *= 2;
  if (boost::multiprecision::denominator(delta) != 1)
    throw NonIntegralCharDataError("delta is not integral");
  cd.delta = boost::multiprecision::numerator(delta);
  return cd;
}

/// Extend c over the arrowhead vertices of a materialized tree: the entry at
/// each arrowhead is twice the arrow sign.
inline std::vector<Int> extend_over_arrowheads(const PlumbingTree& gp,
                                               const std::vector<Int>& c) {
  std::vector<Int> cp(gp.size(), Int(0));
  std::copy(c.begin(), c.end(), cp.begin());
  for (const Arrow& a : gp.arrows) {
    if (a.head < 0)
      throw BadParametersError("arrowheads are not materialized");
    cp[static_cast<std::size_t>(a.head)] = 2 * a.sign;
  }
  return cp;
}

/// Linking matrix of the vertex fibers: -A^{-1}.
inline Mat linking_matrix(const PlumbingTree& g) {
  Mat inv = inverse(plumbing_matrix(g));
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j);
  return inv;
}

}  // namespace ovalsig
