#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "scheme.hpp"

namespace ovalsig {

enum class VertexRole { U1, U2, U3, Region, Oval, Arrowhead, Generic };

struct PlumbingVertex {
  long long weight = 0;
  VertexRole role = VertexRole::Generic;
  int ref = -1;  // region/oval index for Region/Oval roles
};

/// A decorated arrow. `head` is the index of the materialized arrowhead
/// vertex, or -1 while the arrow is still symbolic.
struct Arrow {
  int tail = 0;
  int sign = 1;  // +1 or -1
  int head = -1;
};

/// Weighted tree with optional decorating arrows, the combinatorial model of
/// a plumbed 3-manifold (vertices = pieces, edges = plumbing, arrows = link
/// components).
struct PlumbingTree {
  std::vector<PlumbingVertex> vertices;  // vertex id = index
  std::vector<std::pair<int, int>> edges;
  std::vector<Arrow> arrows;

  std::size_t size() const { return vertices.size(); }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, b] : edges) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
  }

  bool is_tree() const {
    if (vertices.empty()) return false;
    if (edges.size() + 1 != vertices.size()) return false;
    auto adj = adjacency();
    std::vector<char> seen(vertices.size(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          queue.push_back(w);
        }
    }
    return reached == vertices.size();
  }
};

/// Symmetric intersection matrix: weights on the diagonal, 1 for each edge.
inline Mat plumbing_matrix(const PlumbingTree& g) {
  Mat a(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a(i, i) = g.vertices[i].weight;
  for (auto [u, v] : g.edges) {
    a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
    a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
  }
  return a;
}

/// x^T A y for the plumbing matrix A of g, evaluated off the edge list
/// (A is tree-sparse; this avoids materializing it in hot paths).
inline Int plumbing_form(const PlumbingTree& g, const std::vector<Int>& x,
                         const std::vector<Int>& y) {
  Int total = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.vertices[i].weight != 0 && x[i] != 0 && y[i] != 0)
      total += Int(g.vertices[i].weight) * x[i] * y[i];
  for (auto [u, v] : g.edges) {
    auto a = static_cast<std::size_t>(u), b = static_cast<std::size_t>(v);
    total += x[a] * y[b] + x[b] * y[a];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Construction from a complex scheme.
//
// Vertex order is fixed: u1, u2, u3, then one vertex per region (outer region
// first, then interior regions in oval preorder), then one vertex per oval in
// preorder. Arrowheads, when materialized, follow in arrow order.
//
//   u1 -- u2, u1 -- u3, u1 -- outer region; each oval joins the two regions
//   it bounds. Region weights are twice the Euler characteristic; u1,u2,u3
//   weigh 1,2,2; ovals weigh 0.
//
// Arrows: odd type adds a +1 arrow at u2; every oval o carries an arrow of
// sign (-1)^{parity(o)+1} * epsilon(o).
// ---------------------------------------------------------------------------

inline PlumbingTree build_gamma(const ComplexScheme& s, const SchemeStats& st) {
  PlumbingTree g;
  const long l = st.l;
  g.vertices.resize(static_cast<std::size_t>(2 * l + 4));
  g.vertices[0] = {1, VertexRole::U1, -1};
  g.vertices[1] = {2, VertexRole::U2, -1};
  g.vertices[2] = {2, VertexRole::U3, -1};
  const auto region_vertex = [&](long r) { return static_cast<int>(3 + r); };
  const auto oval_vertex = [&](long i) { return static_cast<int>(4 + l + i); };
  for (long r = 0; r <= l; ++r)
    g.vertices[static_cast<std::size_t>(region_vertex(r))] = {
        2 * st.regions[static_cast<std::size_t>(r)].euler, VertexRole::Region,
        static_cast<int>(r)};
  for (long i = 0; i < l; ++i)
    g.vertices[static_cast<std::size_t>(oval_vertex(i))] = {0, VertexRole::Oval,
                                                            static_cast<int>(i)};

  g.edges.emplace_back(0, 1);
  g.edges.emplace_back(0, 2);
  g.edges.emplace_back(0, region_vertex(0));
  for (long i = 0; i < l; ++i) {
    const OvalData& o = st.ovals[static_cast<std::size_t>(i)];
    const long outside = o.parent < 0 ? 0 : o.parent + 1;
    g.edges.emplace_back(region_vertex(outside), oval_vertex(i));
    g.edges.emplace_back(region_vertex(i + 1), oval_vertex(i));
  }

  if (s.kind == SchemeKind::Odd) g.arrows.push_back({1, 1, -1});
  for (long i = 0; i < l; ++i) {
    const OvalData& o = st.ovals[static_cast<std::size_t>(i)];
    const int sign = o.parity == 0 ? -o.epsilon : o.epsilon;
    g.arrows.push_back({oval_vertex(i), sign, -1});
  }
  return g;
}

inline PlumbingTree build_gamma(const ComplexScheme& s) {
  return build_gamma(s, scheme_stats(s));
}

/// Convert arrows to genuine 0-weighted leaf vertices. Arrow metadata is
/// kept (tail, sign, head) so downstream code never re-derives it.
inline PlumbingTree build_gamma_plus(const PlumbingTree& g) {
  PlumbingTree gp = g;
  for (Arrow& a : gp.arrows) {
    a.head = static_cast<int>(gp.vertices.size());
    gp.vertices.push_back({0, VertexRole::Arrowhead, -1});
    gp.edges.emplace_back(a.tail, a.head);
  }
  return gp;
}

/// The augmented tree: the scheme's tree with one extra arrow per region,
/// signed by region parity. Used for the covering-space route.
inline PlumbingTree build_gamma_hat(const ComplexScheme& s, const SchemeStats& st) {
  PlumbingTree g = build_gamma(s, st);
  for (long r = 0; r <= st.l; ++r) {
    const int sign = st.regions[static_cast<std::size_t>(r)].parity == 0 ? 1 : -1;
    g.arrows.push_back({static_cast<int>(3 + r), sign, -1});
  }
  return g;
}

inline PlumbingTree build_gamma_hat(const ComplexScheme& s) {
  return build_gamma_hat(s, scheme_stats(s));
}

// ---------------------------------------------------------------------------
// Dumps.
// ---------------------------------------------------------------------------

inline std::string role_str(const PlumbingVertex& v) {
  switch (v.role) {
    case VertexRole::U1: return "u1";
    case VertexRole::U2: return "u2";
    case VertexRole::U3: return "u3";
    case VertexRole::Region: return "region:" + std::to_string(v.ref);
    case VertexRole::Oval: return "oval:" + std::to_string(v.ref);
    case VertexRole::Arrowhead: return "arrowhead";
    case VertexRole::Generic: return "generic";
  }
  return "generic";
}

inline std::string role_str_short(const PlumbingVertex& v) {
  switch (v.role) {
    case VertexRole::U1: return "u1";
    case VertexRole::U2: return "u2";
    case VertexRole::U3: return "u3";
    case VertexRole::Region: return "R" + std::to_string(v.ref);
    case VertexRole::Oval: return "o" + std::to_string(v.ref);
    case VertexRole::Arrowhead: return "ah";
    case VertexRole::Generic: return "g";
  }
  return "g";
}

/// Graphviz dump. Vertices are labeled "id:weight(role)"; arrows become
/// dashed edges to synthetic "+"/"-" nodes.
inline std::string to_dot(const PlumbingTree& g) {
  std::string out = "graph plumbing {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" + std::to_string(i) + ":" +
           std::to_string(g.vertices[i].weight) + "(" +
           role_str_short(g.vertices[i]) + ")\"];\n";
  }
  for (auto [u, v] : g.edges)
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  for (std::size_t k = 0; k < g.arrows.size(); ++k) {
    const Arrow& a = g.arrows[k];
    if (a.head >= 0) continue;  // already a real arrowhead vertex
    out += "  a" + std::to_string(k) + " [label=\"" +
           (a.sign > 0 ? "+" : "-") + "\", shape=none];\n";
    out += "  v" + std::to_string(a.tail) + " -- a" + std::to_string(k) +
           " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ovalsig
