#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "char_data.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "plumbing.hpp"

namespace ovalsig {

/// A modulus for residue tests: either an odd prime p, or "infinity", where
/// "zero mod infinity" means exactly zero.
class Modulus {
 public:
  static Modulus infinity() { return Modulus(std::nullopt); }
  static Modulus at(Int p) { return Modulus(std::move(p)); }

  bool is_infinite() const { return !p_.has_value(); }
  const Int& prime() const { return *p_; }

  bool is_zero(const Int& v) const {
    return p_ ? (v % *p_ == 0) : (v == 0);
  }

 private:
  explicit Modulus(std::optional<Int> p) : p_(std::move(p)) {}
  std::optional<Int> p_;
};

/// A subgraph given by vertex ids of the ambient tree plus the induced edges.
struct Subgraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;

  bool contains(int v) const {
    for (int w : vertices)
      if (w == v) return true;
    return false;
  }
  bool has_edge(int a, int b) const {
    for (auto [u, v] : edges)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  }
};

/// Principal submatrix of the plumbing matrix on a subgraph.
inline Mat subgraph_matrix(const PlumbingTree& g, const Subgraph& sub) {
  const std::size_t k = sub.vertices.size();
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < k; ++i)
    pos[static_cast<std::size_t>(sub.vertices[i])] = static_cast<int>(i);
  Mat a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    a(i, i) = g.vertices[static_cast<std::size_t>(sub.vertices[i])].weight;
  for (auto [u, v] : sub.edges) {
    int i = pos[static_cast<std::size_t>(u)], j = pos[static_cast<std::size_t>(v)];
    a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
    a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Zero structures.
// ---------------------------------------------------------------------------

/// Zero structure of a curve tree pair (gamma inside gamma_plus) for the
/// extended characteristic vector c_plus and a modulus:
///   z      - number of gamma-vertices whose entry vanishes,
///   frak_z - subgraph of gamma on vanishing vertices none of whose
///            gamma_plus-neighbours has a nonvanishing entry, with the edges
///            of gamma between them,
///   e      - edges of gamma_plus with both endpoint entries nonvanishing,
///   frak_e - edges of gamma_plus with at least one vanishing endpoint.
struct ZeroStructure {
  long z = 0;
  Subgraph frak_z;
  long e = 0;
  long frak_e = 0;
};

inline ZeroStructure zero_structure(const PlumbingTree& gamma,
                                    const PlumbingTree& gamma_plus,
                                    const std::vector<Int>& c_plus,
                                    const Modulus& m) {
  if (c_plus.size() != gamma_plus.size())
    throw BadParametersError("zero_structure: vector/graph size mismatch");
  const std::size_t n = gamma.size();
  const std::size_t np = gamma_plus.size();
  std::vector<char> zero(np);
  for (std::size_t v = 0; v < np; ++v) zero[v] = m.is_zero(c_plus[v]) ? 1 : 0;

  ZeroStructure zs;
  for (std::size_t v = 0; v < n; ++v)
    if (zero[v]) ++zs.z;

  // A gamma-vertex joins frak_z when it and all its gamma_plus-neighbours
  // carry vanishing entries.
  std::vector<char> clean(np, 1);
  for (auto [u, v] : gamma_plus.edges) {
    if (!zero[static_cast<std::size_t>(u)]) clean[static_cast<std::size_t>(v)] = 0;
    if (!zero[static_cast<std::size_t>(v)]) clean[static_cast<std::size_t>(u)] = 0;
  }
  std::vector<char> in_z(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (zero[v] && clean[v]) {
      in_z[v] = 1;
      zs.frak_z.vertices.push_back(static_cast<int>(v));
    }
  for (auto [u, v] : gamma.edges)
    if (in_z[static_cast<std::size_t>(u)] && in_z[static_cast<std::size_t>(v)])
      zs.frak_z.edges.emplace_back(u, v);

  for (auto [u, v] : gamma_plus.edges) {
    if (!zero[static_cast<std::size_t>(u)] && !zero[static_cast<std::size_t>(v)])
      ++zs.e;
    else
      ++zs.frak_e;
  }
  return zs;
}

/// Single-graph zero data for the covering-space formulas: vanishing
/// vertices, the subgraph they generate (restricted to fully-vanishing
/// neighbourhoods), and the count of edges with both endpoints nonvanishing.
struct CoverZeroData {
  std::vector<int> zero_vertices;
  Subgraph frak_z;
  long e = 0;
};

inline CoverZeroData cover_zero_data(const PlumbingTree& g,
                                     const std::vector<Int>& values,
                                     const Modulus& m) {
  if (values.size() != g.size())
    throw BadParametersError("cover_zero_data: vector/graph size mismatch");
  const std::size_t n = g.size();
  std::vector<char> zero(n);
  CoverZeroData zd;
  for (std::size_t v = 0; v < n; ++v) {
    zero[v] = m.is_zero(values[v]) ? 1 : 0;
    if (zero[v]) zd.zero_vertices.push_back(static_cast<int>(v));
  }
  std::vector<char> clean(n, 1);
  for (auto [u, v] : g.edges) {
    if (!zero[static_cast<std::size_t>(u)]) clean[static_cast<std::size_t>(v)] = 0;
    if (!zero[static_cast<std::size_t>(v)]) clean[static_cast<std::size_t>(u)] = 0;
    if (!zero[static_cast<std::size_t>(u)] && !zero[static_cast<std::size_t>(v)])
      ++zd.e;
  }
  std::vector<char> in_z(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (zero[v] && clean[v]) {
      in_z[v] = 1;
      zd.frak_z.vertices.push_back(static_cast<int>(v));
    }
  for (auto [u, v] : g.edges)
    if (in_z[static_cast<std::size_t>(u)] && in_z[static_cast<std::size_t>(v)])
      zd.frak_z.edges.emplace_back(u, v);
  return zd;
}

// ---------------------------------------------------------------------------
// Covering invariants of plumbed manifolds and graph links.
// ---------------------------------------------------------------------------

/// Per-vertex test of the characteristic condition (c A)_v = 0 mod p.
inline std::vector<bool> is_characteristic(const PlumbingTree& g,
                                           const std::vector<Int>& c,
                                           const Int& p) {
  if (c.size() != g.size())
    throw BadParametersError("is_characteristic: vector/graph size mismatch");
  std::vector<Int> ca(g.size(), Int(0));
  for (std::size_t v = 0; v < g.size(); ++v)
    ca[v] = Int(g.vertices[v].weight) * c[v];
  for (auto [u, v] : g.edges) {
    ca[static_cast<std::size_t>(u)] += c[static_cast<std::size_t>(v)];
    ca[static_cast<std::size_t>(v)] += c[static_cast<std::size_t>(u)];
  }
  std::vector<bool> ok(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) ok[v] = (ca[v] % p == 0);
  return ok;
}

struct CoverInvariants {
  Rational sigma;
  Int eta;
};

/// Signature and nullity defect of the p-fold cyclic cover of the plumbed
/// manifold of g determined by a p-characteristic vector c:
///   sigma = (2/p^2) r_p(c) A r_p(-c)^T + Sign A_z - e - Sign A
///   eta   = null A_z + |v(z)| - 2 |Z| + |v(g)| - e - 1
inline CoverInvariants cover_invariants(const PlumbingTree& g,
                                        const std::vector<Int>& c, const Int& p) {
  if (!is_odd_prime(p)) throw NonOddPrimeError();
  if (c.size() != g.size())
    throw BadParametersError("cover_invariants: vector/graph size mismatch");
  bool all_zero = true;
  for (const Int& v : c)
    if (v % p != 0) { all_zero = false; break; }
  if (all_zero) throw ZeroVectorError();
  const std::vector<bool> chi = is_characteristic(g, c, p);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!chi[v])
      throw NotCharacteristicError("vector is not characteristic at vertex " +
                                   std::to_string(v));

  std::vector<Int> r(g.size()), rn(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    r[v] = mod_reduce(c[v], p);
    rn[v] = r[v] == 0 ? Int(0) : p - r[v];
  }
  const Int quad = plumbing_form(g, r, rn);

  const CoverZeroData zd = cover_zero_data(g, c, Modulus::at(p));
  const Inertia in_z = inertia(subgraph_matrix(g, zd.frak_z));
  const Inertia in_a = inertia(plumbing_matrix(g));
  if (in_a.n_zero != 0) throw SingularMatrixError();

  CoverInvariants out;
  out.sigma = Rational(2 * quad, p * p) +
              Rational(in_z.signature() - zd.e - in_a.signature());
  out.eta = Int(in_z.nullity()) + Int(zd.frak_z.vertices.size()) -
            2 * Int(zd.zero_vertices.size()) + Int(g.size()) - zd.e - 1;
  return out;
}

struct InvariantPair {
  Int sig;
  Int eta;

  bool operator==(const InvariantPair&) const = default;
};

/// Tristram-Levine-type signature and nullity of the graph link of a
/// decorated tree at parameter a/p:
///   sigma_{a/p} = (2/p^2)(r_p(a u+) A+ r_p(-a u+)^T + a(p-a) delta)
///                 - Sign A + Sign A_z - e
///   eta_p       = null A_z + |v(z)| - 2 |Z| + |v(g+)| - e - 1
/// where u = -s A^{-1}, delta = s A^{-1} s^T, and u+ extends u over the
/// arrowheads by the arrow signs. Both values are integral (asserted).
inline InvariantPair graph_link_invariants(const PlumbingTree& g, const Int& a,
                                           const Int& p) {
  if (!is_odd_prime(p)) throw NonOddPrimeError();
  if (a <= 0 || a >= p) throw BadParametersError("need 0 < a < p");
  if (g.arrows.empty()) throw EmptyLinkError();

  const std::vector<Int> s = arrow_vector(g);
  Vec b(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) b[i] = Rational(s[i]);
  const Vec y = detail::solve_plumbing(g, b);  // A^{-1} s^T
  Rational delta = 0;
  for (std::size_t i = 0; i < g.size(); ++i) delta += Rational(s[i]) * y[i];

  const PlumbingTree gp = build_gamma_plus(g);
  std::vector<Rational> u_plus(gp.size(), Rational(0));
  for (std::size_t i = 0; i < g.size(); ++i) u_plus[i] = -y[i];
  for (const Arrow& ar : gp.arrows)
    u_plus[static_cast<std::size_t>(ar.head)] = ar.sign;

  std::vector<Int> r(gp.size()), rn(gp.size());
  std::vector<Int> rvals(gp.size());
  for (std::size_t v = 0; v < gp.size(); ++v) {
    r[v] = residue(Rational(a) * u_plus[v], p);
    rn[v] = r[v] == 0 ? Int(0) : p - r[v];
    rvals[v] = r[v];
  }
  const Int quad = plumbing_form(gp, r, rn);

  const CoverZeroData zd = cover_zero_data(gp, rvals, Modulus::at(p));
  const Inertia in_z = inertia(subgraph_matrix(gp, zd.frak_z));
  const Inertia in_a = inertia(plumbing_matrix(g));
  if (in_a.n_zero != 0) throw SingularMatrixError();

  const Rational sigma =
      Rational(2, p * p) * (Rational(quad) + Rational(a * (p - a)) * delta) +
      Rational(in_z.signature() - zd.e - in_a.signature());
  if (boost::multiprecision::denominator(sigma) != 1)
    throw NonIntegralCharDataError("graph link signature is not integral");

  InvariantPair out;
  out.sig = boost::multiprecision::numerator(sigma);
  out.eta = Int(in_z.nullity()) + Int(zd.frak_z.vertices.size()) -
            2 * Int(zd.zero_vertices.size()) + Int(gp.size()) - zd.e - 1;
  return out;
}

}  // namespace ovalsig
