#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "casson_gordon.hpp"
#include "char_data.hpp"
#include "plumbing.hpp"
#include "scheme.hpp"

namespace ovalsig {

// ---------------------------------------------------------------------------
// Closed forms for the characteristic data of a curve tree, straight from the
// scheme combinatorics. These duplicate char_data() on purpose: the two
// routes are computed independently and cross-checked in the test suite.
// ---------------------------------------------------------------------------

inline Int closed_form_delta(const SchemeStats& st) {
  Int k = Int(st.l) + 2 * Int(st.pi_minus - st.pi_plus);
  if (st.kind == SchemeKind::Odd) k += Int(st.lambda_minus - st.lambda_plus);
  return -4 * k;
}

inline std::vector<Int> closed_form_c(const SchemeStats& st) {
  const long l = st.l;
  const Int lam = Int(st.lambda_minus - st.lambda_plus);
  std::vector<Int> c(static_cast<std::size_t>(2 * l + 4));
  if (st.kind == SchemeKind::Odd) {
    c[0] = -2 - 4 * lam;
    c[1] = 2 * lam;
    c[2] = 1 + 2 * lam;
  } else {
    c[0] = -4 * lam;
    c[1] = 2 * lam;
    c[2] = 2 * lam;
  }
  for (long r = 0; r <= l; ++r) {
    const RegionData& rd = st.regions[static_cast<std::size_t>(r)];
    const Int sign = rd.parity == 0 ? 1 : -1;
    const Int lam_r = Int(rd.lambda_minus - rd.lambda_plus);
    c[static_cast<std::size_t>(3 + r)] = st.kind == SchemeKind::Odd
                                             ? Int(sign * (1 + 2 * lam_r))
                                             : Int(sign * 2 * lam_r);
  }
  for (long i = 0; i < l; ++i) {
    const OvalData& o = st.ovals[static_cast<std::size_t>(i)];
    const Int s_o = o.parity == 0 ? -o.epsilon : o.epsilon;
    const Int pi_o = Int(o.pi_minus - o.pi_plus);
    c[static_cast<std::size_t>(4 + l + i)] =
        st.kind == SchemeKind::Odd ? Int(s_o * (-2 * o.epsilon + 4 + 4 * pi_o))
                                   : Int(s_o * (4 + 4 * pi_o));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Signature profile over the parameter interval (0, 1/2).
// ---------------------------------------------------------------------------

/// One piece of a signature profile. Intervals carry (sig, eta=nul); points
/// carry sig, plus eta exactly when the denominator is an odd prime (there
/// the nullity of the curve invariant itself is defined).
struct ProfileEntry {
  bool is_point = false;
  Rational lo, hi;  // for points, lo == hi == the point
  Int sig;
  std::optional<Int> eta;
  // For intervals: the deterministic sample b/p the value was computed at.
  Int sample_p = 0, sample_b = 0;

  const Rational& x() const { return lo; }
};

struct SignatureProfile {
  std::vector<ProfileEntry> entries;  // ascending, alternating interval/point
  std::vector<Rational> breakpoints;  // the points kept in `entries`
  Int nul;                            // limit nullity on intervals

  std::string to_text() const {
    std::string out;
    for (const ProfileEntry& e : entries) {
      if (e.is_point) {
        out += fraction_str(e.lo) + " --> (" + e.sig.str();
        if (e.eta) out += ", " + e.eta->str();
        out += ")\n";
      } else {
        out += "(" + fraction_str(e.lo) + ", " + fraction_str(e.hi) + ") --> (" +
               e.sig.str() + ", " + e.eta->str() + ")\n";
      }
    }
    return out;
  }
};

/// Oval-counting bound report for even-type schemes.
struct EvenBoundsReport {
  int case_id = 0;  // 0: l even; 1: l odd, one outer oval; 2: l odd, several
  Int sig;          // value at 1/4
  Int nul;
  Int lhs, rhs;        // |...| + nul <= rhs is the bound checked
  bool bound_holds = false;
  bool parity_holds = false;  // sig + nul = l - 1 (mod 2)
  bool pass = false;
};

struct StructureReport {
  bool conforms = true;
  std::string detail;
};

// ---------------------------------------------------------------------------
// CurveInvariants: everything derived from one complex scheme. Builds the
// tree and characteristic data once; all evaluations reuse them.
// ---------------------------------------------------------------------------

class CurveInvariants {
 public:
  explicit CurveInvariants(const ComplexScheme& s)
      : scheme_(s),
        stats_(scheme_stats(s)),
        gamma_(build_gamma(s, stats_)),
        gamma_plus_(build_gamma_plus(gamma_)),
        cd_(char_data(gamma_)),
        c_plus_(extend_over_arrowheads(gamma_plus_, cd_.c)) {}

  const ComplexScheme& scheme() const { return scheme_; }
  const SchemeStats& stats() const { return stats_; }
  const PlumbingTree& gamma() const { return gamma_; }
  const PlumbingTree& gamma_plus() const { return gamma_plus_; }
  const CharData& characteristic() const { return cd_; }
  const std::vector<Int>& c_plus() const { return c_plus_; }

  /// Signature and nullity at parameter b/p, for an odd prime p and
  /// 1 <= b <= (p-1)/2.
  InvariantPair sig_eta(const Int& p, const Int& b) const {
    if (!is_odd_prime(p)) throw NonOddPrimeError();
    if (b < 1 || 2 * b > p - 1)
      throw BadParametersError("need 1 <= b <= (p-1)/2");
    return eval(prime_data(Modulus::at(p)), p, b);
  }

  /// Limit nullity: the common nullity of all parameters with denominator
  /// prime to every entry of the characteristic vector.
  Int nul() const {
    const PrimeData pd = prime_data(Modulus::infinity());
    return eta_of(pd);
  }

  SignatureProfile profile() const {
    // Candidate jumps: reduced fractions in (0,1/2) whose denominator
    // divides some nonzero entry of the extended characteristic vector.
    std::set<Int> dens;
    Int maxabs = 0;
    for (const Int& e : c_plus_) {
      if (e == 0) continue;
      Int a = boost::multiprecision::abs(e);
      if (a > maxabs) maxabs = a;
      for (const Int& d : divisors(e))
        if (d >= 3) dens.insert(d);
    }
    std::set<Rational> cand_set;
    for (const Int& d : dens)
      for (Int k = 1; 2 * k < d; ++k)
        if (boost::multiprecision::gcd(k, d) == 1) cand_set.insert(Rational(k, d));
    const std::vector<Rational> cand(cand_set.begin(), cand_set.end());

    std::map<Int, PrimeData> cache;
    const auto eval_at = [&](const Int& p, const Int& b) {
      auto it = cache.find(p);
      if (it == cache.end())
        it = cache.emplace(p, prime_data(Modulus::at(p))).first;
      return eval(it->second, p, b);
    };

    SignatureProfile prof;
    prof.nul = nul();

    std::vector<Rational> cuts;
    cuts.push_back(Rational(0));
    cuts.insert(cuts.end(), cand.begin(), cand.end());
    cuts.push_back(Rational(1, 2));

    // Sample each open interval at b/p for the smallest odd prime
    // p > max |entry| that admits such a fraction inside.
    struct IntervalEval {
      Rational lo, hi;
      Int p, b, sig, eta;
    };
    std::vector<IntervalEval> ivs;
    const Int p0 = next_odd_prime(maxabs);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational lo = cuts[i], hi = cuts[i + 1];
      Int p = p0, b;
      while (true) {
        b = boost::multiprecision::numerator(lo) * p /
                boost::multiprecision::denominator(lo) +
            1;
        if (Rational(b, p) < hi) break;
        p = next_odd_prime(p);
      }
      const InvariantPair v = eval_at(p, b);
      if (v.eta != prof.nul)
        throw Error("internal: interval nullity differs from limit nullity");
      ivs.push_back({lo, hi, p, b, v.sig, v.eta});
    }

    // Evaluate points; composite denominators become averages and are kept
    // only where the profile actually jumps.
    const auto interval_entry = [](const IntervalEval& iv) {
      return ProfileEntry{false, iv.lo, iv.hi, iv.sig, iv.eta, iv.p, iv.b};
    };
    ProfileEntry cur = interval_entry(ivs[0]);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const IntervalEval& right = ivs[i + 1];
      const Int den = boost::multiprecision::denominator(cand[i]);
      const Int num = boost::multiprecision::numerator(cand[i]);
      if (is_odd_prime(den)) {
        const InvariantPair v = eval_at(den, num);
        prof.entries.push_back(cur);
        prof.entries.push_back({true, cand[i], cand[i], v.sig, v.eta, 0, 0});
        prof.breakpoints.push_back(cand[i]);
      } else if (cur.sig == right.sig) {
        cur.hi = right.hi;  // no jump: absorb the candidate
        continue;
      } else {
        const Int two_avg = cur.sig + right.sig;
        if (two_avg % 2 != 0)
          throw Error("internal: one-sided limits have unequal parity");
        prof.entries.push_back(cur);
        prof.entries.push_back(
            {true, cand[i], cand[i], two_avg / 2, std::nullopt, 0, 0});
        prof.breakpoints.push_back(cand[i]);
      }
      cur = interval_entry(right);
    }
    prof.entries.push_back(cur);
    return prof;
  }

  /// Signature of an even-type scheme: the common value around 1/4, where
  /// even-type profiles are symmetric and continuous.
  Int even_signature() const { return even_signature(profile()); }

  Int even_signature(const SignatureProfile& prof) const {
    if (stats_.kind != SchemeKind::Even) throw NotEvenTypeError();
    const Rational quarter(1, 4);
    for (const ProfileEntry& e : prof.entries) {
      if (e.is_point && e.lo == quarter)
        throw Error("internal: even-type profile jumps at 1/4");
      if (!e.is_point && e.lo < quarter && quarter < e.hi) return e.sig;
    }
    throw Error("internal: 1/4 not covered by the profile");
  }

  EvenBoundsReport even_bounds() const { return even_bounds(profile()); }

  EvenBoundsReport even_bounds(const SignatureProfile& prof) const {
    if (stats_.kind != SchemeKind::Even) throw NotEvenTypeError();
    EvenBoundsReport rep;
    rep.sig = even_signature(prof);
    rep.nul = prof.nul;
    const Int base = rep.sig + Int(stats_.n) + Int(stats_.n_zero) +
                     2 * Int(stats_.n_minus) -
                     2 * Int(stats_.pi_plus - stats_.pi_minus);
    const Int budget = Int(stats_.l - stats_.n_plus - stats_.n_minus);
    if (stats_.l % 2 == 0) {
      rep.case_id = 0;
      rep.lhs = boost::multiprecision::abs(base);
      rep.rhs = budget - 1;
    } else if (stats_.outer_ovals == 1) {
      rep.case_id = 1;
      rep.lhs = boost::multiprecision::abs(base);
      rep.rhs = budget + 1;
    } else {
      rep.case_id = 2;
      rep.lhs = boost::multiprecision::abs(base + 1);
      rep.rhs = budget;
    }
    rep.bound_holds = rep.lhs + rep.nul <= rep.rhs;
    rep.parity_holds = mod_reduce(rep.sig + rep.nul - Int(stats_.l - 1), 2) == 0;
    rep.pass = rep.bound_holds && rep.parity_holds;
    return rep;
  }

  /// Check the expected shape of the zero subgraph at an odd prime p: for
  /// odd type it is edgeless and supported on regions (and possibly u3); for
  /// even type the shape depends on lambda^- = lambda^+ (mod p).
  StructureReport structure_check(const Int& p) const {
    if (!is_odd_prime(p)) throw NonOddPrimeError();
    const ZeroStructure zs =
        zero_structure(gamma_, gamma_plus_, c_plus_, Modulus::at(p));
    StructureReport rep;
    const auto fail = [&rep](const std::string& m) {
      rep.conforms = false;
      if (!rep.detail.empty()) rep.detail += "; ";
      rep.detail += m;
    };

    if (stats_.kind == SchemeKind::Odd) {
      if (!zs.frak_z.edges.empty()) fail("odd type: zero subgraph has edges");
      for (int v : zs.frak_z.vertices) {
        const VertexRole role = gamma_.vertices[static_cast<std::size_t>(v)].role;
        if (role != VertexRole::Region && role != VertexRole::U3)
          fail("odd type: vertex " + std::to_string(v) + " is neither a region nor u3");
      }
      return rep;
    }

    const bool congruent =
        mod_reduce(Int(stats_.lambda_minus - stats_.lambda_plus), p) == 0;
    if (!congruent) {
      if (!zs.frak_z.edges.empty())
        fail("even type, lambda incongruent: zero subgraph has edges");
      for (int v : zs.frak_z.vertices) {
        const PlumbingVertex& pv = gamma_.vertices[static_cast<std::size_t>(v)];
        if (pv.role != VertexRole::Region || pv.ref == 0)
          fail("even type, lambda incongruent: vertex " + std::to_string(v) +
               " is not an inner region");
      }
      return rep;
    }

    if (!zs.frak_z.contains(0) || !zs.frak_z.contains(1) || !zs.frak_z.contains(2))
      fail("even type, lambda congruent: u1,u2,u3 not all in the zero subgraph");
    if (!zs.frak_z.has_edge(0, 1) || !zs.frak_z.has_edge(0, 2))
      fail("even type, lambda congruent: edges u1-u2, u1-u3 missing");
    bool outer_condition = true;
    for (long i = 0; i < stats_.l; ++i) {
      const OvalData& o = stats_.ovals[static_cast<std::size_t>(i)];
      if (o.depth != 0) continue;
      if (mod_reduce(Int(o.pi_plus - o.pi_minus) - 1, p) != 0) {
        outer_condition = false;
        break;
      }
    }
    const bool has_outer_region = zs.frak_z.contains(3);
    const bool has_outer_edge = zs.frak_z.has_edge(0, 3);
    if (has_outer_region != outer_condition || has_outer_edge != outer_condition)
      fail("even type, lambda congruent: outer-region membership mismatch");
    const std::size_t expected_edges = 2 + (outer_condition ? 1 : 0);
    if (zs.frak_z.edges.size() != expected_edges)
      fail("even type, lambda congruent: unexpected edges in the zero subgraph");
    for (int v : zs.frak_z.vertices) {
      if (v <= 2) continue;
      if (v == 3 && has_outer_region) continue;
      const PlumbingVertex& pv = gamma_.vertices[static_cast<std::size_t>(v)];
      if (pv.role != VertexRole::Region || pv.ref == 0)
        fail("even type, lambda congruent: vertex " + std::to_string(v) +
             " is not an inner region");
    }
    return rep;
  }

 private:
  struct PrimeData {
    ZeroStructure zs;
    long sign_z = 0;
    long null_z = 0;
  };

  PrimeData prime_data(const Modulus& m) const {
    PrimeData pd;
    pd.zs = zero_structure(gamma_, gamma_plus_, c_plus_, m);
    const Inertia in = inertia(subgraph_matrix(gamma_, pd.zs.frak_z));
    pd.sign_z = in.signature();
    pd.null_z = in.nullity();
    return pd;
  }

  Int eta_of(const PrimeData& pd) const {
    return Int(pd.zs.frak_e) + pd.null_z + Int(pd.zs.frak_z.vertices.size()) -
           2 * Int(pd.zs.z);
  }

  InvariantPair eval(const PrimeData& pd, const Int& p, const Int& b) const {
    std::vector<Int> r(gamma_plus_.size()), rn(gamma_plus_.size());
    for (std::size_t v = 0; v < gamma_plus_.size(); ++v) {
      r[v] = mod_reduce(b * c_plus_[v], p);
      rn[v] = r[v] == 0 ? Int(0) : p - r[v];
    }
    const Int quad = plumbing_form(gamma_plus_, r, rn);
    const Rational sig =
        Rational(2 * (quad + b * (p - 2 * b) * cd_.delta), p * p) +
        Rational(pd.sign_z - pd.zs.e - 2);
    if (boost::multiprecision::denominator(sig) != 1)
      throw Error("internal: signature is not integral");
    InvariantPair out;
    out.sig = boost::multiprecision::numerator(sig);
    out.eta = eta_of(pd);
    if (out.eta < 0) throw Error("internal: negative nullity");
    return out;
  }

  ComplexScheme scheme_;
  SchemeStats stats_;
  PlumbingTree gamma_, gamma_plus_;
  CharData cd_;
  std::vector<Int> c_plus_;
};

// ---------------------------------------------------------------------------
// Hand formulas for three one-nest families, used as regression oracles:
//   A = J 1-<a- b+>,  B = J 1+<a- b+>,  C = J 1+<1+<a- b+>>
// with values (sig at 1/3, eta at 3) split by (alpha - beta) mod 3.
// ---------------------------------------------------------------------------

enum class HandFamily { A, B, C };

namespace detail {

inline Int exact_third(const Int& x) {
  if (x % 3 != 0) throw Error("internal: expected a multiple of 3");
  return x / 3;
}

}  // namespace detail

inline ComplexScheme hand_family_scheme(HandFamily f, long alpha, long beta) {
  if (alpha < 0 || beta < 0 || alpha + beta == 0)
    throw BadParametersError("need alpha, beta >= 0, not both zero");
  std::vector<Oval> nest;
  for (long i = 0; i < alpha; ++i) nest.push_back(Oval{-1, {}});
  for (long i = 0; i < beta; ++i) nest.push_back(Oval{1, {}});
  ComplexScheme s;
  s.kind = SchemeKind::Odd;
  switch (f) {
    case HandFamily::A:
      s.top.push_back(Oval{-1, std::move(nest)});
      break;
    case HandFamily::B:
      s.top.push_back(Oval{1, std::move(nest)});
      break;
    case HandFamily::C:
      s.top.push_back(Oval{1, {Oval{1, std::move(nest)}}});
      break;
  }
  return s;
}

inline InvariantPair hand_formula(HandFamily f, long alpha, long beta) {
  if (alpha < 0 || beta < 0 || alpha + beta == 0)
    throw BadParametersError("need alpha, beta >= 0, not both zero");
  const Int a(alpha), b(beta);
  // 0: a = b, 1: a = b+1, 2: a = b-1 (mod 3)
  const int r = mod_reduce(a - b, 3).convert_to<int>();
  InvariantPair out;
  switch (f) {
    case HandFamily::A:
      if (r == 0) out.sig = 8 * detail::exact_third(b - a) - 2;
      else if (r == 1) out.sig = 8 * detail::exact_third(b - a + 1) - 4;
      else out.sig = 8 * detail::exact_third(b - a - 1);
      out.eta = a + b - 1;
      break;
    case HandFamily::B:
      if (r == 0) out.sig = 8 * detail::exact_third(a - b) + b - 3 * a + 1;
      else if (r == 1) out.sig = 8 * detail::exact_third(a - b - 1) + b - 3 * a + 3;
      else out.sig = 8 * detail::exact_third(a - b + 1) + b - 3 * a - 2;
      out.eta = r == 2 ? 1 : 0;
      break;
    case HandFamily::C:
      if (r == 0) {
        out.sig = 8 * detail::exact_third(a - b) - 2;
        out.eta = a + b;
      } else if (r == 1) {
        out.sig = 8 * detail::exact_third(a - b - 1) + 1;
        out.eta = a + b - 1;
      } else {
        out.sig = 8 * detail::exact_third(a - b + 1) - 5;
        out.eta = a + b - 1;
      }
      break;
  }
  return out;
}

}  // namespace ovalsig
