#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "scheme.hpp"

namespace ovalsig {

/// Arithmetic restriction on dividing curves of degree m: the type of the
/// scheme must match the parity of m, and -delta must equal m^2 - 1 for odd
/// m, m^2 for even m.
inline bool rohlin_mishachev(const ComplexScheme& s, long m) {
  if (m < 1) throw BadParametersError("degree must be positive");
  const SchemeStats st = scheme_stats(s);
  const bool odd_degree = m % 2 != 0;
  if ((st.kind == SchemeKind::Odd) != odd_degree) return false;
  const Int target = odd_degree ? Int(m) * m - 1 : Int(m) * m;
  return -closed_form_delta(st) == target;
}

enum class Verdict { NotProhibited, Prohibited, ParityMismatch };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::NotProhibited: return "not_prohibited";
    case Verdict::Prohibited: return "prohibited";
    case Verdict::ParityMismatch: return "parity_mismatch";
  }
  return "not_prohibited";
}

/// One evaluated scan position: either a prime-denominator point b/p, or an
/// open interval sampled at b/p. `lhs` is |sig| + eta, which must stay
/// within (m-1)(m-2)/2 for a dividing curve of degree m.
struct ScanEntry {
  bool is_point = false;
  Rational lo, hi;  // for points, lo == hi
  Int p, b;
  Int sig, eta;
  Int lhs;
  bool violates = false;
};

struct Witness {
  Int p, b;
  Int sig, eta;
};

struct ProhibitionReport {
  std::string scheme;
  long degree = 0;
  Int bound;
  bool rm_pass = false;
  Verdict verdict = Verdict::NotProhibited;
  std::optional<Witness> witness;
  std::vector<ScanEntry> scan;
};

/// Scan the full signature profile against the degree-m bound
/// |sig_{b/p}| + eta_p <= (m-1)(m-2)/2. The scan is finite but complete:
/// on each step interval of the profile the pair (sig, eta=nul) is constant,
/// and every remaining parameter is a listed prime-denominator breakpoint.
/// Composite-denominator breakpoints carry no curve invariant and are
/// skipped. The witness is the violation with smallest (p, b).
inline ProhibitionReport mt_check(const ComplexScheme& s, long m) {
  if (m < 1) throw BadParametersError("degree must be positive");
  ProhibitionReport rep;
  rep.scheme = render_scheme(s);
  rep.degree = m;
  rep.bound = Int(m - 1) * (m - 2) / 2;
  rep.rm_pass = rohlin_mishachev(s, m);

  const SchemeStats st = scheme_stats(s);
  if ((st.kind == SchemeKind::Odd) != (m % 2 != 0)) {
    rep.verdict = Verdict::ParityMismatch;
    return rep;
  }

  const CurveInvariants inv(s);
  const SignatureProfile prof = inv.profile();
  for (const ProfileEntry& e : prof.entries) {
    if (e.is_point && !e.eta) continue;  // composite denominator
    ScanEntry se;
    se.is_point = e.is_point;
    se.lo = e.lo;
    se.hi = e.hi;
    se.sig = e.sig;
    se.eta = *e.eta;
    if (e.is_point) {
      se.p = boost::multiprecision::denominator(e.lo);
      se.b = boost::multiprecision::numerator(e.lo);
    } else {
      se.p = e.sample_p;
      se.b = e.sample_b;
    }
    se.lhs = boost::multiprecision::abs(se.sig) + se.eta;
    se.violates = se.lhs > rep.bound;
    rep.scan.push_back(se);
  }

  for (const ScanEntry& se : rep.scan) {
    if (!se.violates) continue;
    if (!rep.witness || se.p < rep.witness->p ||
        (se.p == rep.witness->p && se.b < rep.witness->b)) {
      rep.witness = Witness{se.p, se.b, se.sig, se.eta};
    }
  }
  rep.verdict = rep.witness ? Verdict::Prohibited : Verdict::NotProhibited;
  return rep;
}

// ---------------------------------------------------------------------------
// Two infinite families of schemes that satisfy the arithmetic restriction
// in degree m = 2k+1 yet are prohibited by the signature bound.
// ---------------------------------------------------------------------------

enum class FamilyName { OddNest, DoubleNest };

inline long family_alpha(FamilyName f, long k) {
  return f == FamilyName::OddNest ? (5 * k * k - k - 4) / 6
                                  : (7 * k * k - 5 * k - 6) / 6;
}

inline long family_beta(FamilyName f, long k) {
  return f == FamilyName::OddNest ? (7 * k * k - 5 * k - 2) / 6
                                  : (5 * k * k - k - 6) / 6;
}

inline ComplexScheme family_scheme(FamilyName f, long k) {
  if (f == FamilyName::OddNest) {
    if (k < 4 || k % 3 != 1)
      throw BadParametersError("odd_nest needs k >= 4 with k = 1 (mod 3)");
    if ((5 * k * k - k - 4) % 6 != 0 || (7 * k * k - 5 * k - 2) % 6 != 0)
      throw Error("internal: family parameters not integral");
    return hand_family_scheme(HandFamily::A, family_alpha(f, k), family_beta(f, k));
  }
  if (k < 5 || k % 3 == 1)
    throw BadParametersError("double_nest needs k >= 5 with k != 1 (mod 3)");
  if ((7 * k * k - 5 * k - 6) % 6 != 0 || (5 * k * k - k - 6) % 6 != 0)
    throw Error("internal: family parameters not integral");
  return hand_family_scheme(HandFamily::C, family_alpha(f, k), family_beta(f, k));
}

}  // namespace ovalsig
