#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <ovalsig/prohibition.hpp>

using namespace ovalsig;

namespace {

std::vector<Oval> random_forest(std::mt19937& rng, int depth_left, long& budget) {
  std::uniform_int_distribution<int> width(0, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Oval> out;
  const int w = width(rng);
  for (int i = 0; i < w && budget > 0; ++i) {
    --budget;
    Oval o;
    o.epsilon = sign(rng) ? 1 : -1;
    if (depth_left > 0) o.children = random_forest(rng, depth_left - 1, budget);
    out.push_back(std::move(o));
  }
  return out;
}

ComplexScheme random_scheme(std::mt19937& rng, long budget = 8) {
  std::uniform_int_distribution<int> kind(0, 1);
  ComplexScheme s;
  s.kind = kind(rng) ? SchemeKind::Even : SchemeKind::Odd;
  s.top = random_forest(rng, 4, budget);
  if (s.kind == SchemeKind::Even && s.top.empty())
    s.top.push_back(Oval{1, {}});
  return s;
}

}  // namespace

TEST_CASE("rohlin_mishachev: goldens") {
  CHECK(rohlin_mishachev(parse_scheme("J 1-<12- 15+>"), 9));
  CHECK(rohlin_mishachev(parse_scheme("J"), 1));

  // The five-oval example has -delta = 40, never m^2 - 1.
  for (long m = 1; m <= 20; ++m)
    CHECK_FALSE(rohlin_mishachev(parse_scheme("J 1-<2-> 2+"), m));

  // Type/degree parity mismatches fail outright.
  CHECK_FALSE(rohlin_mishachev(parse_scheme("J"), 2));
  CHECK_FALSE(rohlin_mishachev(parse_scheme("1+"), 3));

  CHECK_THROWS_AS(rohlin_mishachev(parse_scheme("J"), 0), BadParametersError);
}

TEST_CASE("families: scheme construction and domain") {
  CHECK(render_scheme(family_scheme(FamilyName::OddNest, 4)) ==
        "J 1-<12- 15+>");
  CHECK(render_scheme(family_scheme(FamilyName::DoubleNest, 5)) ==
        "J 1+<1+<24- 19+>>");

  CHECK_THROWS_AS(family_scheme(FamilyName::OddNest, 3), BadParametersError);
  CHECK_THROWS_AS(family_scheme(FamilyName::OddNest, 5), BadParametersError);
  CHECK_THROWS_AS(family_scheme(FamilyName::OddNest, 6), BadParametersError);
  CHECK_THROWS_AS(family_scheme(FamilyName::DoubleNest, 4), BadParametersError);
  CHECK_THROWS_AS(family_scheme(FamilyName::DoubleNest, 7), BadParametersError);
  CHECK_THROWS_AS(family_scheme(FamilyName::DoubleNest, 10), BadParametersError);
}

TEST_CASE("families: oval count and arithmetic restriction") {
  const auto check_k = [](FamilyName f, long k) {
    ComplexScheme s = family_scheme(f, k);
    SchemeStats st = scheme_stats(s);
    INFO("family " << (f == FamilyName::OddNest ? "odd_nest" : "double_nest")
                   << " k " << k);
    CHECK(st.l == 2 * k * k - k);
    CHECK(rohlin_mishachev(s, 2 * k + 1));
  };
  for (long k : {4, 7, 10, 13}) check_k(FamilyName::OddNest, k);
  for (long k : {5, 6, 8, 9, 11, 12}) check_k(FamilyName::DoubleNest, k);
}

TEST_CASE("mt_check: worked prohibitions") {
  ProhibitionReport a = mt_check(family_scheme(FamilyName::OddNest, 4), 9);
  CHECK(a.rm_pass);
  CHECK(a.bound == 28);
  CHECK(a.verdict == Verdict::Prohibited);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->p == 3);
  CHECK(a.witness->b == 1);
  CHECK(a.witness->sig == 6);
  CHECK(a.witness->eta == 26);

  ProhibitionReport c = mt_check(family_scheme(FamilyName::DoubleNest, 5), 11);
  CHECK(c.rm_pass);
  CHECK(c.bound == 45);
  CHECK(c.verdict == Verdict::Prohibited);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->p == 3);
  CHECK(c.witness->b == 1);
  CHECK(c.witness->sig == 11);
  CHECK(c.witness->eta == 42);
}

TEST_CASE("mt_check: line, parity mismatch, and scan despite rm failure") {
  ProhibitionReport line = mt_check(parse_scheme("J"), 1);
  CHECK(line.rm_pass);
  CHECK(line.bound == 0);
  CHECK(line.verdict == Verdict::NotProhibited);
  CHECK_FALSE(line.witness.has_value());
  CHECK_FALSE(line.scan.empty());

  ProhibitionReport pm = mt_check(parse_scheme("J"), 2);
  CHECK(pm.verdict == Verdict::ParityMismatch);
  CHECK(pm.scan.empty());
  CHECK_FALSE(pm.witness.has_value());
  CHECK(verdict_str(pm.verdict) == "parity_mismatch");

  // The five-oval example fails the arithmetic restriction in degree 3 but
  // the signature scan still runs and finds a violation of the bound 1.
  ProhibitionReport g = mt_check(parse_scheme("J 1-<2-> 2+"), 3);
  CHECK_FALSE(g.rm_pass);
  CHECK(g.bound == 1);
  CHECK_FALSE(g.scan.empty());
  CHECK(g.verdict == Verdict::Prohibited);

  // Same scheme in degree 9: bound 28 beats every |sig| + eta <= 12.
  ProhibitionReport g9 = mt_check(parse_scheme("J 1-<2-> 2+"), 9);
  CHECK_FALSE(g9.rm_pass);
  CHECK(g9.verdict == Verdict::NotProhibited);

  CHECK_THROWS_AS(mt_check(parse_scheme("J"), 0), BadParametersError);
}

TEST_CASE("mt_check: scan agrees with brute force over small primes") {
  std::mt19937 rng(770001);
  for (int iter = 0; iter < 5; ++iter) {
    ComplexScheme s = random_scheme(rng);
    CurveInvariants ci(s);
    const bool odd = scheme_stats(s).kind == SchemeKind::Odd;
    for (long m = odd ? 3 : 4; m <= 11; m += 2) {
      ProhibitionReport rep = mt_check(s, m);
      INFO("scheme " << render_scheme(s) << " degree " << m);
      CHECK(rep.verdict != Verdict::ParityMismatch);

      // Every violating scan entry really violates, and the witness is a
      // genuine curve invariant.
      for (const ScanEntry& se : rep.scan) {
        CHECK(se.lhs == boost::multiprecision::abs(se.sig) + se.eta);
        CHECK(se.violates == (se.lhs > rep.bound));
        InvariantPair direct = ci.sig_eta(se.p, se.b);
        if (se.is_point) CHECK(direct == InvariantPair{se.sig, se.eta});
        else CHECK(direct.sig == se.sig);
      }
      if (rep.witness) {
        InvariantPair direct = ci.sig_eta(rep.witness->p, rep.witness->b);
        CHECK(direct == InvariantPair{rep.witness->sig, rep.witness->eta});
        CHECK(boost::multiprecision::abs(direct.sig) + direct.eta > rep.bound);
      }

      // Brute force below p = 31 can only find violations the scan covers.
      bool brute = false;
      for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        for (long b = 1; 2 * b <= p - 1 && !brute; ++b) {
          InvariantPair v = ci.sig_eta(p, b);
          if (boost::multiprecision::abs(v.sig) + v.eta > rep.bound)
            brute = true;
        }
      if (brute) CHECK(rep.verdict == Verdict::Prohibited);
      if (rep.verdict == Verdict::NotProhibited) CHECK_FALSE(brute);
    }
  }
}

TEST_CASE("families: every admissible member below k = 11 is prohibited") {
  const auto run = [](FamilyName f, long k) {
    ComplexScheme s = family_scheme(f, k);
    const long m = 2 * k + 1;
    ProhibitionReport rep = mt_check(s, m);
    INFO("family " << (f == FamilyName::OddNest ? "odd_nest" : "double_nest")
                   << " k " << k << " degree " << m);
    CHECK(rep.rm_pass);
    CHECK(rep.verdict == Verdict::Prohibited);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->p == 3);
    // The witness invariants are the closed-form case values.
    const HandFamily hf = f == FamilyName::OddNest ? HandFamily::A : HandFamily::C;
    InvariantPair closed = hand_formula(hf, family_alpha(f, k), family_beta(f, k));
    CHECK(InvariantPair{rep.witness->sig, rep.witness->eta} == closed);
  };
  for (long k : {4, 7, 10}) run(FamilyName::OddNest, k);
  for (long k : {5, 6, 8, 9}) run(FamilyName::DoubleNest, k);
}
