#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <ovalsig/char_data.hpp>

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

ComplexScheme random_scheme(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 1);
  ComplexScheme s;
  s.kind = kind(rng) ? SchemeKind::Even : SchemeKind::Odd;
  long budget = 10;
  s.top = random_forest(rng, 4, budget);
  if (s.kind == SchemeKind::Even && s.top.empty())
    s.top.push_back(Oval{1, {}});
  return s;
}

std::vector<Int> ints(std::initializer_list<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("char_data: worked five-oval scheme") {
  CharData cd = char_data(build_gamma(parse_scheme("J 1-<2-> 2+")));
  CHECK(cd.delta == -40);
  CHECK(cd.c == ints({-6, 2, 3, 1, -3, 5, 5, 1, 1, 14, -10, -10, -2, -2}));
  CHECK(cd.s == ints({0, 1, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, -1}));
}

TEST_CASE("char_data: the line") {
  CharData cd = char_data(build_gamma(parse_scheme("J")));
  CHECK(cd.delta == 0);
  CHECK(cd.c == ints({-2, 0, 1, 1}));
}

TEST_CASE("char_data: tree without arrows is all zero") {
  PlumbingTree g = build_gamma(parse_scheme("J"));
  g.arrows.clear();
  CharData cd = char_data(g);
  CHECK(cd.delta == 0);
  CHECK(cd.c == ints({0, 0, 0, 0}));
}

TEST_CASE("char_data: singular plumbing matrix is rejected") {
  PlumbingTree g;
  g.vertices = {{0, VertexRole::Generic, -1}};
  g.arrows = {{0, 1, -1}};
  CHECK_THROWS_AS(char_data(g), SingularMatrixError);
}

TEST_CASE("char_data: defining identities on random schemes") {
  std::mt19937 rng(55501);
  for (int iter = 0; iter < 60; ++iter) {
    ComplexScheme s = random_scheme(rng);
    PlumbingTree g = build_gamma(s);
    CharData cd = char_data(g);
    Mat a = plumbing_matrix(g);
    const std::size_t n = g.size();

    // c A = -2 s, exactly over the integers.
    for (std::size_t j = 0; j < n; ++j) {
      Rational dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += Rational(cd.c[i]) * a(i, j);
      CHECK(dot == Rational(-2 * cd.s[j]));
    }

    // delta = (1/2) c A c^t = -<c, s>.
    const Int quad = plumbing_form(g, cd.c, cd.c);
    CHECK(quad == 2 * cd.delta);
    Int dot_cs = 0;
    for (std::size_t i = 0; i < n; ++i) dot_cs += cd.c[i] * cd.s[i];
    CHECK(cd.delta == -dot_cs);

    // Same answer as the generic dense solver.
    Vec b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = Rational(cd.s[i]);
    Vec x = solve(a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(Rational(cd.c[i]) == -2 * x[i]);
  }
}

TEST_CASE("extend_over_arrowheads: +-2 entries and the kernel property") {
  std::mt19937 rng(55502);
  for (int iter = 0; iter < 40; ++iter) {
    ComplexScheme s = random_scheme(rng);
    PlumbingTree g = build_gamma(s);
    PlumbingTree gp = build_gamma_plus(g);
    CharData cd = char_data(g);
    std::vector<Int> cp = extend_over_arrowheads(gp, cd.c);

    REQUIRE(cp.size() == gp.size());
    for (const Arrow& a : gp.arrows)
      CHECK(cp[static_cast<std::size_t>(a.head)] == 2 * a.sign);

    // (c+ A+) vanishes at every vertex of the original tree.
    Mat ap = plumbing_matrix(gp);
    for (std::size_t j = 0; j < g.size(); ++j) {
      Rational dot = 0;
      for (std::size_t i = 0; i < gp.size(); ++i)
        dot += Rational(cp[i]) * ap(i, j);
      CHECK(dot == 0);
    }
  }

  // Arrows must be materialized first.
  PlumbingTree g = build_gamma(parse_scheme("J"));
  CharData cd = char_data(g);
  CHECK_THROWS_AS(extend_over_arrowheads(g, cd.c), BadParametersError);
}

TEST_CASE("linking_matrix: goldens") {
  PlumbingTree one;
  one.vertices = {{5, VertexRole::Generic, -1}};
  CHECK(linking_matrix(one)(0, 0) == Rational(-1, 5));

  PlumbingTree pair;
  pair.vertices = {{0, VertexRole::Generic, -1}, {0, VertexRole::Generic, -1}};
  pair.edges = {{0, 1}};
  Mat lk = linking_matrix(pair);
  CHECK(lk(0, 0) == 0);
  CHECK(lk(0, 1) == Rational(-1));
  CHECK(lk(1, 0) == Rational(-1));

  // Negated inverse of a doubled hyperbolic pairing.
  Mat h(2, 2);
  h(0, 1) = 2;
  h(1, 0) = 2;
  Mat hi = inverse(h);
  CHECK(-hi(0, 1) == Rational(-1, 2));
  CHECK(-hi(1, 0) == Rational(-1, 2));

  // Fibers over the u2 and u3 spheres of the line's tree link once halfway.
  Mat jlk = linking_matrix(build_gamma(parse_scheme("J")));
  CHECK(jlk(1, 2) == Rational(1, 2));
  CHECK(jlk(2, 1) == Rational(1, 2));
}

TEST_CASE("linking_matrix: inverse relation and symmetry") {
  PlumbingTree g = build_gamma(parse_scheme("J 1-<2-> 2+"));
  Mat a = plumbing_matrix(g);
  Mat lk = linking_matrix(g);
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(lk(i, j) == lk(j, i));
      Rational dot = 0;
      for (std::size_t t = 0; t < n; ++t) dot += a(i, t) * lk(t, j);
      CHECK(dot == (i == j ? Rational(-1) : Rational(0)));
    }
}
