// Command-line front end: invariants of complex schemes of real plane curves
// via plumbing diagrams.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <ovalsig/json_io.hpp>
#include <ovalsig/ovalsig.hpp>

namespace {

using namespace ovalsig;

std::string int_vector_str(const std::vector<Int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out + "]";
}

void print_matrix(std::ostream& os, const Mat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << rational_str(a(i, j));
    }
    os << "]\n";
  }
}

void print_tree(std::ostream& os, const PlumbingTree& g) {
  os << "vertices: " << g.size() << "\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    os << "  " << i << ":" << g.vertices[i].weight << "("
       << role_str_short(g.vertices[i]) << ")\n";
  os << "edges:";
  for (auto [u, v] : g.edges) os << " (" << u << "," << v << ")";
  os << "\n";
  if (!g.arrows.empty()) {
    os << "arrows:";
    for (const Arrow& a : g.arrows) {
      os << " " << (a.sign > 0 ? "+" : "-") << "@" << a.tail;
      if (a.head >= 0) os << "->" << a.head;
    }
    os << "\n";
  }
}

struct Options {
  std::string scheme;
  long long p = 0, b = 0;
  bool as_json = false;
  long long degree = 0;
  std::string family;
  long long k = 0;
  bool run_check = false;
  bool plus = false, hat = false, dot = false;
  std::string tree_file;
};

int run_invariants(const Options& opt) {
  const ComplexScheme s = parse_scheme(opt.scheme);
  const CurveInvariants inv(s);
  const InvariantPair v = inv.sig_eta(Int(opt.p), Int(opt.b));
  if (opt.as_json) {
    json j = {{"scheme", render_scheme(s)},
              {"p", opt.p},
              {"b", opt.b},
              {"sig", json_int(v.sig)},
              {"eta", json_int(v.eta)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sig = " << v.sig << ", eta = " << v.eta << "\n";
  }
  return 0;
}

int run_profile(const Options& opt) {
  const ComplexScheme s = parse_scheme(opt.scheme);
  const CurveInvariants inv(s);
  const SignatureProfile prof = inv.profile();
  if (opt.as_json)
    std::cout << profile_to_json(render_scheme(s), prof).dump(2) << "\n";
  else
    std::cout << prof.to_text();
  return 0;
}

int run_check(const Options& opt) {
  const ComplexScheme s = parse_scheme(opt.scheme);
  const ProhibitionReport rep = mt_check(s, opt.degree);
  if (opt.as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "scheme: " << rep.scheme << "\n";
  std::cout << "degree: " << rep.degree << " (bound " << rep.bound << ")\n";
  std::cout << "arithmetic restriction: " << (rep.rm_pass ? "pass" : "fail") << "\n";
  std::cout << "verdict: " << verdict_str(rep.verdict) << "\n";
  if (rep.witness) {
    std::cout << "witness: p=" << rep.witness->p << " b=" << rep.witness->b
              << " sig=" << rep.witness->sig << " eta=" << rep.witness->eta
              << " (|sig|+eta = "
              << boost::multiprecision::abs(rep.witness->sig) + rep.witness->eta
              << " > " << rep.bound << ")\n";
  }
  return 0;
}

int run_family(const Options& opt) {
  FamilyName name;
  if (opt.family == "odd_nest") name = FamilyName::OddNest;
  else if (opt.family == "double_nest") name = FamilyName::DoubleNest;
  else throw BadParametersError("unknown family: " + opt.family);
  const ComplexScheme s = family_scheme(name, opt.k);
  std::cout << render_scheme(s) << "\n";
  if (opt.run_check) {
    const long m = 2 * opt.k + 1;
    const ProhibitionReport rep = mt_check(s, m);
    std::cout << "degree: " << m << "\n";
    std::cout << "arithmetic restriction: " << (rep.rm_pass ? "pass" : "fail")
              << "\n";
    std::cout << "verdict: " << verdict_str(rep.verdict);
    if (rep.witness)
      std::cout << " (witness p=" << rep.witness->p << " b=" << rep.witness->b
                << ": |" << rep.witness->sig << "|+" << rep.witness->eta << " = "
                << boost::multiprecision::abs(rep.witness->sig) + rep.witness->eta
                << " > " << rep.bound << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_graph(const Options& opt) {
  const ComplexScheme s = parse_scheme(opt.scheme);
  const SchemeStats st = scheme_stats(s);
  const PlumbingTree gamma = build_gamma(s, st);
  PlumbingTree shown = gamma;
  if (opt.plus) shown = build_gamma_plus(gamma);
  else if (opt.hat) shown = build_gamma_hat(s, st);

  if (opt.dot) {
    std::cout << to_dot(shown);
    return 0;
  }

  // Characteristic data of the decorated tree that carries the arrows.
  const PlumbingTree& decorated = opt.plus ? gamma : shown;
  const CharData cd = char_data(decorated);

  if (opt.as_json) {
    json j = tree_to_json(shown);
    j["s"] = json::array();
    for (const Int& v : cd.s) j["s"].push_back(json_int(v));
    j["delta"] = json_int(cd.delta);
    j["c"] = json::array();
    for (const Int& v : cd.c) j["c"].push_back(json_int(v));
    if (opt.plus) {
      const std::vector<Int> cp = extend_over_arrowheads(shown, cd.c);
      j["c_plus"] = json::array();
      for (const Int& v : cp) j["c_plus"].push_back(json_int(v));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  print_tree(std::cout, shown);
  std::cout << "matrix A:\n";
  print_matrix(std::cout, plumbing_matrix(shown));
  std::cout << "s: " << int_vector_str(cd.s) << "\n";
  std::cout << "delta: " << cd.delta << "\n";
  std::cout << "c: " << int_vector_str(cd.c) << "\n";
  if (opt.plus)
    std::cout << "c+: " << int_vector_str(extend_over_arrowheads(shown, cd.c))
              << "\n";
  return 0;
}

int run_cg(const Options& opt) {
  std::ifstream in(opt.tree_file);
  if (!in) throw BadParametersError("cannot open " + opt.tree_file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw BadParametersError(std::string("bad JSON: ") + e.what());
  }
  GenericCoverInput gci = cover_input_from_json(j);
  Int p = opt.p > 0 ? Int(opt.p) : gci.p;
  if (p == 0) throw BadParametersError("no prime given (use --p or a \"p\" field)");
  const CoverInvariants ci = cover_invariants(gci.tree, gci.charvec, p);
  std::cout << "sigma = " << rational_str(ci.sigma) << ", eta = " << ci.eta << "\n";
  return 0;
}

int run_linking(const Options& opt) {
  const ComplexScheme s = parse_scheme(opt.scheme);
  const Mat lk = linking_matrix(build_gamma(s));
  print_matrix(std::cout, lk);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature and nullity invariants of complex schemes of real "
               "plane curves, via plumbing diagrams"};
  app.require_subcommand(1);
  Options opt;

  auto* inv = app.add_subcommand(
      "invariants", "Signature and nullity at a rational parameter b/p");
  inv->add_option("scheme", opt.scheme, "Scheme text, e.g. \"J 1-<2-> 2+\"")
      ->required();
  inv->add_option("--p", opt.p, "Odd prime")->required();
  inv->add_option("--b", opt.b, "Numerator, 1 <= b <= (p-1)/2")->required();
  inv->add_flag("--json", opt.as_json, "JSON output");

  auto* prof = app.add_subcommand(
      "profile", "Full signature/nullity step function on (0, 1/2)");
  prof->add_option("scheme", opt.scheme, "Scheme text")->required();
  prof->add_flag("--json", opt.as_json, "JSON output");

  auto* chk = app.add_subcommand(
      "check", "Degree prohibition: arithmetic restriction plus signature scan");
  chk->add_option("scheme", opt.scheme, "Scheme text")->required();
  chk->add_option("--degree", opt.degree, "Curve degree m")->required();
  chk->add_flag("--json", opt.as_json, "JSON output");

  auto* fam = app.add_subcommand("family",
                                 "Emit a member of a built-in scheme family");
  fam->add_option("name", opt.family, "odd_nest or double_nest")->required();
  fam->add_option("--k", opt.k, "Family parameter")->required();
  fam->add_flag("--check", opt.run_check, "Also run the degree check at m=2k+1");

  auto* gr = app.add_subcommand("graph", "Dump the plumbing tree of a scheme");
  gr->add_option("scheme", opt.scheme, "Scheme text")->required();
  gr->add_flag("--plus", opt.plus, "Materialize arrowheads");
  gr->add_flag("--hat", opt.hat, "Augmented tree with region arrows");
  gr->add_flag("--dot", opt.dot, "Graphviz output");
  gr->add_flag("--json", opt.as_json, "JSON output");

  auto* cg = app.add_subcommand(
      "cg", "Cover signature/nullity of a generic weighted tree");
  cg->add_option("--tree", opt.tree_file, "JSON file with weights/edges/charvec")
      ->required();
  cg->add_option("--p", opt.p, "Odd prime (overrides the file)");

  auto* lk = app.add_subcommand("linking", "Fiber linking matrix -A^{-1}");
  lk->add_option("scheme", opt.scheme, "Scheme text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (gr->parsed() && opt.plus && opt.hat)
      throw BadParametersError("--plus and --hat are mutually exclusive");
    if (inv->parsed()) return run_invariants(opt);
    if (prof->parsed()) return run_profile(opt);
    if (chk->parsed()) return run_check(opt);
    if (fam->parsed()) return run_family(opt);
    if (gr->parsed()) return run_graph(opt);
    if (cg->parsed()) return run_cg(opt);
    if (lk->parsed()) return run_linking(opt);
  } catch (const ovalsig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
