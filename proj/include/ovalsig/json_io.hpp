#pragma once

#include <json.hpp>

#include <string>

#include "casson_gordon.hpp"
#include "invariants.hpp"
#include "plumbing.hpp"
#include "prohibition.hpp"

namespace ovalsig {

using json = nlohmann::json;

// Small integers are emitted as JSON numbers. Every invariant this library
// produces fits comfortably in 64 bits; anything larger is a bug upstream.
inline std::int64_t json_int(const Int& v) { return v.convert_to<std::int64_t>(); }

/// Rationals serialize as "p/q", or "p" when the denominator is 1.
inline std::string json_rational(const Rational& v) { return rational_str(v); }

inline json tree_to_json(const PlumbingTree& g) {
  json vertices = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    vertices.push_back({{"id", i},
                        {"weight", g.vertices[i].weight},
                        {"role", role_str(g.vertices[i])}});
  }
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  json arrows = json::array();
  for (const Arrow& a : g.arrows) {
    json ja = {{"tail", a.tail}, {"sign", a.sign}};
    if (a.head >= 0) ja["head"] = a.head;
    arrows.push_back(ja);
  }
  return {{"vertices", vertices}, {"edges", edges}, {"arrows", arrows}};
}

/// Generic weighted tree (+ characteristic vector and prime) from JSON:
///   {"weights": [...], "edges": [[i,j], ...], "charvec": [...], "p": ...}
struct GenericCoverInput {
  PlumbingTree tree;
  std::vector<Int> charvec;
  Int p = 0;  // 0 when the file does not carry one
};

inline GenericCoverInput cover_input_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("edges") ||
      !j.contains("charvec"))
    throw BadParametersError("tree JSON needs weights, edges and charvec");
  GenericCoverInput in;
  for (const json& w : j.at("weights"))
    in.tree.vertices.push_back({w.get<long long>(), VertexRole::Generic, -1});
  const auto n = static_cast<long long>(in.tree.vertices.size());
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw BadParametersError("edge entries must be index pairs");
    const long long a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw BadParametersError("edge endpoint out of range");
    in.tree.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  for (const json& c : j.at("charvec")) in.charvec.push_back(Int(c.get<long long>()));
  if (in.charvec.size() != in.tree.vertices.size())
    throw BadParametersError("charvec length must match vertex count");
  if (!in.tree.is_tree()) throw BadParametersError("graph is not a tree");
  if (j.contains("p")) in.p = Int(j.at("p").get<long long>());
  return in;
}

inline json profile_to_json(const std::string& scheme, const SignatureProfile& prof) {
  json entries = json::array();
  for (const ProfileEntry& e : prof.entries) {
    json je;
    if (e.is_point) {
      je["type"] = "point";
      je["x"] = json_rational(e.lo);
      je["sig"] = json_int(e.sig);
      if (e.eta) je["eta"] = json_int(*e.eta);
    } else {
      je["type"] = "interval";
      je["lo"] = json_rational(e.lo);
      je["hi"] = json_rational(e.hi);
      je["sig"] = json_int(e.sig);
      je["eta"] = json_int(*e.eta);
      je["sample_p"] = json_int(e.sample_p);
      je["sample_b"] = json_int(e.sample_b);
    }
    entries.push_back(je);
  }
  return {{"scheme", scheme}, {"nul", json_int(prof.nul)}, {"entries", entries}};
}

inline json report_to_json(const ProhibitionReport& rep) {
  json scan = json::array();
  for (const ScanEntry& se : rep.scan) {
    json je = {{"kind", se.is_point ? "point" : "interval"},
               {"p", json_int(se.p)},
               {"b", json_int(se.b)},
               {"sig", json_int(se.sig)},
               {"eta", json_int(se.eta)},
               {"lhs", json_int(se.lhs)},
               {"violates", se.violates}};
    if (se.is_point) {
      je["x"] = json_rational(se.lo);
    } else {
      je["lo"] = json_rational(se.lo);
      je["hi"] = json_rational(se.hi);
    }
    scan.push_back(je);
  }
  json j = {{"scheme", rep.scheme},
            {"m", rep.degree},
            {"bound", json_int(rep.bound)},
            {"rm_pass", rep.rm_pass},
            {"verdict", verdict_str(rep.verdict)},
            {"scan", scan}};
  if (rep.witness) {
    j["witness"] = {{"p", json_int(rep.witness->p)},
                    {"b", json_int(rep.witness->b)},
                    {"sig", json_int(rep.witness->sig)},
                    {"eta", json_int(rep.witness->eta)},
                    {"bound", json_int(rep.bound)}};
  }
  return j;
}

}  // namespace ovalsig
