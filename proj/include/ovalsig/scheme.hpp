#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ovalsig {

/// One oval of a complex scheme: its complex orientation sign and the ovals
/// immediately inside it.
struct Oval {
  int epsilon = 1;  // +1 or -1
  std::vector<Oval> children;

  bool operator==(const Oval& o) const {
    return epsilon == o.epsilon && children == o.children;
  }
};

/// Odd-type schemes contain the one-sided component J; even-type schemes
/// consist of ovals only (and must contain at least one).
enum class SchemeKind { Odd, Even };

struct ComplexScheme {
  SchemeKind kind = SchemeKind::Odd;
  std::vector<Oval> top;  // depth-0 ovals, in notation order

  bool operator==(const ComplexScheme& o) const {
    return kind == o.kind && top == o.top;
  }
};

// ---------------------------------------------------------------------------
// Parsing.  Grammar (whitespace between tokens is ignored):
//
//   scheme := ["J"] { group }        -- "J" marks odd type; even type needs
//                                       at least one group
//   group  := count sign [ "<" group { group } ">" ]
//   count  := positive decimal integer
//   sign   := "+" | "-"
// ---------------------------------------------------------------------------

namespace detail {

class SchemeParser {
 public:
  explicit SchemeParser(std::string_view text) : text_(text) {}

  ComplexScheme parse() {
    ComplexScheme s;
    skip_ws();
    if (!done() && peek() == 'J') {
      s.kind = SchemeKind::Odd;
      ++pos_;
    } else {
      s.kind = SchemeKind::Even;
    }
    skip_ws();
    while (!done() && peek() != '>') parse_group(s.top);
    skip_ws();
    if (!done()) fail("unexpected character");
    if (s.kind == SchemeKind::Even && s.top.empty()) {
      if (text_.empty() || pos_ == 0) fail("empty scheme");
      fail("expected a group");
    }
    return s;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void parse_group(std::vector<Oval>& out) {
    skip_ws();
    if (done()) fail("expected a group");
    if (peek() == 'J') fail("'J' is only allowed once, at the start");
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an oval count");
    std::size_t count_pos = pos_;
    unsigned long long count = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      count = count * 10 + static_cast<unsigned long long>(peek() - '0');
      if (count > 1000000) throw ParseError("oval count too large", count_pos);
      ++pos_;
    }
    if (count == 0) throw ParseError("oval count must be positive", count_pos);
    skip_ws();
    if (done() || (peek() != '+' && peek() != '-')) fail("expected '+' or '-'");
    int eps = peek() == '+' ? 1 : -1;
    ++pos_;
    Oval proto;
    proto.epsilon = eps;
    skip_ws();
    if (!done() && peek() == '<') {
      ++pos_;
      skip_ws();
      if (!done() && peek() == '>') fail("empty bracket");
      while (true) {
        parse_group(proto.children);
        skip_ws();
        if (done()) fail("missing '>'");
        if (peek() == '>') { ++pos_; break; }
      }
    }
    for (unsigned long long i = 0; i < count; ++i) out.push_back(proto);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ComplexScheme parse_scheme(std::string_view text) {
  return detail::SchemeParser(text).parse();
}

// ---------------------------------------------------------------------------
// Rendering: canonical text form. Runs of structurally identical sibling
// ovals merge into one counted group, so parse(render(s)) == s and
// render(parse(t)) is a normal form of t.
// ---------------------------------------------------------------------------

namespace detail {

inline void render_forest(const std::vector<Oval>& ovals, std::string& out) {
  std::size_t i = 0;
  bool first = true;
  while (i < ovals.size()) {
    std::size_t j = i;
    while (j < ovals.size() && ovals[j] == ovals[i]) ++j;
    if (!first) out += ' ';
    first = false;
    out += std::to_string(j - i);
    out += ovals[i].epsilon > 0 ? '+' : '-';
    if (!ovals[i].children.empty()) {
      out += '<';
      render_forest(ovals[i].children, out);
      out += '>';
    }
    i = j;
  }
}

}  // namespace detail

inline std::string render_scheme(const ComplexScheme& s) {
  std::string out;
  if (s.kind == SchemeKind::Odd) {
    out += 'J';
    if (!s.top.empty()) out += ' ';
  }
  detail::render_forest(s.top, out);
  return out;
}

// ---------------------------------------------------------------------------
// Combinatorial statistics.
//
// Ovals are indexed in preorder (parents before children, siblings in
// notation order). Region r=0 is the outer region; region i+1 is the region
// immediately inside oval i. An injective (nested) pair of ovals counts as
// positive when the two orientation signs differ and negative when they
// agree.
// ---------------------------------------------------------------------------

struct OvalData {
  int depth = 0;    // number of ovals strictly containing this one
  int parity = 0;   // depth mod 2
  int epsilon = 1;
  int parent = -1;  // preorder index of enclosing oval, -1 at depth 0
  long children = 0;
  long pi_plus = 0;   // positive injective pairs involving this oval
  long pi_minus = 0;  // negative injective pairs involving this oval
};

struct RegionData {
  int parity = 0;        // parity of the enclosing-oval count
  int inner_of = -1;     // oval whose interior this is, -1 for the outer region
  long lambda_plus = 0;  // positive ovals encircling the region
  long lambda_minus = 0;
  long euler = 1;        // Euler characteristic: 1 - (#ovals on the inner boundary)
};

struct SchemeStats {
  SchemeKind kind = SchemeKind::Odd;
  long l = 0;  // number of ovals
  long lambda_plus = 0, lambda_minus = 0;
  long pi_plus = 0, pi_minus = 0;
  long beta0 = 0;  // connected components of the real part
  long outer_ovals = 0;
  // Odd-parity oval counts split by number of children (none / one / more).
  long n = 0, n_plus = 0, n_zero = 0, n_minus = 0;
  std::vector<OvalData> ovals;      // preorder
  std::vector<RegionData> regions;  // [0]=outer, [i+1]=inside oval i
};

namespace detail {

struct StatsWalker {
  SchemeStats& st;
  std::vector<int> stack;  // preorder ids of current ancestors

  void walk(const std::vector<Oval>& ovals) {
    for (const Oval& o : ovals) {
      const int id = static_cast<int>(st.ovals.size());
      OvalData d;
      d.depth = static_cast<int>(stack.size());
      d.parity = d.depth % 2;
      d.epsilon = o.epsilon;
      d.parent = stack.empty() ? -1 : stack.back();
      d.children = static_cast<long>(o.children.size());
      st.ovals.push_back(d);

      if (o.epsilon > 0) ++st.lambda_plus; else ++st.lambda_minus;
      for (int anc : stack) {
        const bool positive = st.ovals[anc].epsilon != o.epsilon;
        if (positive) {
          ++st.pi_plus;
          ++st.ovals[anc].pi_plus;
          ++st.ovals[id].pi_plus;
        } else {
          ++st.pi_minus;
          ++st.ovals[anc].pi_minus;
          ++st.ovals[id].pi_minus;
        }
      }
      stack.push_back(id);
      walk(o.children);
      stack.pop_back();
    }
  }
};

}  // namespace detail

inline SchemeStats scheme_stats(const ComplexScheme& s) {
  if (s.kind == SchemeKind::Even && s.top.empty()) throw EmptySchemeError();
  SchemeStats st;
  st.kind = s.kind;
  detail::StatsWalker{st, {}}.walk(s.top);
  st.l = static_cast<long>(st.ovals.size());
  st.outer_ovals = static_cast<long>(s.top.size());
  st.beta0 = st.l + (s.kind == SchemeKind::Odd ? 1 : 0);

  // Regions. regions[i+1] sits inside oval i; its encircling ovals are oval i
  // together with the ancestors of oval i.
  st.regions.assign(static_cast<std::size_t>(st.l) + 1, RegionData{});
  st.regions[0].euler = 1 - static_cast<long>(s.top.size());
  for (long i = 0; i < st.l; ++i) {
    const OvalData& o = st.ovals[static_cast<std::size_t>(i)];
    RegionData& r = st.regions[static_cast<std::size_t>(i) + 1];
    r.inner_of = static_cast<int>(i);
    r.parity = (o.depth + 1) % 2;
    r.euler = 1 - o.children;
    int a = static_cast<int>(i);
    while (a >= 0) {
      if (st.ovals[static_cast<std::size_t>(a)].epsilon > 0) ++r.lambda_plus;
      else ++r.lambda_minus;
      a = st.ovals[static_cast<std::size_t>(a)].parent;
    }
  }

  for (const OvalData& o : st.ovals) {
    if (o.parity != 1) continue;
    ++st.n;
    if (o.children == 0) ++st.n_plus;
    else if (o.children == 1) ++st.n_zero;
    else ++st.n_minus;
  }
  return st;
}

}  // namespace ovalsig
