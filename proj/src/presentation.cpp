#include "commgraph/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "commgraph/errors.hpp"

namespace commgraph {
namespace {

class Parser {
 public:
  Parser(const std::vector<std::string>& gens, const std::string& text) : gens_(gens), s_(text) {}

  Word parse_word() {
    Word w;
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != ')') {
      Word factor = parse_factor();
      w.insert(w.end(), factor.begin(), factor.end());
      skip_ws();
    }
    return w;
  }

  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("relator \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      Word x = parse_word();
      if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ','");
      ++pos_;
      Word y = parse_word();
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
      ++pos_;
      Word out = invert(x);
      const Word yi = invert(y);
      out.insert(out.end(), yi.begin(), yi.end());
      out.insert(out.end(), x.begin(), x.end());
      out.insert(out.end(), y.begin(), y.end());
      return out;
    }
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Word x = parse_word();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return x;
    }
    std::size_t best = 0;
    int letter = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const auto& name = gens_[g];
      if (name.size() > best && s_.compare(pos_, name.size(), name) == 0) {
        best = name.size();
        letter = static_cast<int>(g) + 1;
      }
    }
    if (best == 0) fail("unknown generator");
    pos_ += best;
    return Word{letter};
  }

  Word parse_factor() {
    Word base = parse_atom();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 1'000'000) fail("exponent too large");
      }
      const Word unit = neg ? invert(base) : base;
      Word out;
      for (long i = 0; i < e; ++i) out.insert(out.end(), unit.begin(), unit.end());
      return out;
    }
    return base;
  }

  static Word invert(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
  }

  const std::vector<std::string>& gens_;
  std::string s_;
  std::size_t pos_ = 0;
};

constexpr std::int32_t kUndef = -1;

// HLT enumeration with immediate coincidence processing.
class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::uint32_t bound)
      : cols_(2 * pres.generators.size()), bound_(bound) {
    for (const auto& w : pres.relators) {
      std::vector<std::uint32_t> r;
      for (int x : w) r.push_back(column(x));
      relators_.push_back(std::move(r));
    }
    new_coset();
  }

  void run() {
    for (std::uint32_t a = 0; a < parent_.size(); ++a) {
      for (const auto& r : relators_) {
        if (!alive(a)) break;
        scan_and_fill(a, r);
      }
      for (std::uint32_t x = 0; x < cols_ && alive(a); ++x)
        if (at(a, x) == kUndef) define(a, x);
    }
  }

  FiniteGroup to_group(std::string label) const {
    // Breadth-first renumbering from coset 0 over live cosets.
    const auto total = static_cast<std::uint32_t>(parent_.size());
    std::vector<std::int32_t> order_index(total, -1);
    std::vector<std::uint32_t> bfs{0};
    std::vector<std::uint32_t> tree_parent{0}, tree_col{0};
    order_index[0] = 0;
    for (std::size_t h = 0; h < bfs.size(); ++h) {
      const std::uint32_t c = bfs[h];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const auto d = static_cast<std::uint32_t>(at(c, x));
        if (order_index[d] < 0) {
          order_index[d] = static_cast<std::int32_t>(bfs.size());
          bfs.push_back(d);
          tree_parent.push_back(static_cast<std::uint32_t>(h));
          tree_col.push_back(x);
        }
      }
    }
    const auto n = static_cast<std::uint32_t>(bfs.size());
    auto act = [&](std::uint32_t e, std::uint32_t x) {
      return static_cast<std::uint32_t>(order_index[at(bfs[e], x)]);
    };
    std::vector<Element> table(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      table[std::size_t{a} * n] = a;
      for (std::uint32_t b = 1; b < n; ++b)
        table[std::size_t{a} * n + b] = act(table[std::size_t{a} * n + tree_parent[b]], tree_col[b]);
    }
    return FiniteGroup(n, std::move(table), std::move(label));
  }

 private:
  static std::uint32_t column(int letter) {
    return letter > 0 ? 2u * static_cast<std::uint32_t>(letter - 1) : 2u * static_cast<std::uint32_t>(-letter - 1) + 1;
  }

  std::int32_t& at(std::uint32_t c, std::uint32_t x) { return table_[std::size_t{c} * cols_ + x]; }
  std::int32_t at(std::uint32_t c, std::uint32_t x) const { return table_[std::size_t{c} * cols_ + x]; }
  bool alive(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t new_coset() {
    if (parent_.size() >= bound_)
      throw EnumerationOverflow("enumeration overflow: more than " + std::to_string(bound_) + " cosets defined");
    const auto c = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndef);
    return c;
  }

  void define(std::uint32_t c, std::uint32_t x) {
    const std::uint32_t d = new_coset();
    at(c, x) = static_cast<std::int32_t>(d);
    at(d, x ^ 1u) = static_cast<std::int32_t>(c);
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    const std::uint32_t keep = std::min(ra, rb), kill = std::max(ra, rb);
    parent_[kill] = keep;
    queue_.push_back(kill);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      const std::uint32_t g = queue_.front();
      queue_.pop_front();
      for (std::uint32_t x = 0; x < cols_; ++x) {
        if (at(g, x) == kUndef) continue;
        const auto d = static_cast<std::uint32_t>(at(g, x));
        at(d, x ^ 1u) = kUndef;
        const std::uint32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndef) {
          merge(nu, static_cast<std::uint32_t>(at(mu, x)));
        } else if (at(nu, x ^ 1u) != kUndef) {
          merge(mu, static_cast<std::uint32_t>(at(nu, x ^ 1u)));
        } else {
          at(mu, x) = static_cast<std::int32_t>(nu);
          at(nu, x ^ 1u) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t a, const std::vector<std::uint32_t>& w) {
    const std::size_t r = w.size();
    std::uint32_t f = a, b = a;
    std::size_t i = 0, j = r;  // j is one past the last unscanned letter
    for (;;) {
      while (i < r && at(f, w[i]) != kUndef) f = static_cast<std::uint32_t>(at(f, w[i++]));
      if (i == r) {
        if (f != a) coincidence(f, a);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) != kUndef) b = static_cast<std::uint32_t>(at(b, w[--j] ^ 1u));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = static_cast<std::int32_t>(b);
        at(b, w[i] ^ 1u) = static_cast<std::int32_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::uint32_t cols_;
  std::uint32_t bound_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::deque<std::uint32_t> queue_;
};

}  // namespace

Presentation Presentation::parse(std::vector<std::string> generators, const std::vector<std::string>& relators) {
  Presentation p;
  p.generators = std::move(generators);
  for (const auto& text : relators) {
    Parser parser(p.generators, text);
    Word w = parser.parse_word();
    if (!parser.at_end()) throw ParseError("relator \"" + text + "\": trailing input");
    p.relators.push_back(std::move(w));
  }
  p.check();
  return p;
}

void Presentation::check() const {
  if (generators.empty()) throw InvalidParameter("presentation needs at least one generator");
  const int g = static_cast<int>(generators.size());
  for (const auto& w : relators) {
    if (w.empty()) throw InvalidParameter("empty relator");
    for (int x : w)
      if (x == 0 || x > g || x < -g) throw InvalidParameter("relator references an unknown generator");
  }
}

FiniteGroup coset_enumerate(const Presentation& pres, std::uint32_t max_cosets, std::string label) {
  pres.check();
  Enumerator e(pres, max_cosets);
  e.run();
  return e.to_group(std::move(label));
}

}  // namespace commgraph
