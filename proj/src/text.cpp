#include "paretoscope/text.hpp"

#include <cctype>

#include "paretoscope/error.hpp"

namespace paretoscope::text {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  void expect_end() {
    if (!done()) fail("unexpected trailing input");
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                s_[pos_] == '/' || s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '.' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '.') break;  // range '..'
      ++pos_;
    }
    const auto tok = s_.substr(start, pos_ - start);
    auto v = try_parse_rational(tok);
    if (!v) {
      pos_ = start;
      fail(tok.empty() ? "expected a number" : "not a rational number: '" + std::string(tok) + "'");
    }
    return *v;
  }

  Quantity quantity() {
    skip_ws();
    const std::size_t start = pos_;
    Rational v = rational();
    if (v < 0) {
      pos_ = start;
      fail("quantities must be non-negative");
    }
    return Quantity(v);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::vector<Rational> rational_list(char close) {
    std::vector<Rational> out;
    out.push_back(rational());
    while (accept(",")) out.push_back(rational());
    if (!peek(close)) fail(std::string("expected '") + close + "'");
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos_ + 1); }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Bundle bundle(Cursor& c) {
  std::vector<Quantity> qs;
  if (c.accept("[")) {
    qs.push_back(c.quantity());
    while (c.accept(",")) qs.push_back(c.quantity());
    c.expect("]");
  } else {
    qs.push_back(c.quantity());
  }
  return Bundle(std::move(qs));
}

Allocation allocation(Cursor& c) {
  c.expect("(");
  std::vector<Bundle> bundles;
  bundles.push_back(bundle(c));
  while (c.accept(",")) bundles.push_back(bundle(c));
  c.expect(")");
  try {
    return Allocation(std::move(bundles));
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

/// Splits on top-level `sep`, tracking the offset of each piece.
std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view s, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.emplace_back(s.substr(start, i - start), start);
      start = i + 1;
    } else if (s[i] == '(' || s[i] == '[') {
      ++depth;
    } else if (s[i] == ')' || s[i] == ']') {
      --depth;
    }
  }
  return out;
}

bool blank(std::string_view s) {
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

template <class F>
auto parse_piece(std::string_view piece, std::size_t offset, F&& f) {
  try {
    return f(piece);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), 0, e.column() + offset);
  }
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace

Allocation parse_allocation(std::string_view s) {
  Cursor c(s);
  Allocation a = allocation(c);
  c.expect_end();
  return a;
}

Move parse_move(std::string_view s) {
  Cursor c(s);
  Allocation from = allocation(c);
  c.expect("->");
  const std::size_t at = c.pos();
  Allocation to = allocation(c);
  c.expect_end();
  if (from.polity() != to.polity()) {
    throw ParseError("move endpoints differ in shape", 0, at + 1);
  }
  return Move(std::move(from), std::move(to));
}

std::vector<Move> parse_moves(std::string_view s) {
  std::vector<Move> out;
  for (const auto& [piece, offset] : split_top(s, ';')) {
    if (blank(piece)) continue;
    out.push_back(parse_piece(piece, offset, [](std::string_view p) { return parse_move(p); }));
  }
  return out;
}

std::vector<Allocation> parse_allocation_list(std::string_view s) {
  std::vector<Allocation> out;
  for (const auto& [piece, offset] : split_top(s, ';')) {
    if (blank(piece)) continue;
    out.push_back(parse_piece(piece, offset, [](std::string_view p) { return parse_allocation(p); }));
  }
  return out;
}

TransformSpec parse_transform(std::string_view s) {
  Cursor c(s);
  const std::size_t start = c.pos();
  const std::string name = c.identifier();
  auto build = [&](auto&& make) {
    try {
      return make();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), 0, start + 1);
    }
  };

  TransformSpec out;
  if (name == "own") {
    out = TransformSpec::own();
  } else if (name == "weighted_own") {
    std::vector<Rational> w;
    if (c.accept("(")) {
      w = c.rational_list(')');
      c.expect(")");
    }
    out = build([&] { return TransformSpec::weighted_own(w); });
  } else if (name == "relative_mean") {
    std::vector<Rational> w;
    if (c.accept("(")) {
      w = c.rational_list(')');
      c.expect(")");
    }
    out = build([&] { return TransformSpec::relative_mean(w); });
  } else if (name == "relative_nbhd") {
    c.expect("(");
    std::vector<AgentId> ids;
    do {
      const std::size_t at = c.pos();
      const Rational id = c.rational();
      if (boost::multiprecision::denominator(id) != 1 || id < 1) {
        throw ParseError("agent ids are positive integers", 0, at + 1);
      }
      ids.push_back(boost::multiprecision::numerator(id).convert_to<std::size_t>() - 1);
    } while (c.accept(","));
    std::vector<Rational> w;
    if (c.accept(";")) w = c.rational_list(')');
    c.expect(")");
    out = build([&] { return TransformSpec::relative_nbhd(ids, w); });
  } else {
    throw ParseError("unknown transform '" + name + "'", 0, start + 1);
  }
  c.expect_end();
  return out;
}

Combiner parse_combiner(std::string_view s) {
  Cursor c(s);
  const std::size_t start = c.pos();
  const std::string name = c.identifier();
  Combiner out;
  if (name == "sum") {
    out = Sum{};
  } else if (name == "maximin") {
    out = Maximin{};
  } else if (name == "weighted_sum") {
    c.expect("(");
    out = WeightedSum{c.rational_list(')')};
    c.expect(")");
  } else {
    throw ParseError("unknown welfare functional '" + name + "'", 0, start + 1);
  }
  c.expect_end();
  return out;
}

std::vector<Quantity> parse_quantity_list(std::string_view s) {
  Cursor c(s);
  std::vector<Quantity> out;
  out.push_back(c.quantity());
  while (c.accept(",")) out.push_back(c.quantity());
  c.expect_end();
  return out;
}

std::vector<std::vector<Quantity>> parse_levels(std::string_view s) {
  std::vector<std::vector<Quantity>> out;
  for (const auto& [piece, offset] : split_top(s, ';')) {
    out.push_back(parse_piece(piece, offset, [](std::string_view p) {
      Cursor c(p);
      const std::size_t at = c.pos();
      const Quantity first = c.quantity();
      if (c.accept("..")) {
        const Quantity last = c.quantity();
        c.expect_end();
        if (boost::multiprecision::denominator(first.value()) != 1 ||
            boost::multiprecision::denominator(last.value()) != 1 || last < first) {
          throw ParseError("ranges need integer bounds lo..hi with lo <= hi", 0, at + 1);
        }
        std::vector<Quantity> range;
        for (Rational v = first.value(); v <= last.value(); v += 1) range.emplace_back(v);
        return range;
      }
      std::vector<Quantity> list{first};
      while (c.accept(",")) list.push_back(c.quantity());
      c.expect_end();
      return list;
    }));
  }
  return out;
}

std::string format_bundle(const Bundle& b) {
  std::string out = "[";
  for (std::size_t c = 0; c < b.dimension(); ++c) {
    if (c) out += ",";
    out += to_string(b[c]);
  }
  return out + "]";
}

std::string format_allocation(const Allocation& a) {
  std::string out = "(";
  for (AgentId i = 0; i < a.n_agents(); ++i) {
    if (i) out += ",";
    out += a.commodity_dim() == 1 ? to_string(a[i][0]) : format_bundle(a[i]);
  }
  return out + ")";
}

std::string format_move(const Move& m) {
  return format_allocation(m.from) + "->" + format_allocation(m.to);
}

std::string format_transform(const TransformSpec& t) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, OwnBundle>) {
          return "own";
        } else if constexpr (std::is_same_v<K, WeightedOwn>) {
          return k.weights.empty() ? "weighted_own" : "weighted_own(" + join(k.weights) + ")";
        } else if constexpr (std::is_same_v<K, RelativeToMean>) {
          return k.weights.empty() ? "relative_mean" : "relative_mean(" + join(k.weights) + ")";
        } else {
          std::string out = "relative_nbhd(";
          for (std::size_t i = 0; i < k.neighbors.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(k.neighbors[i] + 1);
          }
          if (!k.weights.empty()) out += ";" + join(k.weights);
          return out + ")";
        }
      },
      t.kind());
}

std::string format_info(const PreferenceInfo& info) {
  return info.is_scalar() ? to_string(info.scalar()) : format_bundle(info.vector());
}

}  // namespace paretoscope::text
