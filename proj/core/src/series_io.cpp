#include <cctype>
#include <string>

#include "hahn/errors.hpp"
#include "hahn/series.hpp"

namespace hahn {

namespace {

std::string format_term(const Term& t) {
  if (t.exponent.is_zero()) return format_rational(t.coefficient);
  std::string out;
  if (t.coefficient != 1) out = format_rational(t.coefficient) + "*";
  return out + "t^" + t.exponent.to_string();
}

class SeriesParser {
 public:
  SeriesParser(const SeriesSpace& space, std::string_view original) : space_(space), original_(original) {
    for (char c : original)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  Series parse() {
    if (text_.empty()) fail("empty input");
    std::vector<Term> terms;
    OrderedValue truncation = OrderedValue::infinity();
    bool first = true;
    while (pos_ < text_.size()) {
      bool negate = false;
      if (!first) {
        if (peek() != '+' && peek() != '-') fail("expected '+'");
        negate = text_[pos_++] == '-';
      }
      first = false;
      if (peek() == 'O') {
        if (negate) fail("'O(...)' must follow '+'");
        truncation = parse_order();
        if (pos_ != text_.size()) fail("'O(...)' must be the last summand");
        break;
      }
      Term term = parse_term();
      if (negate) term.coefficient = -term.coefficient;
      terms.push_back(std::move(term));
    }
    try {
      return space_.make(std::move(terms), std::move(truncation));
    } catch (const FieldError& e) {
      throw ParseError(std::string("in '") + std::string(original_) + "': " + e.what());
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse series '" + std::string(original_) + "': " + why);
  }

  Term parse_term() {
    bool negative = false;
    if (peek() == '-') negative = text_[pos_++] == '-';
    Coefficient c{1};
    GroupElement e = space_.group().zero();
    if (peek() == 't') {
      e = parse_monomial();
    } else {
      c = parse_coefficient();
      if (peek() == '*') {
        ++pos_;
        if (peek() != 't') fail("expected 't' after '*'");
        e = parse_monomial();
      }
    }
    if (negative) c = -c;
    return Term{std::move(c), std::move(e)};
  }

  Coefficient parse_coefficient() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a coefficient at offset " + std::to_string(start));
    if (peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den) fail("expected a denominator");
    }
    try {
      return parse_rational(std::string_view(text_).substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  // 't' already at pos_; accepts `t^exp` and bare `t`.
  GroupElement parse_monomial() {
    ++pos_;
    if (peek() != '^') {
      if (space_.group().rank() != 1) fail("bare 't' needs an explicit exponent in " + space_.group().name());
      return space_.exponent(1);
    }
    ++pos_;
    return parse_exponent();
  }

  GroupElement parse_exponent() {
    const std::size_t start = pos_;
    if (peek() == '(') {
      int depth = 0;
      do {
        if (pos_ >= text_.size()) fail("unbalanced parentheses in exponent");
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      } while (depth > 0);
    } else {
      if (peek() == '-' || peek() == '+') ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    if (pos_ == start) fail("expected an exponent at offset " + std::to_string(start));
    try {
      return space_.group().parse(std::string_view(text_).substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  OrderedValue parse_order() {
    if (text_.compare(pos_, 2, "O(") != 0) fail("expected 'O('");
    pos_ += 2;
    if (peek() == 't') {
      ++pos_;
      if (peek() != '^') fail("expected '^' in O(t^...)");
      ++pos_;
    }
    if (text_.compare(pos_, 3, "inf") == 0) {
      pos_ += 3;
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return OrderedValue::infinity();
    }
    GroupElement e = parse_exponent();
    if (peek() != ')') fail("expected ')' closing O(...)");
    ++pos_;
    return OrderedValue{std::move(e)};
  }

  const SeriesSpace& space_;
  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Series& s) {
  std::string out;
  for (const auto& t : s.terms()) {
    if (!out.empty()) out += " + ";
    out += format_term(t);
  }
  if (out.empty()) out = "0";
  if (!s.is_exact()) out += " + O(" + s.truncation().to_string() + ")";
  return out;
}

Series SeriesSpace::parse(std::string_view text) const { return SeriesParser{*this, text}.parse(); }

Series parse_series(const SeriesSpace& space, std::string_view text) { return space.parse(text); }

nlohmann::json to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms())
    terms.push_back(nlohmann::json::array({format_rational(t.coefficient), t.exponent.to_string()}));
  return nlohmann::json{{"terms", std::move(terms)}, {"truncation", s.truncation().to_string()}};
}

Series SeriesSpace::from_json(const nlohmann::json& j) const {
  try {
    std::vector<Term> terms;
    for (const auto& entry : j.at("terms")) {
      if (!entry.is_array() || entry.size() != 2) throw ParseError("term must be [coeff, exp]");
      terms.push_back(Term{parse_rational(entry[0].get<std::string>()), group_->parse(entry[1].get<std::string>())});
    }
    OrderedValue truncation = OrderedValue::infinity();
    if (j.contains("truncation")) truncation = parse_ordered_value(*group_, j.at("truncation").get<std::string>());
    return make(std::move(terms), std::move(truncation));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad series JSON: ") + e.what());
  } catch (const FieldError& e) {
    throw ParseError(std::string("bad series JSON: ") + e.what());
  }
}

}  // namespace hahn
