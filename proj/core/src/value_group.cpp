#include "hahn/value_group.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "hahn/errors.hpp"

namespace hahn {

GroupElement::GroupElement(Components components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("group element needs at least one component");
}

GroupElement::GroupElement(std::initializer_list<std::int64_t> components) {
  if (components.size() == 0) throw std::invalid_argument("group element needs at least one component");
  for (auto c : components) components_.emplace_back(c);
}

const Rational& GroupElement::scalar() const {
  if (rank() != 1) throw std::logic_error("scalar() on element of rank " + std::to_string(rank()));
  return components_.front();
}

bool GroupElement::is_zero() const {
  for (const auto& c : components_)
    if (c != 0) return false;
  return true;
}

std::string GroupElement::to_string() const {
  if (rank() == 1) return format_rational(components_.front());
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ',';
    out += format_rational(components_[i]);
  }
  return out + ")";
}

namespace {

void require_same_rank(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  require_same_rank(a, b);
  GroupElement::Components out;
  out.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.push_back(a[i] + b[i]);
  return GroupElement{std::move(out)};
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  require_same_rank(a, b);
  GroupElement::Components out;
  out.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.push_back(a[i] - b[i]);
  return GroupElement{std::move(out)};
}

GroupElement operator-(const GroupElement& a) {
  GroupElement::Components out;
  out.reserve(a.rank());
  for (const auto& c : a.components()) out.push_back(-c);
  return GroupElement{std::move(out)};
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (const auto c = rational_compare(a[i], b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

ValueGroup::ValueGroup(Kind kind, std::vector<bool> integral, ValueGroupPtr left, ValueGroupPtr right)
    : kind_(kind), integral_(std::move(integral)), left_(std::move(left)), right_(std::move(right)) {}

ValueGroupPtr ValueGroup::integers() {
  static const ValueGroupPtr z{new ValueGroup(Kind::Integers, {true}, nullptr, nullptr)};
  return z;
}

ValueGroupPtr ValueGroup::rationals() {
  static const ValueGroupPtr q{new ValueGroup(Kind::Rationals, {false}, nullptr, nullptr)};
  return q;
}

ValueGroupPtr ValueGroup::lex(ValueGroupPtr left, ValueGroupPtr right) {
  if (!left || !right) throw std::invalid_argument("lex product of a null group");
  std::vector<bool> integral = left->integral_;
  integral.insert(integral.end(), right->integral_.begin(), right->integral_.end());
  return ValueGroupPtr{new ValueGroup(Kind::Lex, std::move(integral), std::move(left), std::move(right))};
}

ValueGroupPtr ValueGroup::from_name(std::string_view name) {
  if (name == "int") return integers();
  if (name == "rat") return rationals();
  if (name == "lex2") return lex(integers(), integers());
  throw ParseError("unknown value group '" + std::string(name) + "' (expected int, rat or lex2)");
}

GroupElement ValueGroup::zero() const {
  GroupElement::Components c(rank(), Rational{0});
  return GroupElement{std::move(c)};
}

void ValueGroup::require(const GroupElement& g) const {
  if (!contains(g)) throw std::invalid_argument(g.to_string() + " is not an element of " + name());
}

GroupElement ValueGroup::add(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  return a + b;
}

GroupElement ValueGroup::neg(const GroupElement& a) const {
  require(a);
  return -a;
}

std::strong_ordering ValueGroup::compare(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  return a <=> b;
}

bool ValueGroup::contains(const GroupElement& g) const {
  if (g.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (integral_[i] && boost::multiprecision::denominator(g[i]) != 1) return false;
  return true;
}

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  GroupElement::Components parse_all() {
    GroupElement::Components out;
    parse_element(out);
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return out;
  }

 private:
  void parse_element(GroupElement::Components& out) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      parse_element(out);
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parse_element(out);
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return;
    }
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    out.push_back(parse_rational(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad group element '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupElement ValueGroup::parse(std::string_view text) const {
  GroupElement g{ElementParser{text}.parse_all()};
  if (!contains(g)) throw ParseError("'" + std::string(text) + "' is not an element of " + name());
  return g;
}

std::string ValueGroup::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "int";
    case Kind::Rationals:
      return "rat";
    case Kind::Lex:
      break;
  }
  if (left_->kind() == Kind::Integers && right_->kind() == Kind::Integers) return "lex2";
  return "lex(" + left_->name() + "," + right_->name() + ")";
}

}  // namespace hahn
