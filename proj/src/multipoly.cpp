#include "trigeom/multipoly.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "trigeom/errors.hpp"

namespace trigeom {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(std::size_t nvars, const FieldSpec& field) : nvars_(nvars), field_(field) {
  if (nvars == 0) throw DimensionError("polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars, c.field());
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, const FieldSpec& field, std::size_t i) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  MultiPoly p(nvars, field);
  p.add_term(e, Scalar::one(field));
  return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Scalar& c) {
  MultiPoly p(e.size(), c.field());
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(trigeom::total_degree(terms_.begin()->first));
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

const std::pair<const Exponent, Scalar>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw DimensionError("exponent length does not match nvars");
  if (c.field() != field_) throw FieldMismatch();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomials in different numbers of variables");
  if (field_ != o.field_) throw FieldMismatch();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_compatible(o);
  MultiPoly r(nvars_, field_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  terms_ = std::move(r.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch();
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Scalar MultiPoly::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has wrong length");
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += std::string(var) + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      out << coeff;
    else if (coeff == "1")
      out << mono;
    else
      out << coeff << '*' << mono;
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, const FieldSpec& field,
             const ParamBindings& params)
      : text_(text), nvars_(nvars), field_(field), params_(params) {}

  MultiPoly run() {
    MultiPoly p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc(nvars_, field_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    if (accept('-')) return -factor();
    MultiPoly b = base();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      MultiPoly r = MultiPoly::constant(nvars_, Scalar::one(field_));
      for (unsigned k = 0; k < e; ++k) r *= b;
      return r;
    }
    return b;
  }

  MultiPoly base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      return MultiPoly::constant(nvars_, Scalar::parse(field_, text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string word(text_.substr(start, pos_ - start));
      if (auto it = params_.find(word); it != params_.end()) {
        if (it->second.field() != field_) throw FieldMismatch();
        return MultiPoly::constant(nvars_, it->second);
      }
      std::size_t d = word.size();
      while (d > 0 && std::isdigit(static_cast<unsigned char>(word[d - 1]))) --d;
      if (d == 0 || d == word.size()) fail("unknown identifier '" + word + "'");
      const std::size_t index = std::stoul(word.substr(d));
      if (index == 0 || index > nvars_) fail("variable index out of range in '" + word + "'");
      return MultiPoly::variable(nvars_, field_, index - 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  FieldSpec field_;
  const ParamBindings& params_;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::size_t nvars, const FieldSpec& field,
                           const ParamBindings& params) {
  return PolyParser(text, nvars, field, params).run();
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw InvalidArgument("unknown polynomial op");
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.nvars() != b.nvars()) throw DimensionError("polynomials in different numbers of variables");
  if (a.field() != b.field()) throw FieldMismatch();
  const auto& [lead_exp, lead_coeff] = b.leading_term();
  const Scalar lead_inv = lead_coeff.inverse();
  MultiPoly quotient(a.nvars(), a.field());
  MultiPoly rest = a;
  Exponent e(a.nvars());
  // If b | a then every intermediate remainder is a multiple of b, so its
  // leading monomial must be divisible by LM(b).
  while (!rest.is_zero()) {
    const auto& [re, rc] = rest.leading_term();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (re[i] < lead_exp[i]) return std::nullopt;
      e[i] = static_cast<std::uint16_t>(re[i] - lead_exp[i]);
    }
    const MultiPoly step = MultiPoly::monomial(e, rc * lead_inv);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

StrippedPower strip_variable_power(const MultiPoly& a, std::size_t i) {
  if (a.is_zero()) throw InvalidArgument("cannot strip a variable power from the zero polynomial");
  if (i >= a.nvars()) throw DimensionError("variable index out of range");
  unsigned k = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : a.terms()) k = std::min<unsigned>(k, e[i]);
  MultiPoly cofactor(a.nvars(), a.field());
  for (const auto& [e, c] : a.terms()) {
    Exponent f = e;
    f[i] = static_cast<std::uint16_t>(f[i] - k);
    cofactor.add_term(f, c);
  }
  return {k, cofactor};
}

std::optional<Scalar> equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars() || a.field() != b.field()) return std::nullopt;
  if (a.is_zero() && b.is_zero()) return Scalar::one(a.field());
  if (a.is_zero() || b.is_zero() || a.terms().size() != b.terms().size()) return std::nullopt;
  const Scalar c = a.leading_term().second / b.leading_term().second;
  return a == b * c ? std::optional<Scalar>(c) : std::nullopt;
}

}  // namespace trigeom
