#include "coxhull/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "coxhull/error.hpp"

namespace coxhull {

namespace {

int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::string> union_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

std::size_t index_of(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw Error(ErrorKind::UnknownVariable, "variable '" + name + "' is not declared");
  return static_cast<std::size_t>(it - vars.begin());
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {
    by_length_ = vars;
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  MultiPoly expr() {
    MultiPoly p = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      p = c == '+' ? p + term() : p - term();
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = unary();
    for (char c = peek(); c == '*' || starts_factor(c); c = peek()) {
      if (c == '*') ++pos_;
      p = p * unary();
    }
    return p;
  }

  MultiPoly unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    return base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
  }

  MultiPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(BigInt(std::string(text_.substr(start, pos_ - start))), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      for (const auto& name : by_length_) {
        if (text_.substr(pos_, name.size()) == name) {
          pos_ += name.size();
          return MultiPoly::variable(name, vars_);
        }
      }
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      throw Error(ErrorKind::UnknownVariable, "'" + std::string(text_.substr(pos_, end - pos_)) + "' in '" +
                                                  std::string(text_) + "' matches no declared variable");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::vector<std::string> by_length_;
  std::size_t pos_ = 0;
};

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(const BigInt& c, std::vector<std::string> variables) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> variables) {
  MultiPoly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[index_of(p.vars_, name)] = 1;
  p.add_term(e, 1);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector does not match the variable list");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt MultiPoly::coefficient(const std::map<std::string, int>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, power] : monomial) e[index_of(vars_, name)] = power;
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly MultiPoly::reordered(const std::vector<std::string>& variables) const {
  std::vector<int> target(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it != variables.end()) target[i] = static_cast<int>(it - variables.begin());
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] < 0) throw Error(ErrorKind::UnknownVariable, "reordering drops variable '" + vars_[i] + "'");
      f[static_cast<std::size_t>(target[i])] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = union_of(a.vars_, b.vars_);
  MultiPoly out = a.reordered(vars);
  for (const auto& [e, c] : b.reordered(vars).terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out(a.vars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = union_of(a.vars_, b.vars_);
  const MultiPoly x = a.reordered(vars), y = b.reordered(vars);
  MultiPoly out(vars);
  Exponents e(vars.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  MultiPoly result = constant(1, vars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string MultiPoly::monomial_string(const Exponents& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool is_constant = degree(e) == 0;
    if (is_constant) {
      os << magnitude.get_str();
    } else {
      if (magnitude != 1) os << magnitude.get_str() << '*';
      os << monomial_string(e);
    }
  }
  return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) { return a - b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly poly_substitute(const MultiPoly& p, const std::string& var, const MultiPoly& replacement) {
  const std::size_t k = index_of(p.variables(), var);
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < p.variables().size(); ++i)
    if (i != k) rest.push_back(p.variables()[i]);
  const auto vars = union_of(rest, replacement.variables());

  int max_power = 0;
  for (const auto& [e, c] : p.terms()) max_power = std::max(max_power, e[k]);
  std::vector<MultiPoly> powers{MultiPoly::constant(1, vars)};
  for (int i = 1; i <= max_power; ++i) powers.push_back(powers.back() * replacement);

  MultiPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly mono(rest);
    Exponents f;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k) f.push_back(e[i]);
    mono.add_term(f, c);
    out = out + mono * powers[static_cast<std::size_t>(e[k])];
  }
  return out.reordered(vars);
}

BigInt poly_eval(const MultiPoly& p, const std::map<std::string, BigInt>& assignment) {
  std::vector<BigInt> values;
  for (const auto& v : p.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw Error(ErrorKind::UnknownVariable, "no value for variable '" + v + "'");
    values.push_back(it->second);
  }
  BigInt total = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      BigInt f;
      mpz_pow_ui(f.get_mpz_t(), values[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= f;
    }
    total += t;
  }
  return total;
}

MultiPoly poly_parse(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse().reordered(variables);
}

bool check_nonneg_coeffs(const MultiPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second >= 0; });
}

}  // namespace coxhull
