#include "lieomega/coefficient.hpp"

#include <algorithm>

namespace lieomega {

Coefficient::Coefficient(long value) {
  if (value != 0) terms_.emplace_back(value);
}

Coefficient::Coefficient(Rational value) {
  value.canonicalize();
  if (value != 0) terms_.push_back(std::move(value));
}

Coefficient Coefficient::lambda(std::size_t power) {
  Coefficient c;
  c.terms_.assign(power + 1, Rational(0));
  c.terms_[power] = 1;
  return c;
}

bool Coefficient::is_one() const { return terms_.size() == 1 && terms_[0] == 1; }

Rational Coefficient::constant() const { return terms_.empty() ? Rational(0) : terms_[0]; }

Rational Coefficient::at(std::size_t power) const { return power < terms_.size() ? terms_[power] : Rational(0); }

Rational Coefficient::evaluate(const Rational& lambda_value) const {
  Rational acc = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc * lambda_value + *it;
  return acc;
}

void Coefficient::trim() {
  while (!terms_.empty() && terms_.back() == 0) terms_.pop_back();
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size(), Rational(0));
  for (std::size_t i = 0; i < o.terms_.size(); ++i) terms_[i] += o.terms_[i];
  trim();
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size(), Rational(0));
  for (std::size_t i = 0; i < o.terms_.size(); ++i) terms_[i] -= o.terms_[i];
  trim();
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.assign(a.terms_.size() + b.terms_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i] == 0) continue;
    for (std::size_t j = 0; j < b.terms_.size(); ++j) out.terms_[i + j] += a.terms_[i] * b.terms_[j];
  }
  out.trim();
  return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient operator-(Coefficient a) {
  for (auto& t : a.terms_) t = -t;
  return a;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = terms_.size(); k-- > 0;) {
    const Rational& c = terms_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power = k == 0 ? "" : (k == 1 ? "l" : "l^" + std::to_string(k));
    if (power.empty()) {
      out += lieomega::to_string(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += lieomega::to_string(mag) + "*" + power;
    }
  }
  return out;
}

}  // namespace lieomega
