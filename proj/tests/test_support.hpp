#pragma once

// Shared fixtures for the tests: alphabets, seeded random values, and small
// oracles that do not reuse the library code paths they check.

#include <compare>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lieomega/gsb.hpp"
#include "lieomega/syntax.hpp"

namespace lieomega::testing {

inline Alphabet letters(int k, bool with_p = true) {
  std::vector<std::string> gens;
  for (int i = k; i >= 1; --i) gens.push_back("x" + std::to_string(i));
  if (k == 1) gens = {"x"};
  if (with_p) return Alphabet(gens, {{"P", 1}});
  return Alphabet(gens, {});
}

/// x2 > x1 > x0 with one unary operator.
inline Alphabet three_down_to_zero() { return Alphabet({"x2", "x1", "x0"}, {{"P", 1}}); }

/// Comparison results as -1, 0, 1 so that gtest can print them.
inline int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

inline OmegaWord W(const std::string& text, const Alphabet& a) { return parse_word(text, a); }
inline LiePoly L(const std::string& text, const Alphabet& a) { return parse_poly(text, a); }

/// Deg-lex weight as a flat integer sequence. Each field is self-delimiting,
/// so plain lexicographic comparison of the vectors is the Deg-lex order.
inline void encode_word(const OmegaWord& u, std::vector<long>& out);

inline void encode_prime(const Prime& p, std::vector<long>& out) {
  out.push_back(p.degree());
  if (p.is_letter()) {
    out.push_back(0);
    out.push_back(-static_cast<long>(p.generator().rank));
    return;
  }
  out.push_back(1);
  out.push_back(-static_cast<long>(p.op().rank));
  for (const auto& a : p.args()) encode_word(a, out);
}

inline void encode_word(const OmegaWord& u, std::vector<long>& out) {
  out.push_back(u.degree());
  out.push_back(static_cast<long>(u.breadth()));
  for (const auto& p : u.primes()) encode_prime(p, out);
}

inline std::vector<long> weight(const OmegaWord& u) {
  std::vector<long> out;
  encode_word(u, out);
  return out;
}

/// Moebius function by trial division.
inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

/// Number of Lyndon words of length n over k letters.
inline long witt(int k, int n) {
  long sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long power = 1;
    for (int i = 0; i < n / d; ++i) power *= k;
    sum += mobius(d) * power;
  }
  return sum / n;
}

/// Every subword of u at every nesting level, as words.
inline void subwords(const OmegaWord& u, std::vector<OmegaWord>& out) {
  for (std::size_t i = 0; i < u.breadth(); ++i) {
    for (std::size_t j = i + 1; j <= u.breadth(); ++j) out.push_back(u.slice(i, j));
  }
  for (const auto& p : u.primes()) {
    if (p.is_letter()) continue;
    for (const auto& a : p.args()) subwords(a, out);
  }
}

/// All ALSW words of degree 1..max_degree in one list.
inline std::vector<OmegaWord> alsw_upto(const Alphabet& a, std::uint32_t max_degree) {
  std::vector<OmegaWord> out;
  for (const auto& level : alsw_by_degree(a, max_degree)) out.insert(out.end(), level.begin(), level.end());
  return out;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[index(xs.size())];
  }

  Coefficient coefficient(bool with_lambda = true) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Coefficient c;
    const int powers = with_lambda ? 3 : 1;
    for (int k = 0; k < powers; ++k) {
      long n = num(rng_);
      if (k > 0 && index(2) == 0) n = 0;
      Rational r(n, den(rng_));
      r.canonicalize();
      c += Coefficient(r) * Coefficient::lambda(static_cast<std::size_t>(k));
    }
    return c;
  }

  /// A random combination of up to `terms` basis elements drawn from `pool`.
  LiePoly lie_poly(const std::vector<OmegaWord>& pool, std::size_t terms, bool with_lambda = true) {
    LiePoly out;
    const std::size_t n = 1 + index(terms);
    for (std::size_t i = 0; i < n; ++i) out.add(pick(pool), coefficient(with_lambda));
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// The negative control: each preset rule with its last two terms dropped,
/// f = [P(u), P(v)] - P([P(u), v]).
inline RuleSet perturbed_rules(const Alphabet& a, std::uint32_t max_degree) {
  const RuleSet base = preset_rules(PresetKind::RotaBaxter, a, max_degree);
  const OperatorSymbol& op = a.operators().front();
  RuleSet out(a);
  for (const auto& r : base.rules()) {
    const OmegaWord u = r.lead[0].args()[0];
    const OmegaWord v = r.lead[1].args()[0];
    const LiePoly U = basis_element(u);
    const LiePoly V = basis_element(v);
    const LiePoly pu = apply_op(op, std::span<const LiePoly>(&U, 1));
    const LiePoly pv = apply_op(op, std::span<const LiePoly>(&V, 1));
    const LiePoly mixed = bracket(pu, V);
    out.add(bracket(pu, pv) - apply_op(op, std::span<const LiePoly>(&mixed, 1)));
  }
  return out;
}

inline std::size_t count_nontrivial(const std::vector<CompositionReport>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.trivial ? 0 : 1;
  return n;
}

inline std::size_t count_nontrivial(const std::vector<AssocCompositionReport>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.trivial ? 0 : 1;
  return n;
}

}  // namespace lieomega::testing
