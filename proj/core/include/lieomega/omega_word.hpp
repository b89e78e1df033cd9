#pragma once

// Associative Omega-words: sequences of primes, where a prime is either a
// generator or an operator applied to Omega-words. Words are immutable and
// share their prime nodes, so copies are cheap.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieomega {

struct Generator {
  std::string name;
  std::uint32_t rank = 0;  // 0 is the greatest generator
};

struct OperatorSymbol {
  std::string name;
  std::uint32_t arity = 1;
  std::uint32_t rank = 0;  // 0 is the greatest operator
};

class OmegaWord;

class Prime {
 public:
  static Prime letter(Generator g);
  /// Throws ArityMismatch when args.size() != op.arity.
  static Prime apply(OperatorSymbol op, std::vector<OmegaWord> args);

  bool is_letter() const noexcept;
  const Generator& generator() const;
  const OperatorSymbol& op() const;
  std::span<const OmegaWord> args() const;

  std::uint32_t degree() const noexcept;
  std::uint32_t depth() const noexcept;
  std::size_t hash() const noexcept;

  bool same_node(const Prime& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Prime& a, const Prime& b);

 private:
  struct Node;
  explicit Prime(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class OmegaWord {
 public:
  /// Throws std::invalid_argument on an empty prime sequence.
  explicit OmegaWord(std::vector<Prime> primes);
  OmegaWord(Prime p);  // NOLINT(google-explicit-constructor): a prime is a word

  std::span<const Prime> primes() const noexcept { return primes_; }
  const Prime& operator[](std::size_t i) const { return primes_[i]; }
  std::size_t breadth() const noexcept { return primes_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t depth() const noexcept { return depth_; }
  std::size_t hash() const noexcept { return hash_; }

  /// The subword made of primes [begin, end); throws if empty.
  OmegaWord slice(std::size_t begin, std::size_t end) const;

  friend bool operator==(const OmegaWord& a, const OmegaWord& b);

 private:
  std::vector<Prime> primes_;
  std::uint32_t degree_ = 0;
  std::uint32_t depth_ = 0;
  std::size_t hash_ = 0;
};

struct Prime::Node {
  bool letter = true;
  Generator gen;
  OperatorSymbol op;
  std::vector<OmegaWord> args;
  std::uint32_t degree = 1;
  std::uint32_t depth = 0;
  std::size_t hash = 0;
};

inline bool Prime::is_letter() const noexcept { return node_->letter; }
inline const Generator& Prime::generator() const { return node_->gen; }
inline const OperatorSymbol& Prime::op() const { return node_->op; }
inline std::span<const OmegaWord> Prime::args() const { return node_->args; }
inline std::uint32_t Prime::degree() const noexcept { return node_->degree; }
inline std::uint32_t Prime::depth() const noexcept { return node_->depth; }
inline std::size_t Prime::hash() const noexcept { return node_->hash; }

/// Concatenation of words.
OmegaWord operator*(const OmegaWord& a, const OmegaWord& b);
OmegaWord concat(std::span<const Prime> a, std::span<const Prime> b, std::span<const Prime> c = {});

inline std::uint32_t degree(const OmegaWord& u) { return u.degree(); }
inline std::size_t breadth(const OmegaWord& u) { return u.breadth(); }
inline std::uint32_t depth(const OmegaWord& u) { return u.depth(); }

/// The prime order: the Deg-lex order restricted to primes.
std::strong_ordering cmp_prime(const Prime& a, const Prime& b);

/// Lexicographic comparison of prime sequences. An exhausted sequence (a
/// proper prefix) compares greater than its extensions.
std::strong_ordering cmp_lex(std::span<const Prime> u, std::span<const Prime> v);

/// The Deg-lex order: (degree, breadth, primes...) lexicographically.
std::strong_ordering cmp_dl(const OmegaWord& u, const OmegaWord& v);

struct DlLess {
  bool operator()(const OmegaWord& a, const OmegaWord& b) const { return cmp_dl(a, b) < 0; }
};

struct DlGreater {
  bool operator()(const OmegaWord& a, const OmegaWord& b) const { return cmp_dl(a, b) > 0; }
};

struct WordHash {
  std::size_t operator()(const OmegaWord& u) const noexcept { return u.hash(); }
};

/// One level of nesting of a star-word: the hole sits inside argument
/// `before.size()` of an application of `op`, which is itself surrounded by
/// `left` and `right` at its own level.
struct StarFrame {
  std::vector<Prime> left;
  OperatorSymbol op;
  std::vector<OmegaWord> before;
  std::vector<OmegaWord> after;
  std::vector<Prime> right;

  friend bool operator==(const StarFrame& a, const StarFrame& b);
};

/// An Omega-word with exactly one hole. Stored as a path: the frames run from
/// the outermost level inward, and the hole sits between `left` and `right`
/// at the innermost level.
class StarWord {
 public:
  StarWord() = default;
  StarWord(std::vector<StarFrame> frames, std::vector<Prime> left, std::vector<Prime> right)
      : frames_(std::move(frames)), left_(std::move(left)), right_(std::move(right)) {}

  /// The hole surrounded by top-level words (either may be empty).
  static StarWord surround(std::span<const Prime> left, std::span<const Prime> right);

  std::span<const StarFrame> frames() const noexcept { return frames_; }
  std::span<const Prime> left() const noexcept { return left_; }
  std::span<const Prime> right() const noexcept { return right_; }

  bool is_bare() const noexcept { return frames_.empty() && left_.empty() && right_.empty(); }

  /// The hole counts as one.
  std::uint32_t degree() const;

  friend bool operator==(const StarWord& a, const StarWord& b) = default;

 private:
  std::vector<StarFrame> frames_;
  std::vector<Prime> left_;
  std::vector<Prime> right_;
};

OmegaWord substitute(const StarWord& pi, const OmegaWord& u);

/// Every star-word pi with substitute(pi, pattern) == host, leftmost-outermost
/// first.
std::vector<StarWord> occurrences(const OmegaWord& host, const OmegaWord& pattern);

struct Overlap {
  OmegaWord w;
  OmegaWord a;  // w = t1 a
  OmegaWord b;  // w = b t2
};

/// Proper overlaps w = t1 a = b t2 with a, b nonempty, ordered by growing
/// overlap length.
std::vector<Overlap> overlaps(const OmegaWord& t1, const OmegaWord& t2);

/// Generators and operators with their declared descending orders.
class Alphabet {
 public:
  Alphabet() = default;
  /// Names are listed greatest first. Throws std::invalid_argument on
  /// duplicate names, empty names, the reserved name "l", or zero arity.
  Alphabet(const std::vector<std::string>& generators,
           const std::vector<std::pair<std::string, std::uint32_t>>& operators);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<OperatorSymbol>& operators() const noexcept { return operators_; }

  const Generator* find_generator(std::string_view name) const;
  const OperatorSymbol* find_operator(std::string_view name) const;

  /// Throws std::invalid_argument for an unknown generator.
  Prime letter(std::string_view name) const;

 private:
  std::vector<Generator> generators_;
  std::vector<OperatorSymbol> operators_;
};

/// All words of each degree 1..max_degree (index 0 is empty), sorted
/// ascending under cmp_dl.
std::vector<std::vector<OmegaWord>> words_by_degree(const Alphabet& alphabet, std::uint32_t max_degree);

}  // namespace lieomega

template <>
struct std::hash<lieomega::OmegaWord> {
  std::size_t operator()(const lieomega::OmegaWord& u) const noexcept { return u.hash(); }
};
