#include "lieomega/omega_word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "lieomega/error.hpp"

namespace lieomega {

namespace {

constexpr std::size_t kLetterSeed = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kOpSeed = 0xc2b2ae3d27d4eb4fULL;

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::strong_ordering reverse_rank(std::uint32_t a, std::uint32_t b) { return b <=> a; }

}  // namespace

Prime Prime::letter(Generator g) {
  auto node = std::make_shared<Node>();
  node->letter = true;
  node->hash = mix(mix(kLetterSeed, g.rank), std::hash<std::string>{}(g.name));
  node->gen = std::move(g);
  return Prime(std::move(node));
}

Prime Prime::apply(OperatorSymbol op, std::vector<OmegaWord> args) {
  if (args.size() != op.arity) {
    throw ArityMismatch("operator " + op.name + " expects " + std::to_string(op.arity) + " argument(s), got " +
                        std::to_string(args.size()));
  }
  auto node = std::make_shared<Node>();
  node->letter = false;
  node->degree = 1;
  node->depth = 0;
  std::size_t h = mix(mix(kOpSeed, op.rank), std::hash<std::string>{}(op.name));
  for (const auto& a : args) {
    node->degree += a.degree();
    node->depth = std::max(node->depth, a.depth());
    h = mix(h, a.hash());
  }
  node->depth += 1;
  node->hash = h;
  node->op = std::move(op);
  node->args = std::move(args);
  return Prime(std::move(node));
}

bool operator==(const Prime& a, const Prime& b) {
  if (a.same_node(b)) return true;
  if (a.hash() != b.hash() || a.degree() != b.degree() || a.is_letter() != b.is_letter()) return false;
  if (a.is_letter()) return a.generator().rank == b.generator().rank && a.generator().name == b.generator().name;
  if (a.op().rank != b.op().rank || a.op().name != b.op().name) return false;
  auto xs = a.args();
  auto ys = b.args();
  return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end());
}

OmegaWord::OmegaWord(std::vector<Prime> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw std::invalid_argument("an Omega-word needs at least one prime");
  std::size_t h = primes_.size();
  for (const auto& p : primes_) {
    degree_ += p.degree();
    depth_ = std::max(depth_, p.depth());
    h = mix(h, p.hash());
  }
  hash_ = h;
}

OmegaWord::OmegaWord(Prime p) : OmegaWord(std::vector<Prime>{std::move(p)}) {}

OmegaWord OmegaWord::slice(std::size_t begin, std::size_t end) const {
  return OmegaWord(std::vector<Prime>(primes_.begin() + static_cast<std::ptrdiff_t>(begin),
                                      primes_.begin() + static_cast<std::ptrdiff_t>(end)));
}

bool operator==(const OmegaWord& a, const OmegaWord& b) {
  if (a.hash_ != b.hash_ || a.degree_ != b.degree_ || a.primes_.size() != b.primes_.size()) return false;
  return std::equal(a.primes_.begin(), a.primes_.end(), b.primes_.begin());
}

OmegaWord operator*(const OmegaWord& a, const OmegaWord& b) { return concat(a.primes(), b.primes()); }

OmegaWord concat(std::span<const Prime> a, std::span<const Prime> b, std::span<const Prime> c) {
  std::vector<Prime> out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return OmegaWord(std::move(out));
}

std::strong_ordering cmp_prime(const Prime& a, const Prime& b) {
  if (a.same_node(b)) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.is_letter() && b.is_letter()) {
    if (auto c = reverse_rank(a.generator().rank, b.generator().rank); c != 0) return c;
    // Same rank in different alphabets: names keep the order consistent with ==.
    return a.generator().name <=> b.generator().name;
  }
  // Unreachable for equal degrees (operator primes have degree >= 2), kept for totality.
  if (a.is_letter() != b.is_letter()) return a.is_letter() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = reverse_rank(a.op().rank, b.op().rank); c != 0) return c;
  if (auto c = a.op().name <=> b.op().name; c != 0) return c;
  auto xs = a.args();
  auto ys = b.args();
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (auto c = cmp_dl(xs[i], ys[i]); c != 0) return c;
  }
  return xs.size() <=> ys.size();
}

std::strong_ordering cmp_lex(std::span<const Prime> u, std::span<const Prime> v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp_prime(u[i], v[i]); c != 0) return c;
  }
  // The shorter sequence is a prefix of the longer one and is the greater.
  return v.size() <=> u.size();
}

std::strong_ordering cmp_dl(const OmegaWord& u, const OmegaWord& v) {
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  if (auto c = u.breadth() <=> v.breadth(); c != 0) return c;
  auto xs = u.primes();
  auto ys = v.primes();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (auto c = cmp_prime(xs[i], ys[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const StarFrame& a, const StarFrame& b) {
  return a.op.rank == b.op.rank && a.op.arity == b.op.arity && a.left == b.left && a.before == b.before &&
         a.after == b.after && a.right == b.right;
}

StarWord StarWord::surround(std::span<const Prime> left, std::span<const Prime> right) {
  return StarWord({}, std::vector<Prime>(left.begin(), left.end()), std::vector<Prime>(right.begin(), right.end()));
}

std::uint32_t StarWord::degree() const {
  std::uint32_t d = 1;
  auto add_primes = [&d](std::span<const Prime> ps) {
    for (const auto& p : ps) d += p.degree();
  };
  add_primes(left_);
  add_primes(right_);
  for (const auto& f : frames_) {
    d += 1;
    add_primes(f.left);
    add_primes(f.right);
    for (const auto& w : f.before) d += w.degree();
    for (const auto& w : f.after) d += w.degree();
  }
  return d;
}

OmegaWord substitute(const StarWord& pi, const OmegaWord& u) {
  OmegaWord inner = concat(pi.left(), u.primes(), pi.right());
  auto frames = pi.frames();
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    std::vector<OmegaWord> args(it->before);
    args.push_back(std::move(inner));
    args.insert(args.end(), it->after.begin(), it->after.end());
    const Prime p = Prime::apply(it->op, std::move(args));
    const std::span<const Prime> mid(&p, 1);
    inner = concat(it->left, mid, it->right);
  }
  return inner;
}

namespace {

void collect_occurrences(const OmegaWord& host, const OmegaWord& pattern, std::vector<StarFrame>& path,
                         std::vector<StarWord>& out) {
  if (pattern.degree() > host.degree()) return;
  auto hp = host.primes();
  auto pp = pattern.primes();
  const std::size_t n = hp.size();
  const std::size_t m = pp.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i + m <= n && std::equal(pp.begin(), pp.end(), hp.begin() + static_cast<std::ptrdiff_t>(i))) {
      out.emplace_back(path, std::vector<Prime>(hp.begin(), hp.begin() + static_cast<std::ptrdiff_t>(i)),
                       std::vector<Prime>(hp.begin() + static_cast<std::ptrdiff_t>(i + m), hp.end()));
    }
    const Prime& p = hp[i];
    if (p.is_letter() || p.degree() <= pattern.degree()) continue;
    auto args = p.args();
    for (std::size_t k = 0; k < args.size(); ++k) {
      StarFrame frame{std::vector<Prime>(hp.begin(), hp.begin() + static_cast<std::ptrdiff_t>(i)),
                      p.op(),
                      std::vector<OmegaWord>(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(k)),
                      std::vector<OmegaWord>(args.begin() + static_cast<std::ptrdiff_t>(k + 1), args.end()),
                      std::vector<Prime>(hp.begin() + static_cast<std::ptrdiff_t>(i + 1), hp.end())};
      path.push_back(std::move(frame));
      collect_occurrences(args[k], pattern, path, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<StarWord> occurrences(const OmegaWord& host, const OmegaWord& pattern) {
  std::vector<StarWord> out;
  std::vector<StarFrame> path;
  collect_occurrences(host, pattern, path, out);
  return out;
}

std::vector<Overlap> overlaps(const OmegaWord& t1, const OmegaWord& t2) {
  std::vector<Overlap> out;
  auto p1 = t1.primes();
  auto p2 = t2.primes();
  const std::size_t limit = std::min(p1.size(), p2.size());
  for (std::size_t k = 1; k < limit; ++k) {
    if (std::equal(p1.end() - static_cast<std::ptrdiff_t>(k), p1.end(), p2.begin())) {
      out.push_back(Overlap{concat(p1, p2.subspan(k)), t2.slice(k, p2.size()), t1.slice(0, p1.size() - k)});
    }
  }
  return out;
}

Alphabet::Alphabet(const std::vector<std::string>& generators,
                   const std::vector<std::pair<std::string, std::uint32_t>>& operators) {
  std::unordered_set<std::string> seen;
  auto check_name = [&seen](const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty symbol name");
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
        !std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      throw std::invalid_argument("invalid symbol name '" + name + "'");
    }
    if (name == "l") throw std::invalid_argument("the name 'l' is reserved for the parameter lambda");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate symbol name '" + name + "'");
  };
  for (std::size_t i = 0; i < generators.size(); ++i) {
    check_name(generators[i]);
    generators_.push_back(Generator{generators[i], static_cast<std::uint32_t>(i)});
  }
  for (std::size_t i = 0; i < operators.size(); ++i) {
    check_name(operators[i].first);
    if (operators[i].second == 0) throw std::invalid_argument("operator " + operators[i].first + " has arity 0");
    operators_.push_back(OperatorSymbol{operators[i].first, operators[i].second, static_cast<std::uint32_t>(i)});
  }
}

const Generator* Alphabet::find_generator(std::string_view name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

const OperatorSymbol* Alphabet::find_operator(std::string_view name) const {
  for (const auto& op : operators_) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

Prime Alphabet::letter(std::string_view name) const {
  const Generator* g = find_generator(name);
  if (g == nullptr) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return Prime::letter(*g);
}

namespace {

// All tuples (w_1..w_m) with sum of degrees == total, each degree >= 1.
void word_tuples(const std::vector<std::vector<OmegaWord>>& words, std::uint32_t m, std::uint32_t total,
                 std::vector<OmegaWord>& current, const std::function<void(const std::vector<OmegaWord>&)>& emit) {
  if (m == 0) {
    if (total == 0) emit(current);
    return;
  }
  for (std::uint32_t d = 1; d + (m - 1) <= total; ++d) {
    for (const auto& w : words[d]) {
      current.push_back(w);
      word_tuples(words, m - 1, total - d, current, emit);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<OmegaWord>> words_by_degree(const Alphabet& alphabet, std::uint32_t max_degree) {
  std::vector<std::vector<Prime>> primes(max_degree + 1);
  std::vector<std::vector<OmegaWord>> words(max_degree + 1);
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    if (d == 1) {
      for (const auto& g : alphabet.generators()) primes[1].push_back(Prime::letter(g));
    } else {
      for (const auto& op : alphabet.operators()) {
        std::vector<OmegaWord> current;
        word_tuples(words, op.arity, d - 1, current,
                    [&](const std::vector<OmegaWord>& args) { primes[d].push_back(Prime::apply(op, args)); });
      }
    }
    // Words of degree d: a first prime of degree k followed by a word of degree d - k.
    for (std::uint32_t k = 1; k <= d; ++k) {
      for (const auto& p : primes[k]) {
        if (k == d) {
          words[d].emplace_back(p);
          continue;
        }
        for (const auto& rest : words[d - k]) {
          std::vector<Prime> seq{p};
          seq.insert(seq.end(), rest.primes().begin(), rest.primes().end());
          words[d].emplace_back(std::move(seq));
        }
      }
    }
    std::sort(words[d].begin(), words[d].end(), DlLess{});
  }
  return words;
}

}  // namespace lieomega
