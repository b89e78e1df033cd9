#include "lieomega/lyndon.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "lieomega/error.hpp"

namespace lieomega {

Tree Tree::leaf(Generator g) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Leaf;
  node->gen = std::move(g);
  return Tree(std::move(node));
}

Tree Tree::op(OperatorSymbol op, std::vector<Tree> children) {
  if (children.size() != op.arity) {
    throw ArityMismatch("operator " + op.name + " expects " + std::to_string(op.arity) + " argument(s), got " +
                        std::to_string(children.size()));
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Op;
  node->op = std::move(op);
  for (const auto& c : children) node->slots += c.slot_count();
  node->children = std::move(children);
  return Tree(std::move(node));
}

Tree Tree::bracket(Tree left, Tree right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bracket;
  node->slots = left.slot_count() + right.slot_count();
  node->children = {std::move(left), std::move(right)};
  return Tree(std::move(node));
}

Tree Tree::slot() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Slot;
  node->slots = 1;
  return Tree(std::move(node));
}

OmegaWord Tree::flatten(const OmegaWord* slot_word) const {
  switch (kind()) {
    case Kind::Leaf:
      return OmegaWord(Prime::letter(generator()));
    case Kind::Op: {
      std::vector<OmegaWord> args;
      args.reserve(children().size());
      for (const auto& c : children()) args.push_back(c.flatten(slot_word));
      return OmegaWord(Prime::apply(op(), std::move(args)));
    }
    case Kind::Bracket:
      return children()[0].flatten(slot_word) * children()[1].flatten(slot_word);
    case Kind::Slot:
      if (slot_word == nullptr) throw std::logic_error("flattening a tree with an unfilled slot");
      return *slot_word;
  }
  throw std::logic_error("unknown tree kind");
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Tree::Kind::Leaf:
      return a.generator().rank == b.generator().rank;
    case Tree::Kind::Slot:
      return true;
    case Tree::Kind::Op:
      if (a.op().rank != b.op().rank) return false;
      [[fallthrough]];
    case Tree::Kind::Bracket: {
      auto xs = a.children();
      auto ys = b.children();
      return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end());
    }
  }
  return false;
}

bool is_lyndon_sequence(std::span<const Prime> s) {
  const std::size_t n = s.size();
  if (n == 0) return false;
  for (std::size_t i = 1; i < n; ++i) {
    bool greater = false;
    for (std::size_t k = 0; k < n; ++k) {
      auto c = cmp_prime(s[k], s[(i + k) % n]);
      if (c > 0) {
        greater = true;
        break;
      }
      if (c < 0) return false;
    }
    if (!greater) return false;  // periodic word: equal to a rotation
  }
  return true;
}

namespace {

bool args_are_alsw(const Prime& p) {
  if (p.is_letter()) return true;
  return std::all_of(p.args().begin(), p.args().end(), [](const OmegaWord& a) { return is_alsw(a); });
}

void require_alsw(const OmegaWord& u, const char* what) {
  if (!is_alsw(u)) throw NotAlsw(std::string(what) + " is not an associative Lyndon-Shirshov word");
}

std::size_t standard_split(std::span<const Prime> s, std::size_t b, std::size_t e) {
  return b + lieomega::standard_split(s.subspan(b, e - b));
}

Tree prime_bracket(const Prime& p);

using Override = std::function<std::optional<Tree>(std::size_t, std::size_t)>;

Tree bracket_span(std::span<const Prime> s, std::size_t b, std::size_t e, const Override& override_at) {
  if (override_at) {
    if (auto t = override_at(b, e)) return *t;
  }
  if (e - b == 1) return prime_bracket(s[b]);
  const std::size_t m = standard_split(s, b, e);
  return Tree::bracket(bracket_span(s, b, m, override_at), bracket_span(s, m, e, override_at));
}

Tree prime_bracket(const Prime& p) {
  if (p.is_letter()) return Tree::leaf(p.generator());
  std::vector<Tree> children;
  children.reserve(p.args().size());
  for (const auto& a : p.args()) children.push_back(bracket_span(a.primes(), 0, a.breadth(), nullptr));
  return Tree::op(p.op(), std::move(children));
}

// Spans [b, e) of all nodes of the standard bracketing of s[b, e).
void standard_spans(std::span<const Prime> s, std::size_t b, std::size_t e,
                    std::vector<std::pair<std::size_t, std::size_t>>& out) {
  out.emplace_back(b, e);
  if (e - b == 1) return;
  const std::size_t m = standard_split(s, b, e);
  standard_spans(s, b, m, out);
  standard_spans(s, m, e, out);
}

}  // namespace

std::size_t standard_split(std::span<const Prime> primes) {
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (is_lyndon_sequence(primes.subspan(i))) return i;
  }
  throw std::logic_error("standard factorization requires a Lyndon sequence of length >= 2");
}

bool is_alsw(const OmegaWord& u) {
  auto ps = u.primes();
  return std::all_of(ps.begin(), ps.end(), args_are_alsw) && is_lyndon_sequence(ps);
}

std::vector<OmegaWord> factorize(const OmegaWord& u) {
  auto s = u.primes();
  for (const auto& p : s) {
    if (!args_are_alsw(p)) throw NotAlsw("operator argument is not an associative Lyndon-Shirshov word");
  }
  // Duval's scan, with the comparison direction of this lex order.
  std::vector<OmegaWord> out;
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n) {
      auto c = cmp_prime(s[k], s[j]);
      if (c < 0) break;
      k = (c > 0) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(u.slice(i, i + (j - k)));
      i += j - k;
    }
  }
  return out;
}

NlswTree std_bracket(const OmegaWord& u) {
  require_alsw(u, "word");
  return bracket_span(u.primes(), 0, u.breadth(), nullptr);
}

namespace {

// The bracketing of s (a Lyndon sequence) in which the occurrence of v at
// [i, i + m) becomes the slot, absorbing the right context c of the smallest
// standard-bracketing node [vc] that starts at i.
Tree absorb_occurrence(std::span<const Prime> s, std::size_t i, std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  standard_spans(s, 0, s.size(), spans);
  std::optional<std::size_t> end;
  for (const auto& [b, e] : spans) {
    if (b == i && e >= i + m && (!end || e < *end)) end = e;
  }
  if (!end) throw std::logic_error("no standard bracketing node encloses the occurrence");
  Tree replacement = Tree::slot();
  if (*end > i + m) {
    const OmegaWord c(std::vector<Prime>(s.begin() + static_cast<std::ptrdiff_t>(i + m),
                                         s.begin() + static_cast<std::ptrdiff_t>(*end)));
    for (const auto& factor : factorize(c)) replacement = Tree::bracket(replacement, std_bracket(factor));
  }
  const std::size_t target_end = *end;
  return bracket_span(s, 0, s.size(), [&](std::size_t b, std::size_t e) -> std::optional<Tree> {
    if (b == i && e == target_end) return replacement;
    return std::nullopt;
  });
}

}  // namespace

MarkedTree relative_bracket(const StarWord& pi, const OmegaWord& v) {
  require_alsw(v, "distinguished subword");
  require_alsw(substitute(pi, v), "substituted word");

  auto frames = pi.frames();
  const std::size_t levels = frames.size();
  // words[l] is the whole word at nesting level l; words[levels] holds v.
  std::vector<OmegaWord> words;
  words.reserve(levels + 1);
  words.push_back(concat(pi.left(), v.primes(), pi.right()));
  for (std::size_t l = levels; l-- > 0;) {
    const auto& f = frames[l];
    std::vector<OmegaWord> args(f.before);
    args.push_back(words.back());
    args.insert(args.end(), f.after.begin(), f.after.end());
    const Prime p = Prime::apply(f.op, std::move(args));
    words.push_back(concat(f.left, std::span<const Prime>(&p, 1), f.right));
  }
  std::reverse(words.begin(), words.end());

  Tree inner = absorb_occurrence(words[levels].primes(), pi.left().size(), v.breadth());
  for (std::size_t l = levels; l-- > 0;) {
    const auto& f = frames[l];
    std::vector<Tree> children;
    for (const auto& w : f.before) children.push_back(std_bracket(w));
    children.push_back(inner);
    for (const auto& w : f.after) children.push_back(std_bracket(w));
    const Tree op_tree = Tree::op(f.op, std::move(children));
    const std::size_t pos = f.left.size();
    auto s = words[l].primes();
    inner = bracket_span(s, 0, s.size(), [&](std::size_t b, std::size_t e) -> std::optional<Tree> {
      if (b == pos && e == pos + 1) return op_tree;
      return std::nullopt;
    });
  }
  return inner;
}

std::vector<std::vector<OmegaWord>> alsw_by_degree(const Alphabet& alphabet, std::uint32_t max_degree) {
  std::vector<std::vector<Prime>> primes(max_degree + 1);
  std::vector<std::vector<OmegaWord>> alsw(max_degree + 1);
  // Words (not necessarily Lyndon) over ALSW primes, grouped by degree.
  std::vector<std::vector<std::vector<Prime>>> sequences(max_degree + 1);

  std::function<void(const OperatorSymbol&, std::uint32_t, std::uint32_t, std::vector<OmegaWord>&, std::uint32_t)>
      args_for;
  args_for = [&](const OperatorSymbol& op, std::uint32_t remaining_args, std::uint32_t total,
                 std::vector<OmegaWord>& current, std::uint32_t d) {
    if (remaining_args == 0) {
      if (total == 0) primes[d].push_back(Prime::apply(op, current));
      return;
    }
    for (std::uint32_t k = 1; k + (remaining_args - 1) <= total; ++k) {
      for (const auto& w : alsw[k]) {
        current.push_back(w);
        args_for(op, remaining_args - 1, total - k, current, d);
        current.pop_back();
      }
    }
  };

  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    if (d == 1) {
      for (const auto& g : alphabet.generators()) primes[1].push_back(Prime::letter(g));
    } else {
      for (const auto& op : alphabet.operators()) {
        std::vector<OmegaWord> current;
        args_for(op, op.arity, d - 1, current, d);
      }
    }
    for (std::uint32_t k = 1; k <= d; ++k) {
      for (const auto& p : primes[k]) {
        if (k == d) {
          sequences[d].push_back({p});
          continue;
        }
        for (const auto& rest : sequences[d - k]) {
          std::vector<Prime> seq{p};
          seq.insert(seq.end(), rest.begin(), rest.end());
          sequences[d].push_back(std::move(seq));
        }
      }
    }
    for (const auto& seq : sequences[d]) {
      if (is_lyndon_sequence(seq)) alsw[d].emplace_back(seq);
    }
    std::sort(alsw[d].begin(), alsw[d].end(), DlLess{});
  }
  return alsw;
}

}  // namespace lieomega
