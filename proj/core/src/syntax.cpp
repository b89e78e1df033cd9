#include "lieomega/syntax.hpp"

#include <cctype>
#include <optional>

namespace lieomega {

namespace {

void append_primes(std::string& out, std::span<const Prime> ps);

void append_word(std::string& out, const OmegaWord& u) { append_primes(out, u.primes()); }

void append_prime(std::string& out, const Prime& p) {
  if (p.is_letter()) {
    out += p.generator().name;
    return;
  }
  out += p.op().name;
  out += '(';
  bool first = true;
  for (const auto& a : p.args()) {
    if (!first) out += ", ";
    first = false;
    append_word(out, a);
  }
  out += ')';
}

void append_primes(std::string& out, std::span<const Prime> ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out += ' ';
    append_prime(out, ps[i]);
  }
}

void append_tree(std::string& out, const Tree& t) {
  switch (t.kind()) {
    case Tree::Kind::Leaf:
      out += t.generator().name;
      return;
    case Tree::Kind::Slot:
      out += '*';
      return;
    case Tree::Kind::Bracket:
      out += '(';
      append_tree(out, t.children()[0]);
      out += ' ';
      append_tree(out, t.children()[1]);
      out += ')';
      return;
    case Tree::Kind::Op: {
      out += t.op().name;
      out += '(';
      bool first = true;
      for (const auto& c : t.children()) {
        if (!first) out += ", ";
        first = false;
        append_tree(out, c);
      }
      out += ')';
      return;
    }
  }
}

template <class Tag, class Render>
std::string poly_to_string(const WordCombination<Tag>& p, Render render) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    const std::string body = render(w);
    for (std::size_t k = c.terms().size(); k-- > 0;) {
      Rational r = c.terms()[k];
      if (r == 0) continue;
      const bool negative = r < 0;
      if (negative) r = -r;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (r != 1) out += to_string(r) + "*";
      if (k == 1) out += "l*";
      if (k > 1) out += "l^" + std::to_string(k) + "*";
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const OmegaWord& u) {
  std::string out;
  append_word(out, u);
  return out;
}

std::string to_string(const StarWord& pi) {
  // Rebuild from the innermost level outward, with '*' standing for the hole.
  std::string inner;
  append_primes(inner, pi.left());
  if (!inner.empty()) inner += ' ';
  inner += '*';
  if (!pi.right().empty()) {
    inner += ' ';
    append_primes(inner, pi.right());
  }
  auto frames = pi.frames();
  for (std::size_t l = frames.size(); l-- > 0;) {
    const auto& f = frames[l];
    std::string level;
    append_primes(level, f.left);
    if (!level.empty()) level += ' ';
    level += f.op.name;
    level += '(';
    bool first = true;
    for (const auto& a : f.before) {
      if (!first) level += ", ";
      first = false;
      append_word(level, a);
    }
    if (!first) level += ", ";
    level += inner;
    for (const auto& a : f.after) {
      level += ", ";
      append_word(level, a);
    }
    level += ')';
    if (!f.right.empty()) {
      level += ' ';
      append_primes(level, f.right);
    }
    inner = std::move(level);
  }
  return inner;
}

std::string to_string(const Tree& t) {
  std::string out;
  append_tree(out, t);
  return out;
}

std::string to_string(const LiePoly& p) {
  return poly_to_string(p, [](const OmegaWord& u) { return to_string(std_bracket(u)); });
}

std::string to_string(const AssocPoly& p) {
  return poly_to_string(p, [](const OmegaWord& u) {
    return u.breadth() == 1 ? to_string(u) : "{" + to_string(u) + "}";
  });
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet* alphabet, std::size_t base = 0)
      : text_(text), alphabet_(alphabet), base_(base) {}

  [[noreturn]] void fail(std::size_t pos, const std::string& message) const { throw ParseError(base_ + pos, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  std::string_view identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(pos_, "expected a symbol");
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Resolves a name to a generator or an operator; `pos` is its offset.
  const OperatorSymbol* resolve(std::string_view name, std::size_t pos, const Generator*& gen) const {
    gen = alphabet_->find_generator(name);
    if (gen != nullptr) return nullptr;
    if (const auto* op = alphabet_->find_operator(name)) return op;
    fail(pos, "unknown symbol '" + std::string(name) + "'");
  }

  template <class Item, class ParseItem>
  std::vector<Item> arguments(const OperatorSymbol& op, std::size_t name_pos, ParseItem parse_item) {
    expect('(');
    std::vector<Item> args;
    args.push_back(parse_item());
    while (peek() == ',') {
      ++pos_;
      args.push_back(parse_item());
    }
    expect(')');
    if (args.size() != op.arity) {
      fail(name_pos, "operator " + op.name + " expects " + std::to_string(op.arity) + " argument(s), got " +
                         std::to_string(args.size()));
    }
    return args;
  }

  Prime prime() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view name = identifier();
    const Generator* gen = nullptr;
    const OperatorSymbol* op = resolve(name, start, gen);
    if (gen != nullptr) {
      if (peek() == '(') fail(pos_, "generator " + gen->name + " takes no arguments");
      return Prime::letter(*gen);
    }
    if (peek() != '(') fail(pos_, "operator " + op->name + " needs arguments");
    return Prime::apply(*op, arguments<OmegaWord>(*op, start, [this] { return word(); }));
  }

  OmegaWord word() {
    std::vector<Prime> ps;
    ps.push_back(prime());
    while (ident_start(peek())) ps.push_back(prime());
    return OmegaWord(std::move(ps));
  }

  // A word in which '*' may appear once; `star` receives the path to it.
  std::vector<Prime> star_sequence(std::optional<StarWord>& star) {
    std::vector<Prime> ps;
    std::optional<std::size_t> star_at;
    std::vector<StarFrame> frames;
    std::vector<Prime> inner_left;
    std::vector<Prime> inner_right;
    while (true) {
      const char c = peek();
      if (c == '*') {
        if (star || star_at) fail(pos_, "a star-word holds a single '*'");
        ++pos_;
        star_at = ps.size();
      } else if (ident_start(c)) {
        const std::size_t start = pos_;
        const std::string_view name = identifier();
        const Generator* gen = nullptr;
        const OperatorSymbol* op = resolve(name, start, gen);
        if (gen != nullptr) {
          ps.push_back(Prime::letter(*gen));
          continue;
        }
        if (peek() != '(') fail(pos_, "operator " + op->name + " needs arguments");
        expect('(');
        std::vector<std::vector<Prime>> args;
        std::optional<std::size_t> hole_arg;
        while (true) {
          std::optional<StarWord> inner;
          const bool had_star = star.has_value() || star_at.has_value();
          auto arg = star_sequence(inner);
          if (inner) {
            if (had_star) fail(pos_, "a star-word holds a single '*'");
            hole_arg = args.size();
            star = std::move(inner);
          }
          args.push_back(std::move(arg));
          if (peek() != ',') break;
          ++pos_;
        }
        expect(')');
        if (args.size() != op->arity) {
          fail(start, "operator " + op->name + " expects " + std::to_string(op->arity) + " argument(s), got " +
                          std::to_string(args.size()));
        }
        if (!hole_arg) {
          std::vector<OmegaWord> words;
          for (auto& a : args) {
            if (a.empty()) fail(start, "empty operator argument");
            words.emplace_back(std::move(a));
          }
          ps.push_back(Prime::apply(*op, std::move(words)));
          continue;
        }
        // The hole is inside this application: it becomes the outermost
        // frame of the star-word found in the argument.
        StarFrame frame;
        frame.op = *op;
        for (std::size_t k = 0; k < args.size(); ++k) {
          if (k == *hole_arg) continue;
          if (args[k].empty()) fail(start, "empty operator argument");
          (k < *hole_arg ? frame.before : frame.after).emplace_back(std::move(args[k]));
        }
        std::vector<StarFrame> path{std::move(frame)};
        for (const auto& f : star->frames()) path.push_back(f);
        frames = std::move(path);
        inner_left.assign(star->left().begin(), star->left().end());
        inner_right.assign(star->right().begin(), star->right().end());
        star_at = ps.size();
        star.reset();
      } else {
        break;
      }
    }
    if (star_at) {
      std::vector<Prime> before(ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(*star_at));
      std::vector<Prime> after(ps.begin() + static_cast<std::ptrdiff_t>(*star_at), ps.end());
      if (frames.empty()) {
        star = StarWord({}, std::move(before), std::move(after));
      } else {
        frames.front().left = std::move(before);
        frames.front().right = std::move(after);
        star = StarWord(std::move(frames), std::move(inner_left), std::move(inner_right));
      }
      return {};
    }
    return ps;
  }

  Tree tree() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '(') {
      ++pos_;
      Tree left = tree();
      Tree right = tree();
      expect(')');
      return Tree::bracket(std::move(left), std::move(right));
    }
    const std::string_view name = identifier();
    const Generator* gen = nullptr;
    const OperatorSymbol* op = resolve(name, start, gen);
    if (gen != nullptr) {
      // "(x2 (x2 x1))" is a bracket; only "x2(" is an application.
      if (pos_ < text_.size() && text_[pos_] == '(') fail(pos_, "generator " + gen->name + " takes no arguments");
      return Tree::leaf(*gen);
    }
    if (peek() != '(') fail(pos_, "operator " + op->name + " needs arguments");
    return Tree::op(*op, arguments<Tree>(*op, start, [this] { return tree(); }));
  }

  std::string_view digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(pos_, "expected a number");
    return text_.substr(start, pos_ - start);
  }

  Rational rational() {
    Rational r(std::string(digits()), 10);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const Rational d(std::string(digits()), 10);
      if (d == 0) fail(at, "zero denominator");
      r /= d;
    }
    return r;
  }

  bool at_lambda() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'l') return false;
    const std::size_t next = pos_ + 1;
    return next >= text_.size() || !(std::isalnum(static_cast<unsigned char>(text_[next])) || text_[next] == '_');
  }

  LiePoly term() {
    Coefficient scalar(1);
    std::optional<Tree> body;
    while (true) {
      const char c = peek();
      const std::size_t at = pos_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        scalar *= Coefficient(rational());
      } else if (at_lambda()) {
        ++pos_;
        std::size_t power = 1;
        if (peek() == '^') {
          ++pos_;
          power = std::stoul(std::string(digits()));
        }
        scalar *= Coefficient::lambda(power);
      } else if (c == '(' || ident_start(c)) {
        if (body) fail(at, "a term holds a single bracket tree");
        body = tree();
      } else {
        fail(at, "expected a number, l or a bracket tree");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    if (!body) fail(pos_, "a term needs a bracket tree");
    return scalar * from_tree(*body);
  }

  LiePoly poly() {
    if (peek() == '0') {
      const std::size_t save = pos_;
      ++pos_;
      if (at_end()) return {};
      pos_ = save;
    }
    LiePoly out;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      LiePoly t = term();
      if (negative) t = -t;
      out += t;
      const char c = peek();
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
        continue;
      }
      break;
    }
    return out;
  }

  // sum of terms r, r*l^k, l^k with optional signs
  Coefficient coefficient() {
    Coefficient out;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      Coefficient t(1);
      bool any = false;
      while (true) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          t *= Coefficient(rational());
        } else if (at_lambda()) {
          ++pos_;
          std::size_t power = 1;
          if (peek() == '^') {
            ++pos_;
            power = std::stoul(std::string(digits()));
          }
          t *= Coefficient::lambda(power);
        } else {
          fail(pos_, "expected a number or l");
        }
        any = true;
        if (peek() != '*') break;
        ++pos_;
      }
      if (any) out += negative ? -t : t;
      const char c = peek();
      if (c != '+' && c != '-') break;
      negative = c == '-';
      ++pos_;
    }
    finish();
    return out;
  }

  void finish() {
    if (!at_end()) fail(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  std::string_view text_;
  const Alphabet* alphabet_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

OmegaWord parse_word(std::string_view text, const Alphabet& alphabet) {
  Parser p(text, &alphabet);
  OmegaWord w = p.word();
  p.finish();
  return w;
}

Tree parse_tree(std::string_view text, const Alphabet& alphabet) {
  Parser p(text, &alphabet);
  Tree t = p.tree();
  p.finish();
  return t;
}

LiePoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  Parser p(text, &alphabet);
  LiePoly out = p.poly();
  p.finish();
  return out;
}

StarWord parse_star_word(std::string_view text, const Alphabet& alphabet) {
  Parser p(text, &alphabet);
  std::optional<StarWord> star;
  p.star_sequence(star);
  if (!star) p.fail(text.size(), "a star-word needs a '*'");
  p.finish();
  return *star;
}

Coefficient parse_coefficient(std::string_view text) {
  Parser p(text, nullptr);
  return p.coefficient();
}

Rational parse_rational(std::string_view text) {
  Parser p(text, nullptr);
  bool negative = false;
  if (p.peek() == '-') {
    negative = true;
    p.expect('-');
  }
  Rational r = p.rational();
  p.finish();
  return negative ? Rational(-r) : r;
}

std::vector<LiePoly> parse_rules(std::string_view text, const Alphabet& alphabet) {
  std::vector<LiePoly> out;
  std::size_t line_start = 0;
  for (std::size_t line = 1; line_start <= text.size(); ++line) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view body = text.substr(line_start, line_end - line_start);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (body.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        Parser p(body, &alphabet, line_start);
        out.push_back(p.poly());
        p.finish();
      } catch (const ParseError& e) {
        throw ParseError(e.offset(), "line " + std::to_string(line) + ": " +
                                         std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
      }
    }
    line_start = line_end + 1;
  }
  return out;
}

}  // namespace lieomega
