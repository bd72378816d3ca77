#include "affkm/text.hpp"

#include <cctype>
#include <numeric>

namespace affkm {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string exponent_text(int p, int m) {
  int g = std::gcd(p < 0 ? -p : p, m);
  if (g == 0) g = 1;
  int num = p / g;
  int den = m / g;
  if (den == 1) return num >= 0 ? "t^" + std::to_string(num) : "t^(" + std::to_string(num) + ")";
  return "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

namespace {

std::string coeff_prefix(const CycScalar& c) {
  if (c.is_one()) return "";
  if ((-c).is_one()) return "-";
  return c.str() + "*";
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

void append_loop(std::string& out, const LoopElt& x) {
  if (x.is_zero()) return;
  const ChevAlgebra* g = x.algebra();
  for (const auto& [b, p] : x.terms()) {
    for (const auto& [e, c] : p.terms()) {
      append_term(out, coeff_prefix(c) + g->basis_label(b) + "*" + exponent_text(e, x.order()));
    }
  }
}

}  // namespace

std::string to_text(const Laurent& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string t = exponent_text(e, p.order());
    append_term(out, coeff_prefix(c) + t);
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const LoopElt& x) {
  std::string out;
  append_loop(out, x);
  return out.empty() ? "0" : out;
}

std::string to_text(const AffineElt& x) {
  std::string out;
  append_loop(out, x.loop);
  if (!x.c.is_zero()) append_term(out, coeff_prefix(x.c) + "c");
  if (!x.d.is_zero()) append_term(out, coeff_prefix(x.d) + "d");
  return out.empty() ? "0" : out;
}

std::string to_text(const AutoGen& g) {
  auto join_ints = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (g.kind) {
    case GenKind::RootExp:
      return "rootexp(" + root_name(g.root) + ", " + to_text(g.u) + ")";
    case GenKind::Diagram: {
      std::vector<int> one_based;
      for (int p : g.diagram->perm()) one_based.push_back(p + 1);
      return "diagram(" + join_ints(one_based) + ")";
    }
    case GenKind::Cochar:
      return "cochar(" + join_ints(g.phi) + ")";
    case GenKind::Torus: {
      std::string s;
      for (std::size_t i = 0; i < g.torus.size(); ++i) s += (i ? "," : "") + g.torus[i].str();
      return "torus(" + s + ")";
    }
    case GenKind::Ring:
      return "ring(" + g.a.str() + "," + std::to_string(g.e) + ")";
    case GenKind::VShift:
      return "vshift(" + g.a.str() + ")";
  }
  return "?";
}

std::string to_text(const AutoWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.gens.size(); ++i) s += (i ? " . " : "") + to_text(w.gens[i]);
  if (s.empty()) s = "id";
  return s + " @ " + level_name(w.level);
}

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Dot, At, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::vector<Token> lex(const std::string& s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size()) {
        char c = s[j];
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || (c == '-' && j > i && s[j - 1] == '_');
        if (!ok) break;
        ++j;
      }
      out.push_back({Tok::Ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+':
        k = Tok::Plus;
        break;
      case '-':
        k = Tok::Minus;
        break;
      case '*':
        k = Tok::Star;
        break;
      case '/':
        k = Tok::Slash;
        break;
      case '^':
        k = Tok::Caret;
        break;
      case '(':
        k = Tok::LParen;
        break;
      case ')':
        k = Tok::RParen;
        break;
      case ',':
        k = Tok::Comma;
        break;
      case '.':
        k = Tok::Dot;
        break;
      case '@':
        k = Tok::At;
        break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({k, std::string(1, ch), col});
    ++i;
  }
  out.push_back({Tok::End, "", static_cast<int>(s.size()) + 1});
  return out;
}

constexpr long kScalarAtom = -1;
constexpr long kCAtom = -2;
constexpr long kDAtom = -3;

using Value = std::map<long, Laurent>;

class Parser {
 public:
  Parser(const ChevAlgebra* g, int m, const std::string& text, int line)
      : g_(g), m_(m), line_(line), toks_(lex(text, line)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) error(std::string("expected ") + what);
    return toks_[pos_++];
  }
  [[noreturn]] void error(const std::string& what) const {
    const Token& t = peek();
    std::string near = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(line_, t.column, what + " near " + near);
  }
  void expect_end() {
    if (peek().kind != Tok::End) error("unexpected trailing input");
  }
  int m() const { return m_; }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept(Tok::Plus)) {
        add(v, term(), false);
      } else if (accept(Tok::Minus)) {
        add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  long integer() {
    const Token& t = expect(Tok::Num, "integer");
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      throw ParseError(line_, t.column, "integer out of range");
    }
  }

  long signed_integer() {
    bool neg = false;
    while (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      if (accept(Tok::Minus)) {
        neg = !neg;
      } else {
        accept(Tok::Plus);
      }
    }
    long v = integer();
    return neg ? -v : v;
  }

  Laurent scalar_expr_laurent() {
    Value v = expr();
    for (const auto& [atom, p] : v) {
      if (atom != kScalarAtom) error("expected a scalar or Laurent polynomial");
    }
    auto it = v.find(kScalarAtom);
    return it == v.end() ? Laurent(m_) : it->second;
  }

  CycScalar scalar_expr() {
    int col = peek().column;
    Laurent p = scalar_expr_laurent();
    for (const auto& [e, c] : p.terms()) {
      if (e != 0) throw ParseError(line_, col, "expected a constant, found a power of t");
    }
    return p.coeff(0);
  }

  AffineElt to_affine(const Value& v, int col) const {
    AffineElt x(g_, m_);
    for (const auto& [atom, p] : v) {
      if (p.is_zero()) continue;
      if (atom == kScalarAtom) throw ParseError(line_, col, "scalar term without a basis element");
      if (atom == kCAtom || atom == kDAtom) {
        for (const auto& [e, c] : p.terms()) {
          if (e != 0) throw ParseError(line_, col, "c and d cannot carry powers of t");
        }
        (atom == kCAtom ? x.c : x.d) += p.coeff(0);
        continue;
      }
      x.loop.add(static_cast<std::size_t>(atom), p);
    }
    return x;
  }

 private:
  static void add(Value& v, const Value& w, bool negate) {
    for (const auto& [atom, p] : w) {
      auto it = v.find(atom);
      Laurent q = negate ? -p : p;
      if (it == v.end()) {
        v.emplace(atom, q);
      } else {
        it->second += q;
      }
    }
  }

  Value mul(const Value& a, const Value& b, int col) {
    auto has_atom = [](const Value& v) {
      for (const auto& [atom, p] : v) {
        if (atom != kScalarAtom && !p.is_zero()) return true;
      }
      return false;
    };
    if (has_atom(a) && has_atom(b)) throw ParseError(line_, col, "product of two basis elements");
    const Value& vec = has_atom(a) ? a : b;
    const Value& sca = has_atom(a) ? b : a;
    auto it = sca.find(kScalarAtom);
    Laurent f = it == sca.end() ? Laurent(m_) : it->second;
    Value r;
    for (const auto& [atom, p] : vec) r.emplace(atom, p * f);
    return r;
  }

  Value term() {
    bool neg = false;
    while (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      if (accept(Tok::Minus)) {
        neg = !neg;
      } else {
        accept(Tok::Plus);
      }
    }
    Value v = factor();
    while (true) {
      if (accept(Tok::Star)) {
        const int col = peek().column;
        v = mul(v, factor(), col);
      } else if (peek().kind == Tok::Slash) {
        ++pos_;
        const Token& t = peek();
        long den = integer();
        if (den == 0) throw ParseError(line_, t.column, "division by zero");
        Value inv;
        inv.emplace(kScalarAtom, Laurent(m_, CycScalar(m_, Rational(1, den))));
        v = mul(v, inv, t.column);
      } else {
        break;
      }
    }
    if (neg) {
      for (auto& [atom, p] : v) p = -p;
    }
    return v;
  }

  // Exponent of t, returned as a numerator over m.
  int exponent() {
    const Token& start = peek();
    Rational q;
    if (accept(Tok::LParen)) {
      long num = signed_integer();
      long den = 1;
      if (accept(Tok::Slash)) den = integer();
      if (den == 0) throw ParseError(line_, start.column, "zero denominator in exponent");
      expect(Tok::RParen, "')'");
      q = Rational(num, den);
    } else {
      q = Rational(signed_integer());
    }
    q.canonicalize();
    Rational p = q * m_;
    if (p.get_den() != 1) {
      throw ParseError(line_, start.column, "exponent is not a multiple of 1/" + std::to_string(m_));
    }
    return static_cast<int>(p.get_num().get_si());
  }

  Value factor() {
    const Token& t = peek();
    Value v;
    switch (t.kind) {
      case Tok::Num: {
        long n = integer();
        v.emplace(kScalarAtom, Laurent(m_, CycScalar(m_, n)));
        return v;
      }
      case Tok::LParen: {
        ++pos_;
        v = expr();
        expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::Ident:
        break;
      default:
        error("expected a number, z, t, a basis label or '('");
    }
    ++pos_;
    const std::string& name = t.text;
    if (name == "z") {
      v.emplace(kScalarAtom, Laurent(m_, CycScalar::zeta(m_)));
      return v;
    }
    if (name == "t" || name == "s") {
      int p = name == "t" ? m_ : 1;
      if (accept(Tok::Caret)) p = exponent() * (name == "t" ? 1 : m_);
      v.emplace(kScalarAtom, Laurent::monomial(p, CycScalar(m_, 1)));
      return v;
    }
    if (g_ != nullptr) {
      if (name == "c" || name == "d") {
        v.emplace(name == "c" ? kCAtom : kDAtom, Laurent(m_, CycScalar(m_, 1)));
        return v;
      }
      std::optional<std::size_t> b = g_->find_label(name);
      if (!b && g_->rank() == 1 && (name == "X_a" || name == "X_-a")) b = g_->find_label(name + "1");
      if (b) {
        v.emplace(static_cast<long>(*b), Laurent(m_, CycScalar(m_, 1)));
        return v;
      }
    }
    throw ParseError(line_, t.column, "unknown symbol '" + name + "'");
  }

  const ChevAlgebra* g_;
  int m_;
  int line_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  friend AutoWord affkm::parse_word(const LoopAlgebra& alg, const std::string& text, int line);
};

}  // namespace

AffineElt parse_affine(const ChevAlgebra* g, int m, const std::string& text, int line) {
  Parser p(g, m, text, line);
  int col = p.peek().column;
  Value v = p.expr();
  p.expect_end();
  return p.to_affine(v, col);
}

Laurent parse_laurent(int m, const std::string& text, int line) {
  Parser p(nullptr, m, text, line);
  Laurent r = p.scalar_expr_laurent();
  p.expect_end();
  return r;
}

CycScalar parse_scalar(int m, const std::string& text, int line) {
  Parser p(nullptr, m, text, line);
  CycScalar r = p.scalar_expr();
  p.expect_end();
  return r;
}

AutoWord parse_word(const LoopAlgebra& alg, const std::string& text, int line) {
  const ChevAlgebra& g = alg.g();
  const int m = alg.order();
  Parser p(nullptr, m, text, line);
  AutoWord w;
  w.level = Level::Hat;
  auto int_list = [&]() {
    std::vector<int> v;
    do {
      v.push_back(static_cast<int>(p.signed_integer()));
    } while (p.accept(Tok::Comma));
    return v;
  };
  auto require_rank = [&](const std::vector<int>& v, const Token& at) {
    if (static_cast<int>(v.size()) != g.rank()) {
      throw ParseError(line, at.column, "expected " + std::to_string(g.rank()) + " values, got " +
                                            std::to_string(v.size()));
    }
  };
  bool identity = false;
  if (p.peek().kind == Tok::Ident && p.peek().text == "id") {
    p.accept(Tok::Ident);
    identity = true;
  }
  while (!identity) {
    const Token name = p.expect(Tok::Ident, "generator name");
    p.expect(Tok::LParen, "'('");
    const Token args = p.peek();
    if (name.text == "rootexp") {
      bool neg = p.accept(Tok::Minus);
      const Token& r = p.expect(Tok::Ident, "root name such as a12");
      auto root = parse_root_name((neg ? "-" : "") + r.text, g.rank());
      if (!root || !g.root_index(*root)) throw ParseError(line, r.column, "'" + r.text + "' is not a root");
      p.expect(Tok::Comma, "','");
      Laurent u = p.scalar_expr_laurent();
      w.gens.push_back(AutoGen::root_exp(*root, u));
    } else if (name.text == "diagram") {
      std::vector<int> perm = int_list();
      require_rank(perm, args);
      for (int& x : perm) x -= 1;
      try {
        w.gens.push_back(AutoGen::make_diagram(DiagramAuto::build(alg.sigma()->algebra(), perm)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, args.column, e.what());
      }
    } else if (name.text == "cochar") {
      std::vector<int> phi = int_list();
      require_rank(phi, args);
      w.gens.push_back(AutoGen::cochar(phi));
    } else if (name.text == "torus") {
      std::vector<CycScalar> vals;
      do {
        vals.push_back(p.scalar_expr());
      } while (p.accept(Tok::Comma));
      if (static_cast<int>(vals.size()) != g.rank()) {
        throw ParseError(line, args.column, "expected " + std::to_string(g.rank()) + " torus values");
      }
      try {
        w.gens.push_back(AutoGen::make_torus(vals));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, args.column, e.what());
      }
    } else if (name.text == "ring") {
      CycScalar a = p.scalar_expr();
      p.expect(Tok::Comma, "','");
      int e = static_cast<int>(p.signed_integer());
      try {
        w.gens.push_back(AutoGen::ring(a, e));
      } catch (const std::invalid_argument& ex) {
        throw ParseError(line, args.column, ex.what());
      }
    } else if (name.text == "vshift") {
      w.gens.push_back(AutoGen::vshift(p.scalar_expr()));
    } else {
      throw ParseError(line, name.column, "unknown generator '" + name.text + "'");
    }
    p.expect(Tok::RParen, "')'");
    if (!p.accept(Tok::Dot)) break;
  }
  if (p.accept(Tok::At)) {
    const Token& lvl = p.expect(Tok::Ident, "level (loop, tilde or hat)");
    if (lvl.text == "loop") {
      w.level = Level::Loop;
    } else if (lvl.text == "tilde") {
      w.level = Level::Tilde;
    } else if (lvl.text == "hat") {
      w.level = Level::Hat;
    } else {
      throw ParseError(line, lvl.column, "unknown level '" + lvl.text + "'");
    }
  }
  p.expect_end();
  for (const auto& gen : w.gens) {
    if (gen.kind == GenKind::VShift && w.level != Level::Hat) {
      throw ParseError(line, 1, "vshift exists only at hat level");
    }
  }
  return w;
}

}  // namespace affkm
