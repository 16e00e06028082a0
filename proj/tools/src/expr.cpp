#include "selfsim/cli/expr.hpp"

#include "selfsim/error.hpp"

#include <cctype>
#include <set>

namespace selfsim::cli {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '"';
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(i_, w.size()) != w) return false;
    std::size_t j = i_ + w.size();
    if (j < s_.size() && ident_char(s_[j])) return false;
    i_ = j;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip();
    std::string near = i_ < s_.size() ? " near '" + std::string(s_.substr(i_, 12)) + "'" : " at end of input";
    throw ParseError(msg + near, 1, i_ + 1);
  }
  std::size_t column() {
    skip();
    return i_ + 1;
  }

  std::string ident() {
    skip();
    if (i_ >= s_.size() || !ident_start(s_[i_])) fail("expected an identifier");
    std::size_t j = i_;
    while (j < s_.size() && ident_char(s_[j])) ++j;
    std::string out(s_.substr(i_, j - i_));
    i_ = j;
    return out;
  }
  bool at_int() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if (c == '-' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) return true;
    return false;
  }
  BigInt integer() {
    skip();
    std::size_t j = i_;
    if (j < s_.size() && s_[j] == '-') ++j;
    std::size_t d = j;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == d) fail("expected an integer");
    BigInt v(std::string(s_.substr(i_, j - i_)));
    i_ = j;
    return v;
  }
  // id | int, returned as text
  std::string token() {
    if (at_int()) return integer().str();
    return ident();
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

// Lowering errors carry the column of the atom that caused them.
template <class F>
auto located(std::size_t col, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw SemanticError(e.what(), 1, col);
  }
}

// Value plus the degrees |alpha| - |beta| of its summands as written.
struct Val {
  Element e;
  std::set<long> deg;
};

std::set<long> sumset(const std::set<long>& a, const std::set<long>& b) {
  std::set<long> out;
  for (long x : a)
    for (long y : b) out.insert(x + y);
  return out;
}

class ExprParser {
 public:
  ExprParser(const Algebra& alg, std::string_view text) : alg_(alg), c_(text) {}

  Val run() {
    Val v = expr();
    if (!c_.at_end()) c_.fail("unexpected input");
    return v;
  }

 private:
  Val expr() {
    bool neg = c_.accept('-');
    if (!neg) c_.accept('+');
    Val acc = term();
    if (neg) acc.e = -acc.e;
    while (true) {
      bool plus = c_.accept('+');
      if (!plus && !c_.accept('-')) return acc;
      Val t = term();
      acc.e = plus ? acc.e + t.e : acc.e - t.e;
      acc.deg.insert(t.deg.begin(), t.deg.end());
    }
  }

  Val term() {
    if (c_.at_int()) {
      BigInt num = c_.integer();
      Rational q(num);
      if (c_.accept('/')) {
        BigInt den = c_.integer();
        if (den == 0) c_.fail("zero denominator");
        q = Rational(num, den);
      }
      Rational scaled = located(c_.column(), [&] { return alg_.ring().normalize(q); });
      if (!c_.accept('*')) return scaled == 0 ? Val{alg_.zero(), {}} : Val{scalar(scaled), {0}};
      Val p = product();
      p.e = scaled * p.e;
      if (scaled == 0) p.deg.clear();
      return p;
    }
    return product();
  }

  // A nonzero bare scalar means c * sum_v p_v (E is finite).
  Element scalar(const Rational& q) { return q * alg_.u(alg_.group().identity()); }

  Val product() {
    Val acc = factor();
    while (c_.accept('*')) {
      Val f = factor();
      acc.e = acc.e * f.e;
      acc.deg = sumset(acc.deg, f.deg);
    }
    return acc;
  }

  GroupElem gelem() {
    std::size_t col = c_.column();
    std::string t = c_.token();
    return located(col, [&] { return alg_.group().elem(t); });
  }

  Path path() {
    std::size_t col = c_.column();
    std::vector<std::string> ids{c_.ident()};
    while (c_.accept('.')) ids.push_back(c_.ident());
    const Graph& G = alg_.graph();
    return located(col, [&] {
      if (ids.size() == 1 && G.find_vertex(ids[0])) return Path::vertex(*G.find_vertex(ids[0]));
      std::vector<EdgeId> es;
      for (const auto& id : ids) es.push_back(G.edge_by_name(id));
      return G.path(es);
    });
  }

  Val factor() {
    std::size_t col = c_.column();
    if (c_.accept_word("p")) {
      c_.expect('(');
      std::size_t vcol = c_.column();
      std::string v = c_.ident();
      c_.expect(',');
      GroupElem g = gelem();
      c_.expect(')');
      return {located(vcol, [&] { return alg_.p(alg_.graph().vertex_by_name(v), g); }), {0}};
    }
    if (c_.accept_word("s")) {
      c_.expect('(');
      Path a = path();
      c_.expect(',');
      GroupElem g = gelem();
      c_.expect(')');
      return {located(col, [&] { return alg_.s(a, g); }), {static_cast<long>(a.length())}};
    }
    if (c_.accept_word("adj")) {
      c_.expect('(');
      Val v = expr();
      c_.expect(')');
      std::set<long> neg;
      for (long d : v.deg) neg.insert(-d);
      return {adj(v.e), neg};
    }
    if (c_.accept('(')) {
      Val v = expr();
      c_.expect(')');
      return v;
    }
    c_.fail("expected p(...), s(...), adj(...) or '('");
  }

  const Algebra& alg_;
  Cursor c_;
};

std::string path_text(const Graph& G, const Path& p) { return G.format(p); }

}  // namespace

Element parse_expr(const Algebra& alg, std::string_view text) { return ExprParser(alg, text).run().e; }

ParsedExpr parse_expr_graded(const Algebra& alg, std::string_view text) {
  Val v = ExprParser(alg, text).run();
  return {std::move(v.e), std::move(v.deg)};
}

std::string print_expr(const Algebra& alg, const Element& a) {
  if (a.empty()) return "0";
  const Graph& G = alg.graph();
  const Group& grp = alg.group();
  std::string out;
  bool first = true;
  for (const auto& [t, c] : a.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    if (t.alpha().is_vertex() && t.beta().is_vertex()) {
      out += "p(" + G.vertex_name(t.alpha().range()) + "," + grp.format(t.g()) + ")";
    } else {
      out += "s(" + path_text(G, t.alpha()) + "," + grp.format(t.g()) + ")";
      if (!t.beta().is_vertex()) out += "*adj(s(" + path_text(G, t.beta()) + "," + grp.format(grp.identity()) + "))";
    }
  }
  return out;
}

GermPoint parse_germ(const SelfSimilarAction& act, std::string_view text) {
  const Graph& G = act.graph();
  const Group& grp = act.group();
  Cursor c(text);
  auto path_lit = [&]() {
    std::size_t col = c.column();
    std::vector<std::string> ids{c.ident()};
    while (c.accept('.')) ids.push_back(c.ident());
    return located(col, [&] {
      if (ids.size() == 1 && G.find_vertex(ids[0])) return Path::vertex(*G.find_vertex(ids[0]));
      std::vector<EdgeId> es;
      for (const auto& id : ids) es.push_back(G.edge_by_name(id));
      return G.path(es);
    });
  };
  // "germ (alpha, g, beta) : mu (rho)^inf" writes x = beta mu rho^inf;
  // "[(alpha, g, beta), x]" writes x in full.
  const bool relative = c.accept_word("germ");
  if (!relative) c.expect('[');
  c.expect('(');
  std::size_t tcol = c.column();
  Path alpha = path_lit();
  c.expect(',');
  std::size_t gcol = c.column();
  std::string gt = c.token();
  GroupElem g = located(gcol, [&] { return grp.elem(gt); });
  c.expect(',');
  Path beta = path_lit();
  c.expect(')');
  c.expect(relative ? ':' : ',');
  std::size_t xcol = c.column();
  std::optional<Path> mu;
  if (c.peek() != '(') mu = path_lit();
  c.expect('(');
  Path rho = path_lit();
  c.expect(')');
  c.expect('^');
  if (!c.accept_word("inf")) c.fail("expected 'inf'");
  if (!relative) c.expect(']');
  if (!c.at_end()) c.fail("unexpected input");
  STriple s = located(tcol, [&] { return STriple(act, alpha, g, beta); });
  return located(xcol, [&] {
    Path transient = mu ? *mu : Path::vertex(rho.range());
    if (relative) transient = mu ? G.concat(beta, *mu) : beta;
    EvPath x = EvPath::make(G, transient, rho);
    return make_germ(act, s, x);
  });
}

}  // namespace selfsim::cli
