#include "postlie/syntax.hpp"

#include <cctype>
#include <functional>

namespace postlie {

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, std::size_t components) : s_(s), components_(components) {}

  std::size_t components() const { return components_; }
  std::size_t pos() const { return pos_; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() {
    skip();
    return pos_ >= s_.size();
  }
  bool peek(std::string_view lit) {
    skip();
    return s_.substr(pos_, lit.size()) == lit;
  }
  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  void finish() {
    if (!eof()) fail("unexpected input");
  }

  unsigned number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  std::size_t index() {
    std::size_t pos = pos_;
    unsigned i = number();
    if (i >= components_) throw DimensionError("index " + std::to_string(i) + " out of range at position " +
                                               std::to_string(pos));
    return i;
  }

  DecVec nvec() {
    std::size_t start = pos_;
    expect("(");
    std::vector<int> v{static_cast<int>(number())};
    while (accept(",")) v.push_back(static_cast<int>(number()));
    expect(")");
    if (v.size() != components_)
      throw DimensionError("expected " + std::to_string(components_) + " components at position " +
                           std::to_string(start));
    DecVec out(components_);
    for (std::size_t i = 0; i < v.size(); ++i) out = out.with(i, v[i]);
    return out;
  }

  /// "rational *" if present.
  std::optional<Coefficient> coefficient() {
    skip();
    std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) ++p;
    std::size_t digits = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p == digits) return std::nullopt;
    if (p < s_.size() && s_[p] == '/') {
      ++p;
      while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    }
    std::string_view num = s_.substr(start, p - start);
    pos_ = p;
    if (!accept("*")) {
      pos_ = start;
      return std::nullopt;
    }
    try {
      return parse_coefficient(num);
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

 private:
  std::string_view s_;
  std::size_t components_;
  std::size_t pos_ = 0;
};

// Sum of terms; `term` parses one term without its coefficient.
template <class B, class F>
LinComb<B> parse_sum(Cursor& c, F&& term) {
  LinComb<B> out;
  do {
    auto k = c.coefficient();
    if (!k && c.peek("0")) {
      c.accept("0");
      continue;
    }
    out.add(term(c), k.value_or(1));
  } while (c.accept("+"));
  return out;
}

bool at_tree_factor(Cursor& c) { return c.peek("X") || c.peek("I[") || c.peek("1"); }

TreeComb tree_expr(Cursor& c);

TreeComb tree_factor(Cursor& c) {
  std::size_t d = c.components();
  if (c.accept("Xi")) return TreeComb(DecoratedTree::node(DecVec(d), 1));
  if (c.accept("X_")) return TreeComb(DecoratedTree::node(DecVec::unit(d, c.index())));
  if (c.accept("X^")) return TreeComb(DecoratedTree::node(c.nvec()));
  if (c.accept("1")) return TreeComb(DecoratedTree::unit(d));
  if (c.accept("I[")) {
    DecVec a = c.nvec();
    c.expect("]");
    c.expect("(");
    TreeComb inner = tree_expr(c);
    c.expect(")");
    return linear(inner, [&](const DecoratedTree& t) { return TreeComb(planted(a, t)); });
  }
  c.fail("expected a tree factor");
}

TreeComb tree_term(Cursor& c) {
  TreeComb acc = tree_factor(c);
  while (at_tree_factor(c)) {
    TreeComb f = tree_factor(c);
    acc = bilinear(acc, f, [](const DecoratedTree& a, const DecoratedTree& b) {
      return TreeComb(tree_product(a, b));
    });
  }
  return acc;
}

TreeComb tree_expr(Cursor& c) { return parse_sum<DecoratedTree>(c, tree_term); }

// Generator read off a tree: planted -> I_a, X^{e_i} -> X_i, unit -> nullopt.
std::optional<VBasis> as_generator(const DecoratedTree& t, std::size_t pos) {
  if (is_planted(t)) return VBasis(to_planted(t));
  if (t.noise() == 0 && t.branches().empty()) {
    if (t.dec().is_zero()) return std::nullopt;
    if (t.dec().total() == 1)
      for (std::size_t i = 0; i < t.components(); ++i)
        if (t.dec()[i] == 1) return VBasis(XLetter{i});
  }
  throw ParseError("'" + format(t) + "' is neither X_i nor a planted tree", pos);
}

VComb as_v_comb(const TreeComb& x, std::size_t pos) {
  VComb out;
  for (const auto& [t, c] : x) {
    auto g = as_generator(t, pos);
    if (!g) throw ParseError("the unit is not a generator", pos);
    out.add(*g, c);
  }
  return out;
}

// One word letter: a generator combination, or nullopt for the unit.
std::optional<VComb> tree_letter(Cursor& c) {
  std::size_t pos = c.pos();
  TreeComb x;
  if (c.accept("(")) {
    x = tree_expr(c);
    c.expect(")");
  } else {
    x = tree_term(c);
  }
  if (x.size() == 1 && x.begin()->second == 1 && !as_generator(x.begin()->first, pos)) return std::nullopt;
  return as_v_comb(x, pos);
}

std::string dec_text(const DecVec& v) { return v.to_string(); }

// Multi-index pieces.
bool at_mono_factor(Cursor& c) { return c.peek("z") || c.peek("1"); }

MIMonomial mono_factor(Cursor& c) {
  if (c.accept("1")) return MIMonomial();
  c.expect("z");
  MIMonomial base;
  if (c.accept("_")) {
    base = MIMonomial::arity(c.number());
  } else {
    std::size_t pos = c.pos();
    DecVec n = c.nvec();
    if (n.is_zero()) throw ParseError("z(n) requires n != 0", pos);
    base = MIMonomial::label(n);
  }
  if (c.accept("^")) {
    unsigned p = c.number();
    MIMonomial m;
    for (unsigned k = 0; k < p; ++k) m = m * base;
    return m;
  }
  return base;
}

MIMonomial mono(Cursor& c) {
  MIMonomial m;
  while (at_mono_factor(c)) m = m * mono_factor(c);
  return m;
}

MIGenerator mi_generator(Cursor& c) {
  MIMonomial m = mono(c);
  if (c.accept("D")) return MIGenerator(Deriv{m, c.nvec()});
  if (c.accept("d_")) {
    if (!m.is_one()) c.fail("∂_i takes no monomial coefficient");
    return MIGenerator(XLetter{c.index()});
  }
  c.fail("expected D(n) or d_i");
}

T0Tree t0_tree(Cursor& c) {
  std::size_t d = c.components();
  std::vector<DecVec> monomials;
  std::vector<T0Tree> children;
  bool any = false;
  while (true) {
    if (c.accept("Xi") || c.accept("1")) {
    } else if (c.accept("X^")) {
      std::size_t pos = c.pos();
      DecVec m = c.nvec();
      if (m.is_zero()) throw ParseError("X^0 is not a polynomial factor", pos);
      monomials.push_back(m);
    } else if (c.accept("X_")) {
      monomials.push_back(DecVec::unit(d, c.index()));
    } else if (c.accept("I(")) {
      children.push_back(t0_tree(c));
      c.expect(")");
    } else {
      break;
    }
    any = true;
  }
  if (!any) c.fail("expected a T0 tree");
  return T0Tree::node(d, std::move(monomials), std::move(children));
}

V0Basis v0_generator(Cursor& c) {
  if (c.accept("X_")) return V0Basis(XLetter{c.index()});
  c.expect("I[");
  DecVec a = c.nvec();
  c.expect("]");
  c.expect("(");
  T0Tree t = t0_tree(c);
  c.expect(")");
  return V0Basis(T0Planted{a, t});
}

PlanarTree planar_tree(Cursor& c) {
  std::size_t d = c.components();
  PlanarTree t;
  bool any = false;
  while (true) {
    if (c.accept("Xi")) {
      ++t.noise;
    } else if (c.accept("1")) {
    } else if (c.accept("X_")) {
      t.slots.push_back(PlanarSlot::x(c.index()));
    } else if (c.accept("X^")) {
      DecVec m = c.nvec();
      for (std::size_t i = 0; i < d; ++i)
        for (int k = 0; k < m[i]; ++k) t.slots.push_back(PlanarSlot::x(i));
    } else if (c.accept("I[")) {
      DecVec a = c.nvec();
      c.expect("]");
      c.expect("(");
      PlanarTree child = planar_tree(c);
      c.expect(")");
      t.slots.push_back(PlanarSlot::kernel(a, std::move(child)));
    } else {
      break;
    }
    any = true;
  }
  if (!any) c.fail("expected a planar tree");
  return t;
}

template <class Env, class LetterFn>
LinComb<typename Env::Basis> parse_env_sum(Cursor& c, const Env& env, LetterFn&& letter) {
  using Element = LinComb<typename Env::Basis>;
  return parse_sum<typename Env::Basis>(c, [&](Cursor& cur) {
    Element word = env.unit();
    do {
      if (auto g = letter(cur)) word = env.mul(word, env.element(*g));
    } while (cur.accept(";"));
    return word;
  });
}

}  // namespace

TreeComb parse_tree_comb(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  TreeComb x = tree_expr(c);
  c.finish();
  return x;
}

DecoratedTree parse_tree(std::string_view text, std::size_t components) {
  TreeComb x = parse_tree_comb(text, components);
  if (x.size() != 1 || x.begin()->second != 1) throw ParseError("expected a single tree", 0);
  return x.begin()->first;
}

std::string format(const DecoratedTree& t) {
  std::string out;
  auto put = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (!t.dec().is_zero()) put("X^" + dec_text(t.dec()));
  for (unsigned k = 0; k < t.noise(); ++k) put("Xi");
  for (const auto& br : t.branches()) put("I[" + dec_text(br.edge) + "](" + format(br.child) + ")");
  return out.empty() ? "1" : out;
}

std::string format(const TreeComb& x) {
  return format_comb(x, [](const DecoratedTree& t) { return format(t); });
}

VComb parse_v_comb(std::string_view text, std::size_t components) {
  return as_v_comb(parse_tree_comb(text, components), 0);
}

std::string format(const VBasis& v) {
  if (const auto* x = std::get_if<XLetter>(&v)) return "X_" + std::to_string(x->i);
  return format(to_tree(std::get<Planted>(v)));
}

std::string format(const VComb& x) {
  return format_comb(x, [](const VBasis& v) { return format(v); });
}

TreeEnvElement parse_tree_env(std::string_view text, const TreeEnvelope& env) {
  Cursor c(text, env.algebra().x_count());
  auto x = parse_env_sum(c, env, tree_letter);
  c.finish();
  return x;
}

std::vector<VComb> parse_tree_word(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  std::vector<VComb> out;
  do {
    if (auto g = tree_letter(c)) out.push_back(*g);
  } while (c.accept(";"));
  c.finish();
  return out;
}

namespace {

template <class Basis, class LetterFmt>
std::string format_word(const Basis& b, LetterFmt&& fmt) {
  std::string out;
  auto put = [&](const std::string& s) {
    if (!out.empty()) out += " ; ";
    out += s;
  };
  for (std::size_t i = 0; i < b.xexp.size(); ++i)
    for (unsigned k = 0; k < b.xexp[i]; ++k) put(fmt(XLetter{i}));
  for (const auto& g : b.forest) put(fmt(g));
  return out.empty() ? "1" : out;
}

}  // namespace

std::string format(const TreeEnvBasis& b) {
  return format_word(b, [](const auto& g) { return format(VBasis(g)); });
}

std::string format(const TreeEnvElement& x) {
  return format_comb(x, [](const TreeEnvBasis& b) { return format(b); });
}

MIPolynomial parse_mi_poly(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  auto x = parse_sum<MIMonomial>(c, [](Cursor& cur) {
    if (!at_mono_factor(cur)) cur.fail("expected a monomial");
    return MIPolynomial(mono(cur));
  });
  c.finish();
  return x;
}

MIComb parse_mi_comb(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  auto x = parse_sum<MIGenerator>(c, [](Cursor& cur) { return MIComb(mi_generator(cur)); });
  c.finish();
  return x;
}

MIEnvElement parse_mi_env(std::string_view text, const MIEnvelope& env) {
  Cursor c(text, env.algebra().x_count());
  auto x = parse_env_sum(c, env, [](Cursor& cur) -> std::optional<MIComb> {
    if (cur.accept("(")) {
      auto inner = parse_sum<MIGenerator>(cur, [](Cursor& k) { return MIComb(mi_generator(k)); });
      cur.expect(")");
      return inner;
    }
    if (cur.accept("1") && (cur.eof() || cur.peek(";") || cur.peek("+"))) return std::nullopt;
    return MIComb(mi_generator(cur));
  });
  c.finish();
  return x;
}

std::string format(const MIMonomial& m) {
  std::string out;
  auto put = [&](const std::string& s, unsigned p) {
    if (!out.empty()) out += ' ';
    out += s;
    if (p != 1) out += "^" + std::to_string(p);
  };
  for (const auto& [k, p] : m.arities()) put("z_" + std::to_string(k), p);
  for (const auto& [n, p] : m.labels()) put("z" + dec_text(n), p);
  return out.empty() ? "1" : out;
}

std::string format(const MIPolynomial& p) {
  return format_comb(p, [](const MIMonomial& m) { return format(m); });
}

std::string format(const MIGenerator& g) {
  if (const auto* x = std::get_if<XLetter>(&g)) return "d_" + std::to_string(x->i);
  const auto& d = std::get<Deriv>(g);
  std::string op = "D" + dec_text(d.n);
  return d.gamma.is_one() ? op : format(d.gamma) + " " + op;
}

std::string format(const MIComb& x) {
  return format_comb(x, [](const MIGenerator& g) { return format(g); });
}

std::string format(const MIEnvBasis& b) {
  return format_word(b, [](const auto& g) { return format(MIGenerator(g)); });
}

std::string format(const MIEnvElement& x) {
  return format_comb(x, [](const MIEnvBasis& b) { return format(b); });
}

DecVec parse_decvec(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  DecVec n = c.nvec();
  c.finish();
  return n;
}

T0Tree parse_t0_tree(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  T0Tree t = t0_tree(c);
  c.finish();
  return t;
}

V0Comb parse_v0_comb(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  auto x = parse_sum<V0Basis>(c, [](Cursor& cur) { return V0Comb(v0_generator(cur)); });
  c.finish();
  return x;
}

LinComb<EnvBasis<T0Planted>> parse_t0_env(std::string_view text, const T0Envelope& env) {
  Cursor c(text, env.algebra().x_count());
  auto x = parse_env_sum(c, env, [](Cursor& cur) -> std::optional<V0Comb> {
    if (cur.accept("(")) {
      auto inner = parse_sum<V0Basis>(cur, [](Cursor& k) { return V0Comb(v0_generator(k)); });
      cur.expect(")");
      return inner;
    }
    if (cur.peek("1")) {
      cur.accept("1");
      return std::nullopt;
    }
    return V0Comb(v0_generator(cur));
  });
  c.finish();
  return x;
}

std::string format(const T0Tree& t) {
  std::string out = "Xi";
  for (const auto& m : t.monomials()) out += " X^" + dec_text(m);
  for (const auto& ch : t.children()) out += " I(" + format(ch) + ")";
  return out;
}

std::string format(const V0Basis& v) {
  if (const auto* x = std::get_if<XLetter>(&v)) return "X_" + std::to_string(x->i);
  const auto& p = std::get<T0Planted>(v);
  return "I[" + dec_text(p.a) + "](" + format(p.tree) + ")";
}

std::string format(const V0Comb& x) {
  return format_comb(x, [](const V0Basis& v) { return format(v); });
}

std::string format(const T0Comb& x) {
  return format_comb(x, [](const T0Tree& t) { return format(t); });
}

PlanarTree parse_planar(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  PlanarTree t = planar_tree(c);
  c.finish();
  return t;
}

PlanarV parse_planar_v(std::string_view text, std::size_t components) {
  Cursor c(text, components);
  PlanarV out;
  if (c.accept("X_")) {
    out = PlanarV(XLetter{c.index()});
  } else {
    c.expect("I[");
    DecVec a = c.nvec();
    c.expect("]");
    c.expect("(");
    PlanarTree t = planar_tree(c);
    c.expect(")");
    out = PlanarV(PlanarPlanted{a, std::move(t)});
  }
  c.finish();
  return out;
}

std::string format(const PlanarTree& t) {
  std::string out;
  auto put = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (unsigned k = 0; k < t.noise; ++k) put("Xi");
  for (const auto& s : t.slots)
    put(s.is_x ? "X_" + std::to_string(s.i) : "I[" + dec_text(s.a) + "](" + format(s.child) + ")");
  return out.empty() ? "1" : out;
}

std::string format(const PlanarV& v) {
  if (const auto* x = std::get_if<XLetter>(&v)) return "X_" + std::to_string(x->i);
  const auto& p = std::get<PlanarPlanted>(v);
  return "I[" + dec_text(p.a) + "](" + format(p.tree) + ")";
}

std::string format(const PlanarComb& x) {
  return format_comb(x, [](const PlanarTree& t) { return format(t); });
}

std::string format(const PlanarVComb& x) {
  return format_comb(x, [](const PlanarV& v) { return format(v); });
}

}  // namespace postlie
