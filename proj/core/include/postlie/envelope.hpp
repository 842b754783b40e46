#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "postlie/lincomb.hpp"

namespace postlie {

/// The generator X_i of the commuting part.
struct XLetter {
  std::size_t i = 0;
  friend bool operator==(const XLetter&, const XLetter&) = default;
  friend auto operator<=>(const XLetter&, const XLetter&) = default;
};

/// Basis element of a two-sorted post-Lie algebra: an X_i or an element of
/// the abelian part. X letters sort first.
template <class A>
using Generator = std::variant<XLetter, A>;

/// PBW word X^m g_1 ... g_r with the g_j sorted. Both sorts commute among
/// themselves; only [g, X_i]_0 is nonzero.
template <class A>
struct EnvBasis {
  std::vector<unsigned> xexp;
  std::vector<A> forest;

  std::size_t length() const {
    std::size_t n = forest.size();
    for (auto e : xexp) n += e;
    return n;
  }
  bool is_unit() const { return length() == 0; }

  friend bool operator==(const EnvBasis&, const EnvBasis&) = default;
  friend std::strong_ordering operator<=>(const EnvBasis& a, const EnvBasis& b) {
    if (auto c = a.xexp <=> b.xexp; c != 0) return c;
    return std::lexicographical_compare_three_way(a.forest.begin(), a.forest.end(), b.forest.begin(),
                                                  b.forest.end());
  }
};

/// Requirements on Algebra:
///   using Abelian = ...;                                      (totally ordered)
///   std::size_t x_count() const;
///   LinComb<Abelian> bracket_with_x(const Abelian& g, std::size_t i) const;   [g, X_i]_0
///   LinComb<Generator<Abelian>> post(const Generator<Abelian>&, const Generator<Abelian>&) const;
///
/// Envelope realizes U(g_0) in PBW normal form together with the extension of
/// the post-Lie product to it and the resulting product *.
template <class Algebra>
class Envelope {
 public:
  using A = typename Algebra::Abelian;
  using Gen = Generator<A>;
  using GenComb = LinComb<Gen>;
  using Basis = EnvBasis<A>;
  using Element = LinComb<Basis>;
  using Tensor = LinComb<std::pair<Basis, Basis>>;
  using Word = std::vector<Gen>;

  explicit Envelope(Algebra alg) : alg_(std::move(alg)) {}

  const Algebra& algebra() const { return alg_; }

  Basis unit_basis() const { return Basis{std::vector<unsigned>(alg_.x_count(), 0), {}}; }
  Element unit() const { return Element(unit_basis()); }

  Basis basis_of(const Gen& g) const {
    Basis b = unit_basis();
    if (auto x = std::get_if<XLetter>(&g)) {
      if (x->i >= b.xexp.size()) throw std::out_of_range("X index out of range");
      ++b.xexp[x->i];
    } else {
      b.forest.push_back(std::get<A>(g));
    }
    return b;
  }
  Element element(const Gen& g) const { return Element(basis_of(g)); }
  Element element(const GenComb& x) const {
    Element out;
    for (const auto& [g, c] : x) out.add(basis_of(g), c);
    return out;
  }

  /// Letters of a PBW word in order.
  Word letters(const Basis& b) const {
    Word w;
    for (std::size_t i = 0; i < b.xexp.size(); ++i)
      for (unsigned k = 0; k < b.xexp[i]; ++k) w.push_back(XLetter{i});
    for (const auto& g : b.forest) w.push_back(g);
    return w;
  }

  /// [x, y]_0 on generators.
  GenComb bracket0(const Gen& x, const Gen& y) const {
    GenComb out;
    auto lift = [&](const LinComb<A>& v, int sign) {
      for (const auto& [g, c] : v) out.add(Gen(g), c * sign);
    };
    if (auto xi = std::get_if<XLetter>(&x)) {
      if (auto ya = std::get_if<A>(&y)) lift(alg_.bracket_with_x(*ya, xi->i), -1);
    } else if (auto yi = std::get_if<XLetter>(&y)) {
      lift(alg_.bracket_with_x(std::get<A>(x), yi->i), 1);
    }
    return out;
  }
  GenComb bracket0(const GenComb& x, const GenComb& y) const {
    return bilinear(x, y, [&](const Gen& a, const Gen& b) { return bracket0(a, b); });
  }

  GenComb post(const Gen& x, const Gen& y) const { return alg_.post(x, y); }
  GenComb post(const GenComb& x, const GenComb& y) const {
    return bilinear(x, y, [&](const Gen& a, const Gen& b) { return alg_.post(a, b); });
  }

  /// [[x, y]] = [x, y]_0 + x ▷ y - y ▷ x.
  GenComb derived_bracket(const Gen& x, const Gen& y) const {
    return bracket0(x, y) + post(x, y) - post(y, x);
  }
  GenComb derived_bracket(const GenComb& x, const GenComb& y) const {
    return bilinear(x, y, [&](const Gen& a, const Gen& b) { return derived_bracket(a, b); });
  }

  /// Concatenation product, renormalized.
  Element mul(const Basis& l, const Basis& r) const {
    Element out;
    for (const auto& [t, c] : forest_times_x(l.forest, r.xexp)) {
      Basis b = t;
      for (std::size_t i = 0; i < b.xexp.size(); ++i) b.xexp[i] += l.xexp[i];
      b.forest.insert(b.forest.end(), r.forest.begin(), r.forest.end());
      std::sort(b.forest.begin(), b.forest.end());
      out.add(b, c);
    }
    return out;
  }
  Element mul(const Element& x, const Element& y) const {
    return bilinear(x, y, [&](const Basis& a, const Basis& b) { return mul(a, b); });
  }

  Element normal_form(const Word& word) const {
    Element out = unit();
    for (const auto& g : word) out = mul(out, element(g));
    return out;
  }

  Tensor coproduct(const Basis& b) const {
    // Choose a sub-word for the left factor; the multiplicity of each choice
    // is the product of binomials over repeated letters.
    std::vector<std::pair<Basis, Coefficient>> parts{{unit_basis(), 1}};
    for (std::size_t i = 0; i < b.xexp.size(); ++i) {
      std::vector<std::pair<Basis, Coefficient>> next;
      for (const auto& [p, c] : parts)
        for (unsigned k = 0; k <= b.xexp[i]; ++k) {
          Basis q = p;
          q.xexp[i] = k;
          next.push_back({q, c * binomial(b.xexp[i], k)});
        }
      parts = std::move(next);
    }
    for (std::size_t j = 0; j < b.forest.size();) {
      std::size_t e = j;
      while (e < b.forest.size() && b.forest[e] == b.forest[j]) ++e;
      unsigned mult = static_cast<unsigned>(e - j);
      std::vector<std::pair<Basis, Coefficient>> next;
      for (const auto& [p, c] : parts)
        for (unsigned k = 0; k <= mult; ++k) {
          Basis q = p;
          q.forest.insert(q.forest.end(), k, b.forest[j]);
          next.push_back({q, c * binomial(mult, k)});
        }
      parts = std::move(next);
      j = e;
    }
    Tensor out;
    for (const auto& [left, c] : parts) out.add({left, complement(b, left)}, c);
    return out;
  }
  Tensor coproduct(const Element& x) const {
    Tensor out;
    for (const auto& [b, c] : x) out.add(coproduct(b), c);
    return out;
  }

  /// Extension of ▷ to the envelope.
  Element triangle(const Basis& a, const Basis& b) const {
    if (a.is_unit()) return Element(b);
    if (b.is_unit()) return {};
    auto key = std::make_pair(a, b);
    {
      std::lock_guard lock(mutex_);
      if (auto it = triangle_cache_.find(key); it != triangle_cache_.end()) return it->second;
    }
    Element out;
    Word wa = letters(a);
    Word wb = letters(b);
    if (wb.size() == 1) {
      if (wa.size() == 1) {
        out = element(alg_.post(wa[0], wb[0]));
      } else {
        Basis x = basis_of(wa[0]);
        Basis rest = tail(a);
        out = triangle(Element(x), triangle(rest, b)) - triangle(triangle(x, rest), Element(b));
      }
    } else {
      Basis y = basis_of(wb[0]);
      Basis rest = tail(b);
      for (const auto& [pair, c] : coproduct(a))
        out.add(mul(triangle(pair.first, y), triangle(pair.second, rest)), c);
    }
    std::lock_guard lock(mutex_);
    triangle_cache_.emplace(std::move(key), out);
    return out;
  }
  Element triangle(const Element& x, const Element& y) const {
    return bilinear(x, y, [&](const Basis& a, const Basis& b) { return triangle(a, b); });
  }

  /// A * B = sum A(1) (A(2) ▷ B).
  Element star(const Basis& a, const Basis& b) const {
    Element out;
    for (const auto& [pair, c] : coproduct(a)) out.add(mul(Element(pair.first), triangle(pair.second, b)), c);
    return out;
  }
  Element star(const Element& x, const Element& y) const {
    return bilinear(x, y, [&](const Basis& a, const Basis& b) { return star(a, b); });
  }

  Tensor star(const Tensor& x, const Tensor& y) const {
    Tensor out;
    for (const auto& [p, c] : x)
      for (const auto& [q, d] : y) {
        Element l = star(p.first, q.first);
        Element r = star(p.second, q.second);
        for (const auto& [lb, lc] : l)
          for (const auto& [rb, rc] : r) out.add({lb, rb}, c * d * lc * rc);
      }
    return out;
  }

  /// rho(x)(A) = x ▷ A + x A.
  Element induced_rep(const Gen& x, const Element& a) const {
    Element gx = element(x);
    return triangle(gx, a) + mul(gx, a);
  }
  Element induced_rep(const GenComb& x, const Element& a) const {
    Element out;
    for (const auto& [g, c] : x) out.add(induced_rep(g, a), c);
    return out;
  }

  struct PostLieReport {
    GenComb ident1_lhs, ident1_rhs, ident2_lhs, ident2_rhs;
    bool ident1() const { return ident1_lhs == ident1_rhs; }
    bool ident2() const { return ident2_lhs == ident2_rhs; }
    bool ok() const { return ident1() && ident2(); }
  };

  PostLieReport check_post_lie(const Gen& x, const Gen& y, const Gen& z) const {
    GenComb X(x), Y(y), Z(z);
    auto assoc = [&](const GenComb& p, const GenComb& q, const GenComb& r) {
      return post(p, post(q, r)) - post(post(p, q), r);
    };
    PostLieReport rep;
    rep.ident1_lhs = post(X, bracket0(Y, Z));
    rep.ident1_rhs = bracket0(post(X, Y), Z) + bracket0(Y, post(X, Z));
    rep.ident2_lhs = post(bracket0(X, Y), Z);
    rep.ident2_rhs = assoc(X, Y, Z) - assoc(Y, X, Z);
    return rep;
  }

  /// Every result reachable by rewriting `word` in any order; confluence
  /// means the returned set has one element. Steps: swap adjacent letters
  /// that are out of order, emitting [g, X_i]_0 when g passes X_i.
  std::vector<Element> all_rewrite_results(const Word& word) const {
    std::map<Word, std::vector<Element>> memo;
    return rewrite_results(word, memo);
  }

  void clear_cache() const {
    std::lock_guard lock(mutex_);
    triangle_cache_.clear();
    shift_cache_.clear();
  }

 private:
  static Coefficient binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Coefficient(r);
  }

  Basis tail(const Basis& b) const {
    Basis t = b;
    for (auto& e : t.xexp)
      if (e > 0) {
        --e;
        return t;
      }
    t.forest.erase(t.forest.begin());
    return t;
  }

  Basis complement(const Basis& whole, const Basis& part) const {
    Basis r = unit_basis();
    for (std::size_t i = 0; i < whole.xexp.size(); ++i) r.xexp[i] = whole.xexp[i] - part.xexp[i];
    std::multiset<A> left(part.forest.begin(), part.forest.end());
    for (const auto& g : whole.forest) {
      auto it = left.find(g);
      if (it != left.end()) {
        left.erase(it);
      } else {
        r.forest.push_back(g);
      }
    }
    return r;
  }

  // F X^m as a sum of X^p G, using F X_i = X_i F + δ_i(F).
  Element forest_times_x(const std::vector<A>& forest, const std::vector<unsigned>& m) const {
    std::size_t i = 0;
    while (i < m.size() && m[i] == 0) ++i;
    if (i == m.size() || forest.empty()) {
      Basis b{m, forest};
      return Element(b);
    }
    auto key = std::make_pair(forest, m);
    {
      std::lock_guard lock(mutex_);
      if (auto it = shift_cache_.find(key); it != shift_cache_.end()) return it->second;
    }
    std::vector<unsigned> rest = m;
    --rest[i];
    Element out;
    for (const auto& [t, c] : forest_times_x(forest, rest)) {
      // X^p G X_i with X^p G from F X^{rest}: G X_i = X_i G + δ_i(G).
      Basis b = t;
      ++b.xexp[i];
      out.add(b, c);
      for (std::size_t j = 0; j < t.forest.size(); ++j) {
        for (const auto& [g, d] : alg_.bracket_with_x(t.forest[j], i)) {
          Basis e = t;
          e.forest[j] = g;
          std::sort(e.forest.begin(), e.forest.end());
          out.add(e, c * d);
        }
      }
    }
    std::lock_guard lock(mutex_);
    shift_cache_.emplace(std::move(key), out);
    return out;
  }

  bool in_order(const Gen& l, const Gen& r) const { return !(r < l); }

  std::vector<Element> rewrite_results(const Word& word, std::map<Word, std::vector<Element>>& memo) const {
    if (auto it = memo.find(word); it != memo.end()) return it->second;
    std::vector<Element> results;
    bool normal = true;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      if (in_order(word[p], word[p + 1])) continue;
      normal = false;
      Word swapped = word;
      std::swap(swapped[p], swapped[p + 1]);
      GenComb corr = bracket0(word[p], word[p + 1]);
      std::vector<std::pair<Word, Coefficient>> shorter;
      for (const auto& [g, c] : corr) {
        Word w(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
        w.push_back(g);
        w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(p + 2), word.end());
        shorter.push_back({w, c});
      }
      for (const auto& head : rewrite_results(swapped, memo)) {
        // Each correction word is rewritten independently; combine every
        // choice of their results.
        std::vector<Element> acc{head};
        for (const auto& [w, c] : shorter) {
          std::vector<Element> next;
          for (const auto& a : acc)
            for (const auto& r : rewrite_results(w, memo)) next.push_back(a + c * r);
          acc = std::move(next);
        }
        for (auto& a : acc)
          if (std::find(results.begin(), results.end(), a) == results.end()) results.push_back(std::move(a));
      }
    }
    if (normal) {
      Basis b = unit_basis();
      for (const auto& g : word) {
        if (auto x = std::get_if<XLetter>(&g)) {
          ++b.xexp[x->i];
        } else {
          b.forest.push_back(std::get<A>(g));
        }
      }
      results.push_back(Element(b));
    }
    memo.emplace(word, results);
    return results;
  }

  Algebra alg_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Basis, Basis>, Element> triangle_cache_;
  mutable std::map<std::pair<std::vector<A>, std::vector<unsigned>>, Element> shift_cache_;
};

}  // namespace postlie
