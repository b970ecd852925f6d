#pragma once

// Sparse multivariate polynomials over Rational in the fixed variable set
// {x, y, u, v}. Terms are kept in graded-lex order (total degree first, ties
// broken lexicographically with precedence v > u > y > x), descending, so the
// stored form is canonical: two polynomials are equal iff their term vectors
// are equal, and rendering is deterministic.
//
// Exponents are packed into one 64-bit key per term:
//   [total:16][e_v:12][e_u:12][e_y:12][e_x:12]
// which makes the graded-lex comparison a plain integer comparison and term
// multiplication a guarded key addition. Each exponent is capped at 4095.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "keller/errors.hpp"
#include "keller/rational.hpp"

namespace keller {

enum class Var : int { x = 0, y = 1, u = 2, v = 3 };

inline const char* var_name(Var w) {
  switch (w) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::u: return "u";
    case Var::v: return "v";
  }
  return "?";
}

class MPoly {
 public:
  static constexpr long kMaxExp = 0xFFF;

  MPoly() = default;

  static MPoly zero() { return MPoly(); }
  static MPoly one() { return constant(Rational(1)); }
  static MPoly constant(const Rational& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(0, c);
    return p;
  }
  static MPoly variable(Var w) { return monomial(Rational(1), w, 1); }
  static MPoly monomial(const Rational& c, Var w, long e) {
    long es[4] = {0, 0, 0, 0};
    es[static_cast<int>(w)] = e;
    return monomial(c, es[0], es[1], es[2], es[3]);
  }
  static MPoly monomial(const Rational& c, long ex, long ey, long eu, long ev) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(pack(ex, ey, eu, ev), c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  // The value of a constant polynomial; Error if a variable is present.
  Rational as_constant() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
    return terms_[0].second;
  }

  long total_degree() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_[0].first >> 48);
  }
  long degree_in(Var w) const {
    long d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, exp_of(k, w));
    return d;
  }
  bool has_var(Var w) const {
    for (const auto& [k, c] : terms_)
      if (exp_of(k, w) > 0) return true;
    return false;
  }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly operator-() const {
    MPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) r.terms_.emplace_back(k, -c);
    return r;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merged(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merged(a, b, true); }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    const MPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const MPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
    std::map<std::uint64_t, Rational, std::greater<>> acc;
    for (const auto& [ks, cs] : small.terms_)
      for (const auto& [kb, cb] : big.terms_) {
        auto [it, fresh] = acc.try_emplace(add_keys(ks, kb), cs * cb);
        if (!fresh) it->second += cs * cb;
      }
    MPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(k, std::move(c));
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator*(const MPoly& a, const Rational& c) {
    if (c.is_zero()) return MPoly();
    MPoly r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [k, t] : a.terms_) r.terms_.emplace_back(k, t * c);
    return r;
  }
  friend MPoly operator*(const Rational& c, const MPoly& a) { return a * c; }

  MPoly pow(long n) const {
    if (n < 0) throw Error("negative exponent");
    MPoly r = one();
    MPoly base = *this;
    while (n > 0) {
      if (n & 1) r *= base;
      base = (n >>= 1) > 0 ? base * base : base;
    }
    return r;
  }

  MPoly derivative(Var w) const {
    MPoly r;
    for (const auto& [k, c] : terms_) {
      long e = exp_of(k, w);
      if (e > 0) r.terms_.emplace_back(with_exp(k, w, e - 1), c * Rational(e));
    }
    // order is preserved within a fixed exponent drop, but degrees shift; resort
    r.normalize();
    return r;
  }

  // Antiderivative with integration constant 0. The input may involve only
  // the integration variable.
  MPoly antiderivative(Var w) const {
    for (int i = 0; i < 4; ++i)
      if (static_cast<Var>(i) != w && has_var(static_cast<Var>(i)))
        throw NonUnivariateInput("antiderivative input involves " +
                                 std::string(var_name(static_cast<Var>(i))));
    MPoly r;
    for (const auto& [k, c] : terms_) {
      long e = exp_of(k, w);
      if (e + 1 > kMaxExp) throw Error("exponent overflow");
      r.terms_.emplace_back(with_exp(k, w, e + 1), c / Rational(e + 1));
    }
    r.normalize();
    return r;
  }

  // Ring homomorphism image under w -> q, by Horner over the w-coefficients.
  MPoly substitute(Var w, const MPoly& q) const {
    auto cs = coefficients_in(w);
    MPoly r = cs.back();
    for (std::size_t k = cs.size() - 1; k-- > 0;) r = r * q + cs[k];
    return r;
  }

  // Ascending coefficient list c_0..c_d with respect to w; [0] for the zero
  // polynomial, and c_d != 0 otherwise.
  std::vector<MPoly> coefficients_in(Var w) const {
    long d = degree_in(w);
    std::vector<MPoly> cs(static_cast<std::size_t>(std::max<long>(d, 0)) + 1);
    for (const auto& [k, c] : terms_)
      cs[static_cast<std::size_t>(exp_of(k, w))].terms_.emplace_back(with_exp(k, w, 0), c);
    for (auto& ck : cs) ck.normalize();
    return cs;
  }

  MPoly coefficient_of(Var w, long e) const {
    MPoly r;
    for (const auto& [k, c] : terms_)
      if (exp_of(k, w) == e) r.terms_.emplace_back(with_exp(k, w, 0), c);
    r.normalize();
    return r;
  }

  // Minimal total degree in {u, v} over nonzero terms; nullopt encodes +inf
  // (zero polynomial). The input may involve no other variable.
  std::optional<long> order_at_origin() const {
    if (has_var(Var::x) || has_var(Var::y))
      throw NonConformingInput("order_at_origin input involves x or y");
    if (is_zero()) return std::nullopt;
    long best = -1;
    for (const auto& [k, c] : terms_) {
      long o = exp_of(k, Var::u) + exp_of(k, Var::v);
      if (best < 0 || o < best) best = o;
    }
    return best;
  }

  // Leading term in graded-lex order. Only valid on nonzero polynomials.
  std::pair<std::uint64_t, Rational> leading_term() const {
    if (is_zero()) throw Error("leading term of zero");
    return terms_[0];
  }

  static long exp_of(std::uint64_t key, Var w) {
    return static_cast<long>((key >> (12 * static_cast<int>(w))) & 0xFFF);
  }

  // Canonical text form, reparseable by the expression grammar: terms in
  // graded-lex descending order, factors ordered x, y, u, v, explicit '*'.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Rational a = c.abs();
      if (first) {
        if (c.sign() < 0) out += "-";
        first = false;
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      std::string mono;
      for (Var w : {Var::x, Var::y, Var::u, Var::v}) {
        long e = exp_of(k, w);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(w);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += a.to_string();
      } else if (a.is_one()) {
        out += mono;
      } else {
        out += a.to_string() + "*" + mono;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    return os << p.to_string();
  }

  // Exact quotient p / d; nullopt when d does not divide p. Leading-term
  // reduction in graded-lex order, valid over an integral domain.
  static std::optional<MPoly> try_divide(const MPoly& p, const MPoly& d) {
    if (d.is_zero()) throw Error("division by zero polynomial");
    MPoly q, r = p;
    auto [dk, dc] = d.leading_term();
    while (!r.is_zero()) {
      auto [rk, rc] = r.leading_term();
      if (!key_divides(dk, rk)) return std::nullopt;
      MPoly t;
      t.terms_.emplace_back(sub_keys(rk, dk), rc / dc);
      q += t;
      r -= t * d;
    }
    return q;
  }

  static MPoly div_exact(const MPoly& p, const MPoly& d) {
    auto q = try_divide(p, d);
    if (!q) throw Error("inexact polynomial division");
    return *q;
  }

 private:
  // sorted descending by key; no zero coefficients
  std::vector<std::pair<std::uint64_t, Rational>> terms_;

  static std::uint64_t pack(long ex, long ey, long eu, long ev) {
    for (long e : {ex, ey, eu, ev})
      if (e < 0 || e > kMaxExp) throw Error("exponent overflow");
    std::uint64_t total = static_cast<std::uint64_t>(ex + ey + eu + ev);
    return (total << 48) | (static_cast<std::uint64_t>(ev) << 36) |
           (static_cast<std::uint64_t>(eu) << 24) |
           (static_cast<std::uint64_t>(ey) << 12) | static_cast<std::uint64_t>(ex);
  }

  static std::uint64_t with_exp(std::uint64_t key, Var w, long e) {
    int sh = 12 * static_cast<int>(w);
    long old = static_cast<long>((key >> sh) & 0xFFF);
    std::uint64_t total = (key >> 48) - old + e;
    key &= ~((std::uint64_t{0xFFF} << sh) | (std::uint64_t{0xFFFF} << 48));
    return key | (static_cast<std::uint64_t>(e) << sh) | (total << 48);
  }

  static std::uint64_t add_keys(std::uint64_t a, std::uint64_t b) {
    for (int sh : {0, 12, 24, 36})
      if (((a >> sh) & 0xFFF) + ((b >> sh) & 0xFFF) > 0xFFF)
        throw Error("exponent overflow");
    return a + b;
  }

  static bool key_divides(std::uint64_t d, std::uint64_t k) {
    for (int sh : {0, 12, 24, 36})
      if (((d >> sh) & 0xFFF) > ((k >> sh) & 0xFFF)) return false;
    return true;
  }

  static std::uint64_t sub_keys(std::uint64_t k, std::uint64_t d) { return k - d; }

  static MPoly merged(const MPoly& a, const MPoly& b, bool subtract) {
    MPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
        const auto& [k, c] = b.terms_[j++];
        r.terms_.emplace_back(k, subtract ? -c : c);
      } else {
        Rational c = subtract ? a.terms_[i].second - b.terms_[j].second
                              : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& s, const auto& t) { return s.first > t.first; });
    std::vector<std::pair<std::uint64_t, Rational>> out;
    out.reserve(terms_.size());
    for (auto& [k, c] : terms_) {
      if (!out.empty() && out.back().first == k) {
        out.back().second += c;
        if (out.back().second.is_zero()) out.pop_back();
      } else if (!c.is_zero()) {
        out.emplace_back(k, std::move(c));
      }
    }
    terms_ = std::move(out);
  }
};

// Monic gcd of two univariate polynomials in w. Both zero -> 0; both
// constant (not both zero) -> 1; otherwise the monic Euclidean gcd.
inline MPoly gcd_univariate(const MPoly& p, const MPoly& q, Var w) {
  for (int i = 0; i < 4; ++i) {
    Var o = static_cast<Var>(i);
    if (o != w && (p.has_var(o) || q.has_var(o)))
      throw NonUnivariateInput("gcd_univariate input involves " + std::string(var_name(o)));
  }
  auto dense = [&](const MPoly& f) {
    std::vector<Rational> cs;
    for (const MPoly& c : f.coefficients_in(w)) cs.push_back(c.as_constant());
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    return cs;
  };
  std::vector<Rational> a = dense(p), b = dense(q);
  if (a.empty() && b.empty()) return MPoly::zero();
  auto make_monic = [](std::vector<Rational>& f) {
    Rational lead = f.back();
    for (auto& c : f) c /= lead;
  };
  while (!b.empty()) {
    if (b.size() == 1) { b.clear(); a.assign(1, Rational(1)); break; }
    make_monic(b);
    // a mod b
    while (a.size() >= b.size()) {
      Rational t = a.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= t * b[i];
      while (!a.empty() && a.back().is_zero()) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (a.empty()) return MPoly::zero();
  make_monic(a);
  MPoly g;
  for (std::size_t i = 0; i < a.size(); ++i) g += MPoly::monomial(a[i], w, static_cast<long>(i));
  return g;
}

}  // namespace keller
