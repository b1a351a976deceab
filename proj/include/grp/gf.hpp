#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "grp/ints.hpp"

namespace grp {

inline constexpr std::uint64_t kDefaultFieldBound = 4096;

// GF(p^a) with a fixed monic irreducible modulus.  Elements are encoded as
// integers in [0, q): the digits of the code base p are the polynomial
// coefficients, constant term first.  All arithmetic is table-driven.
class Field {
 public:
  static std::shared_ptr<const Field> make(std::uint64_t p, unsigned a,
                                           std::uint64_t bound = kDefaultFieldBound) {
    return std::shared_ptr<const Field>(new Field(p, a, bound));
  }

  std::uint64_t p() const { return p_; }
  unsigned a() const { return a_; }
  std::uint64_t q() const { return q_; }
  // monic modulus, coefficient list constant term first, length a+1
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  std::uint16_t add(std::uint16_t x, std::uint16_t y) const { return add_[idx(x, y)]; }
  std::uint16_t mul(std::uint16_t x, std::uint16_t y) const { return mul_[idx(x, y)]; }
  std::uint16_t neg(std::uint16_t x) const { return neg_[x]; }
  std::uint16_t sub(std::uint16_t x, std::uint16_t y) const { return add(x, neg(y)); }
  std::uint16_t inv(std::uint16_t x) const {
    if (x == 0) throw error("division by zero in GF(q)");
    return inv_[x];
  }
  std::uint16_t one() const { return 1; }

  // generator of the multiplicative group
  std::uint16_t primitive_element() const { return primitive_; }

  // coefficient tuple of an element code, constant term first, length a
  std::vector<std::uint64_t> coeffs(std::uint16_t x) const {
    std::vector<std::uint64_t> c(a_);
    for (unsigned i = 0; i < a_; ++i) { c[i] = x % p_; x = (std::uint16_t)(x / p_); }
    return c;
  }

 private:
  Field(std::uint64_t p, unsigned a, std::uint64_t bound) : p_(p), a_(a) {
    if (!is_prime(p)) throw error(std::to_string(p) + " is not prime");
    if (a < 1) throw error("field extension degree must be >= 1");
    q_ = 1;
    for (unsigned i = 0; i < a; ++i) {
      q_ *= p;
      if (q_ > bound) throw error("field size exceeds configured bound");
    }
    modulus_ = find_modulus();
    build_tables();
  }

  // smallest monic irreducible of degree a, coefficient tuples compared
  // lexicographically from the constant term up
  std::vector<std::uint64_t> find_modulus() const {
    if (a_ == 1) return {0, 1};  // x
    std::vector<std::uint64_t> best;
    // enumerate (c0,...,c_{a-1}) in lexicographic order: c0 most significant
    std::vector<std::uint64_t> c(a_, 0);
    for (;;) {
      std::vector<std::uint64_t> cand(c);
      cand.push_back(1);  // monic
      if (poly_irreducible(cand)) return cand;
      // next tuple in lex order
      int i = (int)a_ - 1;
      while (i >= 0 && c[i] == p_ - 1) { c[i] = 0; --i; }
      if (i < 0) break;
      ++c[i];
    }
    throw error("no irreducible modulus found");  // cannot happen
  }

  // trial division by every monic polynomial of degree 1..deg/2
  bool poly_irreducible(const std::vector<std::uint64_t>& f) const {
    unsigned deg = (unsigned)f.size() - 1;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p_;
      for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<std::uint64_t> g(d + 1);
        std::uint64_t t = k;
        for (unsigned i = 0; i < d; ++i) { g[i] = t % p_; t /= p_; }
        g[d] = 1;
        if (poly_divides(g, f)) return false;
      }
    }
    return true;
  }

  bool poly_divides(const std::vector<std::uint64_t>& g, std::vector<std::uint64_t> f) const {
    unsigned dg = (unsigned)g.size() - 1;
    while (f.size() >= g.size()) {
      std::uint64_t lead = f.back();
      if (lead != 0) {
        std::size_t shift = f.size() - g.size();
        for (unsigned i = 0; i <= dg; ++i)
          f[shift + i] = (f[shift + i] + (p_ - g[i] % p_) * lead) % p_;
      }
      f.pop_back();
    }
    for (std::uint64_t c : f)
      if (c != 0) return false;
    return true;
  }

  void build_tables() {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    for (std::uint64_t x = 0; x < q_; ++x) {
      for (std::uint64_t y = 0; y < q_; ++y) {
        add_[idx((std::uint16_t)x, (std::uint16_t)y)] = code_add(x, y);
        mul_[idx((std::uint16_t)x, (std::uint16_t)y)] = code_mul(x, y);
      }
    }
    for (std::uint64_t x = 0; x < q_; ++x)
      for (std::uint64_t y = 0; y < q_; ++y)
        if (add_[idx((std::uint16_t)x, (std::uint16_t)y)] == 0) neg_[x] = (std::uint16_t)y;
    for (std::uint64_t x = 1; x < q_; ++x) {
      for (std::uint64_t y = 1; y < q_; ++y)
        if (mul_[idx((std::uint16_t)x, (std::uint16_t)y)] == 1) { inv_[x] = (std::uint16_t)y; break; }
      if (inv_[x] == 0) throw error("field construction failed: modulus not irreducible");
    }
    primitive_ = find_primitive();
  }

  std::uint16_t code_add(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < a_; ++i) {
      r += ((x % p_ + y % p_) % p_) * w;
      x /= p_; y /= p_; w *= p_;
    }
    return (std::uint16_t)r;
  }

  std::uint16_t code_mul(std::uint64_t x, std::uint64_t y) const {
    // polynomial product reduced mod the modulus
    std::vector<std::uint64_t> prod(2 * a_ - 1, 0);
    std::vector<std::uint64_t> xc(a_), yc(a_);
    for (unsigned i = 0; i < a_; ++i) { xc[i] = x % p_; x /= p_; }
    for (unsigned i = 0; i < a_; ++i) { yc[i] = y % p_; y /= p_; }
    for (unsigned i = 0; i < a_; ++i)
      for (unsigned j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + xc[i] * yc[j]) % p_;
    for (unsigned d = 2 * a_ - 2; d >= a_; --d) {
      std::uint64_t lead = prod[d];
      if (lead) {
        for (unsigned i = 0; i <= a_; ++i)
          prod[d - a_ + i] = (prod[d - a_ + i] + (p_ - modulus_[i] % p_) * lead) % p_;
      }
    }
    std::uint64_t r = 0, w = 1;
    for (unsigned i = 0; i < a_; ++i) { r += prod[i] * w; w *= p_; }
    return (std::uint16_t)r;
  }

  std::uint16_t find_primitive() const {
    for (std::uint64_t g = 1; g < q_; ++g) {
      std::uint16_t x = (std::uint16_t)g;
      std::uint64_t ord = 1;
      while (x != 1) { x = mul_[idx(x, (std::uint16_t)g)]; ++ord; }
      if (ord == q_ - 1) return (std::uint16_t)g;
    }
    throw error("no primitive element");  // cannot happen
  }

  std::size_t idx(std::uint16_t x, std::uint16_t y) const { return (std::size_t)x * q_ + y; }

  std::uint64_t p_, q_;
  unsigned a_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::uint16_t primitive_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(std::uint64_t p, unsigned a,
                           std::uint64_t bound = kDefaultFieldBound) {
  return Field::make(p, a, bound);
}

}  // namespace grp
