#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "grp/gf.hpp"
#include "grp/ints.hpp"
#include "grp/perm_group.hpp"

namespace grp {

inline constexpr std::uint64_t kDefaultProjectiveDegreeBound = 2000;
inline constexpr std::uint64_t kDefaultMatrixGroupOrderBound = 10000000;

class SquareMatrix {
 public:
  SquareMatrix(FieldPtr field, unsigned n)
      : field_(std::move(field)), n_(n), e_(n * n, 0) {}

  static SquareMatrix identity(FieldPtr field, unsigned n) {
    SquareMatrix m(std::move(field), n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = m.field_->one();
    return m;
  }

  unsigned n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  std::uint16_t& at(unsigned i, unsigned j) { return e_[i * n_ + j]; }
  std::uint16_t at(unsigned i, unsigned j) const { return e_[i * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    if (x.field_ != y.field_ || x.n_ != y.n_) throw error("matrix shape/field mismatch");
    const Field& F = *x.field_;
    SquareMatrix r(x.field_, x.n_);
    for (unsigned i = 0; i < x.n_; ++i)
      for (unsigned k = 0; k < x.n_; ++k) {
        std::uint16_t v = x.at(i, k);
        if (!v) continue;
        for (unsigned j = 0; j < x.n_; ++j)
          r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
      }
    return r;
  }

  std::uint16_t determinant() const {
    const Field& F = *field_;
    std::vector<std::uint16_t> m = e_;
    auto at2 = [&](unsigned i, unsigned j) -> std::uint16_t& { return m[i * n_ + j]; };
    std::uint16_t det = F.one();
    for (unsigned col = 0; col < n_; ++col) {
      unsigned piv = col;
      while (piv < n_ && at2(piv, col) == 0) ++piv;
      if (piv == n_) return 0;
      if (piv != col) {
        for (unsigned j = 0; j < n_; ++j) std::swap(at2(piv, j), at2(col, j));
        det = F.neg(det);
      }
      det = F.mul(det, at2(col, col));
      std::uint16_t ip = F.inv(at2(col, col));
      for (unsigned r = col + 1; r < n_; ++r) {
        std::uint16_t f = F.mul(at2(r, col), ip);
        if (!f) continue;
        for (unsigned j = col; j < n_; ++j)
          at2(r, j) = F.sub(at2(r, j), F.mul(f, at2(col, j)));
      }
    }
    return det;
  }

  friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) {
    return x.n_ == y.n_ && x.e_ == y.e_;
  }

 private:
  FieldPtr field_;
  unsigned n_;
  std::vector<std::uint16_t> e_;
};

// Elementary transvections I + x^k E_ij, x the polynomial generator of the
// field over its prime subfield.  Together they generate SL(n,q).
inline std::vector<SquareMatrix> sl_generators(unsigned n, const FieldPtr& field) {
  if (n < 2) throw error("SL(n,q) requires n >= 2");
  std::vector<SquareMatrix> gens;
  std::uint16_t x = (std::uint16_t)(field->a() == 1 ? 1 : field->p());  // the element "x"
  std::uint16_t alpha = field->one();
  for (unsigned k = 0; k < field->a(); ++k) {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        if (i == j) continue;
        SquareMatrix m = SquareMatrix::identity(field, n);
        m.at(i, j) = alpha;
        gens.push_back(std::move(m));
      }
    alpha = field->mul(alpha, x);
  }
  return gens;
}

// GL(n,q) generators: the SL transvections plus diag(primitive, 1, ..., 1)
inline std::vector<SquareMatrix> gl_generators(unsigned n, const FieldPtr& field) {
  auto gens = sl_generators(n, field);
  SquareMatrix d = SquareMatrix::identity(field, n);
  d.at(0, 0) = field->primitive_element();
  gens.push_back(std::move(d));
  return gens;
}

// All projective points of GF(q)^n: nonzero vectors normalized so the first
// nonzero coordinate is 1, listed in lexicographic order of coordinate codes.
inline std::vector<std::vector<std::uint16_t>> projective_points(unsigned n, const FieldPtr& field) {
  const Field& F = *field;
  std::vector<std::vector<std::uint16_t>> pts;
  std::vector<std::uint16_t> v(n, 0);
  for (;;) {
    unsigned first = n;
    for (unsigned i = 0; i < n; ++i)
      if (v[i]) { first = i; break; }
    if (first < n && v[first] == F.one()) pts.push_back(v);
    int i = (int)n - 1;
    while (i >= 0 && v[i] == F.q() - 1) { v[i] = 0; --i; }
    if (i < 0) break;
    ++v[i];
  }
  return pts;
}

inline std::vector<std::uint16_t> normalize_projective(const FieldPtr& field,
                                                       std::vector<std::uint16_t> v) {
  const Field& F = *field;
  unsigned first = (unsigned)v.size();
  for (unsigned i = 0; i < v.size(); ++i)
    if (v[i]) { first = i; break; }
  if (first == v.size()) throw error("zero vector has no projective point");
  std::uint16_t s = F.inv(v[first]);
  for (auto& c : v) c = F.mul(c, s);
  return v;
}

// Permutation image of a set of invertible matrices acting on projective
// points.  Scalar matrices collapse to the identity, so the image of SL(n,q)
// is PSL(n,q) as a permutation group of degree (q^n-1)/(q-1).
inline PermGroup projective_action(const std::vector<SquareMatrix>& matrices,
                                   std::uint64_t degree_bound = kDefaultProjectiveDegreeBound) {
  if (matrices.empty()) throw error("empty matrix set");
  const FieldPtr& field = matrices[0].field();
  unsigned n = matrices[0].n();
  std::uint64_t deg = 1, acc = 1;
  for (unsigned i = 1; i < n; ++i) { acc *= field->q(); deg += acc; }
  if (deg > degree_bound) throw cap_exceeded("projective degree exceeds bound");

  auto pts = projective_points(n, field);
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  auto key = [&](const std::vector<std::uint16_t>& v) {
    std::uint64_t k = 0;
    for (std::uint16_t c : v) k = k * field->q() + c;
    return k;
  };
  for (std::uint32_t i = 0; i < pts.size(); ++i) index[key(pts[i])] = i;

  std::vector<Permutation> perms;
  for (const auto& m : matrices) {
    if (m.determinant() == 0) throw error("singular matrix in projective action");
    std::vector<std::uint16_t> img(pts.size());
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
      std::vector<std::uint16_t> w(n, 0);
      for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c)
          w[r] = field->add(w[r], field->mul(m.at(r, c), pts[i][c]));
      img[i] = (std::uint16_t)index.at(key(normalize_projective(field, w)));
    }
    Permutation p = Permutation::from_images(std::move(img));
    if (!p.is_identity()) perms.push_back(std::move(p));
  }
  if (perms.empty()) perms.push_back(Permutation::identity((unsigned)pts.size()));
  return PermGroup((unsigned)pts.size(), std::move(perms));
}

inline bigint gl_order(unsigned n, std::uint64_t q) {
  bigint o = 1, qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  bigint qi = 1;
  for (unsigned i = 0; i < n; ++i) { o *= (qn - qi); qi *= q; }
  return o;
}

inline bigint sl_order(unsigned n, std::uint64_t q) { return gl_order(n, q) / (q - 1); }

inline bigint pgl_order(unsigned n, std::uint64_t q) {
  if (n < 2) throw error("PGL(n,q) requires n >= 2");
  return gl_order(n, q) / (q - 1);
}

inline bigint psl_order(unsigned n, std::uint64_t q) {
  return sl_order(n, q) / std::gcd((std::uint64_t)n, q - 1);
}

}  // namespace grp
