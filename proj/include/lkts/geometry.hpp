#pragma once

// Linear geometry of W = GF(q)^n: the 1-dimensional subspaces (lines through
// the origin), the 2-dimensional subspaces containing a given line, a fixed
// bilinear form per plane, and coset bookkeeping along each line.
//
// Points of the extended set X = W + {inf1, inf2} are carried as integer ids:
// a finite vector maps to its big-endian coordinate rank (so ascending id is
// lexicographic coordinate order), inf1 = q^n, inf2 = q^n + 1.

#include "lkts/galois.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lkts {

using Pt = uint32_t;

struct Vec {
  std::vector<Fe> c;
  friend bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a.c == b.c); }
};

class VecSpace {
 public:
  VecSpace(const FieldTable& field, uint32_t n) : f_(&field), n_(n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    uint64_t size = 1;
    for (uint32_t i = 0; i < n; ++i) {
      size *= field.q();
      if (size > (1u << 30)) throw std::invalid_argument("q^n exceeds supported size");
    }
    size_ = static_cast<uint32_t>(size);
    qpow_.resize(n);
    qpow_[n - 1] = 1;
    for (int i = static_cast<int>(n) - 2; i >= 0; --i) qpow_[i] = qpow_[i + 1] * field.q();
  }

  const FieldTable& field() const { return *f_; }
  uint32_t n() const { return n_; }
  uint32_t size() const { return size_; }          // q^n
  uint32_t npoints() const { return size_ + 2; }   // |X|
  Pt inf1() const { return size_; }
  Pt inf2() const { return size_ + 1; }
  bool is_finite(Pt p) const { return p < size_; }

  Vec zero() const { return Vec{std::vector<Fe>(n_)}; }

  Pt pt(const Vec& v) const {
    Pt out = 0;
    for (uint32_t i = 0; i < n_; ++i) out += v.c[i].v * qpow_[i];
    return out;
  }

  Vec vec(Pt p) const {
    if (!is_finite(p)) throw std::out_of_range("not a finite point");
    Vec v{std::vector<Fe>(n_)};
    for (uint32_t i = 0; i < n_; ++i) {
      v.c[i] = Fe{static_cast<uint16_t>(p / qpow_[i])};
      p %= qpow_[i];
    }
    return v;
  }

  Vec add(const Vec& a, const Vec& b) const {
    Vec r{std::vector<Fe>(n_)};
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = f_->add(a.c[i], b.c[i]);
    return r;
  }

  Vec sub(const Vec& a, const Vec& b) const {
    Vec r{std::vector<Fe>(n_)};
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = f_->sub(a.c[i], b.c[i]);
    return r;
  }

  Vec neg(const Vec& a) const {
    Vec r{std::vector<Fe>(n_)};
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = f_->neg(a.c[i]);
    return r;
  }

  Vec scale(Fe s, const Vec& a) const {
    Vec r{std::vector<Fe>(n_)};
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = f_->mul(s, a.c[i]);
    return r;
  }

  bool is_zero(const Vec& a) const {
    for (auto e : a.c)
      if (e.v != 0) return false;
    return true;
  }

  // Index of the highest nonzero coordinate, or -1 on the zero vector.
  int last_nonzero(const Vec& a) const {
    for (int i = static_cast<int>(n_) - 1; i >= 0; --i)
      if (a.c[i].v != 0) return i;
    return -1;
  }

  // Translate a point id by a fixed finite vector; infinities stay put.
  Pt translate(Pt x, Pt w) const {
    if (!is_finite(x)) return x;
    Pt out = 0;
    const uint32_t q = f_->q();
    for (uint32_t i = 0; i < n_; ++i) {
      Fe s = f_->add(Fe{static_cast<uint16_t>(x % q)}, Fe{static_cast<uint16_t>(w % q)});
      out += s.v * qpow_[n_ - 1 - i];
      x /= q;
      w /= q;
    }
    return out;
  }

  Pt negate_pt(Pt x) const {
    if (!is_finite(x)) return x;
    Pt out = 0;
    const uint32_t q = f_->q();
    for (uint32_t i = 0; i < n_; ++i) {
      Fe s = f_->neg(Fe{static_cast<uint16_t>(x % q)});
      out += s.v * qpow_[n_ - 1 - i];
      x /= q;
    }
    return out;
  }

 private:
  const FieldTable* f_;
  uint32_t n_ = 0;
  uint32_t size_ = 0;
  std::vector<uint32_t> qpow_;  // qpow_[i] = q^(n-1-i), big-endian place values
};

// Display form of a point id: coordinates joined by ':', or inf1 / inf2.
inline std::string point_token(const VecSpace& sp, Pt p) {
  if (p == sp.inf1()) return "inf1";
  if (p == sp.inf2()) return "inf2";
  Vec v = sp.vec(p);
  std::string s;
  for (uint32_t i = 0; i < sp.n(); ++i) {
    if (i) s += ':';
    s += std::to_string(v.c[i].v);
  }
  return s;
}

// A line through the origin, held by its canonical generator: the unique
// spanning vector whose last nonzero coordinate is 1.  `pivot` is the index
// of that coordinate; coset representatives are the vectors with a zero
// there.
struct LineGen {
  Vec gen;
  uint32_t pivot = 0;
  Pt gen_pt = 0;
};

// Reduced-echelon basis of a plane (2-dimensional subspace).  b1 carries the
// left pivot column, b2 the right one; each pivot coordinate is 1 in its own
// row and 0 in the other, so coordinates in this basis can be read off.
struct PlaneBasis {
  Vec b1, b2;
  uint32_t piv1 = 0, piv2 = 0;
};

class Geometry {
 public:
  Geometry(const FieldTable& field, uint32_t n) : space_(field, n) { build(); }

  const VecSpace& space() const { return space_; }
  const FieldTable& field() const { return space_.field(); }
  uint32_t n() const { return space_.n(); }

  // Lines in the fixed enumeration order: ascending little-endian coordinate
  // rank of the generator, which lists (1,0,..), then the pivot-1 block, and
  // so on.  Count is (q^n - 1)/(q - 1).
  const std::vector<LineGen>& lines() const { return lines_; }
  uint32_t line_count() const { return static_cast<uint32_t>(lines_.size()); }

  // (generator, scale) with v = scale * generator; throws on zero.
  std::pair<Vec, Fe> normalize_direction(const Vec& v) const {
    int j = space_.last_nonzero(v);
    if (j < 0) throw std::invalid_argument("cannot normalize the zero vector");
    Fe s = v.c[j];
    return {space_.scale(field().inv(s), v), s};
  }

  // Index of the line containing v != 0.
  uint32_t line_of(const Vec& v) const {
    Pt p = space_.pt(v);
    if (p == 0 || line_of_[p] < 0) throw std::invalid_argument("line_of requires a nonzero vector");
    return static_cast<uint32_t>(line_of_[p]);
  }

  // The planes containing the given line, in canonical order; count is
  // (q^(n-1) - 1)/(q - 1), so empty when n = 1.
  const std::vector<PlaneBasis>& planes_through(uint32_t line) const {
    return planes_[line];
  }

  // Coordinates of x in the basis of L, if x lies in L.
  std::optional<std::array<Fe, 2>> plane_coords(const PlaneBasis& L, const Vec& x) const {
    Fe x1 = x.c[L.piv1], x2 = x.c[L.piv2];
    Vec back = space_.add(space_.scale(x1, L.b1), space_.scale(x2, L.b2));
    if (!(back == x)) return std::nullopt;
    return std::array<Fe, 2>{x1, x2};
  }

  // The fixed symplectic form on L: f(x, y) = x1*y2 - x2*y1 in the canonical
  // basis.  For n = 2 this is the determinant ad - bc.  Throws if either
  // argument is outside L.
  Fe plane_form(const PlaneBasis& L, const Vec& x, const Vec& y) const {
    auto cx = plane_coords(L, x), cy = plane_coords(L, y);
    if (!cx || !cy) throw std::invalid_argument("plane_form argument outside the plane");
    const FieldTable& f = field();
    return f.sub(f.mul((*cx)[0], (*cy)[1]), f.mul((*cx)[1], (*cy)[0]));
  }

  // Canonical reduced-echelon basis of span{u, v}; throws if dependent.
  PlaneBasis plane_span(const Vec& u, const Vec& v) const {
    const FieldTable& f = field();
    Vec r1 = u, r2 = v;
    uint32_t nn = space_.n();
    uint32_t j1 = nn;
    for (uint32_t j = 0; j < nn; ++j) {
      if (r1.c[j].v != 0 || r2.c[j].v != 0) {
        j1 = j;
        break;
      }
    }
    if (j1 == nn) throw std::invalid_argument("span of zero vectors");
    if (r1.c[j1].v == 0) std::swap(r1, r2);
    r1 = space_.scale(f.inv(r1.c[j1]), r1);
    r2 = space_.sub(r2, space_.scale(r2.c[j1], r1));
    int j2i = -1;
    for (uint32_t j = j1 + 1; j < nn; ++j) {
      if (r2.c[j].v != 0) {
        j2i = static_cast<int>(j);
        break;
      }
    }
    if (j2i < 0) throw std::invalid_argument("vectors are linearly dependent");
    uint32_t j2 = static_cast<uint32_t>(j2i);
    r2 = space_.scale(f.inv(r2.c[j2]), r2);
    r1 = space_.sub(r1, space_.scale(r1.c[j2], r2));
    return PlaneBasis{std::move(r1), std::move(r2), j1, j2};
  }

  // Splits x as r + c * u_line with r in the pivot-zero transversal.
  std::pair<Vec, Fe> pivot_decompose(uint32_t line, const Vec& x) const {
    const LineGen& L = lines_[line];
    Fe c = x.c[L.pivot];
    return {space_.sub(x, space_.scale(c, L.gen)), c};
  }

  // Scales a block of the base point set Y = GF(q) + {inf1, inf2} onto the
  // line through u: finite a -> a*u, infinities fixed.  Base points use ids
  // [0, q) for field elements, q for inf1, q + 1 for inf2.
  std::vector<Pt> ext_scale(const std::vector<uint32_t>& block, const Vec& u) const {
    if (space_.is_zero(u)) throw std::invalid_argument("ext_scale requires a nonzero direction");
    const uint32_t q = field().q();
    std::vector<Pt> out;
    out.reserve(block.size());
    for (uint32_t bp : block) {
      if (bp < q) {
        out.push_back(space_.pt(space_.scale(Fe{static_cast<uint16_t>(bp)}, u)));
      } else if (bp == q) {
        out.push_back(space_.inf1());
      } else if (bp == q + 1) {
        out.push_back(space_.inf2());
      } else {
        throw std::out_of_range("base point id out of range");
      }
    }
    return out;
  }

 private:
  VecSpace space_;
  std::vector<LineGen> lines_;
  std::vector<int32_t> line_of_;
  std::vector<std::vector<PlaneBasis>> planes_;

  void build() {
    const FieldTable& f = field();
    const uint32_t q = f.q(), nn = space_.n(), sz = space_.size();

    // Little-endian rank: coordinate 0 is the fastest digit, so ascending
    // rank sorts by the last coordinate first.
    for (uint32_t le = 1; le < sz; ++le) {
      Vec v{std::vector<Fe>(nn)};
      uint32_t x = le;
      for (uint32_t i = 0; i < nn; ++i) {
        v.c[i] = Fe{static_cast<uint16_t>(x % q)};
        x /= q;
      }
      int piv = space_.last_nonzero(v);
      if (v.c[piv].v != 1) continue;
      LineGen lg;
      lg.pivot = static_cast<uint32_t>(piv);
      lg.gen_pt = space_.pt(v);
      lg.gen = std::move(v);
      lines_.push_back(std::move(lg));
    }
    if (lines_.size() != (static_cast<uint64_t>(sz) - 1) / (q - 1))
      throw std::logic_error("line enumeration count mismatch");

    line_of_.assign(sz, -1);
    for (uint32_t i = 0; i < lines_.size(); ++i) {
      for (uint32_t s = 1; s < q; ++s) {
        Pt p = space_.pt(space_.scale(Fe{static_cast<uint16_t>(s)}, lines_[i].gen));
        line_of_[p] = static_cast<int32_t>(i);
      }
    }

    planes_.resize(lines_.size());
    if (nn >= 2) {
      for (uint32_t i = 0; i < lines_.size(); ++i) {
        std::vector<std::pair<uint64_t, PlaneBasis>> found;
        std::vector<char> seen(sz, 0);
        for (Pt xp = 1; xp < sz; ++xp) {
          if (seen[xp] || line_of_[xp] == static_cast<int32_t>(i)) continue;
          PlaneBasis pb = plane_span(lines_[i].gen, space_.vec(xp));
          // Mark the whole plane as visited so each is canonicalized once.
          for (uint32_t s1 = 0; s1 < q; ++s1)
            for (uint32_t s2 = 0; s2 < q; ++s2) {
              if (s1 == 0 && s2 == 0) continue;
              Vec m = space_.add(space_.scale(Fe{static_cast<uint16_t>(s1)}, pb.b1),
                                 space_.scale(Fe{static_cast<uint16_t>(s2)}, pb.b2));
              seen[space_.pt(m)] = 1;
            }
          uint64_t key = static_cast<uint64_t>(space_.pt(pb.b1)) << 32 | space_.pt(pb.b2);
          found.emplace_back(key, std::move(pb));
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        planes_[i].reserve(found.size());
        for (auto& [key, pb] : found) planes_[i].push_back(std::move(pb));
        uint64_t expect = 1;
        for (uint32_t d = 0; d + 1 < nn; ++d) expect *= q;
        expect = (expect - 1) / (q - 1);
        if (planes_[i].size() != expect) throw std::logic_error("plane count mismatch");
      }
    }
  }
};

}  // namespace lkts
