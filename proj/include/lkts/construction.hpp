#pragma once

// The order q^n + 2 construction.  Given a base large set of Kirkman triple
// systems on GF(q) + {inf1, inf2} (q = 6t + 1 a prime power) and a dimension
// n, builds one Kirkman triple system B_w on X = GF(q)^n + {inf1, inf2} per
// finite point w, such that {B_w} is again a large set.
//
// Each design B_w has (q^n + 1)/2 parallel classes:
//
//   star class    the blocks {w - p_i(w)u_i + A u_i} for A in class 0 of
//                 base design p_i(w), collected over every line direction
//                 u_i, with the shared block {inf1, inf2, w} kept once;
//
//   frame classes for each line u_i and each (a, b) with 0 <= a < t,
//                 0 <= b < 3: the translate by w of the triple class
//                 P_{g^a u_i, omega^b} (see below), completed on the coset
//                 w + <u_i> by class a + bt + 1 of base design p_i(w)
//                 scaled onto u_i.
//
// Here p_i(w) is the coefficient of w along u_i against a fixed transversal
// of <u_i>, and P_{u,c} is built from the zero-sum triples
// T(u,v) = {u+v, wu+w2 v, w2 u + w v} (w = omega): for each plane L
// containing <u>, P_{u,L,c} = { +-T(u,v) : v in L, f_L(u,v) in g^[0,t) c }
// partitions L minus <u>, and P_{u,c} is the union over all such planes.
// The (q^n - 1)/2 classes P_{g^a u_i, omega^b} partition the zero-sum
// non-collinear triples, which is what makes the designs disjoint.

#include "lkts/base_designs.hpp"
#include "lkts/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lkts {

// Identifies a parallel class within a design: the star class, or the frame
// class of line `line` with parameters (a, b), printed as "u<line+1>c<j>"
// where j = a + b t + 1 runs through [1, 3t].
struct ClassId {
  int32_t line = -1;  // -1 marks the star class
  uint32_t a = 0, b = 0;

  bool is_star() const { return line < 0; }
  static ClassId star() { return ClassId{}; }
  static ClassId frame(uint32_t line, uint32_t a, uint32_t b) {
    return ClassId{static_cast<int32_t>(line), a, b};
  }
  static ClassId from_j(uint32_t line, uint32_t j, uint32_t t) {
    if (j < 1 || j > 3 * t) throw std::invalid_argument("class index out of range");
    return frame(line, (j - 1) % t, (j - 1) / t);
  }

  // Base-design class index this id draws its coset blocks from.
  uint32_t j(uint32_t t) const { return is_star() ? 0 : a + b * t + 1; }

  std::string token(uint32_t t) const {
    if (is_star()) return "star";
    return "u" + std::to_string(line + 1) + "c" + std::to_string(j(t));
  }

  static ClassId from_token(const std::string& tok, uint32_t t, uint32_t line_count) {
    if (tok == "star") return star();
    size_t c = tok.find('c');
    if (tok.size() < 4 || tok[0] != 'u' || c == std::string::npos || c < 2)
      throw std::invalid_argument("bad class token: " + tok);
    uint32_t line = 0, j = 0;
    try {
      line = static_cast<uint32_t>(std::stoul(tok.substr(1, c - 1)));
      j = static_cast<uint32_t>(std::stoul(tok.substr(c + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad class token: " + tok);
    }
    if (line < 1 || line > line_count)
      throw std::invalid_argument("class token line out of range: " + tok);
    return from_j(line - 1, j, t);
  }

  friend bool operator==(const ClassId& x, const ClassId& y) {
    if (x.is_star() || y.is_star()) return x.is_star() && y.is_star();
    return x.line == y.line && x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const ClassId& x, const ClassId& y) { return !(x == y); }
  friend bool operator<(const ClassId& x, const ClassId& y) {
    auto key = [](const ClassId& z) {
      return std::array<int64_t, 3>{z.line, z.b, z.a};
    };
    return key(x) < key(y);
  }
};

using ParallelClass = std::vector<Triple>;  // sorted blocks of point ids

struct DesignClass {
  ClassId id;
  ParallelClass blocks;
};

struct Design {
  Pt w = 0;
  std::vector<DesignClass> classes;  // star first, then per line by j
};

class Construction {
 public:
  Construction(BaseLargeSet base, uint32_t n, uint32_t generator_index = 0)
      : field_(FieldTable::create(base.qspec.p, base.qspec.k, generator_index)),
        geom_(field_, n),
        base_(std::move(base)),
        t_(field_.spec().t) {
    base_.finalize();
    if (base_.classes.size() != field_.q())
      throw std::invalid_argument("base large set has wrong design count");
    for (const auto& d : base_.classes)
      if (d.size() != base_.classes_per_design())
        throw std::invalid_argument("base design has wrong class count");
    offsets_.assign(geom_.line_count(), Fe{0});
    build_frame_cache();
  }

  Construction(const Construction&) = delete;
  Construction& operator=(const Construction&) = delete;

  const FieldTable& field() const { return field_; }
  const VecSpace& space() const { return geom_.space(); }
  const Geometry& geom() const { return geom_; }
  const BaseLargeSet& base() const { return base_; }
  uint32_t t() const { return t_; }
  uint32_t order() const { return space().npoints(); }  // q^n + 2
  uint32_t classes_per_design() const { return 1 + geom_.line_count() * 3 * t_; }
  uint32_t blocks_per_class() const { return space().npoints() / 3; }

  // Testing hook: shift the coset representative used for `line` by
  // delta * u_line.  Any transversal yields a valid large set; when the base
  // is generated by translation the built designs do not change at all.
  void set_transversal_offset(uint32_t line, Fe delta) { offsets_.at(line) = delta; }
  Fe transversal_offset(uint32_t line) const { return offsets_.at(line); }

  // T(u, v) = {u + v, wu + w2 v, w2 u + wv}; zero-sum, invariant under
  // (u, v) -> (wu, w2 v) and under swapping u and v.
  std::array<Vec, 3> triple_T(const Vec& u, const Vec& v) const {
    const Fe w = field_.omega(), w2 = field_.omega2();
    return {space().add(u, v),
            space().add(space().scale(w, u), space().scale(w2, v)),
            space().add(space().scale(w2, u), space().scale(w, v))};
  }

  // P_{u,L,c}: the 2tq triples +-T(u, v) with v in L and f_L(u, v) = g^m c,
  // 0 <= m < t.  Appends to `out`; together they partition L minus <u>.
  void partial_class_plane(const Vec& u, const PlaneBasis& L, Fe c,
                           std::vector<Triple>& out) const {
    auto cu = geom_.plane_coords(L, u);
    if (!cu) throw std::invalid_argument("direction outside the plane");
    const FieldTable& f = field_;
    Fe u1 = (*cu)[0], u2 = (*cu)[1];
    // v0 in L with f_L(u, v0) = 1; then f_L(u, s v0 + e u) = s for any e.
    Vec v0 = u1.v != 0 ? space().scale(f.inv(u1), L.b2)
                       : space().scale(f.neg(f.inv(u2)), L.b1);
    for (uint32_t m = 0; m < t_; ++m) {
      Vec vm = space().scale(f.mul(f.exp(m), c), v0);
      for (uint32_t e = 0; e < f.q(); ++e) {
        Vec v = space().add(vm, space().scale(f.element(e), u));
        auto tt = triple_T(u, v);
        Pt p0 = space().pt(tt[0]), p1 = space().pt(tt[1]), p2 = space().pt(tt[2]);
        out.push_back(make_triple(p0, p1, p2));
        out.push_back(make_triple(space().negate_pt(p0), space().negate_pt(p1),
                                  space().negate_pt(p2)));
      }
    }
  }

  // P_{u,c}: union of P_{u,L,c} over the planes L containing <u>; partitions
  // the finite points outside <u>.  Sorted.
  std::vector<Triple> partial_class(const Vec& u, Fe c) const {
    std::vector<Triple> out;
    uint32_t line = geom_.line_of(u);
    for (const auto& L : geom_.planes_through(line)) partial_class_plane(u, L, c, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Cached P_{g^a u_line, omega^b}, blocks sorted, not yet translated.
  const std::vector<Triple>& frame_class(uint32_t line, uint32_t a, uint32_t b) const {
    return frame_.at(frame_index(line, a, b));
  }

  std::vector<ClassId> class_ids() const {
    std::vector<ClassId> ids;
    ids.reserve(classes_per_design());
    ids.push_back(ClassId::star());
    for (uint32_t i = 0; i < geom_.line_count(); ++i)
      for (uint32_t j = 1; j <= 3 * t_; ++j) ids.push_back(ClassId::from_j(i, j, t_));
    return ids;
  }

  // One parallel class of the design based at w.
  ParallelClass build_class(Pt w, const ClassId& id) const {
    if (!space().is_finite(w)) throw std::invalid_argument("design base point must be finite");
    Vec vw = space().vec(w);
    ParallelClass out;
    if (id.is_star()) {
      out.reserve(blocks_per_class());
      for (uint32_t i = 0; i < geom_.line_count(); ++i) {
        auto [r, d] = decompose(i, vw);
        Pt rp = space().pt(r);
        for (const auto& blk : base_.cls(d.v, 0)) {
          if (blk[1] == base_.inf1() && blk[2] == base_.inf2()) continue;
          out.push_back(scaled_block(blk, i, rp));
        }
      }
      out.push_back(make_triple(w, space().inf1(), space().inf2()));
    } else {
      if (id.a >= t_ || id.b >= 3) throw std::invalid_argument("class parameters out of range");
      const auto& fc = frame_class(static_cast<uint32_t>(id.line), id.a, id.b);
      out.reserve(blocks_per_class());
      for (const auto& tr : fc) out.push_back(translate_triple(tr, w));
      uint32_t i = static_cast<uint32_t>(id.line);
      auto [r, d] = decompose(i, vw);
      Pt rp = space().pt(r);
      for (const auto& blk : base_.cls(d.v, id.j(t_))) out.push_back(scaled_block(blk, i, rp));
    }
    std::sort(out.begin(), out.end());
    if (out.size() != blocks_per_class())
      throw std::logic_error("parallel class has wrong block count");
    return out;
  }

  Design build_design(Pt w) const {
    Design d;
    d.w = w;
    d.classes.reserve(classes_per_design());
    for (const ClassId& id : class_ids()) d.classes.push_back({id, build_class(w, id)});
    return d;
  }

  // B_{src.w + w} from B_{src.w} by translating every finite point.  Valid
  // whenever the base large set is generated by translation.
  Design translate_design(const Design& src, Pt w) const {
    Design d;
    d.w = space().translate(src.w, w);
    d.classes.reserve(src.classes.size());
    for (const auto& cls : src.classes) {
      ParallelClass blocks;
      blocks.reserve(cls.blocks.size());
      for (const auto& tr : cls.blocks) blocks.push_back(translate_triple(tr, w));
      std::sort(blocks.begin(), blocks.end());
      d.classes.push_back({cls.id, std::move(blocks)});
    }
    return d;
  }

  // Visits all q^n designs in ascending w order.  With a translation
  // generated base only B_0 is built from scratch.
  template <class Fn>
  void for_each_design(Fn&& fn) const {
    if (base_.compact) {
      Design d0 = build_design(0);
      fn(static_cast<const Design&>(d0));
      for (Pt w = 1; w < space().size(); ++w) fn(translate_design(d0, w));
      return;
    }
    for (Pt w = 0; w < space().size(); ++w) fn(build_design(w));
  }

  // The unique (w, class) whose parallel class contains the given triple of
  // point ids.  Inverts the construction without building any design.
  std::pair<Pt, ClassId> locate_triple(const Triple& t) const {
    for (Pt p : t)
      if (p >= space().npoints()) throw std::invalid_argument("point id out of range");
    Triple s = make_triple(t[0], t[1], t[2]);

    if (s[1] == space().inf1() && s[2] == space().inf2())  // {x, inf1, inf2}
      return {s[0], ClassId::star()};

    if (!space().is_finite(s[2])) {  // one infinity: {x, y, inf}
      Vec vx = space().vec(s[0]), vy = space().vec(s[1]);
      uint32_t i = geom_.line_of(space().sub(vx, vy));
      auto [r, ex] = decompose(i, vx);
      Fe ey = decompose(i, vy).second;
      uint32_t infb = s[2] == space().inf1() ? base_.inf1() : base_.inf2();
      return coset_result(i, r, make_triple(ex.v, ey.v, infb));
    }

    Vec vx = space().vec(s[0]), vy = space().vec(s[1]), vz = space().vec(s[2]);
    Vec d1 = space().sub(vy, vx), d2 = space().sub(vz, vx);
    uint32_t i1 = geom_.line_of(d1);
    if (geom_.line_of(d2) == i1) {  // collinear finite triple
      auto [r, e1] = decompose(i1, vx);
      Fe e2 = decompose(i1, vy).second, e3 = decompose(i1, vz).second;
      return coset_result(i1, r, make_triple(e1.v, e2.v, e3.v));
    }

    // Non-collinear: a frame triple w + T(u0, v0).  Zero-sum fixes w; the
    // linear system x-w = u0+v0, y-w = w u0 + w2 v0 fixes one representative
    // pair, and f(u0, v0) decides which of the two candidate lines hosts the
    // class: dlog f = s gives it to <u0> iff s mod 2t < t, else to <v0> with
    // s shifted by dlog(-1) = 3t.
    const FieldTable& f = field_;
    const Fe w1 = f.omega(), w2 = f.omega2();
    Fe three = f.add(f.one(), f.add(f.one(), f.one()));
    Vec vw = space().scale(f.inv(three), space().add(space().add(vx, vy), vz));
    Pt w = space().pt(vw);
    Vec xp = space().sub(vx, vw), yp = space().sub(vy, vw);
    Vec u0 = space().scale(f.inv(f.sub(w2, w1)), space().sub(space().scale(w2, xp), yp));
    Vec v0 = space().scale(f.inv(f.sub(w1, w2)), space().sub(space().scale(w1, xp), yp));
    Fe phi = geom_.plane_form(geom_.plane_span(u0, v0), u0, v0);
    uint32_t sdl = f.dlog(phi);
    if (sdl % (2 * t_) >= t_) {
      std::swap(u0, v0);
      sdl = (sdl + 3 * t_) % (6 * t_);
    }
    uint32_t b = sdl / (2 * t_);
    uint32_t a = f.dlog(geom_.normalize_direction(u0).second) % t_;
    return {w, ClassId::frame(geom_.line_of(u0), a, b)};
  }

 private:
  FieldTable field_;
  Geometry geom_;
  BaseLargeSet base_;
  uint32_t t_;
  std::vector<Fe> offsets_;
  std::vector<std::vector<Triple>> frame_;

  size_t frame_index(uint32_t line, uint32_t a, uint32_t b) const {
    return (static_cast<size_t>(line) * 3 + b) * t_ + a;
  }

  void build_frame_cache() {
    frame_.resize(static_cast<size_t>(geom_.line_count()) * 3 * t_);
    const uint64_t want = (static_cast<uint64_t>(space().size()) - field_.q()) / 3;
    for (uint32_t i = 0; i < geom_.line_count(); ++i) {
      const Vec& gen = geom_.lines()[i].gen;
      for (uint32_t b = 0; b < 3; ++b) {
        Fe c = field_.exp(2 * static_cast<int64_t>(t_) * b);  // omega^b
        for (uint32_t a = 0; a < t_; ++a) {
          Vec u = space().scale(field_.exp(a), gen);
          auto cls = partial_class(u, c);
          if (cls.size() != want ||
              std::adjacent_find(cls.begin(), cls.end()) != cls.end())
            throw std::logic_error("frame class is not a partition");
          frame_[frame_index(i, a, b)] = std::move(cls);
        }
      }
    }
  }

  // (coset representative, coefficient) of x along line `line`, honoring the
  // transversal offset.
  std::pair<Vec, Fe> decompose(uint32_t line, const Vec& x) const {
    auto [r, c] = geom_.pivot_decompose(line, x);
    Fe d = offsets_[line];
    if (d.v) {
      r = space().add(r, space().scale(d, geom_.lines()[line].gen));
      c = field_.sub(c, d);
    }
    return {r, c};
  }

  Triple translate_triple(const Triple& t, Pt w) const {
    return make_triple(space().translate(t[0], w), space().translate(t[1], w),
                       space().translate(t[2], w));
  }

  // Base block scaled onto line `line` and shifted into the coset of rp.
  Triple scaled_block(const Triple& blk, uint32_t line, Pt rp) const {
    auto pts = geom_.ext_scale(std::vector<uint32_t>(blk.begin(), blk.end()),
                               geom_.lines()[line].gen);
    return make_triple(space().translate(pts[0], rp), space().translate(pts[1], rp),
                       space().translate(pts[2], rp));
  }

  // Finishes the collinear locate cases: the base block pins (design, class),
  // and the design index pins w inside the coset of r.
  std::pair<Pt, ClassId> coset_result(uint32_t line, const Vec& r, const Triple& base_block) const {
    auto [d, j] = base_.locate_block(base_block);
    Vec vw = space().add(r, space().scale(field_.element(d), geom_.lines()[line].gen));
    Pt w = space().pt(vw);
    if (j == 0) return {w, ClassId::star()};
    return {w, ClassId::from_j(line, j, t_)};
  }
};

}  // namespace lkts
