#pragma once

// Independent certification of built or loaded designs.  Nothing here reuses
// the construction's bookkeeping: Steiner and resolvability properties are
// checked by direct pair/point counting, the large-set property by an exact
// cover of all C(N, 3) triple ranks, and the closed-form counting identities
// against brute-force enumeration of small spaces.

#include "lkts/certificate.hpp"
#include "lkts/construction.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lkts {

// Colex rank of sorted triples over [0, N): rank{x<y<z} = C(z,3)+C(y,2)+x.
class TripleRank {
 public:
  explicit TripleRank(uint32_t n_points) : n_(n_points) {}

  uint64_t total() const { return c3(n_); }

  uint64_t rank(const Triple& t) const { return c3(t[2]) + c2(t[1]) + t[0]; }

  Triple unrank(uint64_t r) const {
    uint32_t z = 2;
    while (c3(z + 1) <= r) ++z;
    r -= c3(z);
    uint32_t y = 1;
    while (c2(y + 1) <= r) ++y;
    return Triple{static_cast<uint32_t>(r - c2(y)), y, z};
  }

 private:
  uint32_t n_;
  static uint64_t c2(uint64_t n) { return n * (n - 1) / 2; }
  static uint64_t c3(uint64_t n) { return n * (n - 1) * (n - 2) / 6; }
};

namespace detail {

inline std::string triple_str(const Triple& t, const VecSpace* sp) {
  auto name = [&](Pt p) { return sp ? point_token(*sp, p) : std::to_string(p); };
  return "{" + name(t[0]) + "," + name(t[1]) + "," + name(t[2]) + "}";
}

}  // namespace detail

// Steiner property: every pair of distinct points in exactly one block.
inline Certificate verify_sts(const std::vector<Triple>& blocks, uint32_t n_points,
                              const VecSpace* sp = nullptr) {
  Certificate cert;
  cert.subject = "triple system on " + std::to_string(n_points) + " points";
  cert.add_count("points", n_points);
  cert.add_count("blocks", blocks.size());

  bool ok = true;
  std::string witness;
  for (const auto& t : blocks) {
    if (!(t[0] < t[1] && t[1] < t[2] && t[2] < n_points)) {
      ok = false;
      witness = "malformed block " + detail::triple_str(t, nullptr);
      break;
    }
  }
  cert.add("block-shape", ok, witness);
  if (!ok) return cert;

  uint64_t expect = static_cast<uint64_t>(n_points) * (n_points - 1) / 6;
  cert.add("block-count", blocks.size() == expect,
           blocks.size() == expect ? "" : "expected " + std::to_string(expect));

  std::vector<uint16_t> pairs(static_cast<size_t>(n_points) * n_points, 0);
  ok = true;
  witness.clear();
  for (const auto& t : blocks)
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = a + 1; b < 3; ++b) {
        size_t idx = static_cast<size_t>(t[a]) * n_points + t[b];
        if (pairs[idx]++) {
          ok = false;
          witness = "pair covered twice in " + detail::triple_str(t, sp);
          break;
        }
      }
  auto pname = [&](Pt p) { return sp ? point_token(*sp, p) : std::to_string(p); };
  if (ok)
    for (uint32_t x = 0; x < n_points && ok; ++x)
      for (uint32_t y = x + 1; y < n_points; ++y)
        if (!pairs[static_cast<size_t>(x) * n_points + y]) {
          ok = false;
          witness = "pair {" + pname(x) + "," + pname(y) + "} never covered";
          break;
        }
  cert.add("pair-coverage", ok, witness);
  return cert;
}

// Kirkman property of one design: Steiner system plus a resolution into
// parallel classes, each partitioning the point set.
inline Certificate verify_kts(const Design& d, const VecSpace& sp, uint32_t t) {
  const uint32_t N = sp.npoints();
  Certificate cert;
  cert.subject = "design w=" + point_token(sp, d.w);
  cert.add_count("points", N);
  cert.add_count("classes", d.classes.size());

  uint64_t expect_classes = (N - 1) / 2;
  cert.add("class-count", d.classes.size() == expect_classes,
           d.classes.size() == expect_classes ? ""
                                              : "expected " + std::to_string(expect_classes));

  bool ok = true;
  std::string witness;
  std::vector<uint8_t> seen(N);
  std::vector<Triple> all;
  all.reserve(static_cast<size_t>(N) * (N - 1) / 6);
  for (const auto& cls : d.classes) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& blk : cls.blocks) {
      all.push_back(blk);
      for (Pt p : blk) {
        if (p >= N || seen[p]++) {
          if (ok) {
            ok = false;
            witness = "class " + cls.id.token(t) + " does not partition: " +
                      detail::triple_str(blk, p < N ? &sp : nullptr);
          }
        }
      }
    }
    if (ok)
      for (Pt p = 0; p < N; ++p)
        if (!seen[p]) {
          ok = false;
          witness = "class " + cls.id.token(t) + " misses point " + point_token(sp, p);
          break;
        }
  }
  cert.add("class-partition", ok, witness);

  Certificate sts = verify_sts(all, N, &sp);
  cert.add_count("blocks", all.size());
  for (const auto& c : sts.checks)
    if (c.name != "block-count")  // implied by class counts; avoid double report
      cert.add(c.name, c.pass, c.witness);
  return cert;
}

// Accumulates the designs of a candidate large set and certifies that their
// blocks cover every 3-subset of the point set exactly once.  Up to roughly
// 585 points each triple's first owner is remembered so duplicates name both
// designs; beyond that only a presence bit is kept.
class LargeSetVerifier {
 public:
  explicit LargeSetVerifier(const VecSpace& sp, uint32_t t)
      : sp_(&sp), t_(t), rank_(sp.npoints()) {
    owner_mode_ = rank_.total() <= (1ull << 28) / 8;
    if (owner_mode_)
      owner_.assign(rank_.total(), 0);
    else
      seen_.assign(rank_.total(), false);
  }

  void add_design(const Design& d) {
    ++designs_;
    Certificate kts = verify_kts(d, *sp_, t_);
    if (!kts.pass() && designs_ok_) {
      designs_ok_ = false;
      for (const auto& c : kts.checks)
        if (!c.pass) {
          designs_witness_ = kts.subject + ": " + c.name +
                             (c.witness.empty() ? "" : " (" + c.witness + ")");
          break;
        }
    }
    for (size_t ci = 0; ci < d.classes.size(); ++ci)
      for (const auto& blk : d.classes[ci].blocks) {
        ++blocks_;
        if (!(blk[0] < blk[1] && blk[1] < blk[2] && blk[2] < sp_->npoints())) continue;
        uint64_t r = rank_.rank(blk);
        if (owner_mode_) {
          if (owner_[r]) {
            record_duplicate(blk, owner_[r], d, ci);
          } else {
            owner_[r] = encode(d.w, ci);
          }
        } else {
          if (seen_[r]) {
            if (dup_ok_) {
              dup_ok_ = false;
              dup_witness_ = "triple " + detail::triple_str(blk, sp_) + " appears twice; second: " +
                             owner_str(encode(d.w, ci));
            }
          } else {
            seen_[r] = true;
          }
        }
      }
  }

  Certificate finish() {
    Certificate cert;
    cert.subject = "large set on " + std::to_string(sp_->npoints()) + " points";
    cert.add_count("points", sp_->npoints());
    cert.add_count("designs", designs_);
    cert.add_count("blocks", blocks_);
    cert.add_count("triples", rank_.total());

    cert.add("designs-valid", designs_ok_, designs_witness_);
    cert.add("design-count", designs_ == sp_->size(),
             designs_ == sp_->size() ? "" : "expected " + std::to_string(sp_->size()));
    cert.add("no-duplicate", dup_ok_, dup_witness_);

    uint64_t covered = 0;
    std::string miss;
    if (owner_mode_) {
      for (uint64_t r = 0; r < rank_.total(); ++r)
        if (owner_[r]) ++covered;
        else if (miss.empty())
          miss = "triple " + detail::triple_str(rank_.unrank(r), sp_) + " uncovered";
    } else {
      for (uint64_t r = 0; r < rank_.total(); ++r)
        if (seen_[r]) ++covered;
        else if (miss.empty())
          miss = "triple " + detail::triple_str(rank_.unrank(r), sp_) + " uncovered";
    }
    cert.add_count("covered-triples", covered);
    cert.add("triple-cover", covered == rank_.total(), miss);
    return cert;
  }

 private:
  const VecSpace* sp_;
  uint32_t t_;
  TripleRank rank_;
  bool owner_mode_ = true;
  std::vector<uint64_t> owner_;   // (w+1) << 20 | class index; 0 = unseen
  std::vector<bool> seen_;
  uint64_t designs_ = 0, blocks_ = 0;
  bool designs_ok_ = true, dup_ok_ = true;
  std::string designs_witness_, dup_witness_;

  static uint64_t encode(Pt w, size_t cls) {
    return (static_cast<uint64_t>(w) + 1) << 20 | static_cast<uint64_t>(cls);
  }

  std::string owner_str(uint64_t code) const {
    Pt w = static_cast<Pt>((code >> 20) - 1);
    return "design w=" + point_token(*sp_, w) + " class #" + std::to_string(code & 0xFFFFF);
  }

  void record_duplicate(const Triple& blk, uint64_t first, const Design& d, size_t ci) {
    if (!dup_ok_) return;
    dup_ok_ = false;
    dup_witness_ = "triple " + detail::triple_str(blk, sp_) + " in " + owner_str(first) +
                   " and " + owner_str(encode(d.w, ci));
  }
};

// Checks the closed-form census of the construction against brute force on
// GF(q)^n: zero-sum triple counts, class sizes, and block totals.  Intended
// for q^n up to a few hundred.
inline Certificate verify_counts(uint32_t p, uint32_t k, uint32_t n) {
  FieldTable f = FieldTable::create(p, k);
  Geometry geom(f, n);
  const VecSpace& sp = geom.space();
  const uint64_t q = f.q(), v = sp.npoints(), qn = sp.size();

  Certificate cert;
  cert.subject = "census q=" + std::to_string(q) + " n=" + std::to_string(n);
  cert.add_count("space", qn);

  // Brute force: unordered zero-sum triples of distinct finite points,
  // split into collinear and non-collinear.
  uint64_t zs_col = 0, zs_non = 0;
  for (Pt x = 0; x < qn; ++x) {
    Vec vx = sp.vec(x);
    for (Pt y = x + 1; y < qn; ++y) {
      Vec vy = sp.vec(y);
      Vec vz = sp.neg(sp.add(vx, vy));
      Pt z = sp.pt(vz);
      if (z <= y) continue;
      bool collinear = geom.line_of(sp.sub(vy, vx)) == geom.line_of(sp.sub(vz, vx));
      (collinear ? zs_col : zs_non)++;
    }
  }
  cert.add_count("zero-sum-collinear", zs_col);
  cert.add_count("zero-sum-noncollinear", zs_non);

  // Brute force over all 3-subsets of finite points: how many are
  // non-collinear?  O(q^3n), so callers keep q^n small.
  uint64_t non_col = 0;
  for (Pt x = 0; x < qn; ++x) {
    Vec vx = sp.vec(x);
    for (Pt y = x + 1; y < qn; ++y) {
      uint32_t l1 = geom.line_of(sp.sub(sp.vec(y), vx));
      for (Pt z = y + 1; z < qn; ++z)
        if (geom.line_of(sp.sub(sp.vec(z), vx)) != l1) ++non_col;
    }
  }
  cert.add_count("noncollinear", non_col);

  // Zero-sum triples within one copy of GF(q), for the per-line identity.
  uint64_t zs_line = 0;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = a + 1; b < q; ++b) {
      Fe c = f.neg(f.add(f.element(a), f.element(b)));
      if (c.v > b) ++zs_line;
    }

  uint64_t lines = geom.line_count();
  auto eq = [&](const std::string& name, uint64_t got, uint64_t want) {
    cert.add(name, got == want,
             got == want ? "" : std::to_string(got) + " != " + std::to_string(want));
  };
  eq("line-count", lines, (qn - 1) / (q - 1));
  eq("noncollinear-census", zs_non, (qn - q) * (qn - 1) / 6);
  // Every non-collinear triple is a unique translate of a zero-sum one
  // (shift by the centroid), so the totals are tied together.
  eq("noncollinear-total", non_col, qn * (qn - q) * (qn - 1) / 6);
  eq("noncollinear-nonzero-sum", non_col - zs_non, (qn - q) * (qn - 1) * (qn - 1) / 6);
  eq("collinear-census", zs_col, lines * zs_line);
  eq("frame-class-size", (qn - q) / 3 * 3, qn - q);
  eq("frame-class-count", lines * 3 * f.t() * ((qn - q) / 3), zs_non);
  eq("class-block-count", (v / 3) * ((qn + 1) / 2), v * (v - 1) / 6);
  eq("cover-count", qn * (v * (v - 1) / 6),
     v * (v - 1) * (v - 2) / 6);
  return cert;
}

// Locate consistency: for a batch of triples, the class named by
// locate_triple, when built, must contain the triple.  Runs over every
// 3-subset when that is small, otherwise over `samples` random ones.
inline Certificate cross_check_locate(const Construction& c, uint64_t samples = 10000,
                                      uint64_t seed = 20260814) {
  const VecSpace& sp = c.space();
  TripleRank rank(sp.npoints());
  Certificate cert;
  cert.subject = "locate cross-check on " + std::to_string(sp.npoints()) + " points";

  bool exhaustive = rank.total() <= 30000;
  uint64_t n_checked = exhaustive ? rank.total() : samples;
  cert.add_count("triples-checked", n_checked);
  cert.add_count("exhaustive", exhaustive ? 1 : 0);

  std::mt19937_64 rng(seed);
  bool ok = true;
  std::string witness;
  for (uint64_t i = 0; i < n_checked && ok; ++i) {
    uint64_t r = exhaustive ? i : rng() % rank.total();
    Triple t = rank.unrank(r);
    try {
      auto [w, id] = c.locate_triple(t);
      ParallelClass cls = c.build_class(w, id);
      if (!std::binary_search(cls.begin(), cls.end(), t)) {
        ok = false;
        witness = "triple " + detail::triple_str(t, &sp) + " not in located class w=" +
                  point_token(sp, w) + " " + id.token(c.t());
      }
    } catch (const std::exception& e) {
      ok = false;
      witness = "triple " + detail::triple_str(t, &sp) + ": " + e.what();
    }
  }
  cert.add("locate-membership", ok, witness);
  return cert;
}

}  // namespace lkts
