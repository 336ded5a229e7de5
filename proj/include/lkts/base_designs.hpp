#pragma once

// Base large sets: q pairwise disjoint Kirkman triple systems on
// Y = GF(q) + {inf1, inf2} that together cover every 3-subset of Y exactly
// once, with design i holding the block {inf1, inf2, i} in its class 0.
// These seed the order q^n + 2 construction.
//
// Points of Y are ids: [0, q) for field elements (by index), q for inf1,
// q + 1 for inf2.

#include "lkts/certificate.hpp"
#include "lkts/galois.hpp"
#include "lkts/textio.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace lkts {

using Triple = std::array<uint32_t, 3>;

inline Triple make_triple(uint32_t a, uint32_t b, uint32_t c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  if (a == b || b == c) throw std::invalid_argument("triple with repeated point");
  return Triple{a, b, c};
}

class BaseLargeSet {
 public:
  PrimePowerSpec qspec;
  bool compact = false;  // true when generated from design 0 by translation
  // classes[i][j]: sorted blocks of parallel class j of design i.
  std::vector<std::vector<std::vector<Triple>>> classes;

  uint32_t q() const { return qspec.q; }
  uint32_t npoints() const { return qspec.q + 2; }
  uint32_t inf1() const { return qspec.q; }
  uint32_t inf2() const { return qspec.q + 1; }
  uint32_t classes_per_design() const { return (qspec.q + 1) / 2; }
  uint32_t blocks_per_class() const { return (qspec.q + 2) / 3; }

  const std::vector<Triple>& cls(uint32_t design, uint32_t j) const {
    return classes.at(design).at(j);
  }

  // The unique (design, class) holding a block; index built by finalize().
  std::pair<uint32_t, uint32_t> locate_block(const Triple& t) const {
    uint64_t r = rank3(t);
    if (r >= index_.size() || index_[r].first < 0)
      throw std::invalid_argument("block not present in the base large set");
    return {static_cast<uint32_t>(index_[r].first), static_cast<uint32_t>(index_[r].second)};
  }

  uint64_t rank3(const Triple& t) const {
    auto c2 = [](uint64_t n) { return n * (n - 1) / 2; };
    auto c3 = [](uint64_t n) { return n * (n - 1) * (n - 2) / 6; };
    return c3(t[2]) + c2(t[1]) + t[0];
  }

  // Rebuilds the block index; later duplicates do not overwrite earlier
  // entries (validate_base reports duplication separately).
  void finalize() {
    uint64_t total = rank3(Triple{npoints() - 3, npoints() - 2, npoints() - 1}) + 1;
    index_.assign(total, {-1, -1});
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = 0; j < classes[i].size(); ++j)
        for (const auto& t : classes[i][j]) {
          auto& slot = index_[rank3(t)];
          if (slot.first < 0) slot = {static_cast<int16_t>(i), static_cast<int16_t>(j)};
        }
  }

 private:
  std::vector<std::pair<int16_t, int16_t>> index_;
};

namespace detail {

inline Triple translate_base_triple(const FieldTable& f, const Triple& t, Fe shift) {
  uint32_t q = f.q();
  std::array<uint32_t, 3> out{};
  for (int i = 0; i < 3; ++i)
    out[i] = t[i] < q ? f.add(Fe{static_cast<uint16_t>(t[i])}, shift).v : t[i];
  return make_triple(out[0], out[1], out[2]);
}

inline void sort_blocks(std::vector<Triple>& blocks) { std::sort(blocks.begin(), blocks.end()); }

// Expands design 0 into the full translation orbit D_i = D_0 + i.
inline BaseLargeSet expand_compact(const FieldTable& f,
                                   std::vector<std::vector<Triple>> design0) {
  BaseLargeSet b;
  b.qspec = f.spec();
  b.compact = true;
  b.classes.resize(f.q());
  for (uint32_t i = 0; i < f.q(); ++i) {
    b.classes[i].resize(design0.size());
    for (size_t j = 0; j < design0.size(); ++j) {
      auto& cls = b.classes[i][j];
      cls.reserve(design0[j].size());
      for (const auto& t : design0[j])
        cls.push_back(translate_base_triple(f, t, f.element(i)));
      sort_blocks(cls);
    }
  }
  b.finalize();
  return b;
}

}  // namespace detail

// Reindexes designs so that design i is the one containing {inf1, inf2, i},
// and cyclically rotates each design's classes so that this block sits in
// class 0.  Other class order is preserved.  Throws when the infinity blocks
// do not exist or collide.
inline BaseLargeSet normalize_base(BaseLargeSet raw) {
  const uint32_t q = raw.q(), i1 = raw.inf1(), i2 = raw.inf2();
  if (raw.classes.size() != q)
    throw std::invalid_argument("base large set must contain exactly q designs");
  std::vector<std::vector<std::vector<Triple>>> out(q);
  std::vector<bool> used(q, false);
  for (auto& design : raw.classes) {
    size_t inf_class = design.size();
    uint32_t anchor = q;
    for (size_t j = 0; j < design.size(); ++j) {
      for (const auto& t : design[j]) {
        if (t[1] == i1 && t[2] == i2) {
          if (inf_class != design.size())
            throw std::invalid_argument("design contains two infinity blocks");
          inf_class = j;
          anchor = t[0];
        }
      }
    }
    if (inf_class == design.size() || anchor >= q)
      throw std::invalid_argument("design lacks a block {inf1, inf2, x}");
    if (used[anchor])
      throw std::invalid_argument("two designs contain the infinity block of " +
                                  std::to_string(anchor));
    used[anchor] = true;
    auto& dst = out[anchor];
    dst.resize(design.size());
    for (size_t j = 0; j < design.size(); ++j)
      dst[j] = std::move(design[(inf_class + j) % design.size()]);
  }
  raw.classes = std::move(out);
  raw.finalize();
  return raw;
}

// The classical 13-design large set of Kirkman systems on 15 points,
// generated from design 0 by translation mod 13.
inline BaseLargeSet builtin_denniston15() {
  static const uint8_t kClasses[7][5][3] = {
      {{13, 14, 0}, {1, 4, 5}, {2, 6, 11}, {3, 7, 10}, {8, 9, 12}},
      {{13, 1, 6}, {14, 2, 8}, {0, 10, 12}, {3, 5, 9}, {4, 7, 11}},
      {{13, 2, 5}, {14, 4, 9}, {0, 3, 11}, {1, 7, 12}, {6, 8, 10}},
      {{13, 3, 12}, {14, 5, 7}, {0, 4, 6}, {1, 8, 11}, {2, 9, 10}},
      {{13, 4, 10}, {14, 11, 12}, {0, 5, 8}, {1, 2, 3}, {6, 7, 9}},
      {{13, 7, 8}, {14, 3, 6}, {0, 1, 9}, {2, 4, 12}, {5, 10, 11}},
      {{13, 9, 11}, {14, 1, 10}, {0, 2, 7}, {3, 4, 8}, {5, 6, 12}},
  };
  auto f = FieldTable::create(13, 1);
  std::vector<std::vector<Triple>> d0(7);
  for (int j = 0; j < 7; ++j) {
    for (int b = 0; b < 5; ++b)
      d0[j].push_back(make_triple(kClasses[j][b][0], kClasses[j][b][1], kClasses[j][b][2]));
    detail::sort_blocks(d0[j]);
  }
  return detail::expand_compact(f, std::move(d0));
}

namespace detail {

inline uint32_t parse_base_point(const std::string& tok, uint32_t q, const std::string& where,
                                 size_t line) {
  if (tok == "inf1") return q;
  if (tok == "inf2") return q + 1;
  uint32_t v = textio::parse_uint(tok, where, line);
  if (v >= q) throw textio::ParseError(where, line, "point index " + tok + " out of range");
  return v;
}

inline std::vector<Triple> parse_base_class(const std::string& text, uint32_t q,
                                            const std::string& where, size_t line) {
  std::vector<Triple> blocks;
  for (const auto& btok : textio::split(text, ';')) {
    auto pts = textio::split(btok, ',');
    if (pts.size() != 3) throw textio::ParseError(where, line, "block must have 3 points");
    uint32_t a = parse_base_point(pts[0], q, where, line);
    uint32_t b = parse_base_point(pts[1], q, where, line);
    uint32_t c = parse_base_point(pts[2], q, where, line);
    if (a == b || b == c || a == c)
      throw textio::ParseError(where, line, "block with repeated point");
    blocks.push_back(make_triple(a, b, c));
  }
  return blocks;
}

inline std::string base_point_token(uint32_t p, uint32_t q) {
  if (p == q) return "inf1";
  if (p == q + 1) return "inf2";
  return std::to_string(p);
}

}  // namespace detail

// Reads the base large set format:
//
//   BASE-LKTS q=13 p=13 k=1 form=compact
//   inf1,inf2,0 ; 1,4,5 ; 2,6,11 ; 3,7,10 ; 8,9,12
//   ...                          ((q+1)/2 class lines of design 0)
//
// or form=full with q sections, each "design <label>" followed by the
// (q+1)/2 class lines.  '#' starts a comment; whitespace is free.  Full-form
// designs are normalized on load, so section labels only aid error messages.
inline BaseLargeSet load_base(std::istream& in, const std::string& name = "base") {
  std::string line;
  size_t ln = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++ln;
      out = textio::trim(textio::strip_comment(line));
      if (!out.empty()) return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw textio::ParseError(name, ln, "missing header");
  auto toks = textio::split(header, ' ');
  if (toks.empty() || toks[0] != "BASE-LKTS")
    throw textio::ParseError(name, ln, "expected BASE-LKTS header");
  uint32_t q = 0, p = 0, k = 0;
  std::string form;
  for (auto& [key, val] : textio::parse_kv(toks)) {
    if (key == "q") q = textio::parse_uint(val, name, ln);
    else if (key == "p") p = textio::parse_uint(val, name, ln);
    else if (key == "k") k = textio::parse_uint(val, name, ln);
    else if (key == "form") form = val;
  }
  if (q == 0 || p == 0 || k == 0 || form.empty())
    throw textio::ParseError(name, ln, "header needs q=, p=, k=, form=");
  if (form != "compact" && form != "full")
    throw textio::ParseError(name, ln, "form must be compact or full");

  FieldTable f = [&] {
    try {
      return FieldTable::create(p, k);
    } catch (const std::exception& e) {
      throw textio::ParseError(name, ln, e.what());
    }
  }();
  if (f.q() != q) throw textio::ParseError(name, ln, "q does not equal p^k");

  const uint32_t classes_per_design = (q + 1) / 2;
  std::string text;

  if (form == "compact") {
    std::vector<std::vector<Triple>> d0;
    for (uint32_t j = 0; j < classes_per_design; ++j) {
      if (!next_line(text)) throw textio::ParseError(name, ln, "missing class line");
      d0.push_back(detail::parse_base_class(text, q, name, ln));
      if (j == 0) {
        bool has_inf = false;
        for (const auto& t : d0[0]) has_inf |= t == make_triple(0, q, q + 1);
        if (!has_inf)
          throw textio::ParseError(name, ln, "compact form: line 0 must contain inf1,inf2,0");
      }
    }
    if (next_line(text)) throw textio::ParseError(name, ln, "trailing content");
    return detail::expand_compact(f, std::move(d0));
  }

  BaseLargeSet raw;
  raw.qspec = f.spec();
  raw.compact = false;
  for (uint32_t i = 0; i < q; ++i) {
    if (!next_line(text)) throw textio::ParseError(name, ln, "missing design section");
    auto st = textio::split(text, ' ');
    if (st.size() != 2 || st[0] != "design")
      throw textio::ParseError(name, ln, "expected 'design <label>'");
    std::vector<std::vector<Triple>> design;
    for (uint32_t j = 0; j < classes_per_design; ++j) {
      if (!next_line(text)) throw textio::ParseError(name, ln, "missing class line");
      design.push_back(detail::parse_base_class(text, q, name, ln));
    }
    raw.classes.push_back(std::move(design));
  }
  if (next_line(text)) throw textio::ParseError(name, ln, "trailing content");
  return normalize_base(std::move(raw));
}

inline void render_base(std::ostream& os, const BaseLargeSet& b) {
  os << "BASE-LKTS q=" << b.q() << " p=" << b.qspec.p << " k=" << b.qspec.k
     << " form=" << (b.compact ? "compact" : "full") << "\n";
  auto emit_class = [&](const std::vector<Triple>& cls) {
    for (size_t bi = 0; bi < cls.size(); ++bi) {
      if (bi) os << " ; ";
      os << detail::base_point_token(cls[bi][0], b.q()) << ","
         << detail::base_point_token(cls[bi][1], b.q()) << ","
         << detail::base_point_token(cls[bi][2], b.q());
    }
    os << "\n";
  };
  if (b.compact) {
    for (const auto& cls : b.classes[0]) emit_class(cls);
    return;
  }
  for (size_t i = 0; i < b.classes.size(); ++i) {
    os << "design " << i << "\n";
    for (const auto& cls : b.classes[i]) emit_class(cls);
  }
}

// Full structural certification: shape counts, per-class partitions, the
// infinity-block convention, each design a Steiner system on q + 2 points,
// and the designs together an exact cover of all 3-subsets.
inline Certificate validate_base(const BaseLargeSet& b) {
  Certificate cert;
  const uint32_t q = b.q(), N = b.npoints();
  cert.subject = "base large set q=" + std::to_string(q);
  cert.add_count("designs", b.classes.size());
  cert.add_count("points", N);

  bool shape_ok = b.classes.size() == q;
  std::string shape_witness = shape_ok ? "" : "design count " + std::to_string(b.classes.size());
  uint64_t blocks_total = 0;
  for (size_t i = 0; shape_ok && i < b.classes.size(); ++i) {
    if (b.classes[i].size() != b.classes_per_design()) {
      shape_ok = false;
      shape_witness = "design " + std::to_string(i) + " has " +
                      std::to_string(b.classes[i].size()) + " classes";
      break;
    }
    for (const auto& cls : b.classes[i]) {
      blocks_total += cls.size();
      if (cls.size() != b.blocks_per_class()) {
        shape_ok = false;
        shape_witness = "design " + std::to_string(i) + " has a class of " +
                        std::to_string(cls.size()) + " blocks";
        break;
      }
    }
  }
  cert.add_count("blocks", blocks_total);
  cert.add("shape", shape_ok, shape_witness);
  if (!shape_ok) return cert;

  auto block_str = [&](const Triple& t) {
    return detail::base_point_token(t[0], q) + "," + detail::base_point_token(t[1], q) + "," +
           detail::base_point_token(t[2], q);
  };

  // Each class partitions Y.
  {
    bool ok = true;
    std::string witness;
    std::vector<uint8_t> seen(N);
    for (size_t i = 0; ok && i < q; ++i)
      for (size_t j = 0; ok && j < b.classes[i].size(); ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (const auto& t : b.classes[i][j])
          for (uint32_t p : t) {
            if (seen[p]++) {
              ok = false;
              witness = "design " + std::to_string(i) + " class " + std::to_string(j) +
                        " repeats point " + detail::base_point_token(p, q);
            }
          }
        for (uint32_t p = 0; ok && p < N; ++p)
          if (!seen[p]) {
            ok = false;
            witness = "design " + std::to_string(i) + " class " + std::to_string(j) +
                      " misses point " + detail::base_point_token(p, q);
          }
      }
    cert.add("class-partition", ok, witness);
  }

  // Design i carries {inf1, inf2, i} in class 0.
  {
    bool ok = true;
    std::string witness;
    for (uint32_t i = 0; ok && i < q; ++i) {
      Triple want = make_triple(i, b.inf1(), b.inf2());
      bool found = false;
      for (const auto& t : b.cls(i, 0)) found |= t == want;
      if (!found) {
        ok = false;
        witness = "design " + std::to_string(i) + " class 0 lacks " + block_str(want);
      }
    }
    cert.add("infinity-block", ok, witness);
  }

  // Pair coverage inside each design.
  {
    bool ok = true;
    std::string witness;
    std::vector<uint8_t> pairs(N * N);
    for (uint32_t i = 0; ok && i < q; ++i) {
      std::fill(pairs.begin(), pairs.end(), 0);
      for (const auto& cls : b.classes[i])
        for (const auto& t : cls)
          for (int a = 0; a < 3 && ok; ++a)
            for (int bb = a + 1; bb < 3; ++bb) {
              if (pairs[t[a] * N + t[bb]]++) {
                ok = false;
                witness = "design " + std::to_string(i) + " covers pair " +
                          detail::base_point_token(t[a], q) + "," +
                          detail::base_point_token(t[bb], q) + " twice";
              }
            }
      // Block count q(q+2)/6 per design forces full coverage once no pair repeats.
      for (uint32_t x = 0; ok && x < N; ++x)
        for (uint32_t y = x + 1; y < N; ++y)
          if (!pairs[x * N + y]) {
            ok = false;
            witness = "design " + std::to_string(i) + " misses pair " +
                      detail::base_point_token(x, q) + "," + detail::base_point_token(y, q);
            break;
          }
    }
    cert.add("pair-coverage", ok, witness);
  }

  // Exact cover of all 3-subsets across designs.
  {
    bool ok = true;
    std::string witness;
    uint64_t total = static_cast<uint64_t>(N) * (N - 1) * (N - 2) / 6;
    std::vector<uint8_t> seen(total, 0);
    for (uint32_t i = 0; ok && i < q; ++i)
      for (const auto& cls : b.classes[i])
        for (const auto& t : cls) {
          if (seen[b.rank3(t)]++) {
            ok = false;
            witness = "block " + block_str(t) + " appears in two designs";
            break;
          }
        }
    uint64_t covered = 0;
    for (auto s : seen) covered += s;
    cert.add_count("distinct-blocks", covered);
    if (ok && covered != total) {
      ok = false;
      for (uint64_t r = 0; r < total; ++r)
        if (!seen[r]) {
          witness = "some 3-subset uncovered (rank " + std::to_string(r) + ")";
          break;
        }
    }
    cert.add("triple-cover", ok, witness);
  }
  return cert;
}

}  // namespace lkts
