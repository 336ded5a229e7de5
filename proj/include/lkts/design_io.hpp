#pragma once

// Text serialization of single designs.
//
//   KTS-DESIGN order=171 q=13 p=13 k=1 n=2 w=0:0 format=canonical
//   star inf1,inf2,0:0;1:0,4:0,5:0;...
//   u1c1 inf1,1:0,6:0;...
//   ...
//
// One class per line: its token, a space, then the blocks joined by ';'
// with points joined by ','.  Points are coordinate tuples "a:b:..." or
// inf1 / inf2.  The alternative format=packed (order 171 only) encodes a
// point as two characters, one per coordinate, 0-9A-C, with XX and YY for
// the infinities; it mirrors the compact style used in published block
// listings of this order, which makes eyeball comparison practical.
//
// Rendering is deterministic: classes in canonical order (star, then each
// line by class index), blocks sorted within a class.  The parser accepts
// classes in any order but rejects duplicate or malformed tokens; content
// level problems are left to the verifier so that damaged files can still
// be loaded and then certified as bad.

#include "lkts/construction.hpp"
#include "lkts/textio.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace lkts {

class DesignCodec {
 public:
  DesignCodec(uint32_t p, uint32_t k, uint32_t n)
      : field_(FieldTable::create(p, k)), space_(field_, n) {
    uint64_t lines = 1, pow = 1;
    for (uint32_t i = 1; i < n; ++i) {
      pow *= field_.q();
      lines += pow;
    }
    line_count_ = static_cast<uint32_t>(lines);  // (q^n - 1)/(q - 1)
  }

  DesignCodec(const DesignCodec&) = delete;
  DesignCodec& operator=(const DesignCodec&) = delete;

  const VecSpace& space() const { return space_; }
  const FieldTable& field() const { return field_; }
  uint32_t t() const { return field_.t(); }
  uint32_t line_count() const { return line_count_; }

  std::string point_label(Pt p) const { return point_token(space_, p); }

  Pt parse_point(const std::string& tok, const std::string& where, size_t line) const {
    if (tok == "inf1") return space_.inf1();
    if (tok == "inf2") return space_.inf2();
    auto parts = textio::split(tok, ':');
    if (parts.size() != space_.n())
      throw textio::ParseError(where, line,
                               "point " + tok + " needs " + std::to_string(space_.n()) +
                                   " coordinates");
    Vec v{std::vector<Fe>(space_.n())};
    for (uint32_t i = 0; i < space_.n(); ++i) {
      uint32_t c = textio::parse_uint(parts[i], where, line);
      if (c >= field_.q()) throw textio::ParseError(where, line, "coordinate out of range: " + tok);
      v.c[i] = Fe{static_cast<uint16_t>(c)};
    }
    return space_.pt(v);
  }

  void render(std::ostream& os, const Design& d, bool packed = false) const {
    if (packed && !packed_capable())
      throw std::invalid_argument("packed format is defined for order 171 only");
    os << "KTS-DESIGN order=" << space_.npoints() << " q=" << field_.q() << " p=" << field_.p()
       << " k=" << field_.k() << " n=" << space_.n() << " w=" << point_label(d.w)
       << " format=" << (packed ? "packed" : "canonical") << "\n";
    for (const auto& cls : d.classes) {
      os << cls.id.token(t());
      char sep = ' ';
      for (const auto& blk : cls.blocks) {
        os << sep;
        sep = ';';
        for (int i = 0; i < 3; ++i) {
          if (i) os << ',';
          os << (packed ? packed_label(blk[i]) : point_label(blk[i]));
        }
      }
      os << "\n";
    }
  }

  Design parse(std::istream& in, const std::string& name = "design") const {
    std::string raw, text;
    size_t ln = 0;
    auto next_line = [&](std::string& out) {
      while (std::getline(in, raw)) {
        ++ln;
        out = textio::trim(textio::strip_comment(raw));
        if (!out.empty()) return true;
      }
      return false;
    };

    if (!next_line(text)) throw textio::ParseError(name, ln, "missing header");
    auto toks = textio::split(text, ' ');
    if (toks.empty() || toks[0] != "KTS-DESIGN")
      throw textio::ParseError(name, ln, "expected KTS-DESIGN header");
    uint64_t order = 0, q = 0, p = 0, k = 0, n = 0;
    std::string wtok, format;
    for (auto& [key, val] : textio::parse_kv(toks)) {
      if (key == "order") order = textio::parse_uint(val, name, ln);
      else if (key == "q") q = textio::parse_uint(val, name, ln);
      else if (key == "p") p = textio::parse_uint(val, name, ln);
      else if (key == "k") k = textio::parse_uint(val, name, ln);
      else if (key == "n") n = textio::parse_uint(val, name, ln);
      else if (key == "w") wtok = val;
      else if (key == "format") format = val;
    }
    if (!order || !q || !p || !k || !n || wtok.empty() || format.empty())
      throw textio::ParseError(name, ln, "header needs order=, q=, p=, k=, n=, w=, format=");
    if (q != field_.q() || p != field_.p() || k != field_.k() || n != space_.n())
      throw textio::ParseError(name, ln, "header does not match this codec's parameters");
    if (order != space_.npoints())
      throw textio::ParseError(name, ln, "order must equal q^n + 2");
    bool packed = format == "packed";
    if (!packed && format != "canonical")
      throw textio::ParseError(name, ln, "format must be canonical or packed");
    if (packed && !packed_capable())
      throw textio::ParseError(name, ln, "packed format is defined for order 171 only");

    Design d;
    d.w = parse_point(wtok, name, ln);
    if (!space_.is_finite(d.w)) throw textio::ParseError(name, ln, "w must be a finite point");

    std::vector<char> seen(1 + static_cast<size_t>(line_count_) * 3 * t(), 0);
    while (next_line(text)) {
      auto parts = textio::split(text, ' ');
      if (parts.size() != 2)
        throw textio::ParseError(name, ln, "expected '<class-token> <blocks>'");
      ClassId id = [&] {
        try {
          return ClassId::from_token(parts[0], t(), line_count_);
        } catch (const std::exception& e) {
          throw textio::ParseError(name, ln, e.what());
        }
      }();
      size_t slot =
          id.is_star() ? 0 : 1 + (static_cast<size_t>(id.line) * 3 + id.b) * t() + id.a;
      if (seen[slot]) throw textio::ParseError(name, ln, "duplicate class " + parts[0]);
      seen[slot] = 1;
      ParallelClass blocks;
      for (const auto& btok : textio::split(parts[1], ';')) {
        auto pts = textio::split(btok, ',');
        if (pts.size() != 3) throw textio::ParseError(name, ln, "block must have 3 points");
        uint32_t a = parse_block_point(pts[0], packed, name, ln);
        uint32_t b = parse_block_point(pts[1], packed, name, ln);
        uint32_t c = parse_block_point(pts[2], packed, name, ln);
        if (a == b || b == c || a == c)
          throw textio::ParseError(name, ln, "block with repeated point");
        blocks.push_back(make_triple(a, b, c));
      }
      d.classes.push_back({id, std::move(blocks)});
    }
    if (d.classes.empty()) throw textio::ParseError(name, ln, "design has no classes");
    return d;
  }

 private:
  FieldTable field_;
  VecSpace space_;
  uint32_t line_count_;

  bool packed_capable() const { return field_.q() == 13 && space_.n() == 2; }

  static char digit_char(uint16_t v) { return v < 10 ? static_cast<char>('0' + v)
                                                     : static_cast<char>('A' + v - 10); }

  std::string packed_label(Pt p) const {
    if (p == space_.inf1()) return "XX";
    if (p == space_.inf2()) return "YY";
    Vec v = space_.vec(p);
    return {digit_char(v.c[0].v), digit_char(v.c[1].v)};
  }

  Pt parse_block_point(const std::string& tok, bool packed, const std::string& where,
                       size_t line) const {
    if (!packed) return parse_point(tok, where, line);
    if (tok == "XX") return space_.inf1();
    if (tok == "YY") return space_.inf2();
    if (tok.size() != 2) throw textio::ParseError(where, line, "bad point token: " + tok);
    auto decode = [&](char c) -> uint16_t {
      if (c >= '0' && c <= '9') return static_cast<uint16_t>(c - '0');
      if (c >= 'A' && c <= 'C') return static_cast<uint16_t>(c - 'A' + 10);
      throw textio::ParseError(where, line, "bad point token: " + tok);
    };
    Vec v{{Fe{decode(tok[0])}, Fe{decode(tok[1])}}};
    return space_.pt(v);
  }
};

}  // namespace lkts
