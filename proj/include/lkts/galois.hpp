#pragma once

// Arithmetic for GF(p^k) with q = p^k = 6t + 1, the field sizes for which an
// order-3 multiplicative character exists and 3 is invertible.  Elements are
// identified with their index: the base-p encoding of the coefficient vector
// of the polynomial representative, index(e) = sum coeffs[i] * p^i.  For
// prime q the index is just the residue.  Multiplication runs on exp/log
// tables built from a fixed generator, so all fields here are desk scale
// (q <= 65535 by construction of the index type).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lkts {

// A field element, by index.  Meaningful only relative to a FieldTable.
struct Fe {
  uint16_t v = 0;
  friend constexpr bool operator==(Fe a, Fe b) { return a.v == b.v; }
  friend constexpr bool operator!=(Fe a, Fe b) { return a.v != b.v; }
  friend constexpr bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

struct PrimePowerSpec {
  uint32_t p = 0;  // characteristic, prime, not 2 or 3
  uint32_t k = 0;  // extension degree
  uint32_t q = 0;  // p^k
  uint32_t t = 0;  // (q - 1) / 6
};

class FieldTable {
 public:
  // Builds the field.  The reducing modulus is the lexicographically
  // smallest monic irreducible of degree k over GF(p), coefficients compared
  // low degree first (for k = 1 the modulus is x).  The generator defaults
  // to the element of smallest index with multiplicative order q - 1; pass
  // generator_index != 0 to override (it is validated).  Throws
  // std::invalid_argument on p not prime, p in {2,3}, q not 1 mod 6, or an
  // override that is not primitive.
  static FieldTable create(uint32_t p, uint32_t k, uint32_t generator_index = 0);

  const PrimePowerSpec& spec() const { return spec_; }
  uint32_t p() const { return spec_.p; }
  uint32_t k() const { return spec_.k; }
  uint32_t q() const { return spec_.q; }
  uint32_t t() const { return spec_.t; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe generator() const { return g_; }
  // omega = g^(2t), a fixed primitive cube root of unity.
  Fe omega() const { return omega_; }
  Fe omega2() const { return omega2_; }

  Fe element(uint32_t index) const {
    if (index >= spec_.q) throw std::out_of_range("element index out of range");
    return Fe{static_cast<uint16_t>(index)};
  }

  // Coefficient vector of an element, low degree first, length k.
  std::vector<uint16_t> coeffs(Fe a) const {
    std::vector<uint16_t> c(spec_.k);
    uint32_t x = a.v;
    for (uint32_t i = 0; i < spec_.k; ++i) { c[i] = x % spec_.p; x /= spec_.p; }
    return c;
  }

  // Modulus coefficients, low degree first, length k + 1, monic.
  const std::vector<uint16_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  Fe add(Fe a, Fe b) const {
    if (spec_.k == 1) {
      uint32_t s = a.v + b.v;
      if (s >= spec_.p) s -= spec_.p;
      return Fe{static_cast<uint16_t>(s)};
    }
    return add_general(a, b);
  }

  Fe neg(Fe a) const {
    if (spec_.k == 1) return Fe{static_cast<uint16_t>(a.v == 0 ? 0 : spec_.p - a.v)};
    return neg_general(a);
  }

  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    uint32_t e = log_[a.v] + log_[b.v];
    if (e >= spec_.q - 1) e -= spec_.q - 1;
    return Fe{exp_[e]};
  }

  Fe inv(Fe a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    uint32_t e = log_[a.v];
    return Fe{exp_[e == 0 ? 0 : spec_.q - 1 - e]};
  }

  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  Fe pow(Fe a, int64_t e) const {
    if (a.v == 0) {
      if (e > 0) return Fe{0};
      if (e == 0) return Fe{1};
      throw std::domain_error("negative power of zero");
    }
    int64_t m = spec_.q - 1;
    int64_t x = (static_cast<int64_t>(log_[a.v]) * (e % m)) % m;
    if (x < 0) x += m;
    return Fe{exp_[x]};
  }

  // Discrete log base the generator; in [0, q - 1).  Throws on zero.
  uint32_t dlog(Fe a) const {
    if (a.v == 0) throw std::domain_error("discrete log of zero");
    return log_[a.v];
  }

  // g^e for any integer e.
  Fe exp(int64_t e) const {
    int64_t m = spec_.q - 1;
    int64_t x = e % m;
    if (x < 0) x += m;
    return Fe{exp_[x]};
  }

 private:
  PrimePowerSpec spec_;
  std::vector<uint16_t> modulus_;
  Fe g_, omega_, omega2_;
  std::vector<uint16_t> exp_;  // size q - 1
  std::vector<uint16_t> log_;  // size q, log_[0] unused

  Fe add_general(Fe a, Fe b) const {
    uint32_t x = a.v, y = b.v, out = 0, place = 1;
    for (uint32_t i = 0; i < spec_.k; ++i) {
      uint32_t s = x % spec_.p + y % spec_.p;
      if (s >= spec_.p) s -= spec_.p;
      out += s * place;
      place *= spec_.p;
      x /= spec_.p;
      y /= spec_.p;
    }
    return Fe{static_cast<uint16_t>(out)};
  }

  Fe neg_general(Fe a) const {
    uint32_t x = a.v, out = 0, place = 1;
    for (uint32_t i = 0; i < spec_.k; ++i) {
      uint32_t d = x % spec_.p;
      out += (d == 0 ? 0 : spec_.p - d) * place;
      place *= spec_.p;
      x /= spec_.p;
    }
    return Fe{static_cast<uint16_t>(out)};
  }
};

namespace detail {

inline bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Dense polynomials over GF(p), coefficients low degree first.
using Poly = std::vector<uint16_t>;

inline Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly poly_mul(const Poly& f, const Poly& g, uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = static_cast<uint16_t>((h[i + j] + uint32_t(f[i]) * g[j]) % p);
  return poly_trim(std::move(h));
}

// Remainder of f modulo a monic m.
inline Poly poly_mod(Poly f, const Poly& m, uint32_t p) {
  f = poly_trim(std::move(f));
  size_t dm = m.size() - 1;
  while (f.size() > dm) {
    uint32_t lead = f.back();
    size_t shift = f.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i < m.size(); ++i) {
        uint32_t sub = (lead * m[i]) % p;
        uint32_t cur = f[shift + i];
        f[shift + i] = static_cast<uint16_t>((cur + p - sub) % p);
      }
    }
    f = poly_trim(std::move(f));
    if (f.empty()) break;
  }
  return f;
}

inline Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // Make b monic before taking a remainder.
    uint32_t lead = b.back();
    if (lead != 1) {
      // Scalar inverse by Fermat.
      uint32_t li = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) li = (li * base) % p;
        base = (base * base) % p;
        e >>= 1;
      }
      for (auto& c : b) c = static_cast<uint16_t>((uint32_t(c) * li) % p);
    }
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin irreducibility test for a monic f of degree k over GF(p).
inline bool poly_irreducible(const Poly& f, uint32_t p) {
  uint32_t k = static_cast<uint32_t>(f.size() - 1);
  Poly x{0, 1};
  for (uint32_t ell : prime_factors(k)) {
    uint64_t e = 1;
    for (uint32_t i = 0; i < k / ell; ++i) e *= p;
    Poly xe = poly_powmod(x, e, f, p);  // x^(p^(k/ell)) mod f
    // gcd(x^(p^(k/ell)) - x, f) must be 1.
    Poly diff = xe;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<uint16_t>((diff[1] + p - 1) % p);
    if (poly_gcd(diff, f, p).size() != 1) return false;
  }
  uint64_t e = 1;
  for (uint32_t i = 0; i < k; ++i) e *= p;
  Poly xe = poly_powmod(x, e, f, p);  // x^(p^k) mod f must be x
  return poly_trim(xe) == x;
}

}  // namespace detail

inline FieldTable FieldTable::create(uint32_t p, uint32_t k, uint32_t generator_index) {
  if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p == 2 || p == 3) throw std::invalid_argument("p must not be 2 or 3");
  if (k == 0) throw std::invalid_argument("k must be positive");
  uint64_t q64 = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q64 *= p;
    if (q64 > 65535) throw std::invalid_argument("q exceeds supported size");
  }
  uint32_t q = static_cast<uint32_t>(q64);
  if (q % 6 != 1) throw std::invalid_argument("q must be 1 mod 6");

  FieldTable f;
  f.spec_ = PrimePowerSpec{p, k, q, (q - 1) / 6};

  // Modulus: for k = 1 take x; otherwise scan monic polynomials in
  // lexicographic coefficient order for the first irreducible.
  if (k == 1) {
    f.modulus_ = {0, 1};
  } else {
    std::vector<uint16_t> lower(k, 0);  // non-leading coefficients
    bool found = false;
    while (!found) {
      detail::Poly cand(lower.begin(), lower.end());
      cand.push_back(1);
      if (detail::poly_irreducible(cand, p)) {
        f.modulus_.assign(cand.begin(), cand.end());
        found = true;
        break;
      }
      // Increment with c[k-1] as the fastest digit so that comparison is
      // low degree first.
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && lower[i] == p - 1) { lower[i] = 0; --i; }
      if (i < 0) break;
      ++lower[i];
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }

  // Raw multiply through the polynomial representation; used only while the
  // exp/log tables are being built.
  auto decode = [&](uint32_t idx) {
    detail::Poly c(k);
    for (uint32_t i = 0; i < k; ++i) { c[i] = idx % p; idx /= p; }
    return detail::poly_trim(std::move(c));
  };
  auto encode = [&](const detail::Poly& c) {
    uint32_t idx = 0, place = 1;
    for (uint32_t i = 0; i < k; ++i) {
      idx += (i < c.size() ? c[i] : 0) * place;
      place *= p;
    }
    return idx;
  };
  detail::Poly mod(f.modulus_.begin(), f.modulus_.end());
  auto raw_mul = [&](uint32_t a, uint32_t b) {
    return encode(detail::poly_mod(detail::poly_mul(decode(a), decode(b), p), mod, p));
  };
  auto raw_pow = [&](uint32_t a, uint32_t e) {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  auto factors = detail::prime_factors(q - 1);
  auto is_primitive = [&](uint32_t x) {
    for (uint32_t ell : factors)
      if (raw_pow(x, (q - 1) / ell) == 1) return false;
    return true;
  };

  uint32_t g = 0;
  if (generator_index != 0) {
    if (generator_index >= q || !is_primitive(generator_index))
      throw std::invalid_argument("generator override is not a primitive element");
    g = generator_index;
  } else {
    for (uint32_t x = 2; x < q; ++x) {
      if (is_primitive(x)) { g = x; break; }
    }
    if (g == 0) throw std::logic_error("no primitive element found");
  }
  f.g_ = Fe{static_cast<uint16_t>(g)};

  f.exp_.assign(q - 1, 0);
  f.log_.assign(q, 0);
  uint32_t acc = 1;
  for (uint32_t e = 0; e < q - 1; ++e) {
    f.exp_[e] = static_cast<uint16_t>(acc);
    f.log_[acc] = static_cast<uint16_t>(e);
    acc = raw_mul(acc, g);
  }
  if (acc != 1) throw std::logic_error("generator order mismatch");

  f.omega_ = Fe{f.exp_[2 * f.spec_.t]};
  f.omega2_ = Fe{f.exp_[4 * f.spec_.t]};
  // omega is a primitive cube root of unity: omega^2 + omega + 1 = 0.
  Fe check = f.add(f.add(f.mul(f.omega_, f.omega_), f.omega_), f.one());
  if (f.omega_ == f.one() || check != f.zero())
    throw std::logic_error("cube root of unity check failed");
  return f;
}

inline std::string FieldTable::modulus_string() const {
  std::string s;
  for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
    uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  if (s.empty()) s = "0";
  return s;
}

}  // namespace lkts
