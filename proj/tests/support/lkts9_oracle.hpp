#pragma once

// Search oracle for the q = 7 base fixture: builds a large set of Kirkman
// systems on 9 points from first principles, independent of the library's
// construction code.  Points are 0..6 = GF(7), 7 = inf1, 8 = inf2.
//
// Strategy: enumerate every Steiner triple system on the 9 labeled points
// (there are 840), resolve each into its unique set of 4 parallel classes,
// then backtrack for 7 pairwise disjoint systems; 7 * 12 = 84 = C(9,3), so
// disjointness forces an exact cover.  All choices are made in ascending
// order, so the result is deterministic.

#include "lkts/base_designs.hpp"

#include <bitset>
#include <cstdint>
#include <vector>

namespace lkts_test {

using lkts::Triple;

constexpr uint32_t kN9 = 9;

inline uint32_t rank9(const Triple& t) {
  auto c2 = [](uint32_t n) { return n * (n - 1) / 2; };
  auto c3 = [](uint32_t n) { return n * (n - 1) * (n - 2) / 6; };
  return c3(t[2]) + c2(t[1]) + t[0];
}

struct Sts9 {
  std::vector<Triple> blocks;           // 12, ascending
  std::bitset<84> mask;                 // triple ranks
  std::vector<std::vector<Triple>> resolution;  // 4 classes of 3 blocks
};

inline void enumerate_sts9_rec(std::vector<Triple>& blocks, std::vector<uint8_t>& pair_used,
                               std::vector<Sts9>& out) {
  uint32_t a = kN9, b = kN9;
  for (uint32_t x = 0; x < kN9 && a == kN9; ++x)
    for (uint32_t y = x + 1; y < kN9; ++y)
      if (!pair_used[x * kN9 + y]) {
        a = x;
        b = y;
        break;
      }
  if (a == kN9) {
    Sts9 s;
    s.blocks = blocks;
    for (const auto& t : blocks) s.mask.set(rank9(t));
    out.push_back(std::move(s));
    return;
  }
  for (uint32_t c = b + 1; c < kN9; ++c) {
    if (pair_used[a * kN9 + c] || pair_used[b * kN9 + c]) continue;
    pair_used[a * kN9 + b] = pair_used[a * kN9 + c] = pair_used[b * kN9 + c] = 1;
    blocks.push_back(Triple{a, b, c});
    enumerate_sts9_rec(blocks, pair_used, out);
    blocks.pop_back();
    pair_used[a * kN9 + b] = pair_used[a * kN9 + c] = pair_used[b * kN9 + c] = 0;
  }
}

inline void resolve_rec(const std::vector<Triple>& blocks, std::vector<uint8_t>& used,
                        std::vector<std::vector<Triple>>& classes, size_t& solutions,
                        std::vector<std::vector<Triple>>& found) {
  size_t first = blocks.size();
  for (size_t i = 0; i < blocks.size(); ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first == blocks.size()) {
    ++solutions;
    if (solutions == 1) found = classes;
    return;
  }
  // Build the class containing the first unused block out of two more
  // disjoint unused blocks, chosen in ascending index order.
  uint16_t pts = 0;
  auto block_mask = [&](const Triple& t) {
    return static_cast<uint16_t>((1u << t[0]) | (1u << t[1]) | (1u << t[2]));
  };
  used[first] = 1;
  pts = block_mask(blocks[first]);
  for (size_t i = first + 1; i < blocks.size(); ++i) {
    if (used[i] || (pts & block_mask(blocks[i]))) continue;
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      uint16_t pi = block_mask(blocks[i]);
      if (used[j] || ((pts | pi) & block_mask(blocks[j]))) continue;
      used[i] = used[j] = 1;
      classes.push_back({blocks[first], blocks[i], blocks[j]});
      resolve_rec(blocks, used, classes, solutions, found);
      classes.pop_back();
      used[i] = used[j] = 0;
    }
  }
  used[first] = 0;
}

// All 840 systems, each with its resolution; asserts the resolution is
// unique via the returned `resolution_count` side channel.
inline std::vector<Sts9> enumerate_sts9(std::vector<size_t>* resolution_counts = nullptr) {
  std::vector<Sts9> out;
  std::vector<Triple> blocks;
  std::vector<uint8_t> pair_used(kN9 * kN9, 0);
  enumerate_sts9_rec(blocks, pair_used, out);
  for (auto& s : out) {
    std::vector<uint8_t> used(s.blocks.size(), 0);
    std::vector<std::vector<Triple>> classes, found;
    size_t solutions = 0;
    resolve_rec(s.blocks, used, classes, solutions, found);
    if (resolution_counts) resolution_counts->push_back(solutions);
    s.resolution = std::move(found);
  }
  return out;
}

inline bool large_set_rec(const std::vector<Sts9>& all, std::bitset<84>& covered,
                          std::vector<size_t>& chosen) {
  if (chosen.size() == 7) return covered.all();
  uint32_t r = 0;
  while (r < 84 && covered.test(r)) ++r;
  if (r == 84) return false;
  for (size_t i = 0; i < all.size(); ++i) {
    if (!all[i].mask.test(r) || (all[i].mask & covered).any()) continue;
    covered |= all[i].mask;
    chosen.push_back(i);
    if (large_set_rec(all, covered, chosen)) return true;
    chosen.pop_back();
    covered ^= all[i].mask;
  }
  return false;
}

// The deterministic first large set of Kirkman systems on 9 points, already
// normalized (design i holds {inf1, inf2, i} in class 0).
inline lkts::BaseLargeSet search_lkts9() {
  auto all = enumerate_sts9();
  std::bitset<84> covered;
  std::vector<size_t> chosen;
  if (!large_set_rec(all, covered, chosen)) throw std::logic_error("no large set found");
  lkts::BaseLargeSet raw;
  raw.qspec = lkts::FieldTable::create(7, 1).spec();
  raw.compact = false;
  for (size_t idx : chosen) raw.classes.push_back(all[idx].resolution);
  return lkts::normalize_base(std::move(raw));
}

}  // namespace lkts_test
