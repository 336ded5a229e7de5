#include <catch2/catch_amalgamated.hpp>

#include "lkts/base_designs.hpp"
#include "support/lkts9_oracle.hpp"

#include <fstream>
#include <sstream>

using namespace lkts;

namespace {

std::string data_path(const std::string& name) {
  return std::string(LKTS_DATA_DIR) + "/" + name;
}

BaseLargeSet load_file(const std::string& name) {
  std::ifstream in(data_path(name));
  REQUIRE(in.good());
  return load_base(in, name);
}

}  // namespace

TEST_CASE("builtin 15-point large set matches its defining classes") {
  auto b = builtin_denniston15();
  CHECK(b.q() == 13);
  CHECK(b.compact);
  REQUIRE(b.classes.size() == 13);
  REQUIRE(b.classes[0].size() == 7);

  std::vector<Triple> q00 = {make_triple(13, 14, 0), make_triple(1, 4, 5), make_triple(2, 6, 11),
                             make_triple(3, 7, 10), make_triple(8, 9, 12)};
  std::sort(q00.begin(), q00.end());
  CHECK(b.cls(0, 0) == q00);

  // Design 1 is design 0 shifted by 1 on the finite points.
  std::vector<Triple> q10 = {make_triple(13, 14, 1), make_triple(2, 5, 6), make_triple(3, 7, 12),
                             make_triple(4, 8, 11), make_triple(9, 10, 0)};
  std::sort(q10.begin(), q10.end());
  CHECK(b.cls(1, 0) == q10);
}

TEST_CASE("builtin 15-point large set certifies") {
  auto cert = validate_base(builtin_denniston15());
  INFO([&] { std::ostringstream os; cert.render(os); return os.str(); }());
  CHECK(cert.pass());
  uint64_t blocks = 0, distinct = 0;
  for (auto& [k, v] : cert.counts) {
    if (k == "blocks") blocks = v;
    if (k == "distinct-blocks") distinct = v;
  }
  CHECK(blocks == 455);
  CHECK(distinct == 455);  // C(15,3)
}

TEST_CASE("locate_block inverts the block lists") {
  auto b = builtin_denniston15();
  for (uint32_t i = 0; i < b.q(); ++i)
    for (uint32_t j = 0; j < b.classes_per_design(); ++j)
      for (const auto& t : b.cls(i, j)) {
        auto [di, dj] = b.locate_block(t);
        CHECK(di == i);
        CHECK(dj == j);
      }
  CHECK_THROWS_AS(b.locate_block(make_triple(0, 1, 200)), std::exception);
}

TEST_CASE("render and load round-trip the base set") {
  auto b = builtin_denniston15();
  std::ostringstream os;
  render_base(os, b);
  std::istringstream in(os.str());
  auto b2 = load_base(in, "roundtrip");
  CHECK(b2.compact);
  CHECK(b2.classes == b.classes);
  CHECK(b2.qspec.q == 13);

  // Full form round-trips too.
  b.compact = false;
  std::ostringstream os2;
  render_base(os2, b);
  std::istringstream in2(os2.str());
  auto b3 = load_base(in2, "roundtrip-full");
  CHECK_FALSE(b3.compact);
  CHECK(b3.classes == b.classes);
}

TEST_CASE("shipped denniston15 fixture equals the builtin") {
  auto b = load_file("denniston15.txt");
  CHECK(b.classes == builtin_denniston15().classes);
  CHECK(b.compact);
}

TEST_CASE("normalization reindexes designs and rotates classes") {
  auto b = builtin_denniston15();
  BaseLargeSet raw;
  raw.qspec = b.qspec;
  raw.compact = false;
  // Present the designs in reverse order, with each design's classes rotated
  // by a different offset.
  for (int i = 12; i >= 0; --i) {
    auto design = b.classes[i];
    std::rotate(design.begin(), design.begin() + (i % design.size()), design.end());
    raw.classes.push_back(std::move(design));
  }
  auto norm = normalize_base(std::move(raw));
  CHECK(norm.classes == b.classes);
}

TEST_CASE("normalization rejects defective inputs") {
  auto b = builtin_denniston15();
  {
    BaseLargeSet raw;
    raw.qspec = b.qspec;
    raw.classes = b.classes;
    raw.classes[3] = raw.classes[4];  // duplicate infinity block
    CHECK_THROWS_WITH(normalize_base(std::move(raw)),
                      Catch::Matchers::ContainsSubstring("two designs"));
  }
  {
    BaseLargeSet raw;
    raw.qspec = b.qspec;
    raw.classes = b.classes;
    // Excise the infinity block from one design.
    auto& cls0 = raw.classes[5][0];
    cls0.erase(std::remove(cls0.begin(), cls0.end(), make_triple(5, 13, 14)), cls0.end());
    cls0.push_back(make_triple(5, 13, 12));  // junk filler
    std::sort(cls0.begin(), cls0.end());
    CHECK_THROWS_WITH(normalize_base(std::move(raw)),
                      Catch::Matchers::ContainsSubstring("lacks a block"));
  }
}

TEST_CASE("base file parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, const std::string& what) {
    std::istringstream in(text);
    CHECK_THROWS_WITH(load_base(in, "t"), Catch::Matchers::ContainsSubstring(what));
  };
  expect_error("", "missing header");
  expect_error("BASE q=7\n", "expected BASE-LKTS");
  expect_error("BASE-LKTS q=7 p=7 k=1\n", "header needs");
  expect_error("BASE-LKTS q=11 p=11 k=1 form=compact\n", "1 mod 6");
  expect_error("BASE-LKTS q=14 p=7 k=1 form=compact\n", "q does not equal p^k");
  expect_error("BASE-LKTS q=7 p=7 k=1 form=compact\n1,2\n", "3 points");
  expect_error("BASE-LKTS q=7 p=7 k=1 form=compact\n1,1,2 ; 3,4,5 ; 6,inf1,inf2\n",
               "repeated point");
  expect_error("BASE-LKTS q=7 p=7 k=1 form=compact\n1,2,9 ; 3,4,5 ; 6,inf1,inf2\n",
               "out of range");
  expect_error("BASE-LKTS q=7 p=7 k=1 form=compact\n0,1,2 ; 3,4,5 ; 6,inf1,inf2\n",
               "must contain inf1,inf2,0");
  expect_error("BASE-LKTS q=7 p=7 k=1 form=full\nnot-a-design\n", "expected 'design");
}

TEST_CASE("validation flags a corrupted base") {
  auto b = builtin_denniston15();
  // Swap one point inside a block of design 2.
  auto& cls = b.classes[2][3];
  Triple t = cls[2];
  uint32_t other = (t[0] + 1) % 13;
  cls[2] = make_triple(t[0] == other ? t[0] + 2 : other, t[1], t[2]);
  auto cert = validate_base(b);
  CHECK_FALSE(cert.pass());
  bool witnessed = false;
  for (auto& c : cert.checks) witnessed |= !c.pass && !c.witness.empty();
  CHECK(witnessed);
}

TEST_CASE("validation flags a class rotation") {
  auto b = builtin_denniston15();
  std::rotate(b.classes[4].begin(), b.classes[4].begin() + 1, b.classes[4].end());
  auto cert = validate_base(b);
  CHECK_FALSE(cert.pass());
  for (auto& c : cert.checks)
    if (c.name == "infinity-block") CHECK_FALSE(c.pass);
}

TEST_CASE("9-point oracle: 840 systems, each uniquely resolvable") {
  std::vector<size_t> res_counts;
  auto all = lkts_test::enumerate_sts9(&res_counts);
  REQUIRE(all.size() == 840);
  for (size_t c : res_counts) CHECK(c == 1);
  // Spot-check one system is a Steiner system: every pair once.
  const auto& s = all[123];
  std::vector<int> pairs(81, 0);
  for (const auto& t : s.blocks)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) pairs[t[a] * 9 + t[b]]++;
  for (uint32_t x = 0; x < 9; ++x)
    for (uint32_t y = x + 1; y < 9; ++y) CHECK(pairs[x * 9 + y] == 1);
}

TEST_CASE("9-point large set fixture matches the search oracle") {
  auto oracle = lkts_test::search_lkts9();
  auto cert = validate_base(oracle);
  INFO([&] { std::ostringstream os; cert.render(os); return os.str(); }());
  CHECK(cert.pass());

  auto fixture = load_file("lkts9.txt");
  CHECK(fixture.classes == oracle.classes);
  CHECK_FALSE(fixture.compact);
  CHECK(validate_base(fixture).pass());
}
