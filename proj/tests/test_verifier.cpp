#include <catch2/catch_amalgamated.hpp>

#include "lkts/verifier.hpp"

#include <fstream>
#include <sstream>

using namespace lkts;

namespace {

BaseLargeSet load_fixture(const std::string& name) {
  std::ifstream in(std::string(LKTS_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  return load_base(in, name);
}

// Independent STS(9): the 12 zero-sum triples of GF(3)^2 (point id = 3a + b).
// Built without any library machinery.
std::vector<Triple> ag23_blocks() {
  std::vector<Triple> out;
  for (uint32_t x = 0; x < 9; ++x)
    for (uint32_t y = x + 1; y < 9; ++y)
      for (uint32_t z = y + 1; z < 9; ++z)
        if ((x / 3 + y / 3 + z / 3) % 3 == 0 && (x % 3 + y % 3 + z % 3) % 3 == 0)
          out.push_back(Triple{x, y, z});
  return out;
}

std::string render(const Certificate& cert) {
  std::ostringstream os;
  cert.render(os);
  return os.str();
}

const Certificate::Check& find_check(const Certificate& cert, const std::string& name) {
  for (const auto& c : cert.checks)
    if (c.name == name) return c;
  FAIL("no check named " << name << " in:\n" << render(cert));
  static Certificate::Check dummy;
  return dummy;
}

}  // namespace

TEST_CASE("triple ranking is a bijection") {
  TripleRank rank(15);
  CHECK(rank.total() == 455);
  CHECK(rank.rank(Triple{0, 1, 2}) == 0);
  uint64_t r = 0;
  for (uint32_t z = 2; z < 15; ++z)
    for (uint32_t y = 1; y < z; ++y)
      for (uint32_t x = 0; x < y; ++x) {
        Triple t{x, y, z};
        CHECK(rank.rank(t) == r);
        CHECK(rank.unrank(r) == t);
        ++r;
      }
  CHECK(r == rank.total());
}

TEST_CASE("verify_sts accepts the affine plane of order 3") {
  auto blocks = ag23_blocks();
  REQUIRE(blocks.size() == 12);
  auto cert = verify_sts(blocks, 9);
  INFO(render(cert));
  CHECK(cert.pass());
}

TEST_CASE("verify_sts rejects broken systems with witnesses") {
  auto blocks = ag23_blocks();
  SECTION("missing block") {
    blocks.pop_back();
    auto cert = verify_sts(blocks, 9);
    CHECK_FALSE(cert.pass());
    CHECK_FALSE(find_check(cert, "block-count").pass);
    CHECK(find_check(cert, "pair-coverage").witness.find("never covered") != std::string::npos);
  }
  SECTION("duplicated block") {
    blocks[3] = blocks[0];
    auto cert = verify_sts(blocks, 9);
    CHECK(find_check(cert, "pair-coverage").witness.find("covered twice") != std::string::npos);
  }
  SECTION("unsorted block") {
    blocks[0] = Triple{4, 2, 7};
    CHECK_FALSE(find_check(verify_sts(blocks, 9), "block-shape").pass);
  }
  SECTION("point out of range") {
    blocks[0] = Triple{0, 1, 9};
    CHECK_FALSE(find_check(verify_sts(blocks, 9), "block-shape").pass);
  }
}

TEST_CASE("verify_kts certifies a built design") {
  Construction C(load_fixture("lkts9.txt"), 2);
  Design d = C.build_design(11);
  auto cert = verify_kts(d, C.space(), C.t());
  INFO(render(cert));
  CHECK(cert.pass());
  uint64_t blocks = 0;
  for (auto& [k, v] : cert.counts)
    if (k == "blocks") blocks = v;
  CHECK(blocks == 25 * 17);
}

TEST_CASE("verify_kts flags mutated designs") {
  Construction C(load_fixture("lkts9.txt"), 2);
  Design d = C.build_design(3);
  SECTION("deleted block breaks the partition") {
    d.classes[2].blocks.pop_back();
    auto cert = verify_kts(d, C.space(), C.t());
    CHECK_FALSE(cert.pass());
    const auto& chk = find_check(cert, "class-partition");
    CHECK_FALSE(chk.pass);
    CHECK(chk.witness.find(d.classes[2].id.token(C.t())) != std::string::npos);
  }
  SECTION("swapped points across blocks keep partitions but break pairs") {
    auto& blk = d.classes[4].blocks;
    std::swap(blk[0][0], blk[1][0]);
    blk[0] = make_triple(blk[0][0], blk[0][1], blk[0][2]);
    blk[1] = make_triple(blk[1][0], blk[1][1], blk[1][2]);
    auto cert = verify_kts(d, C.space(), C.t());
    CHECK(find_check(cert, "class-partition").pass);
    CHECK_FALSE(find_check(cert, "pair-coverage").pass);
  }
  SECTION("corrupted point breaks the class partition") {
    auto& blk = d.classes[1].blocks[5];
    uint32_t v = 0;
    while (v == blk[0] || v == blk[1] || v == blk[2]) ++v;
    blk = make_triple(v, blk[1], blk[2]);
    CHECK_FALSE(find_check(verify_kts(d, C.space(), C.t()), "class-partition").pass);
  }
  SECTION("dropped class breaks the class count") {
    d.classes.pop_back();
    auto cert = verify_kts(d, C.space(), C.t());
    CHECK_FALSE(find_check(cert, "class-count").pass);
    CHECK_FALSE(find_check(cert, "pair-coverage").pass);
  }
}

TEST_CASE("the full order-51 large set certifies") {
  Construction C(load_fixture("lkts9.txt"), 2);
  LargeSetVerifier v(C.space(), C.t());
  C.for_each_design([&](const Design& d) { v.add_design(d); });
  auto cert = v.finish();
  INFO(render(cert));
  CHECK(cert.pass());
  uint64_t covered = 0, designs = 0;
  for (auto& [k, val] : cert.counts) {
    if (k == "covered-triples") covered = val;
    if (k == "designs") designs = val;
  }
  CHECK(covered == 20825);
  CHECK(designs == 49);
}

TEST_CASE("large-set verifier reports duplicates with both owners") {
  Construction C(load_fixture("lkts9.txt"), 2);
  LargeSetVerifier v(C.space(), C.t());
  Design d0 = C.build_design(0);
  v.add_design(d0);
  Design relabeled = d0;
  relabeled.w = 1;  // same blocks, different label: every triple collides
  v.add_design(relabeled);
  auto cert = v.finish();
  CHECK_FALSE(cert.pass());
  const auto& dup = find_check(cert, "no-duplicate");
  CHECK_FALSE(dup.pass);
  CHECK(dup.witness.find("w=0:0") != std::string::npos);
  CHECK(dup.witness.find("w=0:1") != std::string::npos);
}

TEST_CASE("large-set verifier reports gaps") {
  Construction C(load_fixture("lkts9.txt"), 2);
  LargeSetVerifier v(C.space(), C.t());
  C.for_each_design([&](const Design& d) {
    if (d.w != 20) v.add_design(d);
  });
  auto cert = v.finish();
  CHECK_FALSE(cert.pass());
  CHECK_FALSE(find_check(cert, "design-count").pass);
  const auto& cover = find_check(cert, "triple-cover");
  CHECK_FALSE(cover.pass);
  CHECK(cover.witness.find("uncovered") != std::string::npos);
}

TEST_CASE("census identities hold on every supported small space") {
  for (auto [p, k, n] : {std::array<uint32_t, 3>{13, 1, 1},
                         {7, 1, 2},
                         {13, 1, 2},
                         {19, 1, 2},
                         {7, 1, 3},
                         {5, 2, 1}}) {
    auto cert = verify_counts(p, k, n);
    INFO(render(cert));
    CHECK(cert.pass());
  }
}

TEST_CASE("locate cross-check runs exhaustively at order 51") {
  Construction C(load_fixture("lkts9.txt"), 2);
  auto cert = cross_check_locate(C);
  INFO(render(cert));
  CHECK(cert.pass());
  uint64_t checked = 0, exhaustive = 99;
  for (auto& [k, v] : cert.counts) {
    if (k == "triples-checked") checked = v;
    if (k == "exhaustive") exhaustive = v;
  }
  CHECK(checked == 20825);
  CHECK(exhaustive == 1);
}

TEST_CASE("locate cross-check samples at order 171") {
  Construction C(builtin_denniston15(), 2);
  auto cert = cross_check_locate(C, 500, 7);
  INFO(render(cert));
  CHECK(cert.pass());
  uint64_t exhaustive = 99;
  for (auto& [k, v] : cert.counts)
    if (k == "exhaustive") exhaustive = v;
  CHECK(exhaustive == 0);
}
