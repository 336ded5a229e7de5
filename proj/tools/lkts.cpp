// Command line front end: build, inspect, and certify large sets of Kirkman
// triple systems of order q^n + 2.
//
// Exit codes: 0 all checks passed / output written, 1 a certification
// failed, 2 usage or input error.

#include <CLI11.hpp>

#include "lkts/design_io.hpp"
#include "lkts/verifier.hpp"

#include <glob.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr const char* kBuiltinBase = "builtin:denniston15";

// Factor a prime power; throws on anything else.
std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  uint32_t p = q;
  for (uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  uint32_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::invalid_argument("q must be a prime power");
  return {p, k};
}

lkts::BaseLargeSet load_base_arg(const std::string& arg) {
  if (arg == kBuiltinBase) return lkts::builtin_denniston15();
  if (arg.rfind("builtin:", 0) == 0) throw std::invalid_argument("unknown builtin base: " + arg);
  std::ifstream in(arg);
  if (!in.good()) throw std::invalid_argument("cannot open base file: " + arg);
  return lkts::load_base(in, arg);
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t g{};
  int rc = glob(pattern.c_str(), 0, nullptr, &g);
  std::vector<std::string> files;
  if (rc == 0)
    for (size_t i = 0; i < g.gl_pathc; ++i) files.emplace_back(g.gl_pathv[i]);
  globfree(&g);
  if (rc != 0 && rc != GLOB_NOMATCH) throw std::runtime_error("glob failed on " + pattern);
  return files;
}

// Reads p, k, n from a design file header so a codec can be set up before
// full parsing.
std::array<uint32_t, 3> peek_design_params(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open design file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    line = lkts::textio::trim(lkts::textio::strip_comment(line));
    if (line.empty()) continue;
    auto toks = lkts::textio::split(line, ' ');
    if (toks.empty() || toks[0] != "KTS-DESIGN")
      throw std::invalid_argument(path + ": expected KTS-DESIGN header");
    uint32_t p = 0, k = 0, n = 0;
    for (auto& [key, val] : lkts::textio::parse_kv(toks)) {
      if (key == "p") p = lkts::textio::parse_uint(val, path, 1);
      if (key == "k") k = lkts::textio::parse_uint(val, path, 1);
      if (key == "n") n = lkts::textio::parse_uint(val, path, 1);
    }
    if (!p || !k || !n) throw std::invalid_argument(path + ": header lacks p=, k=, or n=");
    return {p, k, n};
  }
  throw std::invalid_argument(path + ": empty file");
}

std::string file_label(const std::string& wlabel) {
  std::string out = wlabel;
  for (char& c : out)
    if (c == ':') c = '_';
  return out;
}

int run_info(uint32_t q) {
  auto [p, k] = factor_prime_power(q);
  lkts::FieldTable f = lkts::FieldTable::create(p, k);
  std::cout << "q=" << f.q() << " p=" << f.p() << " k=" << f.k() << " t=" << f.t()
            << " modulus=" << f.modulus_string() << " g=" << f.generator().v
            << " omega=" << f.omega().v << " omega2=" << f.omega2().v << "\n";
  return 0;
}

int run_verify_base(const std::string& arg) {
  lkts::BaseLargeSet base = load_base_arg(arg);
  lkts::Certificate cert = lkts::validate_base(base);
  cert.render(std::cout);
  return cert.pass() ? 0 : 1;
}

int run_construct(const std::string& base_arg, uint32_t n, uint32_t q, const std::string& wlabel,
                  bool all, const std::string& out_dir, const std::string& format) {
  lkts::BaseLargeSet base = load_base_arg(base_arg);
  if (q && base.q() != q)
    throw std::invalid_argument("base has q=" + std::to_string(base.q()) +
                                ", but --q says " + std::to_string(q));
  bool packed = format == "packed";
  std::filesystem::create_directories(out_dir);
  lkts::Construction c(std::move(base), n);
  lkts::DesignCodec codec(c.field().p(), c.field().k(), n);

  auto write_design = [&](const lkts::Design& d) {
    std::string label = lkts::point_token(c.space(), d.w);
    std::string path = out_dir + "/design_" + file_label(label) + ".txt";
    std::ofstream out(path);
    if (!out.good()) throw std::runtime_error("cannot write " + path);
    codec.render(out, d, packed);
    std::cout << path << "\n";
  };

  if (all) {
    c.for_each_design(write_design);
  } else {
    lkts::Pt w = codec.parse_point(wlabel, "--w", 0);
    if (!c.space().is_finite(w)) throw std::invalid_argument("--w must be a finite point");
    write_design(c.build_design(w));
  }
  return 0;
}

int run_verify(const std::string& pattern, const std::string& level) {
  std::vector<std::string> files = expand_glob(pattern);
  if (files.empty()) {
    std::cerr << "no files match " << pattern << "\n";
    return 2;
  }
  auto [p, k, n] = peek_design_params(files[0]);
  lkts::DesignCodec codec(p, k, n);

  bool all_pass = true;
  std::unique_ptr<lkts::LargeSetVerifier> lsv;
  if (level == "lkts") lsv = std::make_unique<lkts::LargeSetVerifier>(codec.space(), codec.t());

  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open design file: " + path);
    lkts::Design d = codec.parse(in, path);
    if (level == "sts") {
      std::vector<lkts::Triple> blocks;
      for (const auto& cls : d.classes)
        blocks.insert(blocks.end(), cls.blocks.begin(), cls.blocks.end());
      lkts::Certificate cert = lkts::verify_sts(blocks, codec.space().npoints(), &codec.space());
      cert.subject = path;
      cert.render(std::cout);
      all_pass &= cert.pass();
    } else if (level == "kts") {
      lkts::Certificate cert = lkts::verify_kts(d, codec.space(), codec.t());
      cert.subject = path;
      cert.render(std::cout);
      all_pass &= cert.pass();
    } else {
      lsv->add_design(d);
    }
  }
  if (lsv) {
    lkts::Certificate cert = lsv->finish();
    cert.render(std::cout);
    all_pass &= cert.pass();
  }
  std::cout << (all_pass ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
  return all_pass ? 0 : 1;
}

int run_locate(const std::string& base_arg, uint32_t n, const std::string& triple_arg) {
  lkts::Construction c(load_base_arg(base_arg), n);
  lkts::DesignCodec codec(c.field().p(), c.field().k(), n);
  auto toks = lkts::textio::split(triple_arg, ' ');
  if (toks.size() != 3)
    throw std::invalid_argument("--triple needs three space-separated points");
  lkts::Triple t = lkts::make_triple(codec.parse_point(toks[0], "--triple", 0),
                                     codec.parse_point(toks[1], "--triple", 0),
                                     codec.parse_point(toks[2], "--triple", 0));
  auto [w, id] = c.locate_triple(t);
  std::cout << "w=" << lkts::point_token(c.space(), w) << " class=" << id.token(c.t()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"large sets of Kirkman triple systems of order q^n + 2"};
  app.require_subcommand(1);

  uint32_t info_q = 0;
  CLI::App* info = app.add_subcommand("info", "field constants for a prime power q = 6t + 1");
  info->add_option("--q", info_q, "field size")->required();

  std::string c_base, c_w, c_out = ".", c_format = "canonical";
  uint32_t c_n = 0, c_q = 0;
  bool c_all = false;
  CLI::App* construct = app.add_subcommand("construct", "build designs and write them to files");
  construct->add_option("--base", c_base, "base large set file, or " + std::string(kBuiltinBase))
      ->required();
  construct->add_option("--n", c_n, "dimension n of the point space GF(q)^n")->required();
  construct->add_option("--q", c_q, "expected q (cross-checked against the base)");
  construct->add_option("--w", c_w, "base point of the design, e.g. 2:5");
  construct->add_flag("--all", c_all, "write every design of the large set");
  construct->add_option("--out", c_out, "output directory")->capture_default_str();
  construct->add_option("--format", c_format, "canonical or packed")
      ->check(CLI::IsMember({"canonical", "packed"}))
      ->capture_default_str();

  std::string v_files, v_level = "kts";
  CLI::App* verify = app.add_subcommand("verify", "certify design files");
  verify->add_option("--files", v_files, "glob pattern of design files")->required();
  verify->add_option("--level", v_level, "sts, kts, or lkts")
      ->check(CLI::IsMember({"sts", "kts", "lkts"}))
      ->capture_default_str();

  std::string vb_arg;
  CLI::App* verify_base = app.add_subcommand("verify-base", "certify a base large set");
  verify_base->add_option("base", vb_arg, "base file or " + std::string(kBuiltinBase))
      ->required();

  std::string l_base, l_triple;
  uint32_t l_n = 0;
  CLI::App* locate = app.add_subcommand("locate", "find the design and class holding a triple");
  locate->add_option("--base", l_base, "base large set file, or " + std::string(kBuiltinBase))
      ->required();
  locate->add_option("--n", l_n, "dimension n")->required();
  locate->add_option("--triple", l_triple, "three points, e.g. '1:2 inf1 3:4'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*info) return run_info(info_q);
    if (*construct) {
      if (c_all == !c_w.empty())  // exactly one of --w / --all
        throw std::invalid_argument("construct needs exactly one of --w or --all");
      return run_construct(c_base, c_n, c_q, c_w, c_all, c_out, c_format);
    }
    if (*verify) return run_verify(v_files, v_level);
    if (*verify_base) return run_verify_base(vb_arg);
    if (*locate) return run_locate(l_base, l_n, l_triple);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
