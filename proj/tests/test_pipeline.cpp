#include <doctest.h>

#include <atomic>
#include <unistd.h>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rothlab/errors.hpp"
#include "rothlab/pipeline.hpp"
#include "rothlab/report_io.hpp"
#include "rothlab/verify.hpp"

using namespace rothlab;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static std::atomic<int> counter{0};
    path = (std::filesystem::temp_directory_path() /
            ("rothlab_test_" + std::to_string(static_cast<long>(::getpid())) + "_" +
             std::to_string(counter++) + ".set"))
               .string();
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("generate_subset") {
  PipelineConfig cfg;
  cfg.N = 100;
  SUBCASE("all primes") {
    CHECK(generate_subset(cfg) == sieve_primes(100).primes());
  }
  SUBCASE("random density one keeps everything") {
    cfg.subset = SubsetKind::random_density;
    cfg.density = 1.0;
    CHECK(generate_subset(cfg) == sieve_primes(100).primes());
  }
  SUBCASE("random density is a seeded deterministic filter") {
    cfg.N = 10'000;
    cfg.subset = SubsetKind::random_density;
    cfg.density = 0.5;
    cfg.seed = 42;
    const auto s1 = generate_subset(cfg);
    const auto s2 = generate_subset(cfg);
    CHECK(s1 == s2);
    CHECK(!s1.empty());
    CHECK(s1.size() < sieve_primes(10'000).count());
    cfg.seed = 43;
    CHECK(generate_subset(cfg) != s1);
  }
  SUBCASE("residue class") {
    cfg.subset = SubsetKind::residue_class;
    cfg.residue_mod = 4;
    cfg.residue_cls = 1;
    for (std::uint64_t p : generate_subset(cfg)) CHECK(p % 4 == 1);
  }
  SUBCASE("progression-free subset really is progression-free") {
    cfg.N = 10'000;
    cfg.subset = SubsetKind::behrend_apfree;
    const auto s = generate_subset(cfg);
    REQUIRE(s.size() > 10);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        for (std::size_t k = j + 1; k < s.size(); ++k)
          CHECK(s[i] + s[k] != 2 * s[j]);
  }
  SUBCASE("density must be in (0, 1]") {
    cfg.subset = SubsetKind::random_density;
    cfg.density = 0.0;
    CHECK_THROWS_AS(generate_subset(cfg), parameter_error);
  }
}

TEST_CASE("set files") {
  const PrimeTable table = sieve_primes(100);
  SUBCASE("comments and blank lines") {
    TempFile f("# header\n2\n3\n\n5 # trailing comment\n7\n");
    CHECK(parse_set_file(f.path, table) == std::vector<std::uint64_t>{2, 3, 5, 7});
  }
  SUBCASE("composite values name the line") {
    TempFile f("2\n3\n91\n");
    try {
      parse_set_file(f.path, table);
      FAIL("expected input_error");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
      CHECK(std::string(e.what()).find("91") != std::string::npos);
    }
  }
  SUBCASE("values beyond N name the line") {
    TempFile f("2\n101\n");
    CHECK_THROWS_AS(parse_set_file(f.path, table), input_error);
  }
  SUBCASE("garbage names the line") {
    TempFile f("2\nxyz\n");
    CHECK_THROWS_AS(parse_set_file(f.path, table), input_error);
  }
}

TEST_CASE("pipeline run at N = 1e4 with z = 3") {
  PipelineConfig cfg;
  cfg.N = 10'000;
  cfg.z_override = 3.0;
  cfg.delta = 0.1;
  cfg.epsilon = 0.1;
  const PipelineReport rep = run_pipeline(cfg);

  CHECK(rep.M == 6);
  CHECK(rep.Nprime == 3'343);
  CHECK(rep.A_size == 1'229);
  CHECK(rep.A0_size > 0);
  CHECK(rep.alpha_measured == doctest::Approx(1.0));

  // the spectral and combinatorial discrepancies agree
  CHECK(rep.delta_consistency == "holds");
  CHECK(rep.delta_direct ==
        doctest::Approx(rep.delta_fourier)
            .epsilon(1e-6 * std::max(1.0, rep.delta_fourier)));
  CHECK(rep.delta_ratio == doctest::Approx(rep.delta_fourier / 0.2));

  CHECK(rep.spectrum_certificate == "holds");
  CHECK(rep.holder_verdict == "holds");
  CHECK(rep.pigeonhole_verdict == "holds");
  CHECK(rep.l1_preservation == "holds");
  CHECK(rep.majorant_domination == "holds");
  CHECK(rep.l2_chain == "holds");
  CHECK(rep.extraction_verdict == "holds");
  CHECK(rep.overall == "holds");
  CHECK(!rep.timings.empty());
}

TEST_CASE("pipeline handles an empty input set") {
  TempFile f("# empty\n");
  PipelineConfig cfg;
  cfg.N = 1'000;
  cfg.z_override = 3.0;
  cfg.subset = SubsetKind::file;
  cfg.subset_file = f.path;
  const PipelineReport rep = run_pipeline(cfg);
  CHECK(rep.A_size == 0);
  CHECK(rep.A0_size == 0);
  CHECK(rep.a_l1 == 0.0);
  CHECK(rep.Aprime_size == 0);
  CHECK(rep.ap3_nontrivial == 0);
  CHECK(rep.extraction_verdict == "hypothesis-not-met");
  CHECK(rep.delta_consistency == "holds");
  CHECK(rep.overall == "holds");
}

TEST_CASE("reports are deterministic and serialize faithfully") {
  PipelineConfig cfg;
  cfg.N = 2'000;
  cfg.subset = SubsetKind::random_density;
  cfg.density = 0.6;
  cfg.seed = 7;
  PipelineReport r1 = run_pipeline(cfg);
  PipelineReport r2 = run_pipeline(cfg);
  const std::string json = report_to_json(r1);
  const PipelineReport parsed = report_from_json(json);
  CHECK(parsed == r1);
  r1.timings.clear();
  r2.timings.clear();
  CHECK(r1 == r2);

  SUBCASE("JSON carries 17 significant digits") {
    CHECK(json.find("\"N\":2000") != std::string::npos);
    // a_l1 is an irrational-looking double; its %.17g image must round-trip
    const std::size_t pos = json.find("\"a_l1\":");
    REQUIRE(pos != std::string::npos);
    const std::string tail = json.substr(pos + 7, 24);
    CHECK(std::stod(tail) == parsed.a_l1);
  }
  SUBCASE("CSV has one key per line") {
    const std::string csv = report_to_csv(parsed);
    CHECK(csv.find("key,value") == 0);
    CHECK(csv.find("\nNprime,") != std::string::npos);
    CHECK(csv.find("\ntiming.sieve,") != std::string::npos);
  }
}

TEST_CASE("spectrum CSV dump") {
  PipelineConfig cfg;
  cfg.N = 500;
  cfg.z_override = 3.0;
  const Frame f = build_frame(cfg);
  std::ostringstream out;
  write_spectrum_csv(out, dft(f.a));
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "m,re,im,abs");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == f.params.Nprime);
}

TEST_CASE("verify suite") {
  PipelineConfig cfg;
  SUBCASE("default run is green") {
    const VerifySummary s = verify_suite(cfg);
    for (const auto& c : s.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(s.all_pass());
  }
  SUBCASE("a corrupted transform is caught") {
    VerifyHooks hooks;
    hooks.corrupt_transform = true;
    const VerifySummary s = verify_suite(cfg, hooks);
    CHECK_FALSE(s.all_pass());
    bool transform_check_failed = false;
    for (const auto& c : s.checks)
      if (!c.pass && c.name.find("direct evaluator") != std::string::npos)
        transform_check_failed = true;
    CHECK(transform_check_failed);
  }
}

TEST_CASE("capacity and configuration errors carry the stage name") {
  PipelineConfig cfg;
  cfg.N = 150;
  cfg.z_override = 2.0;  // below the z >= 3 floor
  try {
    run_pipeline(cfg);
    FAIL("expected parameter_error");
  } catch (const parameter_error& e) {
    CHECK(std::string(e.what()).find("make_params") != std::string::npos);
  }
}
