// End-to-end checks of the command-line tool. The binary path arrives in
// CFREE_BIN (set by the test harness); without it every case is a no-op.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cfree/io.hpp"
#include "cfree/meixner.hpp"
#include "cfree/random.hpp"
#include "cfree/transforms.hpp"

using namespace cfree;
namespace fs = std::filesystem;

namespace {

std::string binary() {
  const char* path = std::getenv("CFREE_BIN");
  return path ? path : "";
}

fs::path workdir() {
  fs::path dir = fs::temp_directory_path() / "cfree_cli_test";
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  std::string cmd = binary() + " " + args + " >/dev/null 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void write_doc(const fs::path& path, const StateDocument& doc) {
  save_json(to_json(doc), path.string());
}

}  // namespace

TEST_CASE("map subcommand applies the shifted semigroup to a Meixner law") {
  if (binary().empty()) return;
  auto dir = workdir();
  auto in = dir / "mu_1_0.json";
  auto out = dir / "mapped.json";
  write_doc(in, document_from_functional(meixner_functional(1, 0, 8), "mu"));
  REQUIRE(run("map --map b -i " + in.string() + " --a 1 --t 1/2 -o " +
              out.string()) == 0);
  Functional mapped = functional_from_document(load_state_document(out.string()));
  Rat half(1, 2);
  CHECK(mapped == meixner_functional(2, half, 8));
}

TEST_CASE("two-state cumulants against the same state equal free cumulants") {
  if (binary().empty()) return;
  auto dir = workdir();
  RatRng rng(5);
  auto in = dir / "phi.json";
  write_doc(in,
            document_from_functional(random_functional(rng, 2, 4), "phi"));
  auto out_two = dir / "two.json";
  auto out_free = dir / "free.json";
  REQUIRE(run("cumulants -i " + in.string() + " --kind two-state --psi " +
              in.string() + " -o " + out_two.string()) == 0);
  REQUIRE(run("cumulants -i " + in.string() + " --kind free -o " +
              out_free.string()) == 0);
  CHECK(series_from_document(load_state_document(out_two.string())) ==
        series_from_document(load_state_document(out_free.string())));
}

TEST_CASE("Boolean cumulants of the two-point law form a quadratic document") {
  if (binary().empty()) return;
  auto dir = workdir();
  auto in = dir / "bernoulli.json";
  auto out = dir / "eta.json";
  write_doc(in, document_from_functional(meixner_functional(0, -1, 8)));
  REQUIRE(run("cumulants -i " + in.string() + " --kind boolean -o " +
              out.string()) == 0);
  auto doc = load_state_document(out.string());
  REQUIRE(doc.entries.size() == 1);
  CHECK(doc.entries[0].first == Word{1, 1});
  CHECK(doc.entries[0].second == 1);
}

TEST_CASE("fermi map fixes zero-mean inputs") {
  if (binary().empty()) return;
  auto dir = workdir();
  auto in = dir / "centered.json";
  auto out = dir / "fermi.json";
  Functional f = meixner_functional(1, 1, 6);  // mean zero
  write_doc(in, document_from_functional(f));
  REQUIRE(run("map --map fermi -i " + in.string() + " -o " + out.string()) ==
          0);
  CHECK(functional_from_document(load_state_document(out.string())) == f);
}

TEST_CASE("documents reload bit-identically through the tool") {
  if (binary().empty()) return;
  auto dir = workdir();
  auto in = dir / "in.json";
  auto out1 = dir / "pass1.json";
  auto out2 = dir / "pass2.json";
  RatRng rng(9);
  write_doc(in, document_from_functional(random_functional(rng, 2, 4)));
  REQUIRE(run("map --map boolean-power --t 1 -i " + in.string() + " -o " +
              out1.string()) == 0);
  REQUIRE(run("map --map boolean-power --t 1 -i " + out1.string() + " -o " +
              out2.string()) == 0);
  std::ifstream f1(out1), f2(out2);
  std::string text1((std::istreambuf_iterator<char>(f1)), {});
  std::string text2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(text1 == text2);
  CHECK_FALSE(text1.empty());
}

TEST_CASE("verification reports are deterministic for a fixed seed") {
  if (binary().empty()) return;
  auto dir = workdir();
  auto rep1 = dir / "rep1.json";
  auto rep2 = dir / "rep2.json";
  REQUIRE(run("verify --suite semigroup --trials 3 --seed 42 -o " +
              rep1.string()) == 0);
  REQUIRE(run("verify --suite semigroup --trials 3 --seed 42 -o " +
              rep2.string()) == 0);
  std::ifstream f1(rep1), f2(rep2);
  nlohmann::json j1, j2;
  f1 >> j1;
  f2 >> j2;
  REQUIRE(j1["records"].size() == j2["records"].size());
  for (size_t k = 0; k < j1["records"].size(); ++k) {
    CHECK(j1["records"][k]["verdict"] == j2["records"][k]["verdict"]);
    CHECK(j1["records"][k]["id"] == j2["records"][k]["id"]);
    CHECK(j1["records"][k]["params"] == j2["records"][k]["params"]);
  }
}

TEST_CASE("the fock suite runs in exact mode") {
  if (binary().empty()) return;
  CHECK(run("verify --suite fock --trials 2 --N 4 --exact") == 0);
}

TEST_CASE("configuration errors exit with code 2") {
  if (binary().empty()) return;
  auto dir = workdir();
  auto in = dir / "any.json";
  write_doc(in, document_from_functional(meixner_functional(0, 0, 6)));
  CHECK(run("map --map b -i " + in.string() + " --t -1") == 2);
  CHECK(run("verify --suite nonsense") == 2);
  CHECK(run("cumulants -i " + in.string() + " --kind two-state") == 2);
  CHECK(run("cumulants -i " + dir.string() + "/missing.json") == 2);

  // truncation cap from the environment: default 10, overridable
  auto big = dir / "big.json";
  write_doc(big, document_from_functional(meixner_functional(0, 0, 12)));
  CHECK(run("cumulants -i " + big.string() + " --kind free") == 2);
  {
    std::string cmd = "CFREE_MAX_N=12 " + binary() + " cumulants -i " +
                      big.string() + " --kind free >/dev/null 2>/dev/null";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  }
}

TEST_CASE("jacobi subcommand emits the shifted moments") {
  if (binary().empty()) return;
  auto dir = workdir();
  auto out = dir / "jac.json";
  REQUIRE(run("jacobi --meixner 1 1 --N 8 --shift 2 3 -o " + out.string()) ==
          0);
  std::ifstream in(out);
  nlohmann::json j;
  in >> j;
  CHECK(j["beta"][0] == "0/1");
  CHECK(j["gamma"][1] == "2/1");
  CHECK(j["shifted_beta"][0] == "2/1");   // alpha + t * 0
  CHECK(j["shifted_gamma"][0] == "3/1");  // t * 1
  Functional shifted = functional_from_document(
      state_document_from_json(j["shifted_moments"]));
  Functional expected = boolean_convolve(
      boolean_power(meixner_functional(1, 1, 8), 3),
      delta_state({Rat(2)}, 8));
  CHECK(shifted == expected);
}
