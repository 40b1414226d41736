#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "envelope/catalog.hpp"
#include "envelope/cli.hpp"
#include "envelope/error.hpp"
#include "envelope/io.hpp"

using namespace envelope;
namespace cat = envelope::catalog;

namespace {

const std::string data_dir = ENVELOPE_DATA_DIR;

std::string fixture(const std::string& name) { return data_dir + "/" + name; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "envelope");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

bool same_tables(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.kind != b.kind || a.dim() != b.dim() || a.unit != b.unit) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis.name(i) != b.basis.name(i) || a.basis.degree(i) != b.basis.degree(i)) return false;
  auto same = [&](const std::optional<StructureConstants>& x, const std::optional<StructureConstants>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    for (int i = 0; i < static_cast<int>(a.dim()); ++i)
      for (int j = 0; j < static_cast<int>(a.dim()); ++j)
        if (apply_table(*x, i, j) != apply_table(*y, i, j)) return false;
    return true;
  };
  return same(a.product, b.product) && same(a.bracket, b.bracket);
}

std::vector<std::size_t> betti(const BettiReport& r) { return r.betti(); }

}  // namespace

TEST_CASE("bundled fixtures load and match the catalog") {
  const auto sl2 = load_algebra(fixture("sl2.alg"));
  CHECK(sl2.kind == Kind::lie);
  CHECK(sl2.dim() == 3);
  CHECK(same_tables(sl2, cat::sl2()));
  const auto dual = load_algebra(fixture("dual_numbers.alg"));
  CHECK(dual.kind == Kind::commutative);
  CHECK(same_tables(dual, cat::dual_numbers()));
  CHECK(same_tables(load_algebra(fixture("aff1.alg")), cat::aff1()));
  CHECK(same_tables(load_algebra(fixture("lambda_aff1.alg")), cat::lambda_aff1()));
  CHECK(same_tables(load_algebra(fixture("z2.alg")), cat::group_algebra_z2()));
  CHECK(same_tables(load_algebra(fixture("upper_triangular2.alg")), cat::upper_triangular2()));
  CHECK(load_module(fixture("sl2_adjoint.mod"), sl2).dim() == 3);
  CHECK(load_module(fixture("lambda_aff1_regular.mod"), cat::lambda_aff1()).dim() == 4);
}

TEST_CASE("json round trip") {
  for (const auto& a : {cat::sl2(), cat::dual_numbers(), cat::lambda_aff1(), cat::upper_triangular2()}) {
    const std::string text = algebra_to_json(a);
    CHECK(same_tables(parse_algebra(text), a));
    CHECK(algebra_to_json(parse_algebra(text)) == text);
    const auto m = cat::regular_module(a);
    CHECK(module_to_json(parse_module(module_to_json(m, a), a), a) == module_to_json(m, a));
  }
}

TEST_CASE("hand-written input") {
  // indices, integer coefficients, unicode minus, object basis entries
  const auto a = parse_algebra(R"({"kind": "lie",
    "basis": [{"name": "e"}, {"name": "f", "degree": 0}],
    "bracket": [[0, 1, {"1": 1}], ["f", "e", {"f": "−1"}]]})");
  CHECK(same_tables(a, cat::aff1()));
  const auto q = parse_algebra(R"({"kind": "commutative", "basis": [["1", 0], ["x", 0]], "unit": "1",
    "product": [["1", "1", {"1": "1"}], ["1", "x", {"x": "1"}], ["x", "1", {"x": "1"}], ["x", "x", {"1": "1/2"}]]})");
  CHECK(apply_table(*q.product, 1, 1) == LetterChain{{0, make_scalar(1, 2)}});
}

TEST_CASE("malformed and invalid input") {
  auto code_of = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code_of("{") == ErrorCode::ParseError);
  CHECK(code_of(R"({"basis": []})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"kind": "banana", "basis": []})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"kind": "lie", "basis": [["e", 0]], "bracket": [["e", "g", {"e": "1"}]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"kind": "lie", "basis": [["e", 0]], "bracket": [["e", "e", {"e": "1/0"}]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"kind": "lie", "basis": [["e", 0], ["e", 0]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"kind": "lie", "basis": [["e", 0]], "product": []})") == ErrorCode::ParseError);
  try {
    parse_algebra(R"({"kind": "lie", "basis": [["e", 0], ["f", 0]], "bracket": [["e", "e", {"f": "1"}]]})");
    FAIL("accepted [e,e] = f");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("Antisym @ (e,e)") != std::string::npos);
  }
  CHECK_THROWS_AS(load_algebra(fixture("missing.alg")), Error);
}

TEST_CASE("run: documented examples") {
  JobConfig job;
  job.theory = "chevalley";
  job.max_weight = 3;
  job.input = fixture("sl2.alg");
  CHECK(betti(run(job)) == std::vector<std::size_t>{1, 0, 0, 1});
  job.direction = "cohomology";
  CHECK(betti(run(job)) == std::vector<std::size_t>{1, 0, 0, 1});

  job.theory = "hochschild";
  job.direction = "homology";
  job.max_weight = 4;
  job.input = fixture("dual_numbers.alg");
  const auto bar = run(job);
  CHECK(bar.all_passed());
  const auto b = betti(bar);
  REQUIRE(b.size() == 5);
  for (std::size_t n = 1; n < b.size(); ++n) CHECK(b[n] == 0);

  job.theory = "koszul";
  job.direction = "verify";
  job.input = fixture("aff1.alg");
  CHECK(run(job).all_passed());

  // abelian: exterior algebra
  job.theory = "chevalley";
  job.direction = "homology";
  job.max_weight = 2;
  job.input = fixture("abelian2.alg");
  CHECK(betti(run(job)) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("run: theory and kind must match") {
  JobConfig job;
  job.theory = "ginfty";
  job.input = fixture("sl2.alg");
  CHECK_THROWS_AS(run(job), Error);
  job.theory = "harrison";
  job.input = fixture("upper_triangular2.alg");
  CHECK_THROWS_AS(run(job), Error);
  job.theory = "nonsense";
  CHECK_THROWS_AS(run(job), Error);
}

TEST_CASE("graded input is split by internal degree") {
  JobConfig job;
  job.theory = "ginfty";
  job.direction = "homology";
  job.max_weight = 2;
  job.input = fixture("lambda_aff1.alg");
  const auto r = run(job);
  CHECK(r.all_passed());
  for (const auto& e : r.entries) {
    CHECK(e.internal_degree.has_value());
    CHECK(e.homology == e.chain_dim - e.rank_in - e.rank_out);
  }
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  JobConfig job;
  job.theory = "ginfty";
  job.direction = "cohomology";
  job.max_weight = 2;
  job.input = fixture("lambda_aff1.alg");
  job.jobs = 1;
  const std::string one = run(job).to_json();
  job.jobs = 4;
  CHECK(run(job).to_json() == one);
  CHECK(run(job).to_json() == one);
  job.theory = "hochschild";
  job.direction = "homology";
  job.input = fixture("upper_triangular2.alg");
  job.max_weight = 4;
  job.jobs = 1;
  const std::string h1 = run(job).to_json();
  job.jobs = 3;
  CHECK(run(job).to_json() == h1);
}

TEST_CASE("command line: exit codes and outputs") {
  auto r = cli({"validate", fixture("sl2.alg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim 3") != std::string::npos);

  const std::string bad = temp_file("envelope_bad.alg",
                                    R"({"kind": "lie", "basis": [["e", 0], ["f", 0]], "bracket": [["e", "e", {"f": "1"}]]})");
  r = cli({"validate", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("Antisym @ (e,e)") != std::string::npos);

  CHECK(cli({"validate", temp_file("envelope_broken.alg", "{\"kind\": ")}).code == 4);
  CHECK(cli({"validate", fixture("missing.alg")}).code == 4);
  CHECK(cli({"homology", "--theory", "ginfty", fixture("sl2.alg")}).code == 2);
  CHECK(cli({"homology", "--theory", "bogus", fixture("sl2.alg")}).code == 4);
  CHECK(cli({"frobnicate"}).code == 4);

  const std::string report = (std::filesystem::temp_directory_path() / "envelope_report.json").string();
  std::remove(report.c_str());
  r = cli({"homology", "--theory", "chevalley", "--max-weight", "3", fixture("sl2.alg"), "-o", report});
  CHECK(r.code == 0);
  CHECK(r.out.find("boundary squares to zero") != std::string::npos);
  std::ifstream in(report);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("\"theory\": \"chevalley\"") != std::string::npos);

  r = cli({"koszul-verify", "--pmax", "4", fixture("aff1.alg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("resolution verified in valid range") != std::string::npos);

  r = cli({"ginfty-verify", "--max-weight", "2", fixture("lambda_aff1.alg"), "--module",
           fixture("lambda_aff1_regular.mod")});
  CHECK(r.code == 0);
  CHECK(r.out.find("m l + l m = 0") != std::string::npos);

  r = cli({"cohomology", "--theory", "harrison", "--max-weight", "3", fixture("dual_numbers.alg"), "--module",
           fixture("dual_numbers_regular.mod")});
  CHECK(r.code == 0);

  r = cli({"selftest", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("a failed invariant gives exit code 3") {
  BettiReport r;
  r.check("fine", true);
  CHECK(exit_code_for(r) == 0);
  r.check("broken", false);
  CHECK(exit_code_for(r) == 3);
}
