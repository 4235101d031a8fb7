#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/election_io.hpp"
#include "cli/experiments.hpp"
#include "cli/run_config.hpp"
#include "kdiv/domains.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/sampling.hpp"

using namespace kdiv;
using namespace kdiv::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("kdiv-test-" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("election files round-trip byte-identically") {
  Rng rng(1);
  for (const auto& name : {"SP", "GS/bal", "SC", "2D", "3D"}) {
    const auto e = to_election(make_domain(name, 5, rng));
    const auto text = serialize_election(e);
    const auto back = parse_election(text);
    CHECK(back == e);
    CHECK(serialize_election(back) == text);
  }
  CultureSpec spec;
  spec.kind = Culture::Conitzer;
  spec.seed = 7;
  const auto c = sample_election(spec, 8, 512);
  CHECK(serialize_election(parse_election(serialize_election(c))) == serialize_election(c));
}

TEST_CASE("election file format") {
  const std::string text =
      "# kdiv election\n"
      "m: 3\n"
      "n: 3\n"
      "axis: 1 2 3\n"
      "votes: 2\n"
      "# comment\n"
      "2: 1 > 2 > 3\n"
      "1: 3 > 2 > 1\n";
  const auto e = parse_election(text);
  CHECK(e.candidate_count() == 3);
  CHECK(e.voter_count() == 3);
  CHECK(e.votes()[0].ranking == Ranking{0, 1, 2});
  CHECK(e.votes()[1].multiplicity == 1);
  CHECK(*e.certificate().axis == Ranking::identity(3));
}

TEST_CASE("election file errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_election("# kdiv election\nm: 3\nn: 1\nvotes: 1\n1: 1 > 2 > 4\n"),
                       doctest::Contains("line 5"), InputError);
  CHECK_THROWS_AS(parse_election("m: 3\n"), InputError);
  CHECK_THROWS_AS(parse_election("# kdiv election\nm: 3\nn: 2\nvotes: 1\n1: 1 > 2 > 3\n"), InputError);
  CHECK_THROWS_AS(parse_election("# kdiv election\nm: 2\nn: 1\nvotes: 1\n1: 1 > 1\n"), InputError);
}

TEST_CASE("run config rejects unknown keys and bad values") {
  const auto base = default_config("diversity");
  CHECK_THROWS_AS(apply_json(base, nlohmann::json{{"repz", 3}}), InputError);
  CHECK_THROWS_AS(apply_json(base, nlohmann::json{{"budgets", {{"max_votes", 3}}}}), InputError);
  CHECK_THROWS_AS(apply_json(base, nlohmann::json{{"reps", "ten"}}), InputError);
  CHECK_THROWS_AS(apply_json(base, nlohmann::json{{"reps", 0}}), InputError);
  CHECK_THROWS_AS(apply_json(base, nlohmann::json{{"domains", {"XX"}}}), InputError);
  CHECK_THROWS_AS(default_config("nope"), InputError);
  const auto c = apply_json(base, nlohmann::json{{"reps", 3}, {"seed", 9}, {"budgets", {{"max_partition_votes", 12}}}});
  CHECK(c.reps == 3);
  CHECK(c.seed == 9);
  CHECK(c.budgets.max_partition_votes == 12);
  CHECK(to_json(apply_json(default_config("diversity"), to_json(c))) == to_json(c));
}

TEST_CASE("defaults follow the experimental setup") {
  const auto c = default_config("diversity");
  CHECK(c.n == 512);
  CHECK(c.restarts == 10);
  CHECK(c.domains.size() == 9);
  CHECK(default_config("scalability").ms == std::vector<int>{6, 8, 10, 12});
  CHECK(experiment_names().size() == 10);
}

TEST_CASE("experiments are reproducible from their manifest") {
  auto c = default_config("extension-ratio");
  c.m_min = 4;
  c.m_max = 6;
  c.reps = 2;
  c.output_dir = scratch("a");
  const auto manifest = run_experiment(c);
  const auto first = slurp(c.output_dir / "extension-ratio" / "extension_ratio.csv");
  CHECK(first.find("SP/DF,5,2,") != std::string::npos);

  const auto j = nlohmann::json::parse(slurp(manifest));
  CHECK(j["experiment"] == "extension-ratio");
  CHECK(j["files"].size() == 1);
  auto again = apply_json(default_config("extension-ratio"), j["config"]);
  again.output_dir = scratch("b");
  run_experiment(again);
  CHECK(slurp(again.output_dir / "extension-ratio" / "extension_ratio.csv") == first);
  fs::remove_all(c.output_dir);
  fs::remove_all(again.output_dir);
}

TEST_CASE("domain-sizes experiment matches the closed forms") {
  auto c = default_config("domain-sizes");
  c.m_min = 2;
  c.m_max = 7;
  c.reps = 1;
  c.output_dir = scratch("sizes");
  run_experiment(c);
  std::istringstream in(slurp(c.output_dir / "domain-sizes" / "domain_sizes.csv"));
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() >= 6);
    if (!cells[5].empty()) CHECK_MESSAGE(cells[2] == cells[5], line);
    ++rows;
  }
  CHECK(rows > 40);
  fs::remove_all(c.output_dir);
}

TEST_CASE("slug") {
  CHECK(slug("GS/bal") == "gs-bal");
  CHECK(slug("SP/DF") == "sp-df");
}
