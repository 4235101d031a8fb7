#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/election_io.hpp"
#include "cli/experiments.hpp"
#include "cli/run_config.hpp"
#include "kdiv/analysis.hpp"
#include "kdiv/domains.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/sampling.hpp"

namespace {

using namespace kdiv;
using namespace kdiv::cli;

constexpr int kInputError = 2;
constexpr int kBudgetError = 3;

std::string fold(std::string s) {
  for (auto& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c == '/' || c == '_') c = '-';
  }
  return s;
}

// "sp", "gs-bal", "SP/DF", "2d" ... -> canonical domain name.
std::string canonical_domain(const std::string& name) {
  for (const auto& d : domain_names())
    if (fold(d) == fold(name)) return d;
  std::string known;
  for (const auto& d : domain_names()) known += (known.empty() ? "" : ", ") + fold(d);
  throw InputError("unknown domain '" + name + "' (known: " + known + ")");
}

struct GenerateArgs {
  std::string domain;
  std::string culture;
  int m = 8;
  std::int64_t n = 512;
  std::uint64_t seed = 1;
  int dimension = 2;
  double radius = 1.0;
  int gap = 0;
  bool weighted = false;
  std::string output;
};

void cmd_generate(const GenerateArgs& a) {
  Rng rng(a.seed);
  Election e;
  std::optional<Domain> domain;
  if (!a.domain.empty()) domain = make_domain(canonical_domain(a.domain), a.m, rng);

  if (a.culture.empty()) {
    if (!domain) throw InputError("generate needs --domain or --culture");
    e = to_election(*domain);
  } else {
    CultureSpec spec;
    spec.kind = parse_culture(a.culture);
    spec.dimension = a.dimension;
    spec.radius = a.radius;
    spec.gap = a.gap;
    spec.weighted = a.weighted;
    spec.seed = rng.next();
    SamplingContext ctx;
    if (domain) ctx.domain = &*domain;
    std::optional<Embedding> emb;
    if (spec.kind == Culture::RBox) {
      if (domain && domain->embedding) {
        emb = *domain->embedding;
      } else {
        if (a.dimension < 1) throw InputError("--dimension must be positive");
        do emb = Embedding::uniform_cube(a.m, a.dimension, rng);
        while (!emb->general_position());
      }
      ctx.embedding = &*emb;
    }
    e = sample_election(spec, a.m, a.n, ctx);
  }

  const std::string text = serialize_election(e);
  if (a.output.empty()) {
    std::cout << text;
  } else {
    write_text(a.output, text);
  }
  std::cerr << "m=" << e.candidate_count() << " voters=" << e.voter_count() << " distinct=" << e.merged().votes().size();
  if (domain) std::cerr << " domain=" << domain->label << " size=" << domain->size();
  if (!a.output.empty()) std::cerr << " -> " << a.output;
  std::cerr << "\n";
}

struct KemenyArgs {
  std::string input;
  int k = 1;
  std::string solver = "exact";
  int restarts = 10;
  std::uint64_t seed = 1;
  int extra_ic = 512;
  bool json = false;
};

std::string one_based(const Ranking& r) {
  std::string s;
  for (int i = 0; i < r.size(); ++i) s += (i ? " > " : "") + std::to_string(r[i] + 1);
  return s;
}

void cmd_kemeny(const KemenyArgs& a) {
  const Election e = read_election(a.input);
  SolverConfig config;
  config.solver = parse_solver(a.solver);
  config.restarts = a.restarts;
  config.seed = a.seed;
  config.extra_ic = a.extra_ic;
  const KemenyResult r = solve_k_kemeny(e, a.k, config);

  std::vector<std::int64_t> sizes(r.centers.size(), 0);
  for (std::size_t i = 0; i < r.assignment.size(); ++i)
    sizes[static_cast<std::size_t>(r.assignment[i])] += e.votes()[i].multiplicity;

  if (a.json) {
    nlohmann::json j{{"k", a.k}, {"score", r.score}, {"method", r.method}, {"exact", r.exact}, {"voters", e.voter_count()}};
    j["centers"] = nlohmann::json::array();
    for (const auto& c : r.centers) j["centers"].push_back(one_based(c));
    j["cluster_sizes"] = sizes;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "score: " << r.score << (r.exact ? " (exact, " : " (upper bound, ") << r.method << ")\n";
  for (std::size_t i = 0; i < r.centers.size(); ++i)
    std::cout << "center " << i + 1 << ": " << one_based(r.centers[i]) << "  [" << sizes[i] << " voters]\n";
}

struct ExperimentArgs {
  std::string name;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps, m;
  std::optional<std::int64_t> n;
  std::string out;
};

void cmd_experiment(const ExperimentArgs& a) {
  RunConfig c = default_config(a.name);
  if (const char* env = std::getenv("KDIV_OUTPUT_DIR"); env && *env) c.output_dir = env;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw InputError("cannot open config '" + a.config + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("config: ") + e.what());
    }
    // A manifest from an earlier run carries its inputs under "config".
    if (j.is_object() && j.contains("config") && j.contains("files")) {
      if (j.value("experiment", a.name) != a.name) throw InputError("manifest is for experiment '" + j["experiment"].get<std::string>() + "'");
      j = j["config"];
    }
    c = apply_json(c, j);
  }
  c.experiment = a.name;
  if (a.seed) c.seed = *a.seed;
  if (a.reps) c.reps = *a.reps;
  if (a.m) c.m = *a.m;
  if (a.n) c.n = *a.n;
  if (!a.out.empty()) c.output_dir = a.out;
  if (c.reps < 1) throw InputError("--reps must be positive");
  std::cerr << "running " << a.name << " -> " << (c.output_dir / a.name).string() << "\n";
  const auto manifest = run_experiment(c);
  std::cout << manifest.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Kemeny diversity of preference domains"};
  app.set_version_flag("--version", KDIV_VERSION);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write an election from a domain or a statistical culture");
  g->add_option("--domain", gen.domain, "sp, gs-bal, gs-cat, spoc, sp-df, sc, 1d, 2d, 3d, ic");
  g->add_option("--culture", gen.culture, "ic, ic-domain, walsh, conitzer, cvc, rbox, sc-gaps");
  g->add_option("--m", gen.m, "Candidates")->check(CLI::Range(1, 64));
  g->add_option("--n", gen.n, "Voters (cultures only)")->check(CLI::PositiveNumber);
  g->add_option("--seed", gen.seed);
  g->add_option("--dimension", gen.dimension, "rbox dimension");
  g->add_option("--radius", gen.radius, "rbox half-width");
  g->add_option("--gap", gen.gap, "sc-gaps t");
  g->add_flag("--weighted", gen.weighted, "Weighted domain sampling");
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  KemenyArgs km;
  auto* k = app.add_subcommand("kemeny", "Solve k-Kemeny on an election file");
  k->add_option("file", km.input)->required();
  k->add_option("--k", km.k)->check(CLI::PositiveNumber);
  k->add_option("--solver", km.solver)->check(CLI::IsMember({"exact", "fpt", "sc", "heuristic", "embeddable"}));
  k->add_option("--restarts", km.restarts)->check(CLI::PositiveNumber);
  k->add_option("--seed", km.seed);
  k->add_option("--extra-ic", km.extra_ic, "Random rankings added to the heuristic search space")->check(CLI::NonNegativeNumber);
  k->add_flag("--json", km.json, "One JSON line");

  ExperimentArgs ex;
  auto* x = app.add_subcommand("experiment", "Run a named experiment into CSV/SVG files");
  x->add_option("name", ex.name)->required()->check(CLI::IsMember(experiment_names()));
  x->add_option("--config", ex.config, "JSON config or manifest");
  x->add_option("--seed", ex.seed);
  x->add_option("--reps", ex.reps);
  x->add_option("--m", ex.m);
  x->add_option("--n", ex.n);
  x->add_option("--out", ex.out, "Output directory (default $KDIV_OUTPUT_DIR or kdiv-out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*g) cmd_generate(gen);
    else if (*k) cmd_kemeny(km);
    else if (*x) cmd_experiment(ex);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
