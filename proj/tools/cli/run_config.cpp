#include "run_config.hpp"

#include <algorithm>
#include <set>

#include "kdiv/domains.hpp"
#include "kdiv/errors.hpp"

namespace kdiv::cli {

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"domain-sizes",   "diversity",       "sp-cultures",    "euclidean-box",
                                              "histograms",     "extension-ratio", "heuristic-eval", "microscopes",
                                              "sc-gaps",        "scalability"};
  return names;
}

RunConfig default_config(const std::string& name) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw InputError("unknown experiment '" + name + "'");
  }
  RunConfig c;
  c.experiment = name;
  c.domains = {"1D", "2D", "3D", "SC", "SP", "SP/DF", "SPOC", "GS/bal", "GS/cat"};
  c.radii = {0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0, 3.25, 3.5, 3.75, 4.0};
  c.dimensions = {1, 2, 3};
  c.ms = {6, 8, 10, 12};
  if (name == "extension-ratio") {
    c.m_min = 4;
    c.m_max = 10;
    c.domains = {"1D", "2D", "3D", "SC", "SP", "SP/DF", "SPOC", "GS/bal", "GS/cat"};
  }
  if (name == "heuristic-eval") c.reps = 10;
  if (name == "microscopes") c.domains = {"1D", "2D", "SC", "SP", "SP/DF", "SPOC", "GS/bal", "GS/cat"};
  if (name == "domain-sizes") c.reps = 5;
  if (name == "scalability") c.reps = 5;
  return c;
}

namespace {

template <class T>
T get(const nlohmann::json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("config key '" + key + "' has the wrong type");
  }
}

}  // namespace

RunConfig apply_json(RunConfig c, const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") {
      const auto name = get<std::string>(value, key);
      if (!c.experiment.empty() && name != c.experiment) {
        throw InputError("config is for experiment '" + name + "', not '" + c.experiment + "'");
      }
      c.experiment = name;
    } else if (key == "seed") {
      c.seed = get<std::uint64_t>(value, key);
    } else if (key == "m") {
      c.m = get<int>(value, key);
    } else if (key == "m_min") {
      c.m_min = get<int>(value, key);
    } else if (key == "m_max") {
      c.m_max = get<int>(value, key);
    } else if (key == "ms") {
      c.ms = get<std::vector<int>>(value, key);
    } else if (key == "n") {
      c.n = get<std::int64_t>(value, key);
    } else if (key == "reps") {
      c.reps = get<int>(value, key);
    } else if (key == "restarts") {
      c.restarts = get<int>(value, key);
    } else if (key == "extra_ic") {
      c.extra_ic = get<int>(value, key);
    } else if (key == "k_max") {
      c.k_max = get<int>(value, key);
    } else if (key == "domains") {
      c.domains = get<std::vector<std::string>>(value, key);
    } else if (key == "radii") {
      c.radii = get<std::vector<double>>(value, key);
    } else if (key == "dimensions") {
      c.dimensions = get<std::vector<int>>(value, key);
    } else if (key == "gap") {
      c.gap = get<int>(value, key);
    } else if (key == "sc_gaps_m") {
      c.sc_gaps_m = get<int>(value, key);
    } else if (key == "max_domain_votes") {
      c.max_domain_votes = get<std::size_t>(value, key);
    } else if (key == "extended") {
      c.extended = get<bool>(value, key);
    } else if (key == "output_dir") {
      c.output_dir = get<std::string>(value, key);
    } else if (key == "budgets") {
      if (!value.is_object()) throw InputError("config key 'budgets' must be an object");
      for (const auto& [bkey, bvalue] : value.items()) {
        if (bkey == "max_exact_candidates") {
          c.budgets.max_exact_candidates = get<int>(bvalue, bkey);
        } else if (bkey == "max_partition_votes") {
          c.budgets.max_partition_votes = get<int>(bvalue, bkey);
        } else if (bkey == "max_subset_work") {
          c.budgets.max_subset_work = get<double>(bvalue, bkey);
        } else {
          throw InputError("unknown config key 'budgets." + bkey + "'");
        }
      }
    } else {
      throw InputError("unknown config key '" + key + "'");
    }
  }
  if (c.reps < 1) throw InputError("reps must be at least 1");
  if (c.restarts < 1) throw InputError("restarts must be at least 1");
  if (c.n < 1) throw InputError("n must be at least 1");
  if (c.m < 1 || c.m_min < 1 || c.m_max < c.m_min) throw InputError("invalid candidate range");
  if (c.extra_ic < 0) throw InputError("extra_ic must be nonnegative");
  for (const auto& d : c.domains) {
    const auto& known = domain_names();
    if (std::find(known.begin(), known.end(), d) == known.end()) throw InputError("unknown domain '" + d + "' in config");
  }
  return c;
}

nlohmann::json to_json(const RunConfig& c) {
  return {
      {"experiment", c.experiment},
      {"seed", c.seed},
      {"m", c.m},
      {"m_min", c.m_min},
      {"m_max", c.m_max},
      {"ms", c.ms},
      {"n", c.n},
      {"reps", c.reps},
      {"restarts", c.restarts},
      {"extra_ic", c.extra_ic},
      {"k_max", c.k_max},
      {"domains", c.domains},
      {"radii", c.radii},
      {"dimensions", c.dimensions},
      {"gap", c.gap},
      {"sc_gaps_m", c.sc_gaps_m},
      {"max_domain_votes", c.max_domain_votes},
      {"extended", c.extended},
      {"budgets",
       {{"max_exact_candidates", c.budgets.max_exact_candidates},
        {"max_partition_votes", c.budgets.max_partition_votes},
        {"max_subset_work", c.budgets.max_subset_work}}},
      {"output_dir", c.output_dir.string()},
  };
}

}  // namespace kdiv::cli
