#include "experiments.hpp"

#include <cstdio>
#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "election_io.hpp"
#include "kdiv/analysis.hpp"
#include "kdiv/domains.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/microscope.hpp"
#include "kdiv/sampling.hpp"

namespace kdiv::cli {

namespace fs = std::filesystem;

std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c >= 'A' && c <= 'Z') out += static_cast<char>(c - 'A' + 'a');
    else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) out += c;
    else out += '-';
  }
  return out;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

class Csv {
 public:
  explicit Csv(std::string header) : text_(std::move(header) + "\n") {}
  template <class... T>
  void row(const T&... cells) {
    std::size_t i = 0;
    ((text_ += (i++ ? "," : "") + cell(cells)), ...);
    text_ += "\n";
  }
  const std::string& text() const { return text_; }

 private:
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(double v) { return num(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(long v) { return std::to_string(v); }
  static std::string cell(long long v) { return std::to_string(v); }
  static std::string cell(unsigned long v) { return std::to_string(v); }
  static std::string cell(unsigned long long v) { return std::to_string(v); }
  std::string text_;
};

struct Output {
  fs::path dir;
  std::vector<std::string> files;
  void write(const std::string& name, const std::string& contents) {
    write_text(dir / name, contents);
    files.push_back(name);
  }
};

std::uint64_t name_seed(std::uint64_t seed, const std::string& name, int m) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return splitmix64(seed ^ splitmix64(h + static_cast<std::uint64_t>(m)));
}

bool solved_by_chain(const std::string& name) { return name == "SC" || name == "1D"; }

// One domain-as-election diversity vector.
struct DomainVector {
  std::vector<double> values;
  bool sampled = false;
};

DomainVector domain_vector_impl(const std::string& name, int m, int rep, const RunConfig& c) {
  Rng rng = Rng::stream(name_seed(c.seed, name, m), static_cast<std::uint64_t>(rep));
  DomainVector out;
  if (name == "IC") {
    CultureSpec spec;
    spec.seed = rng.next();
    const auto e = sample_election(spec, m, c.n);
    SolverConfig sc;
    sc.restarts = c.restarts;
    sc.seed = rng.next();
    sc.extra_ic = c.extra_ic;
    out.values = diversity_vector(e, sc).values;
    out.sampled = true;
    return out;
  }
  const Domain domain = make_domain(name, m, rng);
  SolverConfig sc;
  sc.restarts = c.restarts;
  sc.seed = rng.next();
  sc.extra_ic = c.extra_ic;
  sc.budgets = c.budgets;
  if (domain.size() > c.max_domain_votes) {
    CultureSpec spec;
    spec.kind = Culture::IcDomain;
    spec.seed = rng.next();
    SamplingContext ctx;
    ctx.domain = &domain;
    const auto e = sample_election(spec, m, static_cast<std::int64_t>(c.max_domain_votes), ctx);
    if (solved_by_chain(name)) sc.solver = SolverKind::SingleCrossing;
    if (domain.is_condorcet()) sc.domain = &domain;
    out.values = diversity_vector(e, sc).values;
    out.sampled = true;
    return out;
  }
  const auto e = to_election(domain);
  if (solved_by_chain(name)) sc.solver = SolverKind::SingleCrossing;
  sc.domain = &domain;
  out.values = diversity_vector(e, sc).values;
  return out;
}

template <class F>
auto in_cell(const std::string& cell, F&& f) {
  try {
    return f();
  } catch (const BudgetError& e) {
    throw BudgetError(cell + ": " + e.what());
  }
}

DomainVector domain_vector(const std::string& name, int m, int rep, const RunConfig& c) {
  return in_cell("domain " + name + ", m=" + std::to_string(m) + ", rep " + std::to_string(rep),
                 [&] { return domain_vector_impl(name, m, rep, c); });
}

void vectors_csv(Csv& csv, const std::string& label, const std::vector<std::vector<double>>& rows, const std::string& extra = {}) {
  const std::size_t len = rows.front().size();
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<double> column;
    for (const auto& r : rows) column.push_back(r[k]);
    const auto s = summarize(column);
    if (extra.empty()) csv.row(label, static_cast<int>(k + 1), s.mean, s.sd, s.count);
    else csv.row(extra, label, static_cast<int>(k + 1), s.mean, s.sd, s.count);
  }
}

void run_domain_sizes(const RunConfig& c, Output& out) {
  Csv csv("domain,m,size_mean,size_min,size_max,formula,reps");
  const std::vector<std::pair<std::string, std::optional<SizeFormula>>> kinds{
      {"SP", SizeFormula::SP},     {"GS/bal", SizeFormula::GS},     {"GS/cat", SizeFormula::GS},
      {"SPOC", SizeFormula::SPOC}, {"SP/DF", SizeFormula::SPDF},    {"SC", SizeFormula::SC},
      {"1D", SizeFormula::Euclid1D}, {"2D", SizeFormula::Euclid2D}, {"3D", std::nullopt}};
  for (const auto& [name, formula] : kinds) {
    for (int m = std::max(2, c.m_min); m <= c.m_max; ++m) {
      if (name == "SPOC" && m < 3) continue;
      if (name == "SP/DF" && m < 5) continue;
      const bool random = name == "SC" || name == "1D" || name == "2D" || name == "3D";
      const int reps = random ? c.reps : 1;
      std::vector<double> sizes;
      for (int rep = 0; rep < reps; ++rep) {
        Rng rng = Rng::stream(name_seed(c.seed, name, m), static_cast<std::uint64_t>(rep));
        sizes.push_back(static_cast<double>(make_domain(name, m, rng).size()));
      }
      const auto s = summarize(sizes);
      const std::string f = formula ? std::to_string(domain_size_formula(*formula, m)) : std::string();
      csv.row(name, m, s.mean, *std::min_element(sizes.begin(), sizes.end()), *std::max_element(sizes.begin(), sizes.end()), f, reps);
    }
  }
  out.write("domain_sizes.csv", csv.text());
}

void run_diversity(const RunConfig& c, int m, Csv& csv, Csv* ranking, const std::string& m_label) {
  std::vector<NamedVector> means;
  std::vector<std::vector<std::vector<double>>> all;
  std::vector<std::string> names = c.domains;
  names.push_back("IC");
  for (const auto& name : names) {
    std::vector<std::vector<double>> rows;
    bool sampled = false;
    for (int rep = 0; rep < c.reps; ++rep) {
      auto v = domain_vector(name, m, rep, c);
      sampled = sampled || v.sampled;
      rows.push_back(std::move(v.values));
    }
    if (m_label.empty()) vectors_csv(csv, name, rows);
    else vectors_csv(csv, name, rows, m_label);
    if (name != "IC") {
      means.push_back({name, mean_vector(rows)});
      all.push_back(rows);
    }
  }
  if (ranking) {
    const auto r = domain_ranking(means, mean_tolerance(all));
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      std::string members;
      for (const auto& n : r.classes[i]) members += (members.empty() ? "" : " ") + n;
      ranking->row(static_cast<int>(i + 1), members);
    }
  }
}

void run_sp_cultures(const RunConfig& c, Output& out) {
  Csv csv("culture,k,mean,sd,reps");
  Csv pol("culture,polarization_mean,polarization_sd,reps");
  const Domain sp = enumerate_sp(Ranking::identity(c.m));
  for (const auto& [label, kind] : std::vector<std::pair<std::string, Culture>>{
           {"Walsh", Culture::Walsh}, {"Conitzer", Culture::Conitzer}, {"GS/cat-CVC", Culture::CvcRandom}, {"IC", Culture::IcFull}}) {
    std::vector<std::vector<double>> rows;
    std::vector<double> pols;
    const Domain cat = cvc_enumerate(Ranking::identity(c.m));
    for (int rep = 0; rep < c.reps; ++rep) {
      Rng rng = Rng::stream(name_seed(c.seed, label, c.m), static_cast<std::uint64_t>(rep));
      CultureSpec spec;
      spec.kind = kind;
      spec.seed = rng.next();
      const auto e = sample_election(spec, c.m, c.n);
      SolverConfig sc;
      sc.restarts = c.restarts;
      sc.seed = rng.next();
      sc.extra_ic = c.extra_ic;
      if (kind == Culture::Walsh || kind == Culture::Conitzer) sc.domain = &sp;
      if (kind == Culture::CvcRandom) sc.domain = &cat;
      const auto v = diversity_vector(e, sc);
      pols.push_back(polarization(v));
      rows.push_back(v.values);
    }
    vectors_csv(csv, label, rows);
    const auto s = summarize(pols);
    pol.row(label, s.mean, s.sd, s.count);
  }
  out.write("sp_cultures_diversity.csv", csv.text());
  out.write("sp_cultures_polarization.csv", pol.text());
}

void run_euclidean_box(const RunConfig& c, Output& out) {
  Csv counts("dimension,radius,distinct_sampled,max_in_box,domain_size,reps,lower_bound");
  for (int d : c.dimensions) {
    for (double r : c.radii) {
      const auto b = count_distinct_sampled(d, r, c.m, c.reps, name_seed(c.seed, "box" + std::to_string(d), c.m));
      counts.row(d, r, b.distinct_sampled, b.max_in_box, b.domain_size, c.reps, b.lower_bound ? 1 : 0);
    }
  }
  out.write("box_counts.csv", counts.text());

  // Diversity of 1-Box elections.
  Csv div("model,k,mean,sd,reps");
  for (int d : c.dimensions) {
    const std::string label = std::to_string(d) + "D/1-Box";
    std::vector<std::vector<double>> rows;
    for (int rep = 0; rep < c.reps; ++rep) {
      Rng rng = Rng::stream(name_seed(c.seed, label, c.m), static_cast<std::uint64_t>(rep));
      const Domain domain = make_domain(std::to_string(d) + "D", c.m, rng);
      CultureSpec spec;
      spec.kind = Culture::RBox;
      spec.dimension = d;
      spec.radius = 1.0;
      spec.seed = rng.next();
      SamplingContext ctx;
      ctx.embedding = &*domain.embedding;
      const auto e = sample_election(spec, c.m, c.n, ctx);
      SolverConfig sc;
      sc.restarts = c.restarts;
      sc.seed = rng.next();
      sc.extra_ic = c.extra_ic;
      sc.domain = &domain;
      rows.push_back(diversity_vector(e, sc).values);
    }
    vectors_csv(div, label, rows);
  }
  out.write("box_diversity.csv", div.text());
}

void run_histograms(const RunConfig& c, Output& out) {
  Csv csv("domain,k,distance,mean_count,reps");
  for (const auto& name : c.domains) {
    for (int k = 1; k <= c.k_max; ++k) {
      std::vector<double> sum(static_cast<std::size_t>(max_swap_distance(c.m) + 1), 0.0);
      for (int rep = 0; rep < c.reps; ++rep) {
        Rng rng = Rng::stream(name_seed(c.seed, name, c.m), static_cast<std::uint64_t>(rep));
        const Domain domain = make_domain(name, c.m, rng);
        const auto e = to_election(domain);
        SolverConfig sc;
        sc.restarts = c.restarts;
        sc.seed = rng.next();
        sc.extra_ic = c.extra_ic;
        sc.domain = &domain;
        if (solved_by_chain(name)) sc.solver = SolverKind::SingleCrossing;
        const auto result = in_cell("histogram " + name + ", k=" + std::to_string(k), [&] { return solve_k_kemeny(e, k, sc); });
        const auto h = distance_histogram(e, result);
        for (std::size_t i = 0; i < h.size(); ++i) sum[i] += static_cast<double>(h[i]);
      }
      for (std::size_t i = 0; i < sum.size(); ++i) csv.row(name, k, static_cast<int>(i), sum[i] / c.reps, c.reps);
    }
  }
  out.write("histograms.csv", csv.text());
}

void run_extension_ratio(const RunConfig& c, Output& out) {
  Csv csv("domain,m,ratio_mean,ratio_sd,reps");
  for (const auto& name : c.domains) {
    for (int m = c.m_min; m <= c.m_max; ++m) {
      if (name == "SPOC" && m < 3) continue;
      if (name == "SP/DF" && m < 5) continue;
      const bool random = name == "SC" || name == "1D" || name == "2D" || name == "3D";
      const int reps = random ? c.reps : 1;
      std::vector<double> ratios;
      for (int rep = 0; rep < reps; ++rep) {
        Rng rng = Rng::stream(name_seed(c.seed, name, m), static_cast<std::uint64_t>(rep));
        ratios.push_back(reverse_extension(make_domain(name, m, rng)).second);
      }
      const auto s = summarize(ratios);
      csv.row(name, m, s.mean, s.sd, s.count);
    }
  }
  out.write("extension_ratio.csv", csv.text());
}

void run_heuristic_eval(const RunConfig& c, Output& out) {
  Csv csv("table,source,m,k,mean,sd,reps,reference");
  struct Table {
    std::string name;
    std::vector<std::string> rows;
    int k;
    int m_hi;
  };
  const std::vector<std::string> domains{"1D", "GS/cat", "GS/bal", "SP", "SC", "SPOC", "2D", "3D", "SP/DF"};
  const std::vector<std::string> condorcet{"1D", "GS/cat", "GS/bal", "SP", "SC"};
  const std::vector<std::string> sampled{"IC", "3D/box", "2D/box", "1D/box", "SP/Wal", "SP/Con"};
  const std::vector<Table> tables{{"domains", domains, 1, 8},   {"domains", domains, 2, 8},   {"domains", condorcet, 3, 8},
                                  {"sampled", sampled, 1, 8},   {"sampled", sampled, 2, 7},   {"sampled", sampled, 3, 5}};
  HeuristicOptions opts;
  opts.reps = c.reps;
  opts.voters = c.n;
  opts.restarts = c.restarts;
  opts.extra_ic = c.extra_ic;
  opts.full_search_work = 8e9;
  for (const auto& t : tables) {
    for (const auto& row : t.rows) {
      for (int m = std::max(3, c.m_min); m <= std::min(t.m_hi, c.m_max); ++m) {
        if (row == "SP/DF" && m < 5) continue;
        opts.seed = name_seed(c.seed, t.name + row + std::to_string(t.k), m);
        const auto cell = in_cell(t.name + " " + row + ", m=" + std::to_string(m) + ", k=" + std::to_string(t.k),
                                  [&] { return evaluate_heuristic(row, m, t.k, opts); });
        csv.row(t.name, row, m, t.k, cell.ratio.mean, cell.ratio.sd, cell.ratio.count, cell.reference);
      }
    }
  }
  out.write("heuristic_eval.csv", csv.text());
}

void run_microscopes(const RunConfig& c, Output& out) {
  Csv summary("domain,variant,points,stress,iterations");
  for (const auto& name : c.domains) {
    Rng rng = Rng::stream(name_seed(c.seed, name, c.m), 0);
    const Domain base = make_domain(name, c.m, rng);
    std::vector<std::pair<std::string, Domain>> variants{{"", base}};
    if (c.extended) variants.emplace_back("-ext", reverse_extension(base).first);
    for (const auto& [suffix, domain] : variants) {
      for (int with_ic = 1; with_ic >= 0; --with_ic) {
        MicroscopeOptions opts;
        opts.k = 4;
        opts.extra_ic = with_ic ? c.extra_ic : 0;
        opts.restarts = c.restarts;
        opts.seed = name_seed(c.seed, name + suffix, c.m);
        const auto plot = render_microscope(domain, opts);
        const std::string stem = "microscope_" + slug(name) + suffix + (with_ic ? "_ic" : "_noic");
        out.write(stem + ".svg", microscope_svg(plot, name + suffix + (with_ic ? " with IC" : "")));
        out.write(stem + ".csv", microscope_csv(plot));
        summary.row(name + suffix, with_ic ? "ic" : "noic", static_cast<int>(plot.points.size()), plot.stress,
                    static_cast<int>(plot.stress_history.size() - 1));
      }
    }
  }
  out.write("microscopes.csv", summary.text());
}

void run_sc_gaps(const RunConfig& c, Output& out) {
  Csv csv("sampling,k,mean,sd,reps");
  Csv groups("rep,votes,blocks");
  for (const bool weighted : {false, true}) {
    std::vector<std::vector<double>> rows;
    for (int rep = 0; rep < c.reps; ++rep) {
      Rng rng = Rng::stream(name_seed(c.seed, "sc-gaps", c.sc_gaps_m), static_cast<std::uint64_t>(rep));
      const Domain chain = generate_sc_chain(rng, c.sc_gaps_m);
      const Domain gaps = sc_gaps_domain(chain, c.gap);
      if (!weighted) {
        std::set<double> distinct(gaps.weights->begin(), gaps.weights->end());
        groups.row(rep, static_cast<int>(gaps.size()), static_cast<int>(distinct.size()));
      }
      CultureSpec spec;
      spec.kind = Culture::IcDomain;
      spec.weighted = weighted;
      spec.seed = rng.next();
      SamplingContext ctx;
      ctx.domain = &gaps;
      const auto e = sample_election(spec, c.sc_gaps_m, c.n, ctx);
      SolverConfig sc;
      sc.solver = SolverKind::SingleCrossing;
      rows.push_back(diversity_vector(e, sc).values);
    }
    vectors_csv(csv, weighted ? "weighted" : "uniform", rows);
  }
  out.write("sc_gaps_diversity.csv", csv.text());
  out.write("sc_gaps_groups.csv", groups.text());
}

void run_scalability(const RunConfig& c, Output& out) {
  Csv csv("m,domain,k,mean,sd,reps");
  for (int m : c.ms) run_diversity(c, m, csv, nullptr, std::to_string(m));
  out.write("scalability_diversity.csv", csv.text());
}

}  // namespace

fs::path run_experiment(const RunConfig& c) {
  Output out;
  out.dir = c.output_dir / c.experiment;
  fs::create_directories(out.dir);
  const auto& name = c.experiment;
  if (name == "domain-sizes") {
    run_domain_sizes(c, out);
  } else if (name == "diversity") {
    Csv csv("domain,k,mean,sd,reps");
    Csv ranking("rank,domains");
    run_diversity(c, c.m, csv, &ranking, {});
    out.write("diversity.csv", csv.text());
    out.write("diversity_ranking.csv", ranking.text());
  } else if (name == "sp-cultures") {
    run_sp_cultures(c, out);
  } else if (name == "euclidean-box") {
    run_euclidean_box(c, out);
  } else if (name == "histograms") {
    run_histograms(c, out);
  } else if (name == "extension-ratio") {
    run_extension_ratio(c, out);
  } else if (name == "heuristic-eval") {
    run_heuristic_eval(c, out);
  } else if (name == "microscopes") {
    run_microscopes(c, out);
  } else if (name == "sc-gaps") {
    run_sc_gaps(c, out);
  } else if (name == "scalability") {
    run_scalability(c, out);
  } else {
    throw InputError("unknown experiment '" + name + "'");
  }
  nlohmann::json manifest{{"experiment", name}, {"seed", c.seed}, {"version", KDIV_VERSION}, {"config", to_json(c)}, {"files", out.files}};
  const fs::path path = out.dir / "manifest.json";
  write_text(path, manifest.dump(2) + "\n");
  return path;
}

}  // namespace kdiv::cli
