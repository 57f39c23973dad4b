// gdstream: streaming graph descriptors from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gdstream/gdstream.hpp"

namespace {

using namespace gdstream;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

// Raised for option combinations CLI11 cannot express.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string input;
  std::string dataset;
};

struct Budget {
  std::optional<double> fraction;
  std::optional<std::size_t> absolute;

  BudgetSpec spec() const {
    if (fraction) return BudgetSpec::fraction(*fraction);
    return BudgetSpec::absolute(*absolute);
  }
  std::string describe() const {
    return fraction ? detail::format_double(*fraction) + "|E|" : std::to_string(*absolute);
  }
};

struct Options {
  std::string method = "gabe";
  Source source;
  Budget budget;
  bool exact = false;
  std::size_t workers = 1;
  std::size_t threads = 0;
  std::uint64_t seed = 0;
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::string output;
  std::string format;
  // distance
  std::string left;
  std::string right;
  // classify
  std::size_t folds = 10;
  std::size_t repeats = 10;
  std::string descriptors;
  // error-vs-budget
  std::vector<double> budgets{0.1, 0.3, 0.5};
  std::size_t trials = 20;
  // generate
  std::size_t per_class = 60;
  std::size_t n_min = 50;
  std::size_t n_max = 100;
  double p = 0.1;
};

const CLI::Validator kFraction(
    [](std::string& s) -> std::string {
      double x = 0;
      if (!CLI::detail::lexical_cast(s, x) || !(x > 0.0 && x <= 1.0)) return "expected a fraction in (0, 1], got " + s;
      return {};
    },
    "FRACTION", "fraction");

void add_source(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("--input", src.input, "Edge-list file, one 'u v' pair per line");
  auto* ds = cmd->add_option("--dataset", src.dataset, "Directory holding a DS_A.txt style bundle");
  in->excludes(ds);
  ds->excludes(in);
}

void add_budget(CLI::App* cmd, Budget& b, bool required) {
  auto* frac = cmd->add_option("--budget", b.fraction, "Budget as a fraction of each graph's edge count")
                   ->check(kFraction);
  auto* abs = cmd->add_option("--budget-abs", b.absolute, "Budget as an absolute edge count")
                  ->check(CLI::PositiveNumber);
  frac->excludes(abs);
  abs->excludes(frac);
  if (required) {
    auto* group = cmd->add_option_group("budget");
    group->add_option(frac);
    group->add_option(abs);
    group->require_option(1);
  }
}

void add_method(CLI::App* cmd, std::string& method) {
  cmd->add_option("--method", method, "Descriptor: gabe or maeve")->check(CLI::IsMember({"gabe", "maeve"}));
}

Method method_of(const Options& o) { return *parse_method(o.method); }

Format format_for(const std::string& explicit_format, const std::string& path) {
  if (!explicit_format.empty()) return *parse_format(explicit_format);
  if (path.ends_with(".jsonl") || path.ends_with(".json")) return Format::jsonl;
  return Format::csv;
}

Dataset load_source(const Source& src, std::uint64_t seed) {
  if (!src.dataset.empty()) return load_benchmark_dataset(src.dataset, seed);
  if (src.input.empty()) throw usage_error("one of --input or --dataset is required");
  const auto raw = read_edge_list_file(src.input);
  Dataset ds;
  ds.name = std::filesystem::path(src.input).stem().string();
  // same per-graph shuffle seed as graph 0 of a bundle
  ds.graphs.push_back(preprocess(raw, derive_seed(seed, 0)));
  ds.labels.push_back(0);
  return ds;
}

Dataset load_labelled(const Options& o) {
  if (o.source.dataset.empty()) throw usage_error("--dataset is required");
  return load_benchmark_dataset(o.source.dataset, o.seed);
}

void write_descriptors(const std::vector<Descriptor>& descs, const Options& o) {
  const Format f = format_for(o.format, o.output);
  if (o.output.empty()) {
    if (f == Format::csv)
      write_csv(std::cout, descs);
    else
      write_jsonl(std::cout, descs);
    return;
  }
  save_descriptors(o.output, descs, f);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write '" + path + "'");
  return out;
}

// Prints per-graph failures and keeps the successes; returns the exit code.
int collect(const std::vector<DescriptorResult>& results, std::vector<Descriptor>& out) {
  int code = 0;
  for (const auto& r : results) {
    if (r.descriptor) {
      out.push_back(*r.descriptor);
    } else {
      std::cerr << "gdstream: " << r.error << '\n';
      code = kDataError;
    }
  }
  return code;
}

int run_descriptor(const Options& o) {
  const Dataset ds = load_source(o.source, o.seed);
  std::vector<Descriptor> descs;
  const int code =
      collect(compute_descriptors(ds, method_of(o), o.budget.spec(), o.workers, o.seed, o.threads), descs);
  write_descriptors(descs, o);
  return code;
}

int run_exact(const Options& o) {
  const Dataset ds = load_source(o.source, o.seed);
  std::vector<Descriptor> descs;
  const int code = collect(compute_exact_descriptors(ds, method_of(o), o.oracle_limit, o.threads), descs);
  write_descriptors(descs, o);
  return code;
}

int run_distance(const Options& o) {
  const auto a = load_descriptors(o.left, format_for(o.format, o.left));
  const auto b = load_descriptors(o.right, format_for(o.format, o.right));
  std::ofstream file;
  if (!o.output.empty()) file = open_output(o.output);
  std::ostream& out = o.output.empty() ? std::cout : file;
  out << "graph_id_a,graph_id_b,distance\n";
  for (const auto& x : a)
    for (const auto& y : b)
      out << x.meta.graph_id << ',' << y.meta.graph_id << ',' << detail::format_double(canberra(x, y)) << '\n';
  return 0;
}

int run_classify(const Options& o) {
  const Dataset ds = load_labelled(o);
  std::vector<Descriptor> descs;
  int code = 0;
  std::string budget = "exact";
  if (!o.descriptors.empty()) {
    descs = load_descriptors(o.descriptors, format_for(o.format, o.descriptors));
    budget = "file";
  } else if (o.exact) {
    code = collect(compute_exact_descriptors(ds, method_of(o), o.oracle_limit, o.threads), descs);
  } else {
    if (!o.budget.fraction && !o.budget.absolute) throw usage_error("one of --budget, --budget-abs or --exact is required");
    budget = o.budget.describe();
    code = collect(compute_descriptors(ds, method_of(o), o.budget.spec(), o.workers, o.seed, o.threads), descs);
  }
  if (code != 0) return code;

  std::vector<std::int64_t> labels;
  for (const auto& d : descs) {
    if (d.meta.graph_id >= ds.size()) {
      throw data_error("descriptor graph_id " + std::to_string(d.meta.graph_id) + " is outside the dataset");
    }
    labels.push_back(ds.labels[d.meta.graph_id]);
  }
  const auto report = cross_validate(descs, labels, o.folds, o.repeats, o.seed);

  nlohmann::ordered_json j;
  j["method"] = descs.empty() ? o.method : std::string(to_string(descs.front().method));
  j["budget"] = budget;
  j["workers"] = o.workers;
  j["folds"] = report.folds;
  j["repeats"] = report.repeats;
  j["seed"] = report.seed;
  j["graphs"] = descs.size();
  j["mean_accuracy"] = report.mean_accuracy;
  j["stddev"] = report.stddev;
  j["fold_accuracies"] = report.fold_accuracies;
  if (o.output.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    auto out = open_output(o.output);
    out << j.dump(2) << '\n';
  }
  return 0;
}

int run_error_vs_budget(const Options& o) {
  const Dataset ds = load_labelled(o);
  const auto rows = error_vs_budget(ds, method_of(o), o.budgets, o.trials, o.seed, o.workers, o.threads, o.oracle_limit);
  if (o.output.empty()) {
    write_error_table(std::cout, method_of(o), rows);
  } else {
    auto out = open_output(o.output);
    write_error_table(out, method_of(o), rows);
  }
  return 0;
}

int run_generate(const Options& o) {
  if (o.n_min > o.n_max) throw usage_error("--min-n exceeds --max-n");
  Dataset ds = er_vs_ba_dataset(o.per_class, o.n_min, o.n_max, o.p, o.seed);
  ds.name = std::filesystem::path(o.output).filename().string();
  if (ds.name.empty()) ds.name = "er_vs_ba";
  save_benchmark_dataset(o.output, ds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-pass graph descriptors (GABE, MAEVE) over edge streams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gdstream 0.1.0");
  Options o;

  auto* descriptor = app.add_subcommand("descriptor", "Estimate descriptors from a single pass with a fixed edge budget");
  add_method(descriptor, o.method);
  add_source(descriptor, o.source);
  add_budget(descriptor, o.budget, true);
  descriptor->add_option("--workers", o.workers, "Independent estimator replicas averaged per graph")
      ->check(CLI::PositiveNumber);

  auto* exact = app.add_subcommand("exact", "Oracle descriptors from the full graph");
  add_method(exact, o.method);
  add_source(exact, o.source);

  auto* distance = app.add_subcommand("distance", "Pairwise Canberra distances between two descriptor files");
  distance->add_option("left", o.left, "First descriptor file")->required();
  distance->add_option("right", o.right, "Second descriptor file")->required();

  auto* classify = app.add_subcommand("classify", "1-NN cross-validation under Canberra distance");
  add_method(classify, o.method);
  classify->add_option("--dataset", o.source.dataset, "Labelled dataset bundle")->required();
  add_budget(classify, o.budget, false);
  classify->add_flag("--exact", o.exact, "Use oracle descriptors");
  classify->add_option("--descriptors", o.descriptors, "Precomputed descriptors (graph_id indexes the dataset)");
  classify->add_option("--workers", o.workers, "Independent estimator replicas averaged per graph")
      ->check(CLI::PositiveNumber);
  classify->add_option("--folds", o.folds, "Folds per repeat")->check(CLI::Range(2, 1 << 30));
  classify->add_option("--repeats", o.repeats, "Shuffled repeats")->check(CLI::PositiveNumber);

  auto* experiment = app.add_subcommand("experiment", "Experiments");
  experiment->require_subcommand(1);
  auto* evb = experiment->add_subcommand("error-vs-budget", "Mean Canberra error against the oracle per budget fraction");
  add_method(evb, o.method);
  evb->add_option("--dataset", o.source.dataset, "Dataset bundle")->required();
  evb->add_option("--budgets", o.budgets, "Comma-separated budget fractions")
      ->delimiter(',')
      ->check(kFraction);
  evb->add_option("--trials", o.trials, "Trials per graph and budget")->check(CLI::PositiveNumber);
  evb->add_option("--workers", o.workers, "Independent estimator replicas averaged per graph")
      ->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "Write a synthetic two-class G(n,p) vs preferential-attachment bundle");
  generate->add_option("--output", o.output, "Bundle directory")->required();
  generate->add_option("--per-class", o.per_class, "Graphs per class")->check(CLI::PositiveNumber);
  generate->add_option("--min-n", o.n_min, "Smallest vertex count")->check(CLI::Range(2, 1 << 20));
  generate->add_option("--max-n", o.n_max, "Largest vertex count")->check(CLI::Range(2, 1 << 20));
  generate->add_option("--p", o.p, "Edge probability of the G(n,p) class")->check(CLI::Range(0.0, 1.0));

  for (auto* cmd : {descriptor, exact, distance, classify, evb, generate}) {
    cmd->add_option("--seed", o.seed, "Seed for shuffling and sampling");
    if (cmd != generate) cmd->add_option("--output", o.output, "Output file (default stdout)");
    if (cmd == descriptor || cmd == exact || cmd == distance || cmd == classify) {
      cmd->add_option("--format", o.format, "csv or jsonl (default from extension)")
          ->check(CLI::IsMember({"csv", "jsonl"}));
    }
    if (cmd == exact || cmd == classify || cmd == evb) {
      cmd->add_option("--oracle-limit", o.oracle_limit, "Largest vertex count the exact oracle accepts");
    }
    cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*descriptor) return run_descriptor(o);
    if (*exact) return run_exact(o);
    if (*distance) return run_distance(o);
    if (*classify) return run_classify(o);
    if (*evb) return run_error_vs_budget(o);
    if (*generate) return run_generate(o);
  } catch (const usage_error& e) {
    std::cerr << "gdstream: " << e.what() << '\n';
    return kUsageError;
  } catch (const gdstream::error& e) {
    std::cerr << "gdstream: " << e.what() << '\n';
    return kDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "gdstream: " << e.what() << '\n';
    return kDataError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gdstream: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}
