#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permforms/classify.hpp"
#include "permforms/errors.hpp"
#include "permforms/formation.hpp"
#include "permforms/groupfile.hpp"
#include "permforms/groupgen.hpp"
#include "permforms/report.hpp"
#include "permforms/verify.hpp"

namespace {

using namespace permforms;

struct CommonOptions {
  std::string formation = "N";
  std::string corpus_dir;
  std::string out_path;
  std::string format = "json";
  std::uint64_t order_max = 0;
  unsigned jobs = 1;
  std::uint32_t seed = EngineConfig::defaults().seed;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_corpus) {
  cmd->add_option("--formation", opt.formation, "Formation: A, N, U, NA, S, or a product X*F");
  cmd->add_option("--out", opt.out_path, "Write the report to a file instead of stdout");
  cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--seed", opt.seed, "Seed for the randomized sifting phase");
  if (with_corpus) {
    cmd->add_option("--corpus", opt.corpus_dir,
                    "Directory of group .json files (default: the built-in corpus)");
    cmd->add_option("--order-max", opt.order_max, "Skip corpus groups above this order");
    cmd->add_option("--jobs", opt.jobs, "Worker threads for the sweep");
  }
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw InputError("cannot write output file: " + opt.out_path);
  out << text;
}

EngineConfig config_for(const CommonOptions& opt) {
  EngineConfig cfg = EngineConfig::defaults();
  cfg.seed = opt.seed;
  return cfg;
}

std::vector<CorpusEntry> load_entries(const CommonOptions& opt, CorpusSweep& sweep,
                                      const Formation& f) {
  if (opt.corpus_dir.empty()) {
    std::vector<CorpusEntry> entries;
    for (auto& g : full_corpus(config_for(opt)))
      entries.push_back(CorpusEntry{g.name, g.group});
    return entries;
  }
  CorpusLoad load = load_corpus_dir(opt.corpus_dir, config_for(opt));
  for (const auto& [file, message] : load.errors) {
    VerificationReport r;
    r.group_name = file;
    r.formation = f.name();
    r.flags = f.flags();
    r.check = "load";
    r.status = VerifyStatus::kError;
    r.detail = message;
    sweep.reports.push_back(std::move(r));
    ++sweep.errors;
  }
  return load.entries;
}

int run_sweep(const CommonOptions& opt, SweepMode mode, const std::string& mode_name) {
  Formation f = Formation::by_name(opt.formation);
  CorpusSweep pre;
  std::vector<CorpusEntry> entries = load_entries(opt, pre, f);
  SweepOptions sopt;
  sopt.mode = mode;
  sopt.jobs = opt.jobs;
  sopt.order_max = opt.order_max;
  CorpusSweep sweep = run_corpus(entries, f, sopt);
  // Prepend load errors so per-file problems are visible in the report.
  sweep.errors += pre.errors;
  sweep.reports.insert(sweep.reports.begin(), pre.reports.begin(), pre.reports.end());
  emit(opt, opt.format == "table" ? sweep_to_table(sweep) : sweep_to_json(sweep, mode_name, f));
  return sweep.exit_code();
}

int run_analyze(const CommonOptions& opt, const std::string& path) {
  Formation f = Formation::by_name(opt.formation);
  auto [spec, group] = parse_group_file(path, config_for(opt));
  auto rows = classify_subgroups(f, group);
  emit(opt, opt.format == "table" ? classification_to_table(spec.name, group, f, rows)
                                  : classification_to_json(spec.name, group, f, rows));
  return 0;
}

int run_example_864(const CommonOptions& opt) {
  Example864 ex = build_example_864();
  if (opt.format == "table") {
    std::ostringstream os;
    os << "order-864 example group: (S3 x S3 x A4) x| Z2, degree " << ex.group.degree() << "\n";
    os << "order: " << ex.group.order() << "\n";
    os << "chosen action: " << ex.chosen << "\n";
    os << "candidates passing all facts: " << ex.passing.size() << "\n";
    for (const auto& line : ex.fact_log) os << "  " << line << "\n";
    emit(opt, os.str());
  } else {
    nlohmann::ordered_json j;
    j["tool"] = "permforms";
    j["mode"] = "example-864";
    j["order"] = ex.group.order();
    j["degree"] = ex.group.degree();
    j["chosen"] = ex.chosen;
    j["passing"] = ex.passing;
    j["fact_log"] = ex.fact_log;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& p : ex.group.generators()) gens.push_back(p.to_cycles());
    j["generators"] = gens;
    emit(opt, j.dump(2) + "\n");
  }
  return 0;
}

int run_gen_corpus(const CommonOptions& opt, const std::string& out_dir) {
  auto corpus = full_corpus();
  if (opt.order_max > 0) {
    corpus.erase(std::remove_if(corpus.begin(), corpus.end(),
                                [&](const NamedGroup& g) {
                                  return g.group.order() > opt.order_max;
                                }),
                 corpus.end());
  }
  write_corpus_dir(corpus, out_dir);
  std::cout << "wrote " << corpus.size() << " group files to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "permforms: formation-theoretic subgroup analysis and theorem verification\n"
      "for finite permutation groups"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string analyze_path, gen_dir;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Per-conjugacy-class classification table for one group file");
  analyze->add_option("file", analyze_path, "Group .json file")->required();
  add_common(analyze, opt, false);

  CLI::App* vt = app.add_subcommand(
      "verify-theorem",
      "Check the equivalence of statements (1)-(3) on every corpus group");
  add_common(vt, opt, true);

  CLI::App* vc = app.add_subcommand(
      "verify-corollary", "Check the corollary equivalence (F-subnormal or F-abnormal)");
  add_common(vc, opt, true);

  CLI::App* vl = app.add_subcommand("verify-lemmas",
                                    "Run the supporting lemma property suites");
  add_common(vl, opt, true);

  CLI::App* ex = app.add_subcommand(
      "example-864", "Reconstruct the order-864 example group and verify its facts");
  add_common(ex, opt, false);

  CLI::App* gen = app.add_subcommand("gen-corpus", "Write the built-in corpus as .json files");
  gen->add_option("--out-dir", gen_dir, "Target directory")->required();
  gen->add_option("--order-max", opt.order_max, "Only groups up to this order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(opt, analyze_path);
    if (vt->parsed()) return run_sweep(opt, SweepMode::kTheorem, "theorem");
    if (vc->parsed()) return run_sweep(opt, SweepMode::kCorollary, "corollary");
    if (vl->parsed()) return run_sweep(opt, SweepMode::kLemmas, "lemmas");
    if (ex->parsed()) return run_example_864(opt);
    if (gen->parsed()) return run_gen_corpus(opt, gen_dir);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
