// caycov: exact counts of typical abelian coverings of Cayley graphs on
// finite abelian groups, plus the subgroup-counting primitives behind them
// and a brute-force verification mode.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caycov/covercount.hpp"
#include "caycov/covering.hpp"
#include "caycov/counting.hpp"
#include "caycov/io.hpp"
#include "caycov/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct BudgetOpts {
  std::uint64_t subgroups = caycov::EnumerationBudget{}.max_group_order;
  std::uint64_t rowspace = caycov::EnumerationBudget{}.max_rowspace_order;

  caycov::EnumerationBudget to_budget() const {
    caycov::EnumerationBudget b;
    b.max_group_order = subgroups;
    b.max_rowspace_order = rowspace;
    return b;
  }
};

void add_budget_options(CLI::App* cmd, BudgetOpts& opts) {
  cmd->add_option("--budget", opts.subgroups, "max group order for exhaustive subgroup enumeration");
  cmd->add_option("--rowspace-budget", opts.rowspace, "max row-space order for closure checks");
}

std::string tuple_str(const std::vector<std::uint64_t>& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  s += ")";
  return s;
}

void print_factors(const caycov::CoverCountResult& result) {
  for (const auto& f : result.factors) {
    caycov::json line;
    line["prime"] = f.prime;
    line["factor"] = f.value.str();
    line["method"] = f.method;
    std::cout << line.dump() << "\n";
  }
  caycov::json total;
  total["count"] = result.value.str();
  std::cout << total.dump() << "\n";
}

int run_verify_suites(const std::string& suite, const caycov::EnumerationBudget& budget) {
  std::vector<caycov::CheckResult> results;
  auto append = [&](std::vector<caycov::CheckResult> more) {
    for (auto& r : more) results.push_back(std::move(r));
  };
  if (suite == "formulas" || suite == "all") append(caycov::verify_formulas(budget));
  if (suite == "canonical-form" || suite == "all") append(caycov::verify_canonical_form(budget));
  if (suite == "coverings" || suite == "all") append(caycov::verify_coverings(budget));
  if (results.empty()) {
    std::cerr << "unknown suite '" << suite << "' (expected formulas, coverings, canonical-form, all)\n";
    return kExitUsage;
  }
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checks << " checks)";
    if (!r.pass) std::cout << " first mismatch: " << r.detail;
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact covering and subgroup counts for Cayley graphs on finite abelian groups"};
  app.require_subcommand(1);

  // ---- count-subgroups ----
  auto* cs = app.add_subcommand("count-subgroups", "subgroups of a given type (optionally with quotient type)");
  struct {
    long long p = 2;
    std::string alpha, beta, gamma;
    BudgetOpts budget;
  } cs_opts;
  cs->add_option("--p", cs_opts.p, "prime")->required();
  cs->add_option("--alpha", cs_opts.alpha, "ambient type, e.g. 2,1")->required();
  cs->add_option("--beta", cs_opts.beta, "subgroup type (0 for trivial)")->required();
  cs->add_option("--gamma", cs_opts.gamma, "quotient type; switches to the triple count");
  add_budget_options(cs, cs_opts.budget);

  // ---- count-by-order ----
  auto* co = app.add_subcommand("count-by-order", "subgroups of order p^r");
  struct {
    long long p = 2;
    std::string alpha;
    int r = 0;
  } co_opts;
  co->add_option("--p", co_opts.p, "prime")->required();
  co->add_option("--alpha", co_opts.alpha, "ambient type")->required();
  co->add_option("--r", co_opts.r, "order exponent")->required();

  // ---- count-coverings ----
  auto* cc = app.add_subcommand("count-coverings", "typical abelian coverings of a Cayley graph");
  struct {
    std::string spec;
    std::string kernel, total;
    std::uint64_t folds = 0;
    bool explain = false;
    BudgetOpts budget;
  } cc_opts;
  cc->add_option("--spec", cc_opts.spec, "Cayley input document (file path or inline JSON)")->required();
  cc->add_option("--kernel", cc_opts.kernel, "covering transformation group, e.g. 2:[2,1];3:[1]");
  cc->add_option("--total", cc_opts.total, "total group type (requires --kernel)");
  cc->add_option("--folds", cc_opts.folds, "fold count");
  cc->add_flag("--explain", cc_opts.explain, "emit one JSON line per prime factor");
  add_budget_options(cc, cc_opts.budget);

  // ---- enumerate-coverings ----
  auto* ec = app.add_subcommand("enumerate-coverings", "brute-force list of covering subgroups");
  struct {
    std::string spec;
    std::string kernel, total;
    std::uint64_t folds = 0;
    bool dump_graphs = false;
    BudgetOpts budget;
  } ec_opts;
  ec->add_option("--spec", ec_opts.spec, "Cayley input document (file path or inline JSON)")->required();
  ec->add_option("--kernel", ec_opts.kernel, "covering transformation group type");
  ec->add_option("--total", ec_opts.total, "total group type (requires --kernel)");
  ec->add_option("--folds", ec_opts.folds, "fold count");
  ec->add_flag("--dump-graphs", ec_opts.dump_graphs, "also dump adjacency lists and the fiber map");
  add_budget_options(ec, ec_opts.budget);

  // ---- verify ----
  auto* vf = app.add_subcommand("verify", "formula-vs-oracle verification suites");
  struct {
    std::string suite = "all";
    BudgetOpts budget;
  } vf_opts;
  vf->add_option("--suite", vf_opts.suite, "formulas | coverings | canonical-form | all");
  add_budget_options(vf, vf_opts.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cs->parsed()) {
      caycov::Partition alpha = caycov::parse_partition(cs_opts.alpha);
      caycov::Partition beta = caycov::parse_partition(cs_opts.beta);
      if (cs->count("--gamma") > 0) {
        caycov::Partition gamma = caycov::parse_partition(cs_opts.gamma);
        caycov::TripleCount tc =
            caycov::count_triple_explained(cs_opts.p, alpha, beta, gamma, cs_opts.budget.to_budget());
        std::cout << tc.value.str() << "\n";
        std::cout << "method: " << caycov::to_string(tc.method) << "\n";
      } else {
        std::cout << caycov::count_subgroups_of_type(cs_opts.p, alpha, beta).str() << "\n";
      }
      return kExitOk;
    }

    if (co->parsed()) {
      caycov::Partition alpha = caycov::parse_partition(co_opts.alpha);
      std::cout << caycov::count_subgroups_of_order(co_opts.p, alpha, co_opts.r).str() << "\n";
      return kExitOk;
    }

    if (cc->parsed()) {
      caycov::CayleySpec spec = caycov::spec_from_json(caycov::load_json_file_or_inline(cc_opts.spec));
      caycov::CoverQuery query;
      if (cc->count("--kernel") > 0) query.kernel = caycov::parse_group_type(cc_opts.kernel);
      if (cc->count("--total") > 0) query.total = caycov::parse_group_type(cc_opts.total);
      if (cc->count("--folds") > 0) query.folds = cc_opts.folds;
      caycov::CoverCountResult result = caycov::count_coverings(spec, query, cc_opts.budget.to_budget());
      if (cc_opts.explain) {
        print_factors(result);
      } else {
        std::cout << result.value.str() << "\n";
      }
      return kExitOk;
    }

    if (ec->parsed()) {
      caycov::CayleySpec spec = caycov::spec_from_json(caycov::load_json_file_or_inline(ec_opts.spec));
      caycov::CoverQuery query;
      if (ec->count("--kernel") > 0) query.kernel = caycov::parse_group_type(ec_opts.kernel);
      if (ec->count("--total") > 0) query.total = caycov::parse_group_type(ec_opts.total);
      if (ec->count("--folds") > 0) query.folds = ec_opts.folds;
      query.validate();
      caycov::EnumerationBudget budget = ec_opts.budget.to_budget();
      caycov::CoveringEnumeration result =
          query.folds ? caycov::enumerate_covering_subgroups_q_fold(spec, *query.folds, budget)
          : query.total
              ? caycov::enumerate_covering_subgroups_with_total(spec, *query.kernel, *query.total, budget)
              : caycov::enumerate_covering_subgroups_with_kernel(spec, *query.kernel, budget);
      for (const auto& d : result.subgroups) {
        std::string line;
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (i) line += " ";
          line += tuple_str(result.context.ambient.decode(d[i]));
        }
        std::cout << line << "\n";
      }
      if (ec_opts.dump_graphs) {
        for (std::size_t i = 0; i < result.subgroups.size(); ++i) {
          caycov::CoveringInstance inst =
              caycov::build_and_verify_covering(spec, result.context, result.subgroups[i]);
          std::cout << "# covering " << i << ": " << inst.total_adjacency.size() << " vertices, "
                    << inst.fold_count << " folds\n";
          for (std::size_t v = 0; v < inst.total_adjacency.size(); ++v) {
            std::cout << "total " << v << ":";
            for (auto w : inst.total_adjacency[v]) std::cout << " " << w;
            std::cout << "\n";
          }
          for (std::size_t v = 0; v < inst.base_adjacency.size(); ++v) {
            std::cout << "base " << v << ":";
            for (auto w : inst.base_adjacency[v]) std::cout << " " << w;
            std::cout << "\n";
          }
          std::vector<std::vector<std::uint32_t>> fibers(inst.base_adjacency.size());
          for (std::uint32_t v = 0; v < inst.projection.size(); ++v) fibers[inst.projection[v]].push_back(v);
          for (std::size_t b = 0; b < fibers.size(); ++b) {
            std::cout << "fiber " << b << ":";
            for (auto v : fibers[b]) std::cout << " " << v;
            std::cout << "\n";
          }
        }
      }
      return kExitOk;
    }

    if (vf->parsed()) {
      return run_verify_suites(vf_opts.suite, vf_opts.budget.to_budget());
    }
  } catch (const caycov::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const caycov::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const caycov::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
