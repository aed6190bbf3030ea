#include "polardesign/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "polardesign/certificate.hpp"
#include "polardesign/counting.hpp"
#include "polardesign/decode.hpp"
#include "polardesign/geometry.hpp"
#include "polardesign/incidence.hpp"
#include "polardesign/klp.hpp"
#include "polardesign/search.hpp"

namespace polar::cli {

using nlohmann::json;

namespace {

struct CommandConfig {
  std::string family;
  std::uint64_t q = 2;
  unsigned n = 1;
  unsigned t = 1;
  unsigned k = 1;
  std::uint64_t p = 2;
  unsigned lambda = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t node_budget = 50'000'000;
  unsigned samples = 1;
  unsigned threads = 1;
  std::string method = "exact-cover";
  std::string big_c = "1";
  std::string c_prime = "1";
  std::string small_c = "1";
  std::string out_path;
  std::string certificate_path;
  bool trace = false;
  bool count_only = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json rows_json(const Subspace& s) { return s.to_rows(); }

std::vector<std::string> strings(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

Family require_family(const CommandConfig& cfg) {
  const auto f = parse_family(cfg.family);
  if (!f) throw UsageError("unknown family '" + cfg.family + "' (use 2A-odd, 2A-even, B, C, D, 2D)");
  return *f;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << "\n"; }

int cmd_count(const CommandConfig& cfg, bool has_t, std::ostream& out) {
  const auto desc = describe(require_family(cfg), cfg.n, cfg.q);
  if (cfg.k > desc.rank) throw UsageError("k exceeds the rank");
  json doc;
  const auto expr = polar_count_expression(desc, cfg.k);
  doc["count"] = to_decimal(expr.value);
  if (cfg.trace) doc["factors"] = strings(expr.factors);
  if (has_t) {
    if (cfg.t > cfg.k) throw UsageError("t exceeds k");
    const auto through = polar_count_through_expression(desc, cfg.t, cfg.k);
    doc["through"] = to_decimal(through.value);
    if (cfg.trace) doc["through_factors"] = strings(through.factors);
  }
  emit(out, doc);
  return kExitOk;
}

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  const auto space = standard_polar_space(require_family(cfg), cfg.n, cfg.q);
  const auto spaces = enumerate_isotropic_kspaces(space, cfg.k, cfg.budget);
  json doc;
  doc["count"] = std::to_string(spaces.size());
  if (!cfg.count_only) {
    json list = json::array();
    for (const auto& s : spaces) list.push_back(rows_json(s));
    doc["subspaces"] = std::move(list);
  }
  emit(out, doc);
  return kExitOk;
}

int cmd_verify_counts(const CommandConfig& cfg, std::ostream& out) {
  const auto space = standard_polar_space(require_family(cfg), cfg.n, cfg.q);
  const auto& desc = space.descriptor;
  std::mt19937_64 rng(cfg.seed);
  bool ok = true;
  json levels = json::array();
  json extensions = json::array();
  std::vector<std::vector<Subspace>> by_dim;
  for (unsigned k = 0; k <= desc.rank; ++k) {
    by_dim.push_back(enumerate_isotropic_kspaces(space, k, cfg.budget));
    const BigInt formula = polar_count(desc, k);
    const bool match = formula == BigInt(by_dim.back().size());
    ok = ok && match;
    levels.push_back({{"k", k},
                      {"enumerated", std::to_string(by_dim.back().size())},
                      {"formula", to_decimal(formula)},
                      {"ok", match}});
  }
  for (unsigned t = 0; t <= desc.rank; ++t) {
    for (unsigned k = t; k <= desc.rank; ++k) {
      const BigInt formula = polar_count_through(desc, t, k);
      bool match = true;
      const auto& pool = by_dim[t];
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (unsigned s = 0; s < cfg.samples; ++s) {
        const auto ext = enumerate_extensions(space, pool[pick(rng)], k, cfg.budget);
        match = match && BigInt(ext.size()) == formula;
      }
      ok = ok && match;
      extensions.push_back({{"t", t}, {"k", k}, {"formula", to_decimal(formula)}, {"samples", cfg.samples}, {"ok", match}});
    }
  }
  emit(out, {{"counts", levels}, {"extensions", extensions}, {"verified", ok}});
  return ok ? kExitOk : kExitViolation;
}

json decoding_json(const DecodingSystem& s) {
  json d = json::array();
  for (const auto& row : s.d) d.push_back(strings(row));
  return d;
}

int cmd_decode(const CommandConfig& cfg, std::ostream& out) {
  const DecodingSystem s = build_decoding_system(BigInt(cfg.p), cfg.t, cfg.k);
  const auto bounds = determinant_bound_check(s);
  const BigInt l1 = gamma_l1_closed_form(s);
  const BigInt c4 = s.m > l1 ? s.m : l1;
  const bool verified = solves_system(s) && bounds.ok &&
                        s.m == s.f[s.t] * gaussian_binomial(s.k, s.t, s.p) && s.f == s.det_j;
  json doc;
  doc["p"] = cfg.p;
  doc["t"] = cfg.t;
  doc["k"] = cfg.k;
  doc["D"] = decoding_json(s);
  doc["detD"] = to_decimal(s.det);
  doc["f"] = strings(s.f);
  doc["m"] = to_decimal(s.m);
  doc["gamma_l1"] = to_decimal(l1);
  doc["c4"] = to_decimal(c4);
  doc["verified"] = verified;
  emit(out, doc);
  return verified ? kExitOk : kExitViolation;
}

int cmd_verify_decode(const CommandConfig& cfg, std::ostream& out) {
  const auto space = standard_polar_space(require_family(cfg), cfg.n, cfg.q);
  if (cfg.t + cfg.k > space.rank()) throw UsageError("local decodability needs t + k <= n");
  const auto t_spaces = enumerate_isotropic_kspaces(space, cfg.t, cfg.budget);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, t_spaces.size() - 1);
  bool ok = true;
  json samples = json::array();
  for (unsigned i = 0; i < cfg.samples; ++i) {
    const auto r = verify_local_decodability(space, cfg.t, cfg.k, t_spaces[pick(rng)], std::nullopt, cfg.threads,
                                             cfg.budget);
    ok = ok && r.verified && r.gamma_bound_ok;
    json entry = {{"V", rows_json(r.v)},
                  {"W", rows_json(r.w)},
                  {"m", to_decimal(r.m)},
                  {"gamma_l1", to_decimal(r.gamma_l1)},
                  {"gamma_l1_bound", to_decimal(r.gamma_l1_bound)},
                  {"c4", to_decimal(r.c4)},
                  {"c3_bound", to_decimal(r.c3_bound)},
                  {"t_spaces", to_decimal(r.t_space_count)},
                  {"verified", r.verified}};
    if (r.failing_t_space) {
      entry["failing_t_space"] = rows_json(*r.failing_t_space);
      entry["failing_sum"] = to_decimal(r.failing_sum);
    }
    samples.push_back(std::move(entry));
  }
  emit(out, {{"samples", samples}, {"verified", ok}});
  return ok ? kExitOk : kExitViolation;
}

int cmd_klp_report(const CommandConfig& cfg, std::ostream& out) {
  const auto desc = describe(require_family(cfg), cfg.n, cfg.q);
  KlpConstants constants;
  constants.C = parse_rational(cfg.big_c);
  constants.c_prime = parse_rational(cfg.c_prime);
  constants.c = parse_rational(cfg.small_c);
  const FeasibilityReport r = feasibility_report(desc, cfg.t, cfg.k, constants);
  const KlpBudget& b = r.budget;
  json budget = {
      {"A", to_decimal(b.t_space_count)},
      {"A_bound", to_decimal(b.t_space_bound)},
      {"X", to_decimal(b.block_count)},
      {"X_lower_bound", to_decimal(b.block_lower_bound)},
      {"X_product_bound", to_decimal(b.block_product_bound)},
      {"detD", to_decimal(b.det)},
      {"m", to_decimal(b.m)},
      {"c1_upper_witness", to_decimal(b.c1_witness)},
      {"c1_det_bound", to_decimal(b.c1_det_bound)},
      {"c1_closed_bound", to_decimal(b.c1_closed_bound)},
      {"c2", to_decimal(b.c2)},
      {"gamma_l1", to_decimal(b.gamma_l1)},
      {"c4", to_decimal(b.c4)},
      {"c4_bound", to_decimal(b.c4_closed_bound)},
      {"c3_bound", to_decimal(b.c3_bound)},
      {"c3_closed_bound", to_decimal(b.c3_closed_bound)},
      {"dimL_bound", to_decimal(b.dim_l_bound)},
      {"log_term", std::to_string(b.log_term)},
      {"N_threshold", to_decimal(b.n_threshold)},
      {"relaxed_threshold", to_decimal(b.relaxed_threshold)},
      {"closed_form_rhs", to_decimal(b.closed_form_rhs)},
      {"theorem_cap", to_decimal(b.theorem_cap)},
  };
  json flags = {{"c1_chain_ok", b.c1_chain_ok},
                {"c3_chain_ok", b.c3_chain_ok},
                {"c4_bound_ok", b.c4_bound_ok},
                {"A_bound_ok", b.t_space_bound_ok},
                {"X_bound_ok", b.block_bound_ok},
                {"X_product_bound_ok", b.block_product_bound_ok}};
  json feasibility = {{"size_threshold", r.size_threshold},
                      {"N", to_decimal(r.block_target)},
                      {"fits_in_space", r.fits_in_space},
                      {"within_theorem_cap", r.within_theorem_cap},
                      {"lambda", to_decimal(r.lambda.value)},
                      {"lambda_simplified_equal", r.lambda.equal}};
  json constants_doc = {{"C", to_decimal(constants.C)},
                        {"c_prime", to_decimal(constants.c_prime)},
                        {"c", to_decimal(constants.c)},
                        {"note", "user-chosen; not determined by the existence argument"}};
  emit(out, {{"family", cfg.family},
             {"q", cfg.q},
             {"n", cfg.n},
             {"t", cfg.t},
             {"k", cfg.k},
             {"budget", budget},
             {"bounds", flags},
             {"constants", constants_doc},
             {"feasibility", feasibility}});
  return b.all_bounds_ok() ? kExitOk : kExitViolation;
}

int cmd_search(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  SearchProblem problem;
  problem.space = describe(require_family(cfg), cfg.n, cfg.q);
  problem.t = cfg.t;
  problem.k = cfg.k;
  problem.lambda = cfg.lambda;
  const auto method = parse_method(cfg.method);
  if (!method) throw UsageError("unknown method '" + cfg.method + "'");
  problem.method = *method;
  problem.seed = cfg.seed;
  problem.node_budget = cfg.node_budget;
  problem.enumeration_budget = cfg.budget;

  SearchResult result;
  try {
    result = find_design(problem);
  } catch (const DivisibilityError& e) {
    err << e.what() << "\n";
    emit(out, {{"status", "divisibility-failure"}, {"message", e.what()}});
    return kExitViolation;
  }
  if (result.status == SearchStatus::BudgetExhausted) {
    err << "node budget exhausted after " << result.nodes << " nodes\n";
    emit(out, {{"status", "budget-exhausted"}, {"nodes", result.nodes}});
    return kExitBudget;
  }
  if (result.status == SearchStatus::Infeasible) {
    err << "exhaustive search found no design\n";
    emit(out, {{"status", "infeasible"}, {"nodes", result.nodes}});
    return kExitViolation;
  }
  const std::string text = write_certificate(*result.design);
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.out_path);
    file << text;
  }
  out << text;
  return kExitOk;
}

int cmd_verify_design(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream file(cfg.certificate_path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + cfg.certificate_path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  DesignInstance instance;
  try {
    instance = read_certificate(buffer.str());
  } catch (const CertificateError& e) {
    err << e.what() << "\n";
    emit(out, {{"verified", false}, {"violation", "malformed-certificate"}, {"message", e.what()}});
    return kExitViolation;
  }
  const DesignReport r = verify_design(instance, cfg.threads, cfg.budget);
  json doc;
  doc["verified"] = r.verified;
  doc["blocks"] = instance.blocks.size();
  doc["t_spaces"] = r.t_spaces_checked;
  if (r.lambda) doc["lambda"] = to_decimal(*r.lambda);
  if (r.violation) {
    doc["violation"] = std::string(violation_name(*r.violation));
    doc["message"] = r.message;
    err << r.message << "\n";
  }
  if (r.block_index) doc["block_index"] = *r.block_index;
  if (r.t_space) {
    doc["t_space"] = rows_json(*r.t_space);
    doc["count"] = to_decimal(*r.count);
  }
  if (r.violation != ViolationKind::IllFormedBlock) {
    doc["lambda_ratio"] = to_decimal(r.ratio.value);
    doc["lambda_ratio_simplified_equal"] = r.ratio.equal;
  }
  emit(out, doc);
  return r.verified ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations and design search in finite classical polar spaces", "polardesign"};
  app.require_subcommand(1);
  CommandConfig cfg;

  const auto add_space = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "2A-odd, 2A-even, B, C, D or 2D")->required();
    sub->add_option("--q", cfg.q, "base field order")->required();
    sub->add_option("--n", cfg.n, "rank")->required();
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "enumeration budget");
  };
  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };

  auto* count = app.add_subcommand("count", "closed-form number of isotropic k-spaces");
  add_space(count);
  count->add_option("--k", cfg.k)->required();
  auto* count_t = count->add_option("--t", cfg.t, "also count k-spaces through a fixed t-space");
  count->add_flag("--trace", cfg.trace, "include the factors");

  auto* enumerate = app.add_subcommand("enumerate", "list every isotropic k-space");
  add_space(enumerate);
  enumerate->add_option("--k", cfg.k)->required();
  enumerate->add_flag("--count-only", cfg.count_only);
  add_budget(enumerate);

  auto* verify_counts = app.add_subcommand("verify-counts", "enumeration versus closed-form counts");
  add_space(verify_counts);
  verify_counts->add_option("--samples", cfg.samples, "random t-spaces per extension check");
  verify_counts->add_option("--seed", cfg.seed);
  add_budget(verify_counts);
  add_threads(verify_counts);

  auto* decode = app.add_subcommand("decode", "decoding system for (p, t, k)");
  decode->add_option("--p", cfg.p)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  decode->add_option("--t", cfg.t)->required();
  decode->add_option("--k", cfg.k)->required();

  auto* verify_decode = app.add_subcommand("verify-decode", "local decodability on an explicit polar space");
  add_space(verify_decode);
  verify_decode->add_option("--t", cfg.t)->required();
  verify_decode->add_option("--k", cfg.k)->required();
  verify_decode->add_option("--samples", cfg.samples, "number of random t-spaces V");
  verify_decode->add_option("--seed", cfg.seed);
  add_budget(verify_decode);
  add_threads(verify_decode);

  auto* klp = app.add_subcommand("klp-report", "bound-chain constants and feasibility");
  add_space(klp);
  klp->add_option("--t", cfg.t)->required();
  klp->add_option("--k", cfg.k)->required();
  klp->add_option("--C", cfg.big_c, "KLP threshold constant (rational)");
  klp->add_option("--c-prime", cfg.c_prime, "constant of the compressed threshold (rational)");
  klp->add_option("--c", cfg.small_c, "constant of the closed-form bound (rational)");

  auto* search = app.add_subcommand("search", "find a design and print its certificate");
  add_space(search);
  search->add_option("--t", cfg.t)->required();
  search->add_option("--k", cfg.k)->required();
  search->add_option("--lambda", cfg.lambda);
  search->add_option("--method", cfg.method, "exact-cover or randomized-greedy-with-backtracking");
  search->add_option("--seed", cfg.seed);
  search->add_option("--node-budget", cfg.node_budget);
  search->add_option("--out", cfg.out_path, "also write the certificate here");
  add_budget(search);
  add_threads(search);

  auto* verify_design_cmd = app.add_subcommand("verify-design", "certify a design certificate");
  verify_design_cmd->add_option("certificate", cfg.certificate_path)->required();
  add_budget(verify_design_cmd);
  add_threads(verify_design_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(cfg, count_t->count() > 0, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (verify_counts->parsed()) return cmd_verify_counts(cfg, out);
    if (decode->parsed()) return cmd_decode(cfg, out);
    if (verify_decode->parsed()) return cmd_verify_decode(cfg, out);
    if (klp->parsed()) return cmd_klp_report(cfg, out);
    if (search->parsed()) return cmd_search(cfg, out, err);
    if (verify_design_cmd->parsed()) return cmd_verify_design(cfg, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polar::cli
