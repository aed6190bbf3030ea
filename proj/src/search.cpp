#include "polardesign/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polardesign/counting.hpp"
#include "polardesign/exact_cover.hpp"

namespace polar {

namespace {

struct PreparedSearch {
  CoverMatrix matrix;
  std::vector<std::uint32_t> order;  // solver option index -> column
  std::vector<std::vector<std::uint32_t>> options;
};

PreparedSearch prepare(const SearchProblem& problem) {
  const PolarSpace space = standard_polar_space(problem.space.family, problem.space.rank, problem.space.q);
  PreparedSearch s;
  s.matrix = cover_matrix(space, problem.t, problem.k, problem.enumeration_budget);
  s.order.resize(s.matrix.blocks.size());
  std::iota(s.order.begin(), s.order.end(), 0u);
  if (problem.method == SearchMethod::RandomizedBacktracking) {
    std::mt19937_64 rng(problem.seed);
    std::shuffle(s.order.begin(), s.order.end(), rng);
  }
  for (std::uint32_t col : s.order) s.options.push_back(s.matrix.column_rows[col]);
  return s;
}

}  // namespace

CoverMatrix cover_matrix(const PolarSpace& space, unsigned t, unsigned k, std::uint64_t budget) {
  if (t > k || k > space.rank()) throw std::invalid_argument("cover matrix needs t <= k <= n");
  const FieldTable& field = *space.field;
  CoverMatrix m;
  m.t_spaces = enumerate_isotropic_kspaces(space, t, budget);
  m.blocks = enumerate_isotropic_kspaces(space, k, budget);
  m.row_weights.assign(m.t_spaces.size(), 0);
  const BigInt expected = gaussian_binomial(k, t, BigInt(space.descriptor.order));
  for (const Subspace& u : m.blocks) {
    std::vector<std::uint32_t> rows;
    for (const Subspace& v : subspaces_of(field, u, t)) {
      const auto it = std::lower_bound(m.t_spaces.begin(), m.t_spaces.end(), v);
      if (it == m.t_spaces.end() || *it != v) throw std::logic_error("subspace of an isotropic block is not isotropic");
      rows.push_back(static_cast<std::uint32_t>(it - m.t_spaces.begin()));
    }
    std::sort(rows.begin(), rows.end());
    if (BigInt(rows.size()) != expected) throw std::logic_error("cover matrix column weight differs from [k t]_p");
    for (auto r : rows) ++m.row_weights[r];
    m.column_rows.push_back(std::move(rows));
  }
  return m;
}

std::string_view method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::ExactCover: return "exact-cover";
    case SearchMethod::RandomizedBacktracking: return "randomized-greedy-with-backtracking";
  }
  return "?";
}

std::optional<SearchMethod> parse_method(std::string_view name) {
  for (auto m : {SearchMethod::ExactCover, SearchMethod::RandomizedBacktracking})
    if (method_name(m) == name) return m;
  if (name == "randomized") return SearchMethod::RandomizedBacktracking;
  return std::nullopt;
}

BigInt required_block_count(const PolarSpaceDescriptor& space, unsigned t, unsigned k, unsigned lambda) {
  if (t > k || k > space.rank) throw std::invalid_argument("design parameters need t <= k <= n");
  const BigInt numerator = BigInt(lambda) * polar_count(space, k);
  const BigInt through = polar_count_through(space, t, k);
  if (lambda == 0 || numerator % through != 0)
    throw DivisibilityError("no t-(n,k,lambda) design possible: lambda |X| = " + to_decimal(numerator) +
                            " is not a positive multiple of " + to_decimal(through));
  return numerator / through;
}

SearchResult find_design(const SearchProblem& problem) {
  SearchResult result;
  result.block_count = required_block_count(problem.space, problem.t, problem.k, problem.lambda);
  const PreparedSearch s = prepare(problem);

  MultiCoverSolver solver(s.matrix.t_spaces.size(), s.options,
                          std::vector<unsigned>(s.matrix.t_spaces.size(), problem.lambda));
  std::vector<std::uint32_t> found;
  const auto outcome = solver.solve(
      [&](const std::vector<std::uint32_t>& solution) {
        found = solution;
        return false;
      },
      problem.node_budget);
  result.nodes = solver.nodes();
  if (outcome == MultiCoverSolver::Outcome::BudgetExhausted) {
    result.status = SearchStatus::BudgetExhausted;
    return result;
  }
  if (outcome == MultiCoverSolver::Outcome::Exhausted) {
    result.status = SearchStatus::Infeasible;
    return result;
  }

  std::vector<std::uint32_t> columns;
  for (auto o : found) columns.push_back(s.order[o]);
  std::sort(columns.begin(), columns.end());

  DesignInstance design;
  design.space = problem.space;
  design.t = problem.t;
  design.k = problem.k;
  design.lambda = problem.lambda;
  for (auto c : columns) design.blocks.push_back(s.matrix.blocks[c]);
  design.provenance = Provenance{std::string(method_name(problem.method)), problem.seed, result.nodes};
  result.design = std::move(design);
  result.status = SearchStatus::Found;
  return result;
}

std::optional<std::uint64_t> count_designs(const SearchProblem& problem) {
  required_block_count(problem.space, problem.t, problem.k, problem.lambda);
  const PreparedSearch s = prepare(problem);
  MultiCoverSolver solver(s.matrix.t_spaces.size(), s.options,
                          std::vector<unsigned>(s.matrix.t_spaces.size(), problem.lambda));
  std::uint64_t count = 0;
  const auto outcome = solver.solve(
      [&](const std::vector<std::uint32_t>&) {
        ++count;
        return true;
      },
      problem.node_budget);
  if (outcome == MultiCoverSolver::Outcome::BudgetExhausted) return std::nullopt;
  return count;
}

}  // namespace polar
