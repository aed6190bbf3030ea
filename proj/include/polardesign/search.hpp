#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polardesign/geometry.hpp"
#include "polardesign/incidence.hpp"

namespace polar {

/// Rows are isotropic t-spaces, columns isotropic k-spaces, both in
/// lexicographic order; column c lists the rows V with phi_V(U_c) = 1.
struct CoverMatrix {
  std::vector<Subspace> t_spaces;
  std::vector<Subspace> blocks;
  std::vector<std::vector<std::uint32_t>> column_rows;
  std::vector<std::size_t> row_weights;
};

/// Every column has weight [k t]_p; a different weight throws std::logic_error.
CoverMatrix cover_matrix(const PolarSpace& space, unsigned t, unsigned k,
                         std::uint64_t budget = kDefaultEnumerationBudget);

enum class SearchMethod { ExactCover, RandomizedBacktracking };

std::string_view method_name(SearchMethod m);
std::optional<SearchMethod> parse_method(std::string_view name);

struct SearchProblem {
  PolarSpaceDescriptor space;
  unsigned t = 1;
  unsigned k = 1;
  unsigned lambda = 1;
  SearchMethod method = SearchMethod::ExactCover;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 50'000'000;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

/// The necessary condition lambda |X| / (#k-spaces through a t-space) in Z_{>0}
/// failed; raised before any search work.
class DivisibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchStatus { Found, BudgetExhausted, Infeasible };

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<DesignInstance> design;
  std::uint64_t nodes = 0;
  BigInt block_count;  // the N forced by divisibility
};

/// Number of blocks a t-(n,k,lambda) design must have:
/// lambda |X| / polar_count_through(t, k). Throws DivisibilityError when
/// this is not a positive integer.
BigInt required_block_count(const PolarSpaceDescriptor& space, unsigned t, unsigned k, unsigned lambda);

/// Searches for a design with every isotropic t-space in exactly lambda
/// blocks. The exact-cover method uses the lexicographic block order; the
/// randomized method shuffles the block order with the seed and backtracks
/// within the same node budget. Output blocks are sorted, so a given
/// (method, seed) always yields the same certificate.
SearchResult find_design(const SearchProblem& problem);

/// Counts every design for the problem (distinct block sets). nullopt when
/// the node budget runs out first.
std::optional<std::uint64_t> count_designs(const SearchProblem& problem);

}  // namespace polar
