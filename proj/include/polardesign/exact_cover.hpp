#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace polar {

/// Dancing-links exact cover with multiplicities: choose a set of distinct
/// options so that item i is covered exactly need[i] times. With every need
/// equal to 1 this is Algorithm X.
///
/// Branching is binary on the first remaining option of the item with the
/// fewest spare options (remaining options minus need): include it, then
/// exclude it. Each solution is visited once, in a deterministic order.
class MultiCoverSolver {
 public:
  enum class Outcome { Exhausted, Stopped, BudgetExhausted };

  /// options[o] lists the items of option o (each item at most once); an
  /// option with no items is never chosen.
  MultiCoverSolver(std::size_t items, const std::vector<std::vector<std::uint32_t>>& options,
                   std::vector<unsigned> need);

  /// Calls on_solution with the ascending option indices of each solution;
  /// returning false stops the search. node_budget bounds the number of
  /// search nodes (0 = unlimited).
  Outcome solve(const std::function<bool(const std::vector<std::uint32_t>&)>& on_solution,
                std::uint64_t node_budget = 0);

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  enum class Step { Continue, Stop, Budget };

  Step search();
  void unlink(std::uint32_t x);
  void relink(std::uint32_t x);
  void hide_option(std::uint32_t o);
  void unhide_option(std::uint32_t o);
  void cover_item(std::uint32_t i);
  void uncover_item(std::uint32_t i);
  void include(std::uint32_t o);
  void uninclude(std::uint32_t o);

  std::size_t items_;
  // header nodes are 1..items_, node 0 is the root; option nodes follow.
  std::vector<std::uint32_t> left_, right_, up_, down_, item_of_, option_of_;
  std::vector<std::uint32_t> option_start_, option_size_;
  std::vector<std::uint32_t> len_;
  std::vector<unsigned> need_;
  std::vector<std::uint32_t> chosen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
  const std::function<bool(const std::vector<std::uint32_t>&)>* on_solution_ = nullptr;
};

}  // namespace polar
