#include "polardesign/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polar {

MultiCoverSolver::MultiCoverSolver(std::size_t items, const std::vector<std::vector<std::uint32_t>>& options,
                                   std::vector<unsigned> need)
    : items_(items), need_(std::move(need)) {
  if (need_.size() != items_) throw std::invalid_argument("need vector must have one entry per item");
  std::size_t total = items_ + 1;
  for (const auto& o : options) total += o.size();
  left_.resize(items_ + 1);
  right_.resize(items_ + 1);
  up_.resize(total);
  down_.resize(total);
  item_of_.resize(total);
  option_of_.resize(total);
  len_.assign(items_ + 1, 0);
  for (std::uint32_t h = 0; h <= items_; ++h) {
    left_[h] = h == 0 ? static_cast<std::uint32_t>(items_) : h - 1;
    right_[h] = h == items_ ? 0 : h + 1;
    up_[h] = down_[h] = h;
    item_of_[h] = h;
  }
  std::uint32_t next = static_cast<std::uint32_t>(items_ + 1);
  for (std::uint32_t o = 0; o < options.size(); ++o) {
    option_start_.push_back(next);
    option_size_.push_back(static_cast<std::uint32_t>(options[o].size()));
    for (std::uint32_t item : options[o]) {
      if (item >= items_) throw std::invalid_argument("option " + std::to_string(o) + " names an unknown item");
      const std::uint32_t h = item + 1;
      item_of_[next] = h;
      option_of_[next] = o;
      up_[next] = up_[h];
      down_[next] = h;
      down_[up_[h]] = next;
      up_[h] = next;
      ++len_[h];
      ++next;
    }
  }
  // items that need nothing are satisfied from the start
  for (std::uint32_t i = 0; i < items_; ++i)
    if (need_[i] == 0) cover_item(i + 1);
}

void MultiCoverSolver::unlink(std::uint32_t x) {
  down_[up_[x]] = down_[x];
  up_[down_[x]] = up_[x];
  --len_[item_of_[x]];
}

void MultiCoverSolver::relink(std::uint32_t x) {
  down_[up_[x]] = x;
  up_[down_[x]] = x;
  ++len_[item_of_[x]];
}

void MultiCoverSolver::hide_option(std::uint32_t o) {
  for (std::uint32_t x = option_start_[o]; x < option_start_[o] + option_size_[o]; ++x) unlink(x);
}

void MultiCoverSolver::unhide_option(std::uint32_t o) {
  for (std::uint32_t x = option_start_[o] + option_size_[o]; x-- > option_start_[o];) relink(x);
}

void MultiCoverSolver::cover_item(std::uint32_t i) {
  right_[left_[i]] = right_[i];
  left_[right_[i]] = left_[i];
  for (std::uint32_t x = down_[i]; x != i; x = down_[x]) {
    const std::uint32_t o = option_of_[x];
    for (std::uint32_t y = option_start_[o]; y < option_start_[o] + option_size_[o]; ++y)
      if (y != x) unlink(y);
  }
}

void MultiCoverSolver::uncover_item(std::uint32_t i) {
  for (std::uint32_t x = up_[i]; x != i; x = up_[x]) {
    const std::uint32_t o = option_of_[x];
    for (std::uint32_t y = option_start_[o] + option_size_[o]; y-- > option_start_[o];)
      if (y != x) relink(y);
  }
  right_[left_[i]] = i;
  left_[right_[i]] = i;
}

void MultiCoverSolver::include(std::uint32_t o) {
  hide_option(o);
  for (std::uint32_t x = option_start_[o]; x < option_start_[o] + option_size_[o]; ++x) {
    const std::uint32_t h = item_of_[x];
    if (--need_[h - 1] == 0) cover_item(h);
  }
}

void MultiCoverSolver::uninclude(std::uint32_t o) {
  for (std::uint32_t x = option_start_[o] + option_size_[o]; x-- > option_start_[o];) {
    const std::uint32_t h = item_of_[x];
    if (need_[h - 1]++ == 0) uncover_item(h);
  }
  unhide_option(o);
}

MultiCoverSolver::Step MultiCoverSolver::search() {
  ++nodes_;
  if (budget_ != 0 && nodes_ > budget_) return Step::Budget;
  if (right_[0] == 0) {
    std::vector<std::uint32_t> solution = chosen_;
    std::sort(solution.begin(), solution.end());
    return (*on_solution_)(solution) ? Step::Continue : Step::Stop;
  }
  std::uint32_t best = 0;
  std::uint32_t best_slack = 0;
  for (std::uint32_t h = right_[0]; h != 0; h = right_[h]) {
    if (len_[h] < need_[h - 1]) return Step::Continue;
    const std::uint32_t slack = len_[h] - need_[h - 1];
    if (best == 0 || slack < best_slack) {
      best = h;
      best_slack = slack;
    }
  }
  const std::uint32_t o = option_of_[down_[best]];

  include(o);
  chosen_.push_back(o);
  Step step = search();
  chosen_.pop_back();
  uninclude(o);
  if (step != Step::Continue || best_slack == 0) return step;

  hide_option(o);
  step = search();
  unhide_option(o);
  return step;
}

MultiCoverSolver::Outcome MultiCoverSolver::solve(
    const std::function<bool(const std::vector<std::uint32_t>&)>& on_solution, std::uint64_t node_budget) {
  on_solution_ = &on_solution;
  budget_ = node_budget;
  nodes_ = 0;
  const Step step = search();
  on_solution_ = nullptr;
  switch (step) {
    case Step::Continue: return Outcome::Exhausted;
    case Step::Stop: return Outcome::Stopped;
    case Step::Budget: return Outcome::BudgetExhausted;
  }
  return Outcome::Exhausted;
}

}  // namespace polar
