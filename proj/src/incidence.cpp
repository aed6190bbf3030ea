#include "polardesign/incidence.hpp"

#include <algorithm>
#include <numeric>

#include "polardesign/parallel.hpp"

namespace polar {

int phi(const FieldTable& field, const Subspace& v, const Subspace& u) { return contains(field, u, v) ? 1 : 0; }

RowSumReport constant_row_sum_check(const PolarSpace& space, unsigned t, unsigned k, unsigned threads,
                                    std::uint64_t budget) {
  if (t > k || k > space.rank()) throw std::invalid_argument("row-sum check needs t <= k <= n");
  const auto blocks = enumerate_isotropic_kspaces(space, k, budget);
  const auto t_spaces = enumerate_isotropic_kspaces(space, t, budget);
  const FieldTable& field = *space.field;

  RowSumReport report;
  report.expected = gaussian_binomial(k, t, BigInt(space.descriptor.order));
  report.blocks_checked = blocks.size();
  report.t_spaces = t_spaces.size();

  std::vector<std::size_t> sums(blocks.size(), 0);
  parallel_chunks(blocks.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u)
      for (const auto& v : t_spaces) sums[u] += static_cast<std::size_t>(phi(field, v, blocks[u]));
  });
  for (std::size_t u = 0; u < blocks.size(); ++u) {
    if (BigInt(sums[u]) != report.expected) {
      report.ok = false;
      report.first_violation = blocks[u];
      report.violation_count = sums[u];
      break;
    }
  }
  return report;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IllFormedBlock: return "ill-formed-block";
    case ViolationKind::DuplicateBlock: return "duplicate-block";
    case ViolationKind::CoverMismatch: return "cover-mismatch";
    case ViolationKind::RatioMismatch: return "ratio-mismatch";
  }
  return "?";
}

std::vector<BigInt> cover_counts(const PolarSpace& space, const std::vector<Subspace>& t_spaces,
                                 const std::vector<Subspace>& blocks, unsigned t, unsigned threads) {
  const FieldTable& field = *space.field;
  const std::size_t workers = worker_count(blocks.size(), threads);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(t_spaces.size(), 0));
  parallel_chunks(blocks.size(), static_cast<unsigned>(workers), [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      for (const Subspace& v : subspaces_of(field, blocks[b], t)) {
        const auto it = std::lower_bound(t_spaces.begin(), t_spaces.end(), v);
        if (it == t_spaces.end() || *it != v)
          throw std::logic_error("a t-subspace of block " + std::to_string(b) + " is not an isotropic t-space");
        ++partial[w][static_cast<std::size_t>(it - t_spaces.begin())];
      }
    }
  });
  std::vector<BigInt> counts(t_spaces.size(), 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < part.size(); ++i) counts[i] += part[i];
  return counts;
}

DesignReport verify_design(const DesignInstance& instance, unsigned threads, std::uint64_t budget) {
  const PolarSpaceDescriptor& desc = instance.space;
  if (instance.t > instance.k || instance.k > desc.rank)
    throw std::invalid_argument("design parameters need t <= k <= n");
  const PolarSpace space = standard_polar_space(desc.family, desc.rank, desc.q);
  DesignReport report;

  for (std::size_t i = 0; i < instance.blocks.size(); ++i) {
    const Subspace& b = instance.blocks[i];
    std::string problem;
    if (b.ambient() != space.dimension())
      problem = "ambient dimension " + std::to_string(b.ambient()) + " instead of " + std::to_string(space.dimension());
    else if (b.dim() != instance.k)
      problem = "dimension " + std::to_string(b.dim()) + " instead of " + std::to_string(instance.k);
    else if (!is_totally_isotropic(space.form, b))
      problem = "not totally isotropic";
    if (!problem.empty()) {
      report.violation = ViolationKind::IllFormedBlock;
      report.block_index = i;
      report.message = "block " + std::to_string(i) + ": " + problem;
      return report;
    }
  }

  const auto t_spaces = enumerate_isotropic_kspaces(space, instance.t, budget);
  const auto counts = cover_counts(space, t_spaces, instance.blocks, instance.t, threads);
  report.t_spaces_checked = t_spaces.size();
  report.ratio = lambda_ratio(desc, instance.t, instance.k, BigInt(instance.blocks.size()));

  for (std::size_t i = 0; i < t_spaces.size(); ++i) {
    if (counts[i] != instance.lambda) {
      report.t_space = t_spaces[i];
      report.count = counts[i];
      break;
    }
  }
  if (!counts.empty() && std::all_of(counts.begin(), counts.end(), [&](const BigInt& c) { return c == counts[0]; }))
    report.lambda = counts[0];

  std::vector<std::size_t> order(instance.blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return instance.blocks[a] < instance.blocks[b]; });
  std::optional<std::size_t> duplicate;
  for (std::size_t i = 1; i < order.size(); ++i)
    if (instance.blocks[order[i]] == instance.blocks[order[i - 1]])
      duplicate = std::min(duplicate.value_or(order[i]), order[i]);

  if (duplicate) {
    report.violation = ViolationKind::DuplicateBlock;
    report.block_index = *duplicate;
    report.message = "block " + std::to_string(*duplicate) + " repeats an earlier block";
    return report;
  }
  if (report.t_space) {
    report.violation = ViolationKind::CoverMismatch;
    report.message = "t-space covered " + to_decimal(*report.count) + " times, expected " + to_decimal(instance.lambda);
    return report;
  }
  if (report.ratio.value != Rational(instance.lambda)) {
    report.violation = ViolationKind::RatioMismatch;
    report.message = "lambda ratio " + to_decimal(report.ratio.value) + " disagrees with " + to_decimal(instance.lambda);
    return report;
  }
  report.verified = true;
  return report;
}

}  // namespace polar
