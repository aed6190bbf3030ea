// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "polardesign/certificate.hpp"
#include "polardesign/counting.hpp"
#include "polardesign/decode.hpp"
#include "polardesign/geometry.hpp"
#include "polardesign/incidence.hpp"
#include "polardesign/klp.hpp"
#include "polardesign/search.hpp"

using namespace polar;

namespace {

struct Instance {
  Family family;
  unsigned n;
  std::uint64_t q;
};

bool is_hermitian(Family f) { return f == Family::HermitianOdd || f == Family::HermitianEven; }

std::vector<Instance> counting_instances() {
  std::vector<Instance> out;
  for (Family f : kAllFamilies) {
    if (is_hermitian(f)) {
      for (unsigned n = 1; n <= 2; ++n) out.push_back({f, n, 2});
    } else {
      for (unsigned n = 1; n <= 3; ++n) out.push_back({f, n, 2});
      for (unsigned n = 1; n <= 2; ++n) out.push_back({f, n, 3});
    }
  }
  return out;
}

std::string label(const Instance& c) {
  return std::string(family_name(c.family)) + "(n=" + std::to_string(c.n) + ",q=" + std::to_string(c.q) + ")";
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome counting_oracle() {
  Outcome r;
  std::size_t checks = 0;
  std::mt19937_64 rng(2024);
  for (const Instance& c : counting_instances()) {
    const PolarSpace space = standard_polar_space(c.family, c.n, c.q);
    std::vector<std::vector<Subspace>> levels;
    for (unsigned k = 0; k <= c.n; ++k) {
      levels.push_back(enumerate_isotropic_kspaces(space, k));
      ++checks;
      if (BigInt(levels.back().size()) != polar_count(space.descriptor, k))
        r.fail(label(c) + " k=" + std::to_string(k) + ": enumerated " + std::to_string(levels.back().size()) +
               " vs formula " + to_decimal(polar_count(space.descriptor, k)));
    }
    for (unsigned t = 0; t <= c.n; ++t)
      for (unsigned k = t; k <= c.n; ++k) {
        const BigInt expected = polar_count_through(space.descriptor, t, k);
        for (int sample = 0; sample < 10; ++sample) {
          const Subspace& base = levels[t][rng() % levels[t].size()];
          ++checks;
          if (BigInt(enumerate_extensions(space, base, k).size()) != expected)
            r.fail(label(c) + " extensions t=" + std::to_string(t) + " k=" + std::to_string(k));
        }
      }
  }
  if (r.ok) r.detail = std::to_string(counting_instances().size()) + " spaces, " + std::to_string(checks) + " exact counts";
  return r;
}

Outcome lemma3_oracle() {
  Outcome r;
  std::size_t checks = 0;
  for (unsigned p : {2u, 3u})
    for (unsigned t = 1; t <= 3; ++t)
      for (unsigned k = t; k + t <= 6; ++k) {
        const auto counts = oracle::pattern_counts(p, t, k);
        for (long ell = 0; ell < static_cast<long>(t); ++ell)
          for (long j = ell; j <= static_cast<long>(t); ++j) {
            const auto it = counts.find({ell, j});
            const BigInt brute = it == counts.end() ? BigInt(0) : it->second;
            ++checks;
            if (brute != intersection_pattern_count(p, k, t, ell, j))
              r.fail("p=" + std::to_string(p) + " t=" + std::to_string(t) + " k=" + std::to_string(k) +
                     " ell=" + std::to_string(ell) + " j=" + std::to_string(j) + ": brute " + to_decimal(brute) +
                     " vs formula " + to_decimal(intersection_pattern_count(p, k, t, ell, j)));
          }
      }
  if (r.ok) r.detail = std::to_string(checks) + " (p,t,k,ell,j) counts";
  return r;
}

Outcome decoding_system() {
  Outcome r;
  std::size_t systems = 0;
  for (unsigned p : {2u, 3u, 4u, 5u})
    for (unsigned k = 1; k <= 6; ++k)
      for (unsigned t = 1; t <= k; ++t) {
        const auto s = build_decoding_system(p, t, k);
        ++systems;
        const std::string where = "p=" + std::to_string(p) + " t=" + std::to_string(t) + " k=" + std::to_string(k);
        for (unsigned row = 0; row <= t; ++row) {
          if (s.d[row][row] == 0) r.fail(where + ": zero diagonal");
          for (unsigned col = 0; col < row; ++col)
            if (s.d[row][col] != 0) r.fail(where + ": not upper-triangular");
        }
        if (!solves_system(s)) r.fail(where + ": D f != m e_t");
        if (s.f != s.det_j) r.fail(where + ": f differs from det(D_j)");
        if (s.m <= 0 || s.m != s.f[t] * gaussian_binomial(k, t, p)) r.fail(where + ": m != f(t) [k t]");
        if (!determinant_bound_check(s).ok) r.fail(where + ": determinant bound");
      }
  const auto w = build_decoding_system(2, 1, 2);
  const BigMatrix expected_d{{2, 1}, {0, 3}};
  if (w.d != expected_d || w.f != std::vector<BigInt>{-1, 2} || w.m != 6) r.fail("worked instance p=2 t=1 k=2");
  if (r.ok) r.detail = std::to_string(systems) + " systems; (2,1,2): D=[[2,1],[0,3]] f=(-1,2) m=6";
  return r;
}

Outcome local_decodability() {
  Outcome r;
  std::ostringstream detail;
  std::mt19937_64 rng(77);
  for (Family fam : {Family::Symplectic, Family::Parabolic}) {
    const PolarSpace space = standard_polar_space(fam, 3, 2);
    const auto points = enumerate_isotropic_kspaces(space, 1);
    for (int sample = 0; sample < 5; ++sample) {
      const Subspace v = points[rng() % points.size()];
      const auto planes = enumerate_extensions(space, v, 3);
      const Subspace w = planes[rng() % planes.size()];
      const auto rep = verify_local_decodability(space, 1, 2, v, w, 0);
      const std::string where = std::string(family_name(fam)) + " sample " + std::to_string(sample);
      if (!rep.verified) r.fail(where + ": sum gamma phi != m delta");
      if (rep.gamma_l1 != 10) r.fail(where + ": ||gamma||_1 = " + to_decimal(rep.gamma_l1));
      if (rep.c4 != 10) r.fail(where + ": c4 = " + to_decimal(rep.c4));
      if (rep.m != 6) r.fail(where + ": m = " + to_decimal(rep.m));
    }
    detail << family_name(fam) << "_3(2): |A|=" << points.size() << " ";
  }
  if (r.ok) r.detail = detail.str() + "x5 (V,W) pairs, ||gamma||_1=10, c4=10";
  return r;
}

Outcome row_sums() {
  Outcome r;
  std::size_t pairs = 0;
  for (const Instance& c : counting_instances()) {
    const PolarSpace space = standard_polar_space(c.family, c.n, c.q);
    for (unsigned k = 1; k <= c.n; ++k)
      for (unsigned t = 0; t < k; ++t) {
        const auto rep = constant_row_sum_check(space, t, k, 0);
        ++pairs;
        if (!rep.ok) r.fail(label(c) + " t=" + std::to_string(t) + " k=" + std::to_string(k));
      }
  }
  if (r.ok) r.detail = std::to_string(pairs) + " (space,t,k) exhaustive";
  return r;
}

Outcome bound_chain() {
  Outcome r;
  std::size_t budgets = 0;
  std::map<std::string, std::size_t> violations;
  std::map<std::string, std::string> first_violation;
  const auto note = [&](const std::string& what, const std::string& where) {
    if (violations[what]++ == 0) first_violation[what] = where;
  };
  for (std::uint64_t p : {2, 3, 4}) {
    for (unsigned n = 1; n <= 12; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const BigInt lower = pow_big(p, k * (n - k));
        const BigInt value = gaussian_binomial(n, k, p);
        if (value < lower || value > 4 * lower)
          note("sandwich", "p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
      for (Family fam : kAllFamilies) {
        if (is_hermitian(fam) && p != 4) continue;
        const auto desc = describe(fam, n, is_hermitian(fam) ? 2 : p);
        for (unsigned t = 1; t <= 2; ++t)
          for (unsigned k = t; k <= 6 && t + k <= n; ++k) {
            const KlpBudget b = klp_budget(desc, t, k);
            ++budgets;
            const std::string where = std::string(family_name(fam)) + "_" + std::to_string(n) + "(p=" +
                                      std::to_string(p) + ") t=" + std::to_string(t) + " k=" + std::to_string(k);
            if (!b.c1_chain_ok) note("c1", where);
            if (!b.c3_chain_ok) note("c3", where);
            if (!b.c4_bound_ok) note("c4", where);
            if (!b.t_space_bound_ok) note("|A|", where);
            if (!b.block_bound_ok)
              note("|X| >= p^{2nk-ceil(3k^2/2)}",
                   where + ": |X|=" + to_decimal(b.block_count) + " < " + to_decimal(b.block_lower_bound));
          }
      }
    }
  }
  if (exceeds_size_threshold(1, 10) || !exceeds_size_threshold(1, 11)) note("size flag", "(1,10)/(1,11)");
  std::ostringstream detail;
  detail << budgets << " budgets";
  for (const auto& [what, count] : violations) {
    r.ok = false;
    detail << "; " << what << " violated " << count << "x, first " << first_violation[what];
  }
  if (r.ok) detail << ", all inequalities hold, sandwich n<=12, flag flips at (1,10)->(1,11)";
  r.detail = detail.str();
  return r;
}

struct SpreadCase {
  Family family;
  unsigned n;
  std::size_t blocks;
};

const SpreadCase kSpreads[] = {{Family::Symplectic, 2, 5}, {Family::Hyperbolic, 2, 3}, {Family::Symplectic, 3, 9}};

std::vector<DesignInstance> found_designs;

Outcome constructive_search() {
  Outcome r;
  std::ostringstream detail;
  for (const SpreadCase& c : kSpreads) {
    SearchProblem problem;
    problem.space = describe(c.family, c.n, 2);
    problem.t = 1;
    problem.k = c.n;
    problem.lambda = 1;
    const auto result = find_design(problem);
    const std::string where = std::string(family_name(c.family)) + "_" + std::to_string(c.n) + "(2)";
    if (result.status != SearchStatus::Found) {
      r.fail(where + ": no spread found");
      continue;
    }
    const auto rep = verify_design(*result.design);
    if (result.design->blocks.size() != c.blocks) r.fail(where + ": wrong block count");
    if (!rep.verified || rep.lambda != BigInt(1)) r.fail(where + ": verification failed");
    if (rep.ratio.value != Rational(1) || !rep.ratio.equal) r.fail(where + ": lambda ratio disagrees");
    found_designs.push_back(*result.design);
    detail << where << " " << c.blocks << " blocks (" << result.nodes << " nodes) ";
  }
  if (r.ok) r.detail = detail.str() + "lambda=1";
  return r;
}

Outcome certificate_integrity() {
  Outcome r;
  if (found_designs.size() != std::size(kSpreads)) r.fail("criterion 7 designs missing");
  std::ostringstream detail;
  for (const DesignInstance& d : found_designs) {
    const std::string where = std::string(family_name(d.space.family)) + "_" + std::to_string(d.space.rank);
    const std::string first = write_certificate(d);
    const DesignInstance back = read_certificate(first);
    if (!verify_design(back).verified) r.fail(where + ": read-back fails verification");
    if (write_certificate(back) != first) r.fail(where + ": round trip not byte-identical");

    const PolarSpace space = standard_polar_space(d.space.family, d.space.rank, d.space.q);
    DesignInstance mutated = back;
    for (const Subspace& u : enumerate_isotropic_kspaces(space, d.k)) {
      if (std::find(back.blocks.begin(), back.blocks.end(), u) == back.blocks.end()) {
        mutated.blocks[0] = u;
        break;
      }
    }
    const auto rep = verify_design(read_certificate(write_certificate(mutated)));
    if (rep.verified || rep.violation != ViolationKind::CoverMismatch || !rep.t_space)
      r.fail(where + ": mutation not rejected with a named t-space");
    else
      detail << where << " mutation -> t-space " << nlohmann::json(rep.t_space->to_rows()).dump() << " covered "
             << to_decimal(*rep.count) << "x; ";
  }
  if (r.ok) r.detail = detail.str();
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"counting oracle equivalence", counting_oracle},
      {"intersection-pattern counts", lemma3_oracle},
      {"decoding system", decoding_system},
      {"local decodability", local_decodability},
      {"constant row sums", row_sums},
      {"bound chain", bound_chain},
      {"constructive search", constructive_search},
      {"certificate integrity", certificate_integrity},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = check();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << index << " (" << name << ") [" << std::fixed
              << std::setprecision(2) << seconds << "s]: " << out.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
