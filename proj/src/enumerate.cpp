#include "suff/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include "suff/error.hpp"

namespace suff {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? UINT64_MAX : out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_add_overflow(a, b, &out) ? UINT64_MAX : out;
}

std::uint64_t factorial(int b) {
  std::uint64_t out = 1;
  for (int k = 2; k <= b; ++k) out = saturating_mul(out, static_cast<std::uint64_t>(k));
  return out;
}

void check_bound(std::size_t k, const Limits& limits) {
  const auto count = ordered_bell(k);
  if (count > limits.max_weak_orders) {
    throw Error(ErrorCode::BoundExceeded, "a(" + std::to_string(k) + ") = " +
                                              (count == UINT64_MAX ? std::string("overflow")
                                                                   : std::to_string(count)) +
                                              " weak orders exceed the bound of " +
                                              std::to_string(limits.max_weak_orders));
  }
}

int axiom_cost(Axiom a) {
  switch (a) {
    case Axiom::symmetry: return 0;
    case Axiom::weak_order: return 1;
    case Axiom::sufficientarian_judgment: return 2;
    case Axiom::dual_sufficientarian_judgment: return 3;
    case Axiom::weak_sufficientarian_judgment: return 4;
    case Axiom::nondegeneracy: return 5;
    case Axiom::geq_complements: return 6;
    case Axiom::monotonicity: return 7;
    case Axiom::prioritarian_threshold: return 8;
    case Axiom::absolute_individual_improvement: return 9;
    case Axiom::separability: return 10;
  }
  return 11;
}

void lift_into(const Domain& domain, EnumerationMode mode, std::span<const int> levels, std::vector<int>& out) {
  if (mode == EnumerationMode::direct) {
    out.assign(levels.begin(), levels.end());
    return;
  }
  const auto& orbit_table = domain.orbit_table();
  out.resize(domain.profiles().size());
  for (ProfileIndex x = 0; x < out.size(); ++x) out[x] = levels[orbit_table.orbit_of(x)];
}

}  // namespace

std::uint64_t ordered_bell(std::size_t k) {
  std::vector<std::uint64_t> a(k + 1, 0);
  a[0] = 1;
  // Pascal row kept alongside so binomials stay exact.
  std::vector<std::uint64_t> binom{1};
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) next[j] = saturating_add(binom[j - 1], binom[j]);
    binom = std::move(next);
    std::uint64_t total = 0;
    for (std::size_t j = 1; j <= i; ++j) total = saturating_add(total, saturating_mul(binom[j], a[i - j]));
    a[i] = total;
  }
  return a[k];
}

SetPartitions::SetPartitions(std::size_t k) : rgs_(k, 0), prefix_max_(k, 0) {}

bool SetPartitions::next() {
  if (done_) return false;
  const std::size_t k = rgs_.size();
  if (!started_) {
    started_ = true;
    blocks_ = k == 0 ? 0 : 1;
    return true;
  }
  // Rightmost position that may grow: rgs[i] <= max(rgs[0..i-1]).
  for (std::size_t i = k; i-- > 1;) {
    if (rgs_[i] <= prefix_max_[i - 1]) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (std::size_t j = i + 1; j < k; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      blocks_ = prefix_max_[k - 1] + 1;
      return true;
    }
  }
  done_ = true;
  return false;
}

WeakOrderStream::WeakOrderStream(std::size_t k) : partitions_(k), levels_(k, 0) {}

void WeakOrderStream::assign() {
  const auto blocks = partitions_.blocks();
  for (std::size_t x = 0; x < levels_.size(); ++x) levels_[x] = ranking_[blocks[x]];
}

bool WeakOrderStream::next() {
  if (have_partition_ && std::next_permutation(ranking_.begin(), ranking_.end())) {
    assign();
    ++index_;
    return true;
  }
  if (!partitions_.next()) {
    have_partition_ = false;
    return false;
  }
  have_partition_ = true;
  ranking_.resize(partitions_.block_count());
  std::iota(ranking_.begin(), ranking_.end(), 0);
  assign();
  ++index_;
  return true;
}

WeakOrderStream enumerate_weak_orders(std::size_t k, const Limits& limits) {
  check_bound(k, limits);
  return WeakOrderStream(k);
}

std::string_view to_string(EnumerationMode mode) noexcept {
  return mode == EnumerationMode::direct ? "direct" : "quotient";
}

EnumerationMode enumeration_mode_from_string(std::string_view text) {
  if (text == "direct") return EnumerationMode::direct;
  if (text == "quotient") return EnumerationMode::quotient;
  throw Error(ErrorCode::InvalidInput, "mode must be 'direct' or 'quotient'");
}

std::size_t enumeration_items(const Domain& domain, EnumerationMode mode) {
  return mode == EnumerationMode::direct ? domain.profiles().size() : domain.orbit_table().count();
}

ExtensionalRelation lift(const Domain& domain, EnumerationMode mode, std::span<const int> levels) {
  std::vector<int> lifted;
  lift_into(domain, mode, levels, lifted);
  return ExtensionalRelation::from_levels(std::span<const int>(lifted));
}

SymmetricWeakOrderStream::SymmetricWeakOrderStream(const Domain& domain)
    : domain_(&domain),
      stream_(enumerate_weak_orders(domain.orbit_table().count(), domain.limits())) {}

bool SymmetricWeakOrderStream::next() {
  if (!stream_.next()) return false;
  lift_into(*domain_, EnumerationMode::quotient, stream_.levels(), lifted_);
  relation_.assign_levels(std::span<const int>(lifted_));
  return true;
}

ScanResult scan_weak_orders(const Domain& domain, const ScanOptions& options, const RelationPredicate& accept) {
  const std::size_t k = enumeration_items(domain, options.mode);
  check_bound(k, domain.limits());
  const unsigned workers = std::max(1U, options.workers);

  std::vector<ScanResult> partial(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](unsigned w) {
    try {
      ScanResult& out = partial[w];
      SetPartitions partitions(k);
      std::vector<int> ranking;
      std::vector<int> levels(k);
      std::vector<int> lifted;
      ExtensionalRelation relation;
      std::uint64_t offset = 0;
      for (std::uint64_t r = 0; partitions.next(); ++r) {
        const int blocks = partitions.block_count();
        const std::uint64_t size = factorial(blocks);
        if (r % workers == w) {
          ranking.resize(blocks);
          std::iota(ranking.begin(), ranking.end(), 0);
          std::uint64_t index = offset;
          const auto block_of = partitions.blocks();
          do {
            for (std::size_t x = 0; x < k; ++x) levels[x] = ranking[block_of[x]];
            lift_into(domain, options.mode, levels, lifted);
            relation.assign_levels(std::span<const int>(lifted));
            ++out.candidates;
            if (accept(relation)) {
              ++out.matches;
              if (out.kept.size() < options.keep) out.kept.push_back({index, levels});
            }
            ++index;
          } while (std::next_permutation(ranking.begin(), ranking.end()));
        }
        offset += size;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ScanResult merged;
  for (auto& part : partial) {
    merged.candidates += part.candidates;
    merged.matches += part.matches;
    for (auto& match : part.kept) merged.kept.push_back(std::move(match));
  }
  std::sort(merged.kept.begin(), merged.kept.end(),
            [](const ScanMatch& a, const ScanMatch& b) { return a.index < b.index; });
  if (merged.kept.size() > options.keep) merged.kept.resize(options.keep);
  return merged;
}

bool matches_signature(const ExtensionalRelation& r, const Domain& domain, const Signature& signature) {
  std::vector<std::pair<Axiom, bool>> plan;
  for (Axiom a : signature.satisfy) plan.emplace_back(a, true);
  for (Axiom a : signature.violate) plan.emplace_back(a, false);
  std::stable_sort(plan.begin(), plan.end(),
                   [](const auto& a, const auto& b) { return axiom_cost(a.first) < axiom_cost(b.first); });
  for (const auto& [axiom, wanted] : plan) {
    if (check(axiom, r, domain).holds != wanted) return false;
  }
  return true;
}

SignatureResult search_signature(const Domain& domain, const Signature& signature, const ScanOptions& options) {
  for (Axiom a : signature.satisfy) {
    if (!applicable(a, domain)) {
      throw Error(ErrorCode::IncompatibleSpace, std::string(axiom_name(a)) + " does not apply to this space");
    }
    if (std::find(signature.violate.begin(), signature.violate.end(), a) != signature.violate.end()) {
      throw Error(ErrorCode::EmptyResult,
                  std::string(axiom_name(a)) + " cannot be both satisfied and violated");
    }
  }
  for (Axiom a : signature.violate) {
    if (!applicable(a, domain)) {
      throw Error(ErrorCode::IncompatibleSpace, std::string(axiom_name(a)) + " does not apply to this space");
    }
  }
  ScanOptions scan = options;
  scan.keep = 1;
  const auto result = scan_weak_orders(
      domain, scan, [&](const ExtensionalRelation& r) { return matches_signature(r, domain, signature); });
  if (result.matches == 0) {
    throw Error(ErrorCode::EmptyResult,
                "no relation among " + std::to_string(result.candidates) + " candidates has this signature");
  }
  return SignatureResult{result.candidates, result.matches, result.kept.front()};
}

}  // namespace suff
