#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "suff/alloc.hpp"
#include "suff/axioms.hpp"
#include "suff/relation.hpp"

namespace suff {

/// Number of weak orders on a k-element set (ordered Bell / Fubini number),
/// a(0) = 1, a(k) = sum_{j=1..k} C(k, j) a(k - j). Saturates at UINT64_MAX.
std::uint64_t ordered_bell(std::size_t k);

/// Set partitions of {0..k-1} as restricted growth strings: blocks are
/// labelled in order of first occurrence, so each partition appears once.
class SetPartitions {
 public:
  explicit SetPartitions(std::size_t k);

  /// Advances to the next partition; the first call yields the first one.
  bool next();
  std::span<const int> blocks() const { return rgs_; }
  int block_count() const { return blocks_; }

 private:
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
  int blocks_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Every weak order on k items exactly once: each set partition, then every
/// assignment of distinct levels to its blocks. Levels are 0..b-1, higher is
/// better. Deterministic order; index() is the 0-based position.
class WeakOrderStream {
 public:
  explicit WeakOrderStream(std::size_t k);

  bool next();
  std::span<const int> levels() const { return levels_; }
  std::uint64_t index() const { return index_ - 1; }

 private:
  void assign();

  SetPartitions partitions_;
  std::vector<int> ranking_;
  std::vector<int> levels_;
  std::uint64_t index_ = 0;
  bool have_partition_ = false;
};

/// Throws Error(BoundExceeded) when a(k) exceeds limits.max_weak_orders.
WeakOrderStream enumerate_weak_orders(std::size_t k, const Limits& limits = {});

enum class EnumerationMode { direct, quotient };

std::string_view to_string(EnumerationMode mode) noexcept;
EnumerationMode enumeration_mode_from_string(std::string_view text);

/// Items the weak orders range over: profiles (direct) or orbits (quotient).
std::size_t enumeration_items(const Domain& domain, EnumerationMode mode);

/// Relation on A^N from levels over the enumerated items.
ExtensionalRelation lift(const Domain& domain, EnumerationMode mode, std::span<const int> levels);

/// Symmetric weak orders on A^N: weak orders on orbits, lifted.
class SymmetricWeakOrderStream {
 public:
  /// Throws Error(BoundExceeded) when a(orbit count) exceeds the bound.
  explicit SymmetricWeakOrderStream(const Domain& domain);

  bool next();
  const ExtensionalRelation& relation() const { return relation_; }
  std::span<const int> orbit_levels() const { return stream_.levels(); }
  std::uint64_t index() const { return stream_.index(); }

 private:
  const Domain* domain_;
  WeakOrderStream stream_;
  std::vector<int> lifted_;
  ExtensionalRelation relation_;
};

struct ScanOptions {
  EnumerationMode mode = EnumerationMode::quotient;
  unsigned workers = 1;
  std::size_t keep = SIZE_MAX;  // matches retained, smallest indices first
};

struct ScanMatch {
  std::uint64_t index = 0;
  std::vector<int> levels;  // over enumeration_items
};

struct ScanResult {
  std::uint64_t candidates = 0;
  std::uint64_t matches = 0;
  std::vector<ScanMatch> kept;
};

/// Called concurrently from worker threads; must be pure.
using RelationPredicate = std::function<bool(const ExtensionalRelation&)>;

/// Exhaustive scan. The stream is split by set partition across workers;
/// counts and kept matches do not depend on the worker count.
ScanResult scan_weak_orders(const Domain& domain, const ScanOptions& options, const RelationPredicate& accept);

struct Signature {
  std::vector<Axiom> satisfy;
  std::vector<Axiom> violate;
};

/// Checks run cheapest first and stop at the first mismatch.
bool matches_signature(const ExtensionalRelation& r, const Domain& domain, const Signature& signature);

struct SignatureResult {
  std::uint64_t candidates = 0;
  std::uint64_t count = 0;
  ScanMatch first;
};

/// Errors: BoundExceeded; EmptyResult when nothing matches (including
/// contradictory signatures).
SignatureResult search_signature(const Domain& domain, const Signature& signature, const ScanOptions& options);

}  // namespace suff
