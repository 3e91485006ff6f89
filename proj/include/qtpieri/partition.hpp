#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtpieri/ratfun.hpp"

namespace qtpieri {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so (1,0) and (1) are the same value.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the parts are weakly decreasing
  /// and non-negative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "2,1"; the empty string (or "0") is the empty partition.
  static Partition parse(std::string_view text);
  static Partition row(int r) { return r == 0 ? Partition{} : Partition{r}; }
  static Partition column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part, 1-based; zero past the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Size first, then reverse lexicographic; refines dominance with the
  /// larger partition first.
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y);

  std::size_t hash() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

Partition conjugate(const Partition& lambda);

bool contains(const Partition& lambda, const Partition& mu);

struct StripInfo {
  bool contains = false;
  std::optional<int> horizontal_r;
  std::optional<int> vertical_r;
};

StripInfo strip_tests(const Partition& lambda, const Partition& mu);
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

int n_stat(const Partition& lambda);
/// n(lambda/mu); throws std::invalid_argument unless mu is inside lambda.
int n_skew(const Partition& lambda, const Partition& mu);

int arm(const Partition& lambda, int i, int j);
int leg(const Partition& lambda, int i, int j);

struct HookProducts {
  MultiPoly c;
  MultiPoly c_prime;
};

/// c = prod (1 - q^a t^(l+1)), c' = prod (1 - q^(a+1) t^l) over the cells.
HookProducts hook_products(const Partition& lambda);

/// (a; q, t)_lambda = prod_i (a t^(1-i); q)_(lambda_i).
RatFun gen_pochhammer(const RatFun& a, const Partition& lambda);

/// Partitions of n, reverse lexicographic: (n) first, (1^n) last.
const std::vector<Partition>& partitions_of(int n);
/// Position of lambda in partitions_of(|lambda|).
std::size_t partition_index(const Partition& lambda);

/// Every partition of size at most max_size, ordered by size and then
/// reverse lexicographically.
std::vector<Partition> enumerate(int max_size);

/// Partitions contained in lambda, in enumeration order.
std::vector<Partition> subpartitions(const Partition& lambda);

/// Dominance order; throws std::invalid_argument on unequal sizes.
bool dominance_leq(const Partition& lambda, const Partition& mu);

}  // namespace qtpieri
