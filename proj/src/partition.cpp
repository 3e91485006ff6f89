#include "qtpieri/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qtpieri/qseries.hpp"

namespace qtpieri {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("not a partition: parts must be weakly decreasing and non-negative");
    }
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trimmed(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trimmed(text.substr(1, text.size() - 2));
  if (text.empty()) return Partition{};
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view token = trimmed(text.substr(0, comma));
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
  if (auto c = x.size_ <=> y.size_; c != 0) return c;
  // Larger parts first in the order.
  return y.parts_ <=> x.parts_;
}

std::size_t Partition::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int p : parts_) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ull;
  return h;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int p : lambda.parts()) {
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > lambda.part(i)) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return false;
  // Interlacing: lambda_{i+1} <= mu_i.
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.part(i + 1) > mu.part(i)) return false;
  }
  return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return false;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.part(i) - mu.part(i) > 1) return false;
  }
  return true;
}

StripInfo strip_tests(const Partition& lambda, const Partition& mu) {
  StripInfo info;
  info.contains = contains(lambda, mu);
  const int r = lambda.size() - mu.size();
  if (is_horizontal_strip(lambda, mu)) info.horizontal_r = r;
  if (is_vertical_strip(lambda, mu)) info.vertical_r = r;
  return info;
}

int n_stat(const Partition& lambda) {
  int n = 0;
  for (int i = 1; i <= lambda.length(); ++i) n += (i - 1) * lambda.part(i);
  return n;
}

int n_skew(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) throw std::invalid_argument("n(lambda/mu) needs mu inside lambda");
  const Partition lc = conjugate(lambda);
  const Partition mc = conjugate(mu);
  int n = 0;
  for (int i = 1; i <= lc.length(); ++i) {
    const int d = lc.part(i) - mc.part(i);
    n += d * (d - 1) / 2;
  }
  return n;
}

int arm(const Partition& lambda, int i, int j) { return lambda.part(i) - j; }

int leg(const Partition& lambda, int i, int j) {
  int l = 0;
  while (lambda.part(i + l + 1) >= j) ++l;
  return l;
}

HookProducts hook_products(const Partition& lambda) {
  HookProducts out{MultiPoly(1), MultiPoly(1)};
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const auto a = static_cast<unsigned>(arm(lambda, i, j));
      const auto l = static_cast<unsigned>(leg(lambda, i, j));
      out.c *= 1 - MultiPoly::monomial(Monomial::of(kQ, a) * Monomial::of(kT, l + 1));
      out.c_prime *= 1 - MultiPoly::monomial(Monomial::of(kQ, a + 1) * Monomial::of(kT, l));
    }
  }
  return out;
}

RatFun gen_pochhammer(const RatFun& a, const Partition& lambda) {
  RatFun result(1);
  RatFun shifted = a;
  const RatFun tinv = RatFun::var(kT).inverse();
  for (int p : lambda.parts()) {
    result *= qpochhammer(shifted, kQ, p);
    shifted *= tinv;
  }
  return result;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

struct PartitionTable {
  std::mutex mutex;
  std::map<int, std::vector<Partition>> lists;
  std::map<int, std::map<Partition, std::size_t>> index;
};

PartitionTable& table() {
  static PartitionTable t;
  return t;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  PartitionTable& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.lists.find(n); it != t.lists.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  auto& idx = t.index[n];
  for (std::size_t k = 0; k < out.size(); ++k) idx.emplace(out[k], k);
  return t.lists.emplace(n, std::move(out)).first->second;
}

std::size_t partition_index(const Partition& lambda) {
  partitions_of(lambda.size());
  PartitionTable& t = table();
  std::lock_guard lock(t.mutex);
  return t.index.at(lambda.size()).at(lambda);
}

std::vector<Partition> enumerate(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    const auto& level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  for (int n = 0; n <= lambda.size(); ++n) {
    for (const auto& mu : partitions_of(n)) {
      if (contains(lambda, mu)) out.push_back(mu);
    }
  }
  return out;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance compares partitions of equal size");
  int sl = 0;
  int sm = 0;
  for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i) {
    sl += lambda.part(i);
    sm += mu.part(i);
    if (sl > sm) return false;
  }
  return true;
}

}  // namespace qtpieri
