#include "lagcorr/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lagcorr/error.hpp"

namespace lagcorr {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "partition statistic overflows int64");
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part < 1) throw Error(ErrorCode::InvalidPartition, "part " + std::to_string(part) + " < 1");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::int64_t Partition::part_product() const {
  std::int64_t out = 1;
  for (int part : parts_) out = checked_mul(out, part);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

std::int64_t aut_order(const Partition& mu) {
  std::int64_t out = 1;
  const auto& parts = mu.parts();
  std::size_t run = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    run = (k > 0 && parts[k] == parts[k - 1]) ? run + 1 : 1;
    out = checked_mul(out, static_cast<std::int64_t>(run));
  }
  return out;
}

std::int64_t z_mu(const Partition& mu) { return checked_mul(aut_order(mu), mu.part_product()); }

int cycle_sign(const Partition& mu) {
  int exponent = 0;
  for (int part : mu.parts()) exponent += part - 1;
  return exponent % 2 == 0 ? 1 : -1;
}

namespace {

// Place fine parts (largest first) into bins sized by the coarse parts; the
// state (next part, sorted remaining capacities) is memoized.
class JoinSearch {
 public:
  explicit JoinSearch(const std::vector<int>& fine) : fine_(fine) {}

  bool fits(std::size_t index, std::vector<int> capacity) {
    if (index == fine_.size()) {
      return std::all_of(capacity.begin(), capacity.end(), [](int c) { return c == 0; });
    }
    std::sort(capacity.begin(), capacity.end());
    auto key = std::make_pair(index, capacity);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (std::size_t b = 0; b < capacity.size() && !ok; ++b) {
      if (b > 0 && capacity[b] == capacity[b - 1]) continue;
      if (capacity[b] < fine_[index]) continue;
      capacity[b] -= fine_[index];
      ok = fits(index + 1, capacity);
      capacity[b] += fine_[index];
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

 private:
  const std::vector<int>& fine_;
  std::map<std::pair<std::size_t, std::vector<int>>, bool> memo_;
};

}  // namespace

bool join_leq(const Partition& coarse, const Partition& fine) {
  if (coarse.n() != fine.n()) {
    throw Error(ErrorCode::MismatchedWeight,
                coarse.to_string() + " and " + fine.to_string() + " partition different integers");
  }
  if (coarse.length() > fine.length()) return false;
  JoinSearch search(fine.parts());
  return search.fits(0, coarse.parts());
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor in reverse-lexicographic order.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) break;
    const int k = --a.back();
    ++rem;
    while (rem > k) {
      a.push_back(k);
      rem -= k;
    }
    if (rem > 0) a.push_back(rem);
  }
  return out;
}

}  // namespace lagcorr
