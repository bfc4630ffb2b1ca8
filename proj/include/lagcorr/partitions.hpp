#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lagcorr {

/// Integer partition with parts stored weakly decreasing. The empty
/// partition (of 0) is valid.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; they are sorted. Throws InvalidPartition on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (1,1,...,1) with n parts.
  static Partition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// prod_k mu_k
  std::int64_t part_product() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// prod_i m_i! over the multiplicities m_i of equal parts.
std::int64_t aut_order(const Partition& mu);
/// |Aut mu| * prod_k mu_k, the centralizer order of a permutation of cycle type mu.
std::int64_t z_mu(const Partition& mu);
/// (-1)^{sum_k (mu_k - 1)}, the sign of a permutation of cycle type mu.
int cycle_sign(const Partition& mu);
/// True iff coarse is obtained from fine by joining parts (coarse <= fine in
/// the joining order). Throws MismatchedWeight if the sizes differ.
bool join_leq(const Partition& coarse, const Partition& fine);
/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

}  // namespace lagcorr

template <>
struct std::hash<lagcorr::Partition> {
  std::size_t operator()(const lagcorr::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int part : p.parts()) h ^= std::hash<int>{}(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
