#pragma once

// Independent reference computations. Nothing here calls into the library
// routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Brute force over S_n: class sizes keyed by cycle type (sorted
/// descending) and the sign of each class from the inversion count.
struct SymmetricGroup {
  std::map<std::vector<int>, std::int64_t> class_size;
  std::map<std::vector<int>, int> class_sign;
  std::int64_t order = 0;
};

inline SymmetricGroup symmetric_group(int n) {
  SymmetricGroup out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(perm.size());
  do {
    std::vector<int> type;
    std::fill(seen.begin(), seen.end(), 0);
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int len = 0;
      for (int x = s; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    }
    const int sign = inversions % 2 == 0 ? 1 : -1;
    auto [it, fresh] = out.class_sign.emplace(type, sign);
    if (!fresh && it->second != sign) it->second = 0;  // inconsistent class; never expected
    ++out.class_size[type];
    ++out.order;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::int64_t factorial(int n) {
  std::int64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

/// Largest k dividing every coordinate, by trial division.
inline std::int64_t gcd_by_trial(const std::vector<std::int64_t>& v) {
  std::int64_t bound = 0;
  for (auto c : v) bound = std::max(bound, c < 0 ? -c : c);
  for (std::int64_t k = bound; k >= 1; --k) {
    if (std::all_of(v.begin(), v.end(), [k](std::int64_t c) { return c % k == 0; })) return k;
  }
  return 0;
}

/// Product of the invariant factors d1 d2 of a 2 x d integer matrix via
/// Smith normal form; 0 if the rank is below 2.
inline std::int64_t smith_index(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < rows; ++t) {
    // Bring a nonzero entry of minimal |value| in the submatrix to (t,t),
    // then clear its row and column; repeat until it divides everything.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m[r][c] != 0 && (pr == rows || std::llabs(m[r][c]) < std::llabs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return 0;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  std::int64_t out = 1;
  for (auto d : diag) out *= d;
  return out;
}

/// Taylor coefficients of 2 sin(n h / 2) from the derivative pattern
/// d^k/dh^k sin(a h) at 0 = a^k sin(k pi / 2).
inline std::map<long, mpq_class> sine_taylor(long n, long order) {
  std::map<long, mpq_class> out;
  for (long k = 1; k <= order; k += 2) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), mpz_class(2).get_mpz_t(), static_cast<unsigned long>(k));
    mpq_class c(num, den * fact);
    c.canonicalize();
    if ((k / 2) % 2 == 1) c = -c;
    out[k] = 2 * c;
  }
  return out;
}

/// All set partitions of {0, ..., m-1}, each as a list of blocks.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int k) {
    if (k == m) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(k);
      rec(k + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({k});
    rec(k + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

/// True iff the parts of `fine` can be grouped into blocks with sums equal
/// to `coarse` (as multisets), by exhausting set partitions.
inline bool joins_to(const std::vector<int>& coarse, const std::vector<int>& fine) {
  std::vector<int> target = coarse;
  std::sort(target.begin(), target.end());
  for (const auto& blocks : set_partitions(static_cast<int>(fine.size()))) {
    std::vector<int> sums;
    for (const auto& b : blocks) {
      int s = 0;
      for (int k : b) s += fine[static_cast<std::size_t>(k)];
      sums.push_back(s);
    }
    std::sort(sums.begin(), sums.end());
    if (sums == target) return true;
  }
  return false;
}

}  // namespace oracle
