#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace simpart {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Face counts f_{-1}..f_d; entries[0] is f_{-1}.  A complex of dimension d
/// has d+2 entries; the void complex has none.
struct FVector {
  std::vector<long long> entries;

  int dimension() const { return static_cast<int>(entries.size()) - 2; }

  long long at(int i) const {
    if (i < -1) return 0;
    std::size_t idx = static_cast<std::size_t>(i + 1);
    return idx < entries.size() ? entries[idx] : 0;
  }

  FVector padded(std::size_t len) const {
    FVector f = *this;
    while (f.entries.size() < len) f.entries.push_back(0);
    return f;
  }

  bool operator==(const FVector& o) const { return entries == o.entries; }
};

/// h_0..h_{d+1}; same length (d+2) as the matching f-vector.
struct HVector {
  std::vector<long long> entries;

  long long at(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= entries.size()) return 0;
    return entries[static_cast<std::size_t>(k)];
  }

  HVector padded(std::size_t len) const {
    HVector h = *this;
    while (h.entries.size() < len) h.entries.push_back(0);
    return h;
  }

  long long sum() const {
    long long s = 0;
    for (long long e : entries) s += e;
    return s;
  }

  bool operator==(const HVector& o) const { return entries == o.entries; }
};

/// h_k = sum_{i=0}^{k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}.
inline HVector h_from_f(const FVector& f) {
  HVector h;
  if (f.entries.empty()) return h;
  int d = f.dimension();
  h.entries.assign(static_cast<std::size_t>(d + 2), 0);
  for (int k = 0; k <= d + 1; ++k) {
    long long v = 0;
    for (int i = 0; i <= k; ++i) {
      long long term = binomial(d + 1 - i, k - i) * f.at(i - 1);
      v += ((k - i) % 2 == 0) ? term : -term;
    }
    h.entries[static_cast<std::size_t>(k)] = v;
  }
  return h;
}

/// Inverse transform: f_{i-1} = sum_{k=0}^{i} C(d+1-k, i-k) h_k.
inline FVector f_from_h(const HVector& h) {
  FVector f;
  if (h.entries.empty()) return f;
  int d = static_cast<int>(h.entries.size()) - 2;
  f.entries.assign(h.entries.size(), 0);
  for (int i = 0; i <= d + 1; ++i) {
    long long v = 0;
    for (int k = 0; k <= i; ++k) v += binomial(d + 1 - k, i - k) * h.at(k);
    f.entries[static_cast<std::size_t>(i)] = v;
  }
  return f;
}

inline std::string to_string(const FVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(f.entries[i]);
  }
  return s + ")";
}

inline std::string to_string(const HVector& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.entries.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(h.entries[i]);
  }
  return s + ")";
}

}  // namespace simpart
