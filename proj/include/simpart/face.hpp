#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace simpart {

/// A face: an immutable finite set of vertex indices, stored as a
/// fixed-width bitset.  The empty face is a legal value (dimension -1).
///
/// Canonical order is (dimension, lexicographic on the ascending vertex
/// sequence); every container of faces in this library is sorted that way.
class Face {
 public:
  static constexpr int kMaxVertices = 256;

  constexpr Face() : words_{} {}

  static Face of(std::initializer_list<int> vertices) {
    Face f;
    for (int v : vertices) f.insert(v);
    return f;
  }

  template <typename Range>
  static Face from_range(const Range& vertices) {
    Face f;
    for (int v : vertices) f.insert(v);
    return f;
  }

  bool contains(int v) const {
    if (v < 0 || v >= kMaxVertices) return false;
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  Face with(int v) const {
    Face f = *this;
    f.insert(v);
    return f;
  }

  Face without(int v) const {
    Face f = *this;
    if (v >= 0 && v < kMaxVertices)
      f.words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    return f;
  }

  int size() const {
    int n = 0;
    for (std::uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
  }

  /// |vertices| - 1; the empty face has dimension -1.
  int dimension() const { return size() - 1; }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Face& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const Face& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Face united(const Face& other) const {
    Face f;
    for (std::size_t i = 0; i < kWords; ++i) f.words_[i] = words_[i] | other.words_[i];
    return f;
  }

  Face intersected(const Face& other) const {
    Face f;
    for (std::size_t i = 0; i < kWords; ++i) f.words_[i] = words_[i] & other.words_[i];
    return f;
  }

  Face minus(const Face& other) const {
    Face f;
    for (std::size_t i = 0; i < kWords; ++i) f.words_[i] = words_[i] & ~other.words_[i];
    return f;
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  int min_vertex() const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(words_[i]);
    return -1;
  }

  int max_vertex() const {
    for (std::size_t i = kWords; i-- > 0;)
      if (words_[i]) return static_cast<int>(i * 64) + 63 - __builtin_clzll(words_[i]);
    return -1;
  }

  bool operator==(const Face& other) const { return words_ == other.words_; }
  bool operator!=(const Face& other) const { return words_ != other.words_; }

  /// Canonical order: by dimension, then lexicographically on the ascending
  /// vertex sequence.  For equal-size faces the first differing position of
  /// the two sequences is the smallest vertex of the symmetric difference.
  bool operator<(const Face& other) const {
    int sa = size(), sb = other.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  bool operator>(const Face& other) const { return other < *this; }
  bool operator<=(const Face& other) const { return !(other < *this); }
  bool operator>=(const Face& other) const { return !(*this < other); }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::size_t kWords = kMaxVertices / 64;
  std::array<std::uint64_t, kWords> words_;

  void insert(int v) {
    if (v < 0) throw std::invalid_argument("negative vertex index");
    if (v >= kMaxVertices) throw std::invalid_argument("vertex index exceeds capacity");
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
};

struct FaceHash {
  std::size_t operator()(const Face& f) const { return f.hash(); }
};

/// All 2^|f| subsets of a face, in mask order (not canonical order).
inline std::vector<Face> subsets_of(const Face& face) {
  std::vector<int> vs = face.vertices();
  if (vs.size() > 62) throw std::invalid_argument("face too large to enumerate");
  std::vector<Face> out;
  std::uint64_t n = std::uint64_t{1} << vs.size();
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    Face f;
    for (std::size_t b = 0; b < vs.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) f = f.with(vs[b]);
    out.push_back(f);
  }
  return out;
}

/// "{}" for the empty face, otherwise "{v1 v2 ...}" with ascending indices.
inline std::string to_string(const Face& f) {
  std::string s = "{";
  bool first = true;
  for (int v : f.vertices()) {
    if (!first) s += ' ';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

}  // namespace simpart
