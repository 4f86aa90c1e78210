#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "caterpillar/errors.hpp"

namespace caterpillar {

// A rearrangement of 1..n, one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);
  static Permutation identity(int n);

  // Parses space-separated one-line notation, e.g. "4 5 3 1 2 6 8 7".
  static Permutation parse_one_line(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int i) const;  // 0-based, IndexOutOfRange
  const std::vector<int>& entries() const { return entries_; }
  int position_of(int value) const;  // 0-based, IndexOutOfRange

  std::string to_one_line() const;

  bool operator==(const Permutation& other) const { return entries_ == other.entries_; }
  bool operator<(const Permutation& other) const { return entries_ < other.entries_; }

 private:
  std::vector<int> entries_;
};

// Classical containment: some subsequence of p is order-isomorphic to the
// pattern. Length-3 patterns 132 and 231 use linear stack scans; everything
// else falls back to pruned backtracking.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

// Positions (i, j, k), 0-based, of a 132 occurrence if any.
std::optional<std::array<int, 3>> find_132(const Permutation& p);

// The maximal contiguous window around position i whose entries are all
// <= p[i], renumbered order-isomorphically to 1..m. Always contains p[i],
// which maps to the window maximum.
Permutation r_tilde(const Permutation& p, int i);

struct RTildeMember {
  int index = 0;  // 0-based position in the source
  Permutation extracted;
};

// r_tilde at every position of the source, in position order.
struct ExtractionFamily {
  Permutation source;
  std::vector<RTildeMember> members;
};

ExtractionFamily extraction_family(const Permutation& p);

}  // namespace caterpillar
