#pragma once

#include <vector>

namespace planecol {

// Partial or total map vertex -> {0,1,2}; -1 marks uncolored.
struct Coloring {
  std::vector<int> values;

  Coloring() = default;
  explicit Coloring(int n) : values(n, -1) {}

  int size() const { return static_cast<int>(values.size()); }
  bool colored(int v) const { return values[v] >= 0; }
  int operator[](int v) const { return values[v]; }
  void set(int v, int c) { values[v] = c; }

  bool total() const {
    for (int c : values)
      if (c < 0) return false;
    return true;
  }
};

}  // namespace planecol
