#pragma once

#include <numeric>
#include <vector>

namespace enrichcat::detail {

// Union-find whose class representative is the least member; class indices
// assigned by ascending representative stay stable across runs.
struct MinUF {
  std::vector<int> up;
  explicit MinUF(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) up[b] = a;
    else up[a] = b;
  }
};

}  // namespace enrichcat::detail
