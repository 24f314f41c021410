#pragma once

// Test-only helpers. The piece oracle here works on raw node subsets and is
// deliberately independent of the pieces module.

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "forestalg/forest.hpp"

namespace testing {

using namespace forestalg;

inline std::string source_path(const std::string& relative) {
  return std::string(FORESTALG_SOURCE_DIR) + "/" + relative;
}

inline std::string corpus_file(const std::string& name) { return source_path("corpus/" + name + ".json"); }

struct Flat {
  std::vector<Label> label;
  std::vector<int> parent;  // -1 for roots
};

inline void flatten(const std::vector<Node>& trees, int parent, Flat& out) {
  for (const auto& t : trees) {
    const int id = static_cast<int>(out.label.size());
    out.label.push_back(t.label);
    out.parent.push_back(parent);
    flatten(t.children, id, out);
  }
}

inline Flat flatten(const Forest& f) {
  Flat out;
  flatten(f.trees(), -1, out);
  return out;
}

/// Ancestors of x, x included, from x upward.
inline std::vector<int> lineage(const Flat& f, int x) {
  std::vector<int> out;
  for (int y = x; y >= 0; y = f.parent[y]) out.push_back(y);
  return out;
}

/// Forest induced by the kept nodes (a preorder bit mask).
inline Forest induced_by_mask(const Flat& f, std::uint32_t mask) {
  const int n = static_cast<int>(f.label.size());
  std::vector<int> up(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (!(mask >> x & 1U)) continue;
    for (int y = f.parent[x]; y >= 0; y = f.parent[y])
      if (mask >> y & 1U) {
        up[x] = y;
        break;
      }
  }
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
  std::vector<int> roots;
  for (int x = 0; x < n; ++x) {
    if (!(mask >> x & 1U)) continue;
    (up[x] < 0 ? roots : kids[up[x]]).push_back(x);
  }
  std::function<Node(int)> build = [&](int x) {
    Node node;
    node.label = f.label[x];
    for (int c : kids[x]) node.children.push_back(build(c));
    return node;
  };
  std::vector<Node> out;
  for (int r : roots) out.push_back(build(r));
  return Forest(std::move(out));
}

/// Whether the kept set contains the closest common ancestor of any two kept
/// nodes that have one.
inline bool cca_closed(const Flat& f, std::uint32_t mask) {
  const int n = static_cast<int>(f.label.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!(mask >> x & 1U) || !(mask >> y & 1U)) continue;
      const auto lx = lineage(f, x), ly = lineage(f, y);
      int common = -1;
      for (int a : lx) {
        for (int b : ly)
          if (a == b) {
            common = a;
            break;
          }
        if (common >= 0) break;
      }
      if (common >= 0 && !(mask >> common & 1U)) return false;
    }
  return true;
}

/// Every plain (or cca) piece of t with at most max_nodes nodes, rendered.
inline std::set<std::string> subset_pieces(const Forest& t, std::size_t max_nodes, bool cca) {
  const Flat f = flatten(t);
  const int n = static_cast<int>(f.label.size());
  std::set<std::string> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_nodes) continue;
    if (cca && !cca_closed(f, mask)) continue;
    out.insert(render(induced_by_mask(f, mask)));
  }
  return out;
}

inline bool subset_is_piece(const Forest& s, const Forest& t, bool cca) {
  const auto all = subset_pieces(t, s.size(), cca);
  return all.count(render(s)) > 0;
}

/// Catalan number, for forest counts.
inline std::uint64_t catalan(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint64_t power(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace testing
