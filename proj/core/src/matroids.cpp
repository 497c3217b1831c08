#include "mi/matroids.hpp"

#include <bit>
#include <stdexcept>

namespace mi {

UniformMatroid::UniformMatroid(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw std::invalid_argument("uniform matroid needs n, k >= 0");
}

PartitionMatroid::PartitionMatroid(std::vector<int> class_of, std::vector<int> cap)
    : class_of_(std::move(class_of)), cap_(std::move(cap)) {
  for (int c : class_of_) {
    if (c < 0 || c >= static_cast<int>(cap_.size()))
      throw std::invalid_argument("partition matroid class id out of range");
  }
  for (int c : cap_) {
    if (c < 0) throw std::invalid_argument("partition matroid cap must be >= 0");
  }
}

bool PartitionMatroid::independent(const ElementSet& s) const {
  std::vector<int> used(cap_.size(), 0);
  bool ok = true;
  s.for_each([&](int v) {
    const int c = class_of_[v];
    if (ok && ++used[c] > cap_[c]) ok = false;
  });
  return ok;
}

GraphicMatroid::GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (auto [u, v] : edges_) {
    if (u < 0 || u >= num_vertices_ || v < 0 || v >= num_vertices_)
      throw std::invalid_argument("graphic matroid edge endpoint out of range");
  }
}

bool GraphicMatroid::independent(const ElementSet& s) const {
  std::vector<int> parent(num_vertices_);
  for (int v = 0; v < num_vertices_; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  bool forest = true;
  s.for_each([&](int e) {
    if (!forest) return;
    const int ru = find(edges_[e].first);
    const int rv = find(edges_[e].second);
    if (ru == rv) {
      forest = false;  // closing a cycle (covers self-loops)
    } else {
      parent[ru] = rv;
    }
  });
  return forest;
}

LinearMatroidGF2::LinearMatroidGF2(int num_rows, int num_cols,
                                   std::vector<std::vector<std::uint64_t>> col_bits)
    : num_rows_(num_rows), num_cols_(num_cols), col_bits_(std::move(col_bits)) {}

LinearMatroidGF2 LinearMatroidGF2::from_rows(const std::vector<std::string>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cols(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("gf2 rows must have equal width");
    for (int j = 0; j < n; ++j) {
      const char ch = rows[i][j];
      if (ch != '0' && ch != '1')
        throw std::invalid_argument("gf2 rows must consist of 0/1");
      if (ch == '1') cols[j][i / 64] |= 1ull << (i % 64);
    }
  }
  return LinearMatroidGF2(m, n, std::move(cols));
}

std::vector<std::string> LinearMatroidGF2::to_rows() const {
  std::vector<std::string> rows(num_rows_, std::string(num_cols_, '0'));
  for (int j = 0; j < num_cols_; ++j) {
    for (int i = 0; i < num_rows_; ++i) {
      if ((col_bits_[j][i / 64] >> (i % 64)) & 1u) rows[i][j] = '1';
    }
  }
  return rows;
}

bool LinearMatroidGF2::independent(const ElementSet& s) const {
  // Incremental elimination: reduce each new column by the basis collected so
  // far; a column that cancels to zero witnesses dependence.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<int> pivot;  // lowest surviving bit of each basis vector
  bool ok = true;
  s.for_each([&](int j) {
    if (!ok) return;
    std::vector<std::uint64_t> cur = col_bits_[j];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int p = pivot[b];
      if ((cur[p / 64] >> (p % 64)) & 1u) {
        for (std::size_t w = 0; w < cur.size(); ++w) cur[w] ^= basis[b][w];
      }
    }
    int low = -1;
    for (std::size_t w = 0; w < cur.size() && low < 0; ++w) {
      if (cur[w]) low = static_cast<int>(w) * 64 + std::countr_zero(cur[w]);
    }
    if (low < 0) {
      ok = false;
      return;
    }
    basis.push_back(std::move(cur));
    pivot.push_back(low);
  });
  return ok;
}

}  // namespace mi
