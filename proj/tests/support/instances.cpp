#include "support/instances.hpp"

namespace testinst {

PartitionPair matching_pair(int num_left, int num_right,
                            const std::vector<int>& left,
                            const std::vector<int>& right) {
  return {mi::PartitionMatroid(left, std::vector<int>(num_left, 1)),
          mi::PartitionMatroid(right, std::vector<int>(num_right, 1))};
}

PartitionPair staircase_pair(const std::vector<int>& gadgets) {
  std::vector<int> left, right;
  int evens = 0, odds = 0;  // vertex classes handed out so far
  for (int j : gadgets) {
    // Path w_0 - w_1 - ... - w_{2j+1}; the edge at position i joins w_i and
    // w_{i+1}. Inner (odd-position) edges get the smaller ids, so the greedy
    // takes exactly them and leaves both path ends exposed.
    std::vector<int> order;
    for (int i = 1; i < 2 * j + 1; i += 2) order.push_back(i);
    for (int i = 0; i < 2 * j + 1; i += 2) order.push_back(i);
    for (int i : order) {
      const int even_vertex = (i % 2 == 0) ? i : i + 1;
      const int odd_vertex = (i % 2 == 0) ? i + 1 : i;
      left.push_back(evens + even_vertex / 2);
      right.push_back(odds + (odd_vertex - 1) / 2);
    }
    evens += j + 1;
    odds += j + 1;
  }
  return {mi::PartitionMatroid(left, std::vector<int>(evens, 1)),
          mi::PartitionMatroid(right, std::vector<int>(odds, 1))};
}

int staircase_ground_size(const std::vector<int>& gadgets) {
  int n = 0;
  for (int j : gadgets) n += 2 * j + 1;
  return n;
}

int staircase_greedy_size(const std::vector<int>& gadgets) {
  int size = 0;
  for (int j : gadgets) size += j;
  return size;
}

int staircase_optimum(const std::vector<int>& gadgets) {
  int r = 0;
  for (int j : gadgets) r += j + 1;
  return r;
}

}  // namespace testinst
