#include "zamobelt/dynkin.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <string>

#include "zamobelt/error.hpp"

namespace zamobelt {

namespace {

bool valid_rank(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::optional<int> table_coxeter(const DynkinType& t) {
  if (!valid_rank(t.family, t.rank)) return std::nullopt;
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B':
    case 'C': return 2 * t.rank;
    case 'D': return 2 * t.rank - 2;
    case 'E': return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    case 'F': return 12;
    case 'G': return 6;
    default: return std::nullopt;
  }
}

void link(IntMatrix& m, int i, int j, int ij = 1, int ji = 1) {
  m(i, j) = ij;
  m(j, i) = ji;
}

std::vector<int> neighbours(const IntMatrix& m, int v) {
  std::vector<int> out;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(v, j) != 0) out.push_back(static_cast<int>(j));
  return out;
}

// Length of the arm leaving `center` through `first` in a tree.
int arm_length(const IntMatrix& m, int center, int first) {
  int prev = center, cur = first, len = 1;
  while (true) {
    auto nb = neighbours(m, cur);
    if (nb.size() != 2) return len;
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++len;
  }
}

}  // namespace

std::string DynkinType::name() const {
  if (!known()) return "unknown";
  return std::string(1, family) + std::to_string(rank);
}

DynkinType DynkinType::parse(const std::string& name) {
  if (name.size() < 2 || std::string("ABCDEFG").find(name[0]) == std::string::npos) {
    throw Error(ErrorCode::unknown_name, "not a Dynkin type: '" + name + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || rank > 1000) {
      throw Error(ErrorCode::unknown_name, "not a Dynkin type: '" + name + "'");
    }
    rank = rank * 10 + (name[i] - '0');
  }
  if (!valid_rank(name[0], rank)) {
    throw Error(ErrorCode::invalid_rank, "invalid rank for '" + name + "'");
  }
  return {name[0], rank};
}

std::optional<int> coxeter_number(const DynkinType& type) {
  static std::once_flag checked;
  std::call_once(checked, verify_coxeter_table);
  return table_coxeter(type);
}

IntMatrix dynkin_template(const DynkinType& t) {
  if (!valid_rank(t.family, t.rank)) {
    throw Error(ErrorCode::invalid_rank, "invalid Dynkin type " + t.name());
  }
  const int n = t.rank;
  IntMatrix m(n, n);
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m(n - 1, n - 2) = 2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m(n - 2, n - 1) = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki labeling: 1-3-4-5-..., 2 hangs off 4.
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case 'F':
      link(m, 0, 1);
      link(m, 1, 2, 2, 1);
      link(m, 2, 3);
      break;
    case 'G':
      link(m, 0, 1, 1, 3);
      break;
    default:
      break;
  }
  return m;
}

DynkinType recognize_dynkin(const IntMatrix& m) {
  const DynkinType unknown{};
  const int n = static_cast<int>(m.rows());
  if (n == 0 || !m.square()) return unknown;
  int edges = 0, nonsimple = 0;
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 0) return unknown;
    for (int j = i + 1; j < n; ++j) {
      if ((m(i, j) == 0) != (m(j, i) == 0)) return unknown;
      if (m(i, j) == 0) continue;
      if (m(i, j) < 0 || m(j, i) < 0) return unknown;
      const auto prod = m(i, j) * m(j, i);
      if (prod > 3) return unknown;
      ++edges;
      if (prod > 1) ++nonsimple;
    }
  }
  if (n == 1) return {'A', 1};
  if (edges != n - 1) return unknown;
  // Connected with n - 1 edges: a tree.
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : neighbours(m, v))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n) return unknown;

  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    auto d = neighbours(m, v).size();
    if (d > 3) return unknown;
    if (d == 3) branch.push_back(v);
  }

  if (branch.empty()) {
    // Path: order it from one end.
    int start = 0;
    while (neighbours(m, start).size() != 1) ++start;
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (static_cast<int>(path.size()) < n) {
      for (int w : neighbours(m, cur))
        if (w != prev) {
          prev = cur;
          cur = w;
          break;
        }
      path.push_back(cur);
    }
    if (nonsimple == 0) return {'A', n};
    if (nonsimple > 1) return unknown;
    int idx = 0;
    while (m(path[idx], path[idx + 1]) * m(path[idx + 1], path[idx]) == 1) ++idx;
    const auto prod = m(path[idx], path[idx + 1]) * m(path[idx + 1], path[idx]);
    if (prod == 3) return n == 2 ? DynkinType{'G', 2} : unknown;
    if (n == 2) return {'B', 2};
    if (idx == 0 || idx == n - 2) {
      int leaf = idx == 0 ? path[0] : path[n - 1];
      int inner = idx == 0 ? path[1] : path[n - 2];
      return m(leaf, inner) == 2 ? DynkinType{'B', n} : DynkinType{'C', n};
    }
    if (n == 4 && idx == 1) return {'F', 4};
    return unknown;
  }

  if (branch.size() != 1 || nonsimple != 0) return unknown;
  std::vector<int> arms;
  for (int w : neighbours(m, branch[0])) arms.push_back(arm_length(m, branch[0], w));
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  return unknown;
}

std::vector<std::vector<int>> root_system(const IntMatrix& m) {
  const std::size_t n = m.rows();
  constexpr std::size_t kRootCap = 100000;
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(β) = β - <α_i^∨, β> α_i with a_ij = 2δ_ij - M_ij.
      long pairing = 2L * beta[i];
      for (std::size_t j = 0; j < n; ++j) pairing -= m(i, j) * beta[j];
      if (pairing == 0) continue;
      auto image = beta;
      image[i] -= static_cast<int>(pairing);
      if (roots.insert(image).second) {
        if (roots.size() > kRootCap) {
          throw Error(ErrorCode::invalid_input, "root system is not finite");
        }
        queue.push_back(std::move(image));
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<std::vector<int>> positive_roots(const IntMatrix& m) {
  std::vector<std::vector<int>> out;
  for (auto& r : root_system(m))
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) out.push_back(r);
  return out;
}

void verify_coxeter_table() {
  std::vector<DynkinType> types;
  for (int r = 1; r <= 8; ++r) types.push_back({'A', r});
  for (int r = 2; r <= 8; ++r) {
    types.push_back({'B', r});
    types.push_back({'C', r});
  }
  for (int r = 4; r <= 8; ++r) types.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) types.push_back({'E', r});
  types.push_back({'F', 4});
  types.push_back({'G', 2});
  for (const auto& t : types) {
    const auto count = root_system(dynkin_template(t)).size();
    const auto h = table_coxeter(t);
    if (!h || count != static_cast<std::size_t>(*h * t.rank)) {
      throw Error(ErrorCode::invalid_input,
                  "Coxeter table disagrees with root count for " + t.name());
    }
    if (!(recognize_dynkin(dynkin_template(t)) == t) && !(t.family == 'C' && t.rank == 2)) {
      throw Error(ErrorCode::invalid_input, "template not recognized: " + t.name());
    }
  }
}

}  // namespace zamobelt
