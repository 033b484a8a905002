#include "schelling/dp_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace schelling {

namespace {

int position_in(const std::vector<int>& bag, int vertex) {
  auto it = std::lower_bound(bag.begin(), bag.end(), vertex);
  if (it == bag.end() || *it != vertex) {
    throw std::logic_error("vertex not in bag");
  }
  return static_cast<int>(it - bag.begin());
}

}  // namespace

std::size_t DpKeyHash::operator()(const DpKey& key) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int32_t x : key) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

TreewidthSolver::TreewidthSolver(Instance instance, NiceTreeDecomposition ntd,
                                 DpMode mode)
    : instance_(std::move(instance)), ntd_(std::move(ntd)), mode_(mode) {
  ValidationReport report = validate_nice(instance_.graph(), ntd_);
  if (!report.ok) {
    throw std::invalid_argument("invalid nice tree decomposition: " +
                                report.diagnostic);
  }
  tables_.resize(ntd_.node_count());
  for (int node : ntd_.postorder()) {
    switch (ntd_.kinds[node]) {
      case NodeKind::Leaf: process_leaf(node); break;
      case NodeKind::Introduce: process_introduce(node); break;
      case NodeKind::Forget: process_forget(node); break;
      case NodeKind::Join: process_join(node); break;
    }
  }
}

void TreewidthSolver::consider(DpTable& table, DpKey key, Rational welfare,
                               DpRecord record) const {
  record.partial_welfare = std::move(welfare);
  auto it = table.find(key);
  if (it == table.end()) {
    table.emplace(std::move(key), std::move(record));
    return;
  }
  DpRecord& current = it->second;
  bool better = record.partial_welfare > current.partial_welfare;
  if (!better && record.partial_welfare == current.partial_welfare) {
    // Equal welfare: prefer the lexicographically smallest provenance so the
    // reconstructed witness never depends on table iteration order.
    better = std::tie(record.child_key, record.right_key, record.placed_type) <
             std::tie(current.child_key, current.right_key, current.placed_type);
  }
  if (better) {
    current = std::move(record);
  }
}

void TreewidthSolver::process_leaf(int node) {
  int k = instance_.num_types();
  DpKey key(k, 0);
  consider(tables_[node], std::move(key), Rational(0), DpRecord{});
}

void TreewidthSolver::process_introduce(int node) {
  int k = instance_.num_types();
  int child = ntd_.children[node][0];
  const std::vector<int>& bag = ntd_.bags[node];
  const std::vector<int>& child_bag = ntd_.bags[child];
  int v = ntd_.acted_vertex[node];
  int pos = position_in(bag, v);
  int child_size = static_cast<int>(child_bag.size());
  int payload = mode_ == DpMode::MaxWelfare ? k : 1;
  const std::vector<int>& counts_limit = instance_.type_counts();

  std::vector<int> neighbor_positions;  // positions in the child bag
  for (int j = 0; j < child_size; ++j) {
    if (instance_.graph().has_edge(v, child_bag[j])) {
      neighbor_positions.push_back(j);
    }
  }

  DpTable& table = tables_[node];
  for (const auto& [child_key, child_record] : tables_[child]) {
    for (int choice = kEmpty; choice < k; ++choice) {
      if (choice >= 0 && child_key[choice] >= counts_limit[choice]) continue;

      if (mode_ == DpMode::Perfect && choice >= 0) {
        bool clash = false;
        for (int j : neighbor_positions) {
          int other = child_key[k + j];
          if (other != kEmpty && other != choice) {
            clash = true;
            break;
          }
        }
        // A neighboring agent of another type pins both utilities below 1.
        if (clash) continue;
      }

      DpKey key(k + (child_size + 1) * (1 + payload));
      for (int i = 0; i < k; ++i) key[i] = child_key[i];
      if (choice >= 0) ++key[choice];
      // Types, with v's slot spliced in at `pos`.
      for (int j = 0; j < child_size; ++j) {
        key[k + (j < pos ? j : j + 1)] = child_key[k + j];
      }
      key[k + pos] = choice;
      // Payload, re-indexed the same way.
      auto child_payload = [&](int j) { return k + child_size + j * payload; };
      auto new_payload = [&](int j) { return k + child_size + 1 + j * payload; };
      for (int j = 0; j < child_size; ++j) {
        int target = j < pos ? j : j + 1;
        for (int c = 0; c < payload; ++c) {
          key[new_payload(target) + c] = child_key[child_payload(j) + c];
        }
      }

      if (mode_ == DpMode::MaxWelfare) {
        for (int j : neighbor_positions) {
          int other = child_key[k + j];
          if (other != kEmpty) {
            ++key[new_payload(pos) + other];
          }
          if (choice >= 0) {
            ++key[new_payload(j < pos ? j : j + 1) + choice];
          }
        }
      } else if (choice >= 0) {
        std::int32_t satisfied = 0;
        for (int j : neighbor_positions) {
          if (child_key[k + j] == choice) {
            satisfied = 1;
            key[new_payload(j < pos ? j : j + 1)] = 1;
          }
        }
        key[new_payload(pos)] = satisfied;
      }

      DpRecord record;
      record.child_key = child_key;
      record.placed_type = choice;
      consider(table, std::move(key), child_record.partial_welfare,
               std::move(record));
    }
  }
}

void TreewidthSolver::process_forget(int node) {
  int k = instance_.num_types();
  int child = ntd_.children[node][0];
  const std::vector<int>& child_bag = ntd_.bags[child];
  int v = ntd_.acted_vertex[node];
  int pos = position_in(child_bag, v);
  int child_size = static_cast<int>(child_bag.size());
  int payload = mode_ == DpMode::MaxWelfare ? k : 1;

  DpTable& table = tables_[node];
  for (const auto& [child_key, child_record] : tables_[child]) {
    int type = child_key[k + pos];
    Rational welfare = child_record.partial_welfare;
    if (type != kEmpty) {
      int payload_at = k + child_size + pos * payload;
      if (mode_ == DpMode::MaxWelfare) {
        std::int64_t same = child_key[payload_at + type];
        std::int64_t total = 0;
        for (int i = 0; i < k; ++i) total += child_key[payload_at + i];
        if (total > 0) welfare += Rational(same, total);
      } else {
        // All neighbors are processed by now, so a missing same-type
        // neighbor can never be repaired: drop the entry.
        if (child_key[payload_at] == 0) continue;
        welfare += Rational(1);
      }
    }

    DpKey key(k + (child_size - 1) * (1 + payload));
    for (int i = 0; i < k; ++i) key[i] = child_key[i];
    for (int j = 0; j < child_size; ++j) {
      if (j == pos) continue;
      int target = j < pos ? j : j - 1;
      key[k + target] = child_key[k + j];
      for (int c = 0; c < payload; ++c) {
        key[k + (child_size - 1) + target * payload + c] =
            child_key[k + child_size + j * payload + c];
      }
    }

    DpRecord record;
    record.child_key = child_key;
    consider(table, std::move(key), std::move(welfare), std::move(record));
  }
}

void TreewidthSolver::process_join(int node) {
  int k = instance_.num_types();
  int left = ntd_.children[node][0];
  int right = ntd_.children[node][1];
  const std::vector<int>& bag = ntd_.bags[node];
  int size = static_cast<int>(bag.size());
  int payload = mode_ == DpMode::MaxWelfare ? k : 1;
  const std::vector<int>& counts_limit = instance_.type_counts();

  std::vector<std::pair<int, int>> bag_edges;
  for (int p = 0; p < size; ++p) {
    for (int q = p + 1; q < size; ++q) {
      if (instance_.graph().has_edge(bag[p], bag[q])) {
        bag_edges.emplace_back(p, q);
      }
    }
  }

  // Entries can only combine when they agree on the bag typing, so bucket
  // both child tables by that slice.
  auto group_by_types = [&](const DpTable& table) {
    std::unordered_map<DpKey, std::vector<const DpTable::value_type*>, DpKeyHash>
        groups;
    for (const auto& entry : table) {
      DpKey types(entry.first.begin() + k, entry.first.begin() + k + size);
      groups[std::move(types)].push_back(&entry);
    }
    return groups;
  };
  auto left_groups = group_by_types(tables_[left]);
  auto right_groups = group_by_types(tables_[right]);

  DpTable& table = tables_[node];
  for (const auto& [types, left_entries] : left_groups) {
    auto right_it = right_groups.find(types);
    if (right_it == right_groups.end()) continue;

    // Both sides count agents on the bag and adjacencies inside the bag, so
    // subtract each once.
    std::vector<std::int32_t> bag_occupancy(k, 0);
    for (int p = 0; p < size; ++p) {
      if (types[p] != kEmpty) ++bag_occupancy[types[p]];
    }
    std::vector<std::int32_t> internal(size * payload, 0);
    if (mode_ == DpMode::MaxWelfare) {
      for (auto [p, q] : bag_edges) {
        if (types[q] != kEmpty) ++internal[p * payload + types[q]];
        if (types[p] != kEmpty) ++internal[q * payload + types[p]];
      }
    }

    for (const auto* left_entry : left_entries) {
      const DpKey& lk = left_entry->first;
      for (const auto* right_entry : right_it->second) {
        const DpKey& rk = right_entry->first;

        DpKey key(k + size * (1 + payload));
        bool feasible = true;
        for (int i = 0; i < k; ++i) {
          key[i] = lk[i] + rk[i] - bag_occupancy[i];
          if (key[i] > counts_limit[i]) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        for (int p = 0; p < size; ++p) key[k + p] = types[p];
        int base = k + size;
        if (mode_ == DpMode::MaxWelfare) {
          for (int c = 0; c < size * payload; ++c) {
            key[base + c] = lk[base + c] + rk[base + c] - internal[c];
          }
        } else {
          for (int c = 0; c < size; ++c) {
            key[base + c] = lk[base + c] | rk[base + c];
          }
        }

        DpRecord record;
        record.child_key = lk;
        record.right_key = rk;
        consider(table, std::move(key),
                 left_entry->second.partial_welfare +
                     right_entry->second.partial_welfare,
                 std::move(record));
      }
    }
  }
}

DpStats TreewidthSolver::stats() const {
  DpStats stats;
  stats.width_used = ntd_.width();
  for (std::size_t node = 0; node < ntd_.node_count(); ++node) {
    std::size_t size = tables_[node].size();
    stats.per_node.push_back({static_cast<int>(node),
                              static_cast<int>(ntd_.bags[node].size()), size});
    stats.peak_table_size = std::max(stats.peak_table_size, size);
  }
  return stats;
}

DpClassView TreewidthSolver::decode(int node, const DpKey& key) const {
  int k = instance_.num_types();
  int size = static_cast<int>(ntd_.bags[node].size());
  int payload = mode_ == DpMode::MaxWelfare ? k : 1;
  if (static_cast<int>(key.size()) != k + size * (1 + payload)) {
    throw std::invalid_argument("key length does not match node layout");
  }
  DpClassView view;
  view.sizes.assign(key.begin(), key.begin() + k);
  view.bag_types.assign(key.begin() + k, key.begin() + k + size);
  for (int p = 0; p < size; ++p) {
    auto begin = key.begin() + k + size + p * payload;
    if (mode_ == DpMode::MaxWelfare) {
      view.neighbor_counts.emplace_back(begin, begin + payload);
    } else {
      view.satisfied_flags.push_back(*begin);
    }
  }
  return view;
}

DpKey TreewidthSolver::encode(int node, const DpClassView& view) const {
  int k = instance_.num_types();
  int size = static_cast<int>(ntd_.bags[node].size());
  int payload = mode_ == DpMode::MaxWelfare ? k : 1;
  if (static_cast<int>(view.sizes.size()) != k ||
      static_cast<int>(view.bag_types.size()) != size) {
    throw std::invalid_argument("class view does not match node layout");
  }
  DpKey key;
  key.reserve(k + size * (1 + payload));
  key.insert(key.end(), view.sizes.begin(), view.sizes.end());
  key.insert(key.end(), view.bag_types.begin(), view.bag_types.end());
  for (int p = 0; p < size; ++p) {
    if (mode_ == DpMode::MaxWelfare) {
      const auto& counts = view.neighbor_counts.at(p);
      if (static_cast<int>(counts.size()) != k) {
        throw std::invalid_argument("neighbor counts do not match type count");
      }
      key.insert(key.end(), counts.begin(), counts.end());
    } else {
      key.push_back(view.satisfied_flags.at(p));
    }
  }
  return key;
}

std::vector<int> TreewidthSolver::subtree_vertices(int node) const {
  std::vector<int> result;
  std::vector<int> stack = {node};
  while (!stack.empty()) {
    int current = stack.back();
    stack.pop_back();
    result.insert(result.end(), ntd_.bags[current].begin(),
                  ntd_.bags[current].end());
    for (int child : ntd_.children[current]) stack.push_back(child);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

Assignment TreewidthSolver::reconstruct(int node, const DpKey& key) const {
  Assignment assignment(instance_.graph().vertex_count());
  std::vector<std::pair<int, const DpKey*>> stack = {{node, &key}};
  while (!stack.empty()) {
    auto [current, current_key] = stack.back();
    stack.pop_back();
    const DpRecord& record = tables_[current].at(*current_key);
    switch (ntd_.kinds[current]) {
      case NodeKind::Leaf:
        break;
      case NodeKind::Introduce:
        if (record.placed_type >= 0) {
          assignment.place(ntd_.acted_vertex[current], record.placed_type);
        }
        stack.emplace_back(ntd_.children[current][0], &record.child_key);
        break;
      case NodeKind::Forget:
        stack.emplace_back(ntd_.children[current][0], &record.child_key);
        break;
      case NodeKind::Join:
        stack.emplace_back(ntd_.children[current][0], &record.child_key);
        stack.emplace_back(ntd_.children[current][1], &record.right_key);
        break;
    }
  }
  return assignment;
}

std::optional<WelfareOptimum> TreewidthSolver::best_welfare() const {
  DpKey target(instance_.type_counts().begin(),
               instance_.type_counts().end());
  const DpTable& root_table = tables_[ntd_.root];
  auto it = root_table.find(target);
  if (it == root_table.end()) return std::nullopt;
  return WelfareOptimum{it->second.partial_welfare,
                        reconstruct(ntd_.root, target)};
}

std::optional<Assignment> TreewidthSolver::perfect_assignment() const {
  auto result = best_welfare();
  if (!result) return std::nullopt;
  return result->assignment;
}

WelfareOptimum solve_max_welfare(const Instance& instance,
                                 const NiceTreeDecomposition& ntd) {
  TreewidthSolver solver(instance, ntd, DpMode::MaxWelfare);
  auto result = solver.best_welfare();
  if (!result) {
    throw std::logic_error("welfare table has no complete entry");
  }
  return *result;
}

std::optional<Assignment> solve_perfect(const Instance& instance,
                                        const NiceTreeDecomposition& ntd) {
  TreewidthSolver solver(instance, ntd, DpMode::Perfect);
  return solver.perfect_assignment();
}

}  // namespace schelling
