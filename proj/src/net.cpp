#include "sampnet/net.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace sampnet::net {

bool CollabNetwork::has_node(ArtistId id) const { return index_.count(id) > 0; }

std::size_t CollabNetwork::index_of(ArtistId id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw ValidationError("unknown artist id in network: " + std::to_string(id));
  return it->second;
}

long long CollabNetwork::weight(ArtistId a, ArtistId b) const {
  auto ia = index_.find(a);
  auto ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) return 0;
  const auto& adj = adjacency_[ia->second];
  auto it = std::lower_bound(adj.begin(), adj.end(),
                             std::make_pair(ib->second, 0LL));
  if (it != adj.end() && it->first == ib->second) return it->second;
  return 0;
}

CollabNetwork CollabNetwork::induced_subgraph(const std::vector<ArtistId>& keep) const {
  std::vector<ArtistId> members;
  for (ArtistId id : keep)
    if (has_node(id)) members.push_back(id);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  CollabNetwork sub;
  sub.nodes_ = members;
  for (std::size_t i = 0; i < members.size(); ++i) sub.index_[members[i]] = i;
  sub.adjacency_.assign(members.size(), {});
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& [jb, w] : adjacency_[index_.at(members[i])]) {
      auto it = sub.index_.find(nodes_[jb]);
      if (it == sub.index_.end()) continue;
      sub.adjacency_[i].emplace_back(it->second, w);
      if (i < it->second) {
        ++sub.n_edges_;
        sub.total_weight_ += w;
      }
    }
    std::sort(sub.adjacency_[i].begin(), sub.adjacency_[i].end());
  }
  return sub;
}

CollabNetwork build_collab_network(const std::vector<CollabRow>& rows,
                                   const std::vector<ArtistId>& universe) {
  std::set<ArtistId> node_set(universe.begin(), universe.end());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].a == rows[r].b)
      throw ValidationError("self-loop collaboration (" + std::to_string(rows[r].a) +
                            "," + std::to_string(rows[r].b) + ") at row " +
                            std::to_string(r + 1));
    if (rows[r].a < 0 || rows[r].b < 0)
      throw ValidationError("negative artist id at row " + std::to_string(r + 1));
    node_set.insert(rows[r].a);
    node_set.insert(rows[r].b);
  }

  CollabNetwork net;
  net.nodes_.assign(node_set.begin(), node_set.end());
  for (std::size_t i = 0; i < net.nodes_.size(); ++i) net.index_[net.nodes_[i]] = i;

  std::map<std::pair<std::size_t, std::size_t>, long long> weights;
  for (const auto& row : rows) {
    std::size_t i = net.index_.at(row.a);
    std::size_t j = net.index_.at(row.b);
    if (i > j) std::swap(i, j);
    ++weights[{i, j}];
  }

  net.adjacency_.assign(net.nodes_.size(), {});
  for (const auto& [pair, w] : weights) {
    net.adjacency_[pair.first].emplace_back(pair.second, w);
    net.adjacency_[pair.second].emplace_back(pair.first, w);
    net.total_weight_ += w;
  }
  for (auto& adj : net.adjacency_) std::sort(adj.begin(), adj.end());
  net.n_edges_ = weights.size();
  return net;
}

DynamicNetwork::DynamicNetwork(std::vector<YearSnapshot> snapshots,
                               std::vector<ArtistId> universe,
                               std::map<ArtistId, int> entry_year)
    : snapshots_(std::move(snapshots)),
      universe_(std::move(universe)),
      entry_year_(std::move(entry_year)) {
  for (std::size_t i = 1; i < snapshots_.size(); ++i) {
    if (snapshots_[i].year != snapshots_[i - 1].year + 1)
      throw ValidationError("snapshot years must be strictly increasing and contiguous");
  }
}

const YearSnapshot& DynamicNetwork::snapshot_at(int year) const {
  if (snapshots_.empty() || year < first_year() || year > last_year())
    throw ValidationError("no snapshot for year " + std::to_string(year));
  return snapshots_[static_cast<std::size_t>(year - first_year())];
}

std::vector<ArtistId> DynamicNetwork::risk_set(int year) const {
  std::vector<ArtistId> out;
  for (const auto& [id, entry] : entry_year_)
    if (entry <= year) out.push_back(id);
  return out;
}

std::vector<CollabEvent> DynamicNetwork::to_events() const {
  std::vector<CollabEvent> events;
  for (const auto& snap : snapshots_)
    for (const auto& [a, b] : snap.edges) events.push_back({a, b, snap.year});
  return events;
}

DynamicNetwork build_dynamic_network(
    const std::vector<CollabEvent>& events, int start_year, int end_year,
    const std::vector<ArtistId>& universe,
    const std::vector<std::pair<ArtistId, int>>& extra_entries,
    ExclusionReport* report) {
  if (start_year > end_year)
    throw ValidationError("year range start exceeds end");

  ExclusionReport local;
  std::map<int, std::vector<const CollabEvent*>> by_year;
  for (std::size_t r = 0; r < events.size(); ++r) {
    const CollabEvent& ev = events[r];
    if (ev.a == ev.b)
      throw ValidationError("self-loop collaboration event at row " + std::to_string(r + 1));
    if (ev.year < start_year || ev.year > end_year) {
      ++local.dropped_by_year[ev.year];
      ++local.total_dropped;
      continue;
    }
    by_year[ev.year].push_back(&ev);
  }
  if (by_year.empty()) throw ValidationError("no collaboration events within year range");

  // Longest run of consecutive years that each contain an event; ties go
  // to the most recent run.
  std::vector<int> years;
  for (const auto& [y, _] : by_year) years.push_back(y);
  int best_start = years[0], best_len = 1;
  int run_start = years[0], run_len = 1;
  for (std::size_t i = 1; i < years.size(); ++i) {
    if (years[i] == years[i - 1] + 1) {
      ++run_len;
    } else {
      run_start = years[i];
      run_len = 1;
    }
    if (run_len >= best_len) {
      best_len = run_len;
      best_start = run_start;
    }
  }
  local.retained_first = best_start;
  local.retained_last = best_start + best_len - 1;

  // Entry years come from all in-range events (including ones excluded by
  // the contiguity rule) plus the caller-provided extras.
  std::map<ArtistId, int> entry;
  auto note_entry = [&entry](ArtistId id, int year) {
    auto [it, inserted] = entry.emplace(id, year);
    if (!inserted && year < it->second) it->second = year;
  };

  std::set<ArtistId> node_set(universe.begin(), universe.end());
  std::vector<YearSnapshot> snapshots;
  for (const auto& [year, evs] : by_year) {
    const bool retained = year >= local.retained_first && year <= local.retained_last;
    if (!retained) {
      local.dropped_by_year[year] += evs.size();
      local.total_dropped += evs.size();
    }
    for (const CollabEvent* ev : evs) {
      note_entry(ev->a, year);
      note_entry(ev->b, year);
      node_set.insert(ev->a);
      node_set.insert(ev->b);
    }
  }
  for (int year = local.retained_first; year <= local.retained_last; ++year) {
    YearSnapshot snap;
    snap.year = year;
    auto it = by_year.find(year);
    if (it != by_year.end()) {
      for (const CollabEvent* ev : it->second) {
        auto [lo, hi] = std::minmax(ev->a, ev->b);
        snap.edges.insert({lo, hi});
      }
    }
    snapshots.push_back(std::move(snap));
  }

  for (const auto& [id, year] : extra_entries) {
    note_entry(id, year);
    node_set.insert(id);
  }

  if (report) *report = local;
  return DynamicNetwork(std::move(snapshots),
                        std::vector<ArtistId>(node_set.begin(), node_set.end()),
                        std::move(entry));
}

Geodesics::Geodesics(std::vector<ArtistId> nodes, std::vector<int> dist)
    : nodes_(std::move(nodes)), dist_(std::move(dist)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i]] = i;
}

std::optional<int> Geodesics::distance(ArtistId a, ArtistId b) const {
  auto ia = index_.find(a);
  auto ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end())
    throw ValidationError("geodesic query for node outside the computed set");
  const int d = dist_[ia->second * nodes_.size() + ib->second];
  if (d < 0) return std::nullopt;
  return d;
}

Geodesics geodesic_distances(const YearSnapshot& snapshot,
                             const std::vector<ArtistId>& nodes) {
  std::vector<ArtistId> sorted(nodes);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t n = sorted.size();

  std::map<ArtistId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[sorted[i]] = i;

  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : snapshot.edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) continue;
    adj[ia->second].push_back(ib->second);
    adj[ib->second].push_back(ia->second);
  }

  std::vector<int> dist(n * n, -1);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    int* row = dist.data() + s * n;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[v]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return Geodesics(std::move(sorted), std::move(dist));
}

}  // namespace sampnet::net
