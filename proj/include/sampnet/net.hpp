#ifndef SAMPNET_NET_HPP
#define SAMPNET_NET_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sampnet/types.hpp"

namespace sampnet::net {

struct CollabRow {
  ArtistId a;
  ArtistId b;
};

struct CollabEvent {
  ArtistId a;
  ArtistId b;
  int year;
};

// Undirected weighted collaboration network. Weight of an edge is the
// number of pairwise collaborations. Immutable after construction.
class CollabNetwork {
 public:
  CollabNetwork() = default;

  const std::vector<ArtistId>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool has_node(ArtistId id) const;
  // Dense index of a node; throws ValidationError if absent.
  std::size_t index_of(ArtistId id) const;

  // Weight of the (a, b) edge, 0 if absent. Symmetric.
  long long weight(ArtistId a, ArtistId b) const;

  // Neighbors of the node at dense index `idx` as (index, weight) pairs,
  // sorted by neighbor index.
  const std::vector<std::pair<std::size_t, long long>>& neighbors(std::size_t idx) const {
    return adjacency_[idx];
  }

  std::size_t edge_count() const { return n_edges_; }
  long long total_weight() const { return total_weight_; }

  // Subgraph induced on `keep` (unknown ids ignored). Isolated members of
  // `keep` stay as isolated nodes.
  CollabNetwork induced_subgraph(const std::vector<ArtistId>& keep) const;

  friend CollabNetwork build_collab_network(const std::vector<CollabRow>&,
                                            const std::vector<ArtistId>&);

 private:
  std::vector<ArtistId> nodes_;  // sorted ascending
  std::map<ArtistId, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, long long>>> adjacency_;
  std::size_t n_edges_ = 0;
  long long total_weight_ = 0;
};

// Builds a network from one row per collaboration occurrence; repeated
// pairs accumulate weight. `universe` adds declared nodes so that artists
// with no collaborations remain as isolates. Self-pairs are rejected with
// an error naming the offending row (1-based).
CollabNetwork build_collab_network(const std::vector<CollabRow>& rows,
                                   const std::vector<ArtistId>& universe = {});

// One calendar year of the dynamic network; unweighted edges stored as
// canonical (min, max) pairs.
struct YearSnapshot {
  int year = 0;
  std::set<std::pair<ArtistId, ArtistId>> edges;

  bool has_edge(ArtistId a, ArtistId b) const {
    return edges.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
  }
  bool operator==(const YearSnapshot&) const = default;
};

struct ExclusionReport {
  std::map<int, std::size_t> dropped_by_year;
  std::size_t total_dropped = 0;
  int retained_first = 0;
  int retained_last = 0;
};

// Yearly snapshots over a contiguous run of years, plus first-activity
// years used as risk-set entry times downstream.
class DynamicNetwork {
 public:
  DynamicNetwork() = default;
  DynamicNetwork(std::vector<YearSnapshot> snapshots, std::vector<ArtistId> universe,
                 std::map<ArtistId, int> entry_year);

  const std::vector<YearSnapshot>& snapshots() const { return snapshots_; }
  const std::vector<ArtistId>& node_universe() const { return universe_; }
  const std::map<ArtistId, int>& entry_years() const { return entry_year_; }

  int first_year() const { return snapshots_.front().year; }
  int last_year() const { return snapshots_.back().year; }
  const YearSnapshot& snapshot_at(int year) const;

  // Nodes with entry_year <= year, sorted ascending.
  std::vector<ArtistId> risk_set(int year) const;

  // Emits one (a, b, year) row per edge per snapshot year.
  std::vector<CollabEvent> to_events() const;

  bool operator==(const DynamicNetwork&) const = default;

 private:
  std::vector<YearSnapshot> snapshots_;
  std::vector<ArtistId> universe_;
  std::map<ArtistId, int> entry_year_;
};

// Builds the dynamic network from dated collaboration events. Events
// outside [start_year, end_year] are dropped; within it, the retained
// span is the longest run of consecutive years that each contain at least
// one event (ties broken toward the most recent run) and events outside
// that run are excluded. Every drop is counted in `report`. `extra_entries`
// contributes additional (artist, year) first-activity records, e.g. from
// sampling events.
DynamicNetwork build_dynamic_network(
    const std::vector<CollabEvent>& events, int start_year, int end_year,
    const std::vector<ArtistId>& universe = {},
    const std::vector<std::pair<ArtistId, int>>& extra_entries = {},
    ExclusionReport* report = nullptr);

// All-pairs hop distances of a snapshot over the given node set.
class Geodesics {
 public:
  Geodesics(std::vector<ArtistId> nodes, std::vector<int> dist);

  // nullopt marks an unreachable pair.
  std::optional<int> distance(ArtistId a, ArtistId b) const;

  const std::vector<ArtistId>& nodes() const { return nodes_; }
  // Row-major matrix with -1 for unreachable; for histogram consumers.
  const std::vector<int>& raw() const { return dist_; }

 private:
  std::vector<ArtistId> nodes_;
  std::map<ArtistId, std::size_t> index_;
  std::vector<int> dist_;
};

// Breadth-first shortest path lengths between all pairs of `nodes`.
// Edges with an endpoint outside `nodes` are ignored.
Geodesics geodesic_distances(const YearSnapshot& snapshot,
                             const std::vector<ArtistId>& nodes);

}  // namespace sampnet::net

#endif  // SAMPNET_NET_HPP
