#pragma once

// Complete weighted graphs, packings, and the packgraph v1 instance format.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace kpack {

using Vertex = int;
/// Weights are integer numerators over a per-graph denominator.
using Weight = std::int64_t;
using Ratio = boost::rational<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WeightClass { general, metric, zero_one, one_two, unknown };

std::string_view to_string(WeightClass c);
WeightClass parse_weight_class(std::string_view text);

class WeightedCompleteGraph {
 public:
  WeightedCompleteGraph() = default;
  /// All weights start at zero.
  explicit WeightedCompleteGraph(int n, WeightClass tag = WeightClass::general,
                                 Weight denominator = 1);

  int size() const { return n_; }
  Weight operator()(Vertex u, Vertex v) const {
    return w_[static_cast<std::size_t>(u) * n_ + v];
  }
  void set(Vertex u, Vertex v, Weight w);

  WeightClass class_tag() const { return tag_; }
  void set_class_tag(WeightClass tag) { tag_ = tag; }
  Weight denominator() const { return denom_; }

  Weight total_weight() const;
  Weight max_weight() const;

  friend bool operator==(const WeightedCompleteGraph&,
                         const WeightedCompleteGraph&) = default;

 private:
  int n_ = 0;
  WeightClass tag_ = WeightClass::general;
  Weight denom_ = 1;
  std::vector<Weight> w_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

struct HamiltonianCycle {
  std::vector<Vertex> order;
};

enum class PackingKind { cycle, path };

std::string_view to_string(PackingKind kind);

template <PackingKind Kind>
struct Packing {
  static constexpr PackingKind kind = Kind;
  int k = 0;
  std::vector<std::vector<Vertex>> blocks;
};

using KCyclePacking = Packing<PackingKind::cycle>;
using KPathPacking = Packing<PackingKind::path>;

// ---------------------------------------------------------------------------
// Weights of vertex sequences.

Weight path_weight(const WeightedCompleteGraph& g, std::span<const Vertex> seq);
/// Includes the closing edge back to the first vertex.
Weight cycle_weight(const WeightedCompleteGraph& g, std::span<const Vertex> seq);
Weight matching_weight(const WeightedCompleteGraph& g, const Matching& m);
Weight tour_weight(const WeightedCompleteGraph& g, const HamiltonianCycle& h);

/// Sum of w(v1,v2) + w(v3,v4) + ... over an even-length path.
Weight tilde_weight(const WeightedCompleteGraph& g, std::span<const Vertex> path);

inline Weight block_weight(const WeightedCompleteGraph& g, std::span<const Vertex> seq,
                           PackingKind kind) {
  return kind == PackingKind::cycle ? cycle_weight(g, seq) : path_weight(g, seq);
}

// ---------------------------------------------------------------------------
// Validation.

/// First violation found, or nullopt when the blocks form a valid k-packing.
std::optional<std::string> validate_packing(const WeightedCompleteGraph& g,
                                            const std::vector<std::vector<Vertex>>& blocks,
                                            int k, PackingKind kind);

template <PackingKind Kind>
std::optional<std::string> validate_packing(const WeightedCompleteGraph& g,
                                            const Packing<Kind>& p) {
  return validate_packing(g, p.blocks, p.k, Kind);
}

/// Throws Error on an invalid packing.
Weight packing_weight(const WeightedCompleteGraph& g,
                      const std::vector<std::vector<Vertex>>& blocks, int k,
                      PackingKind kind);

template <PackingKind Kind>
Weight packing_weight(const WeightedCompleteGraph& g, const Packing<Kind>& p) {
  return packing_weight(g, p.blocks, p.k, Kind);
}

std::optional<std::string> validate_matching(const WeightedCompleteGraph& g,
                                             const Matching& m);
std::optional<std::string> validate_tour(const WeightedCompleteGraph& g,
                                         const HamiltonianCycle& h);

// ---------------------------------------------------------------------------
// Weight classes.

struct MetricCheck {
  bool metric = true;
  /// (u, x, v) with w(u,v) > w(u,x) + w(x,v).
  std::optional<std::array<Vertex, 3>> violation;
  explicit operator bool() const { return metric; }
};

MetricCheck is_metric(const WeightedCompleteGraph& g);
bool satisfies_class(const WeightedCompleteGraph& g, WeightClass c);
/// Most specific class the weights satisfy: one_two, zero_one, metric, general.
WeightClass detect_weight_class(const WeightedCompleteGraph& g);

// ---------------------------------------------------------------------------
// packgraph v1 I/O.

WeightedCompleteGraph load_instance(std::istream& in);
WeightedCompleteGraph load_instance_text(std::string_view text);
WeightedCompleteGraph load_instance_file(const std::string& path);
void save_instance(std::ostream& out, const WeightedCompleteGraph& g);
std::string save_instance_text(const WeightedCompleteGraph& g);
void save_instance_file(const std::string& path, const WeightedCompleteGraph& g);

// ---------------------------------------------------------------------------
// Instance generation.

enum class Distribution { uniform, euclidean, closure };

std::string_view to_string(Distribution d);
Distribution parse_distribution(std::string_view text);

struct InstanceSpec {
  int n = 0;
  WeightClass weight_class = WeightClass::general;
  Distribution distribution = Distribution::uniform;
  std::uint64_t seed = 0;
  /// Upper end of uniform weights (general) and of raw weights before closure.
  Weight max_weight = 100;
};

/// Deterministic for a fixed spec; the result always passes its class validator.
WeightedCompleteGraph generate_instance(const InstanceSpec& spec);

}  // namespace kpack
