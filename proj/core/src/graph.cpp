#include "kpack/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "kpack/diagnostics.hpp"

namespace kpack {

std::string_view to_string(WeightClass c) {
  switch (c) {
    case WeightClass::general: return "general";
    case WeightClass::metric: return "metric";
    case WeightClass::zero_one: return "zero_one";
    case WeightClass::one_two: return "one_two";
    case WeightClass::unknown: return "unknown";
  }
  return "unknown";
}

WeightClass parse_weight_class(std::string_view text) {
  if (text == "general") return WeightClass::general;
  if (text == "metric") return WeightClass::metric;
  if (text == "zero_one" || text == "01") return WeightClass::zero_one;
  if (text == "one_two" || text == "12") return WeightClass::one_two;
  if (text == "unknown") return WeightClass::unknown;
  throw Error("unknown weight class '" + std::string(text) + "'");
}

std::string_view to_string(PackingKind kind) {
  return kind == PackingKind::cycle ? "cycle" : "path";
}

WeightedCompleteGraph::WeightedCompleteGraph(int n, WeightClass tag, Weight denominator)
    : n_(n), tag_(tag), denom_(denominator) {
  if (n < 1) throw Error("graph needs at least one vertex");
  if (denominator < 1) throw Error("denominator must be positive");
  w_.assign(static_cast<std::size_t>(n) * n, 0);
}

void WeightedCompleteGraph::set(Vertex u, Vertex v, Weight w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("vertex out of range");
  if (u == v) throw Error("self-loops carry no weight");
  if (w < 0) throw Error("negative weight");
  w_[static_cast<std::size_t>(u) * n_ + v] = w;
  w_[static_cast<std::size_t>(v) * n_ + u] = w;
}

Weight WeightedCompleteGraph::total_weight() const {
  Weight s = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) s += (*this)(u, v);
  return s;
}

Weight WeightedCompleteGraph::max_weight() const {
  return w_.empty() ? 0 : *std::max_element(w_.begin(), w_.end());
}

Weight path_weight(const WeightedCompleteGraph& g, std::span<const Vertex> seq) {
  Weight s = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) s += g(seq[i - 1], seq[i]);
  return s;
}

Weight cycle_weight(const WeightedCompleteGraph& g, std::span<const Vertex> seq) {
  if (seq.size() < 3) return path_weight(g, seq);
  return path_weight(g, seq) + g(seq.back(), seq.front());
}

Weight matching_weight(const WeightedCompleteGraph& g, const Matching& m) {
  Weight s = 0;
  for (const Edge& e : m.edges) s += g(e.u, e.v);
  return s;
}

Weight tour_weight(const WeightedCompleteGraph& g, const HamiltonianCycle& h) {
  return cycle_weight(g, h.order);
}

Weight tilde_weight(const WeightedCompleteGraph& g, std::span<const Vertex> path) {
  if (path.size() % 2 != 0) throw Error("tilde weight needs an even number of vertices");
  Weight s = 0;
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) s += g(path[i], path[i + 1]);
  return s;
}

std::optional<std::string> validate_packing(const WeightedCompleteGraph& g,
                                            const std::vector<std::vector<Vertex>>& blocks,
                                            int k, PackingKind kind) {
  const int n = g.size();
  if (k < 2 || (kind == PackingKind::cycle && k < 3))
    return "invalid block length " + std::to_string(k);
  if (n % k != 0) return "n=" + std::to_string(n) + " not divisible by k=" + std::to_string(k);
  std::vector<char> seen(n, 0);
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != k)
      return "wrong length: block of " + std::to_string(b.size()) + " vertices, expected " +
             std::to_string(k);
    for (Vertex v : b) {
      if (v < 0 || v >= n) return "vertex out of range: " + std::to_string(v);
      if (seen[v]) return "duplicated vertex " + std::to_string(v);
      seen[v] = 1;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) return "missing vertex " + std::to_string(v);
  if (static_cast<int>(blocks.size()) != n / k) return "wrong number of blocks";
  return std::nullopt;
}

Weight packing_weight(const WeightedCompleteGraph& g,
                      const std::vector<std::vector<Vertex>>& blocks, int k,
                      PackingKind kind) {
  if (auto bad = validate_packing(g, blocks, k, kind)) throw Error("invalid packing: " + *bad);
  Weight s = 0;
  for (const auto& b : blocks) s += block_weight(g, b, kind);
  return s;
}

std::optional<std::string> validate_matching(const WeightedCompleteGraph& g,
                                             const Matching& m) {
  std::vector<char> seen(g.size(), 0);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v >= g.size() || e.u == e.v) return "invalid edge";
    if (seen[e.u] || seen[e.v]) return "edges share a vertex";
    seen[e.u] = seen[e.v] = 1;
  }
  return std::nullopt;
}

std::optional<std::string> validate_tour(const WeightedCompleteGraph& g,
                                         const HamiltonianCycle& h) {
  if (static_cast<int>(h.order.size()) != g.size()) return "tour does not visit every vertex";
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : h.order) {
    if (v < 0 || v >= g.size()) return "vertex out of range";
    if (seen[v]) return "duplicated vertex " + std::to_string(v);
    seen[v] = 1;
  }
  return std::nullopt;
}

MetricCheck is_metric(const WeightedCompleteGraph& g) {
  const int n = g.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        if (g(u, v) > g(u, x) + g(x, v)) return {false, std::array<Vertex, 3>{u, x, v}};
      }
  return {};
}

namespace {

bool all_weights_in(const WeightedCompleteGraph& g, Weight lo, Weight hi) {
  // Class membership is about real weights, so compare against scaled bounds.
  const Weight d = g.denominator();
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      const Weight w = g(u, v);
      if (w != lo * d && w != hi * d) return false;
    }
  return true;
}

}  // namespace

bool satisfies_class(const WeightedCompleteGraph& g, WeightClass c) {
  switch (c) {
    case WeightClass::general:
    case WeightClass::unknown: return true;
    case WeightClass::metric: return is_metric(g).metric;
    case WeightClass::zero_one: return all_weights_in(g, 0, 1);
    case WeightClass::one_two: return all_weights_in(g, 1, 2);
  }
  return false;
}

WeightClass detect_weight_class(const WeightedCompleteGraph& g) {
  if (satisfies_class(g, WeightClass::one_two)) return WeightClass::one_two;
  if (satisfies_class(g, WeightClass::zero_one)) return WeightClass::zero_one;
  if (satisfies_class(g, WeightClass::metric)) return WeightClass::metric;
  return WeightClass::general;
}

// ---------------------------------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

template <typename Int>
Int parse_int(std::string_view tok, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw Error(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
  return value;
}

}  // namespace

WeightedCompleteGraph load_instance(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    for (std::string tok; ls >> tok;) header.push_back(tok);
  }
  if (header.size() < 4 || header.size() > 5 || header[0] != "packgraph" || header[1] != "1")
    throw Error("malformed header: expected 'packgraph 1 n=<int> class=<tag> [denom=<int>]'");

  int n = -1;
  Weight denom = 1;
  WeightClass declared = WeightClass::unknown;
  bool have_class = false;
  for (std::size_t i = 2; i < header.size(); ++i) {
    const std::string& tok = header[i];
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("malformed header field '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string_view value = std::string_view(tok).substr(eq + 1);
    if (key == "n") {
      n = parse_int<int>(value, "vertex count");
    } else if (key == "class") {
      declared = parse_weight_class(value);
      have_class = true;
    } else if (key == "denom") {
      denom = parse_int<Weight>(value, "denominator");
    } else {
      throw Error("malformed header: unknown field '" + key + "'");
    }
  }
  if (n < 1 || !have_class) throw Error("malformed header: missing n or class");
  if (denom < 1) throw Error("malformed header: denominator must be positive");

  std::vector<Weight> values;
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  values.reserve(expected);
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    for (std::string tok; ls >> tok;) {
      const Weight w = parse_int<Weight>(tok, "weight");
      if (w < 0) throw Error("negative weight " + tok);
      values.push_back(w);
    }
  }
  if (values.size() != expected)
    throw Error("wrong entry count: expected " + std::to_string(expected) + " weights, got " +
                std::to_string(values.size()));

  WeightedCompleteGraph g(n, declared, denom);
  std::size_t idx = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set(u, v, values[idx++]);

  if (!satisfies_class(g, declared)) {
    std::string msg = "declared class=" + std::string(to_string(declared)) +
                      " fails validation; downgrading to unknown";
    if (declared == WeightClass::metric) {
      const auto check = is_metric(g);
      const auto [a, x, b] = *check.violation;
      msg += " (metricity violated: w(" + std::to_string(a) + "," + std::to_string(b) + ")=" +
             std::to_string(g(a, b)) + " > w(" + std::to_string(a) + "," + std::to_string(x) +
             ")+w(" + std::to_string(x) + "," + std::to_string(b) + ")=" +
             std::to_string(g(a, x) + g(x, b)) + ")";
    }
    warn(msg);
    g.set_class_tag(WeightClass::unknown);
  }
  return g;
}

WeightedCompleteGraph load_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_instance(in);
}

WeightedCompleteGraph load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  return load_instance(in);
}

void save_instance(std::ostream& out, const WeightedCompleteGraph& g) {
  out << "packgraph 1 n=" << g.size() << " class=" << to_string(g.class_tag());
  if (g.denominator() != 1) out << " denom=" << g.denominator();
  out << '\n';
  for (Vertex u = 0; u + 1 < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (v > u + 1) out << ' ';
      out << g(u, v);
    }
    out << '\n';
  }
}

std::string save_instance_text(const WeightedCompleteGraph& g) {
  std::ostringstream out;
  save_instance(out, g);
  return out.str();
}

void save_instance_file(const std::string& path, const WeightedCompleteGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file '" + path + "'");
  save_instance(out, g);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::uniform: return "uniform";
    case Distribution::euclidean: return "euclidean";
    case Distribution::closure: return "closure";
  }
  return "uniform";
}

Distribution parse_distribution(std::string_view text) {
  if (text == "uniform") return Distribution::uniform;
  if (text == "euclidean") return Distribution::euclidean;
  if (text == "closure") return Distribution::closure;
  throw Error("unknown distribution '" + std::string(text) + "'");
}

namespace {

// Floyd-Warshall; shortest-path distances always satisfy the triangle inequality.
void metric_closure(std::vector<Weight>& d, int n) {
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const Weight via = d[u * n + x] + d[x * n + v];
        if (via < d[u * n + v]) d[u * n + v] = via;
      }
}

}  // namespace

WeightedCompleteGraph generate_instance(const InstanceSpec& spec) {
  if (spec.n < 3) throw Error("instance generation needs n >= 3");
  const bool metric = spec.weight_class == WeightClass::metric;
  if (spec.weight_class == WeightClass::unknown)
    throw Error("cannot generate instances of class unknown");
  if (metric != (spec.distribution != Distribution::uniform))
    throw Error("unsupported class/distribution combination: " +
                std::string(to_string(spec.weight_class)) + "/" +
                std::string(to_string(spec.distribution)));
  if (spec.max_weight < 1) throw Error("max_weight must be positive");

  const int n = spec.n;
  std::mt19937_64 rng(spec.seed);
  WeightedCompleteGraph g(n, spec.weight_class);

  auto fill_uniform = [&](Weight lo, Weight hi) {
    std::uniform_int_distribution<Weight> dist(lo, hi);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) g.set(u, v, dist(rng));
  };

  switch (spec.weight_class) {
    case WeightClass::general: fill_uniform(0, spec.max_weight); break;
    case WeightClass::zero_one: fill_uniform(0, 1); break;
    case WeightClass::one_two: fill_uniform(1, 2); break;
    case WeightClass::metric: {
      std::vector<Weight> d(static_cast<std::size_t>(n) * n, 0);
      if (spec.distribution == Distribution::euclidean) {
        std::uniform_real_distribution<double> coord(0.0, 1.0);
        std::vector<std::pair<double, double>> pts(n);
        for (auto& p : pts) {
          p.first = coord(rng);
          p.second = coord(rng);
        }
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) {
            const double dx = pts[u].first - pts[v].first;
            const double dy = pts[u].second - pts[v].second;
            d[u * n + v] = d[v * n + u] = std::llround(1000.0 * std::hypot(dx, dy));
          }
      } else {
        std::uniform_int_distribution<Weight> dist(1, spec.max_weight);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) d[u * n + v] = d[v * n + u] = dist(rng);
      }
      metric_closure(d, n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set(u, v, d[u * n + v]);
      break;
    }
    case WeightClass::unknown: break;
  }
  return g;
}

}  // namespace kpack
