#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperspec {

// Edge of a k-uniform hypergraph: k distinct 1-based vertex ids, kept sorted
// ascending once canonicalized.
using Edge = std::vector<int>;

// Immutable simple k-uniform hypergraph on vertices 1..n. Edges are stored
// canonically: each edge sorted ascending, the edge list sorted
// lexicographically. Values are safe to share across threads.
class Hypergraph {
 public:
  // Public construction contract: uniformity must be at least 2. The
  // constructor itself admits uniformity 1 as well, which is needed for the
  // 1-uniform bases that blow up into 2-uniform stars.
  static Hypergraph build(int k, int n, std::vector<Edge> edges);

  Hypergraph(int k, int n, std::vector<Edge> edges);

  int uniformity() const { return k_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Hypergraph&) const = default;

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
};

// Per-vertex degrees plus the nonincreasing sorted sequence d1 >= ... >= dn.
struct DegreeProfile {
  std::vector<int> degree;  // degree[i - 1] is the degree of vertex i
  std::vector<int> sorted;  // nonincreasing

  int of(int vertex) const { return degree[static_cast<std::size_t>(vertex) - 1]; }
  int max() const { return sorted.empty() ? 0 : sorted.front(); }
  int second() const { return sorted.size() < 2 ? 0 : sorted[1]; }
  int min() const { return sorted.empty() ? 0 : sorted.back(); }
};

DegreeProfile degrees(const Hypergraph& h);

// Number of edges containing both i and j. Requires i != j.
int codegree(const Hypergraph& h, int i, int j);

// True iff one component covers all n vertices. Isolated vertices count as
// their own components, so they make a multi-vertex hypergraph disconnected.
bool is_connected(const Hypergraph& h);

// One connected piece with vertex ids remapped to 1..n_c.
// original_vertex[v - 1] is the id the remapped vertex v had in the parent.
struct Component {
  Hypergraph graph;
  std::vector<int> original_vertex;
};

// Vertex-disjoint induced sub-hypergraphs whose edge sets partition the edge
// set; isolated vertices become single-vertex edgeless components. Ordered by
// smallest original vertex id.
std::vector<Component> components(const Hypergraph& h);

// The common degree d when every vertex has degree d, otherwise nullopt.
std::optional<int> is_regular(const Hypergraph& h);

struct BlowupInfo {
  int apex;
  int base_degree;
};

// Detects whether some vertex v lies in every edge and stripping v leaves a
// (k-1)-uniform hypergraph that is d-regular (d >= 1) on the remaining
// vertices. Smallest qualifying apex wins. Returns nullopt for edgeless input.
std::optional<BlowupInfo> detect_blowup(const Hypergraph& h);

// Adds a fresh vertex to every edge of `base`, raising the uniformity by one.
// Requires at least one edge; the base may have uniformity >= 1.
Hypergraph blow_up(const Hypergraph& base);

// Degree-weighted mean over the edges at `vertex`: the sum over incident
// edges of the product of the other members' degrees, divided by
// d_vertex^(k-1). Generalizes the average degree of the neighbours of a
// vertex in an ordinary graph. Requires degree >= 1.
double m_value(const Hypergraph& h, int vertex);

// Generators. All are pure functions of their arguments; identical seeds give
// bit-identical results.

// t edges, each sharing the centre vertex 1 and otherwise disjoint:
// n = t(k-1)+1, degree sequence (t, 1, ..., 1).
Hypergraph gen_hyperstar(int t, int k);

// Every k-subset of 1..n as an edge; C(n-1, k-1)-regular.
Hypergraph gen_complete(int n, int k);

// t disjoint blocks, each a single edge on r fresh vertices (1-regular).
Hypergraph gen_disjoint_blocks(int t, int r);

// m distinct k-sets drawn uniformly without replacement.
Hypergraph gen_random(int n, int m, int k, std::uint64_t seed);

struct RegularSamplerOptions {
  int restarts = 100;
  // Repair swap budget per restart is swap_budget_factor * n * d.
  int swap_budget_factor = 10;
};

// Best-effort d-regular sampler: shuffled degree slots chunked into edges,
// conflicts fixed by random slot swaps, restarting on a stuck walk. Requires
// k | n*d; throws when the retry budget is exhausted.
Hypergraph gen_random_regular(int n, int d, int k, std::uint64_t seed,
                              const RegularSamplerOptions& opts = {});

// .uhg text format: optional '#' comment lines, a "k n m" header line, then m
// lines of k space-separated 1-based vertex ids. Writing always emits the
// canonical form with a trailing newline; the parser accepts unsorted edges.
Hypergraph read_uhg(std::istream& in);
Hypergraph read_uhg(const std::string& text);
Hypergraph read_uhg_file(const std::string& path);
std::string write_uhg(const Hypergraph& h);
void write_uhg_file(const Hypergraph& h, const std::string& path);

// Exact binomial coefficient, saturating at a large cap to stay overflow
// safe; used for generator feasibility checks.
std::uint64_t binomial(int n, int k);

}  // namespace hyperspec
