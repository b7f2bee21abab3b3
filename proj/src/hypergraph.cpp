#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperspec/detail/products.hpp"
#include "hyperspec/detail/rng.hpp"

namespace hyperspec {

namespace {

std::vector<Edge> canonicalize(int k, int n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != k) {
      throw std::invalid_argument("edge has " + std::to_string(e.size()) +
                                  " vertices, expected " + std::to_string(k));
    }
    std::sort(e.begin(), e.end());
    for (std::size_t p = 0; p < e.size(); ++p) {
      if (e[p] < 1 || e[p] > n) {
        throw std::invalid_argument("vertex " + std::to_string(e[p]) +
                                    " out of range 1.." + std::to_string(n));
      }
      if (p > 0 && e[p] == e[p - 1]) {
        throw std::invalid_argument("repeated vertex " + std::to_string(e[p]) +
                                    " in edge");
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  return edges;
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(canonicalize(k, n, std::move(edges))) {
  if (k_ < 1) throw std::invalid_argument("uniformity must be at least 1");
  if (n_ < 1) throw std::invalid_argument("vertex count must be at least 1");
}

Hypergraph Hypergraph::build(int k, int n, std::vector<Edge> edges) {
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
  return Hypergraph(k, n, std::move(edges));
}

DegreeProfile degrees(const Hypergraph& h) {
  DegreeProfile profile;
  profile.degree.assign(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const auto& e : h.edges()) {
    for (int v : e) ++profile.degree[static_cast<std::size_t>(v) - 1];
  }
  profile.sorted = profile.degree;
  std::sort(profile.sorted.begin(), profile.sorted.end(), std::greater<>());
  return profile;
}

int codegree(const Hypergraph& h, int i, int j) {
  if (i == j) throw std::invalid_argument("codegree requires distinct vertices");
  if (i < 1 || i > h.vertex_count() || j < 1 || j > h.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  int count = 0;
  for (const auto& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), i) &&
        std::binary_search(e.begin(), e.end(), j)) {
      ++count;
    }
  }
  return count;
}

namespace {

// Union-find over vertices, edges merging their members.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

DisjointSets vertex_components(const Hypergraph& h) {
  DisjointSets sets(h.vertex_count());
  for (const auto& e : h.edges()) {
    for (std::size_t p = 1; p < e.size(); ++p) sets.unite(e[0] - 1, e[p] - 1);
  }
  return sets;
}

}  // namespace

bool is_connected(const Hypergraph& h) {
  auto sets = vertex_components(h);
  const int root = sets.find(0);
  for (int v = 1; v < h.vertex_count(); ++v) {
    if (sets.find(v) != root) return false;
  }
  return true;
}

std::vector<Component> components(const Hypergraph& h) {
  auto sets = vertex_components(h);
  // Group vertices by root, ordered by smallest member.
  std::vector<std::vector<int>> groups;  // 1-based vertex ids
  std::vector<int> group_of(static_cast<std::size_t>(h.vertex_count()), -1);
  for (int v = 1; v <= h.vertex_count(); ++v) {
    const int root = sets.find(v - 1);
    if (group_of[static_cast<std::size_t>(root)] < 0) {
      group_of[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(root)])].push_back(v);
  }

  std::vector<int> new_id(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const auto& group : groups) {
    for (std::size_t p = 0; p < group.size(); ++p) {
      new_id[static_cast<std::size_t>(group[p]) - 1] = static_cast<int>(p) + 1;
    }
  }

  std::vector<std::vector<Edge>> edges_of(groups.size());
  for (const auto& e : h.edges()) {
    const int g = group_of[static_cast<std::size_t>(sets.find(e[0] - 1))];
    Edge remapped;
    remapped.reserve(e.size());
    for (int v : e) remapped.push_back(new_id[static_cast<std::size_t>(v) - 1]);
    edges_of[static_cast<std::size_t>(g)].push_back(std::move(remapped));
  }

  std::vector<Component> out;
  out.reserve(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out.push_back(Component{
        Hypergraph(h.uniformity(), static_cast<int>(groups[g].size()),
                   std::move(edges_of[g])),
        groups[g]});
  }
  return out;
}

std::optional<int> is_regular(const Hypergraph& h) {
  const auto profile = degrees(h);
  if (profile.max() != profile.min()) return std::nullopt;
  return profile.max();
}

std::optional<BlowupInfo> detect_blowup(const Hypergraph& h) {
  if (h.edge_count() == 0 || h.uniformity() < 2 || h.vertex_count() < 2) {
    return std::nullopt;
  }
  // Vertices present in every edge, in index order.
  Edge universal = h.edges().front();
  for (const auto& e : h.edges()) {
    Edge kept;
    std::set_intersection(universal.begin(), universal.end(), e.begin(), e.end(),
                          std::back_inserter(kept));
    universal = std::move(kept);
    if (universal.empty()) return std::nullopt;
  }

  const auto profile = degrees(h);
  for (int apex : universal) {
    // Stripping the apex leaves each remaining vertex's degree unchanged, so
    // the base is d-regular covering all other vertices iff their degrees in
    // h are all equal and at least 1.
    int d = -1;
    bool ok = true;
    for (int v = 1; v <= h.vertex_count() && ok; ++v) {
      if (v == apex) continue;
      const int dv = profile.of(v);
      if (dv < 1) ok = false;
      else if (d < 0) d = dv;
      else if (dv != d) ok = false;
    }
    if (ok && d >= 1) return BlowupInfo{apex, d};
  }
  return std::nullopt;
}

Hypergraph blow_up(const Hypergraph& base) {
  if (base.edge_count() == 0) {
    throw std::invalid_argument("blow_up requires at least one edge");
  }
  const int apex = base.vertex_count() + 1;
  std::vector<Edge> edges = base.edges();
  for (auto& e : edges) e.push_back(apex);
  return Hypergraph(base.uniformity() + 1, apex, std::move(edges));
}

double m_value(const Hypergraph& h, int vertex) {
  if (vertex < 1 || vertex > h.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  const auto profile = degrees(h);
  const int d = profile.of(vertex);
  if (d < 1) {
    throw std::invalid_argument("m-value undefined for degree-0 vertex " +
                                std::to_string(vertex));
  }
  std::vector<double> weights(profile.degree.begin(), profile.degree.end());
  std::vector<double> partial(static_cast<std::size_t>(h.uniformity()));
  double sum = 0.0;
  for (const auto& e : h.edges()) {
    if (!std::binary_search(e.begin(), e.end(), vertex)) continue;
    detail::leave_one_out_products(e, weights, partial);
    for (std::size_t p = 0; p < e.size(); ++p) {
      if (e[p] == vertex) sum += partial[p];
    }
  }
  return sum / std::pow(static_cast<double>(d), h.uniformity() - 1);
}

Hypergraph gen_hyperstar(int t, int k) {
  if (t < 1) throw std::invalid_argument("hyperstar needs at least one edge");
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
  const int n = t * (k - 1) + 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(t));
  int next = 2;
  for (int j = 0; j < t; ++j) {
    Edge e{1};
    for (int p = 1; p < k; ++p) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, n, std::move(edges));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t result = 1;
  for (int p = 1; p <= k; ++p) {
    if (result > cap / static_cast<std::uint64_t>(n - k + p)) return cap;
    result = result * static_cast<std::uint64_t>(n - k + p) /
             static_cast<std::uint64_t>(p);
  }
  return result;
}

Hypergraph gen_complete(int n, int k) {
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (n < k) throw std::invalid_argument("complete hypergraph needs n >= k");
  if (binomial(n, k) > 2'000'000) {
    throw std::invalid_argument("complete hypergraph too large");
  }
  std::vector<Edge> edges;
  Edge current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    edges.push_back(current);
    int p = k - 1;
    while (p >= 0 && current[static_cast<std::size_t>(p)] == n - (k - 1 - p)) --p;
    if (p < 0) break;
    ++current[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) {
      current[static_cast<std::size_t>(q)] = current[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph gen_disjoint_blocks(int t, int r) {
  if (t < 1) throw std::invalid_argument("need at least one block");
  if (r < 1) throw std::invalid_argument("block size must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(t));
  for (int b = 0; b < t; ++b) {
    Edge e(static_cast<std::size_t>(r));
    std::iota(e.begin(), e.end(), b * r + 1);
    edges.push_back(std::move(e));
  }
  return Hypergraph(r, t * r, std::move(edges));
}

namespace {

Edge draw_k_set(std::mt19937_64& rng, int n, int k) {
  // Partial Fisher-Yates over 1..n.
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  Edge e;
  e.reserve(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) {
    const auto pick = static_cast<std::size_t>(p) +
                      detail::draw_below(rng, static_cast<std::uint64_t>(n - p));
    std::swap(pool[static_cast<std::size_t>(p)], pool[pick]);
    e.push_back(pool[static_cast<std::size_t>(p)]);
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

Hypergraph gen_random(int n, int m, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (m < 0) throw std::invalid_argument("edge count must be nonnegative");
  if (m > 0 && n < k) throw std::invalid_argument("need n >= k for any edge");
  if (static_cast<std::uint64_t>(m) > binomial(n, k)) {
    throw std::invalid_argument("more edges requested than distinct k-sets exist");
  }
  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    edges.insert(draw_k_set(rng, n, k));
  }
  return Hypergraph(k, n, std::vector<Edge>(edges.begin(), edges.end()));
}

namespace {

bool edge_has_repeat(const Edge& sorted_edge) {
  return std::adjacent_find(sorted_edge.begin(), sorted_edge.end()) !=
         sorted_edge.end();
}

}  // namespace

Hypergraph gen_random_regular(int n, int d, int k, std::uint64_t seed,
                              const RegularSamplerOptions& opts) {
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  if (n < k) throw std::invalid_argument("need n >= k");
  if ((static_cast<long long>(n) * d) % k != 0) {
    throw std::invalid_argument("k must divide n*d");
  }
  if (static_cast<std::uint64_t>(d) > binomial(n - 1, k - 1)) {
    throw std::invalid_argument("degree exceeds the number of k-sets at a vertex");
  }
  const int m = static_cast<int>(static_cast<long long>(n) * d / k);
  if (static_cast<std::uint64_t>(m) > binomial(n, k)) {
    throw std::invalid_argument("more edges required than distinct k-sets exist");
  }

  std::mt19937_64 rng(seed);
  const long swap_budget = static_cast<long>(opts.swap_budget_factor) * n * d;

  // Configuration model with repair: d slots per vertex, chunked into edges;
  // random slot swaps until no edge repeats a vertex and no edge repeats as a
  // set.
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (int restart = 0; restart < opts.restarts; ++restart) {
    slots.clear();
    for (int v = 1; v <= n; ++v) {
      for (int c = 0; c < d; ++c) slots.push_back(v);
    }
    detail::shuffle(rng, slots);

    auto edge_at = [&](int j) {
      Edge e(slots.begin() + static_cast<std::ptrdiff_t>(j) * k,
             slots.begin() + static_cast<std::ptrdiff_t>(j + 1) * k);
      std::sort(e.begin(), e.end());
      return e;
    };

    auto conflicted = [&]() {
      std::vector<int> bad;
      std::set<Edge> seen;
      for (int j = 0; j < m; ++j) {
        Edge e = edge_at(j);
        if (edge_has_repeat(e) || !seen.insert(std::move(e)).second) {
          bad.push_back(j);
        }
      }
      return bad;
    };

    bool done = false;
    for (long swap = 0; swap <= swap_budget; ++swap) {
      const auto bad = conflicted();
      if (bad.empty()) {
        done = true;
        break;
      }
      const int j = bad[static_cast<std::size_t>(
          detail::draw_below(rng, bad.size()))];
      const auto a = static_cast<std::size_t>(j) * static_cast<std::size_t>(k) +
                     detail::draw_below(rng, static_cast<std::uint64_t>(k));
      std::size_t b;
      do {
        b = static_cast<std::size_t>(detail::draw_below(rng, slots.size()));
      } while (b / static_cast<std::size_t>(k) == static_cast<std::size_t>(j));
      std::swap(slots[a], slots[b]);
    }
    if (!done) continue;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) edges.push_back(edge_at(j));
    return Hypergraph(k, n, std::move(edges));
  }
  throw std::runtime_error("regular sampler retry budget exhausted");
}

namespace {

std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;          // comment
    lines.push_back(line);
  }
  return lines;
}

std::vector<long long> parse_ints(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> values;
  long long v;
  while (in >> v) values.push_back(v);
  if (!in.eof()) {
    throw std::runtime_error("malformed line: '" + line + "'");
  }
  return values;
}

}  // namespace

Hypergraph read_uhg(std::istream& in) {
  const auto lines = data_lines(in);
  if (lines.empty()) throw std::runtime_error("missing header line");
  const auto header = parse_ints(lines.front());
  if (header.size() != 3) {
    throw std::runtime_error("header must be 'k n m': '" + lines.front() + "'");
  }
  const long long k = header[0], n = header[1], m = header[2];
  if (k < 2 || n < 1 || m < 0 || k > 1'000'000 || n > 1'000'000) {
    throw std::runtime_error("header out of range: '" + lines.front() + "'");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw std::runtime_error("expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t p = 1; p < lines.size(); ++p) {
    const auto values = parse_ints(lines[p]);
    if (static_cast<long long>(values.size()) != k) {
      throw std::runtime_error("edge line has " + std::to_string(values.size()) +
                               " vertices, expected " + std::to_string(k));
    }
    Edge e;
    e.reserve(values.size());
    for (long long v : values) {
      if (v < 1 || v > n) {
        throw std::runtime_error("vertex " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(n));
      }
      e.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(e));
  }
  try {
    return Hypergraph::build(static_cast<int>(k), static_cast<int>(n),
                             std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(err.what());
  }
}

Hypergraph read_uhg(const std::string& text) {
  std::istringstream in(text);
  return read_uhg(in);
}

Hypergraph read_uhg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_uhg(in);
}

std::string write_uhg(const Hypergraph& h) {
  std::ostringstream out;
  out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t p = 0; p < e.size(); ++p) {
      if (p > 0) out << ' ';
      out << e[p];
    }
    out << '\n';
  }
  return out.str();
}

void write_uhg_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << write_uhg(h);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace hyperspec
