#include "posetenum/poset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "posetenum/kernels.hpp"

namespace posetenum {

Poset::Poset(int n, std::vector<std::uint8_t> less, std::vector<int> labels)
    : n_(n), less_(std::move(less)), labels_(std::move(labels)) {
  if (n_ < 0 || less_.size() != static_cast<std::size_t>(n_) * n_ ||
      labels_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("poset table has wrong shape");
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v <= u; ++v)
      if (this->less(u, v)) throw OrderError();
}

bool Poset::satisfies_order_axioms() const {
  for (int u = 0; u < n_; ++u) {
    if (less(u, u)) return false;
    for (int v = 0; v < n_; ++v) {
      if (less(u, v) && less(v, u)) return false;
      if (!less(u, v)) continue;
      for (int w = 0; w < n_; ++w)
        if (less(v, w) && !less(u, w)) return false;
    }
  }
  return true;
}

std::vector<Element> all_elements(const Poset& p) {
  std::vector<Element> ids(p.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

namespace {

// Kahn's algorithm with a min-heap on the current id.
std::vector<int> topological_order(int n, const std::vector<std::uint8_t>& rel) {
  std::vector<int> indegree(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (rel[static_cast<std::size_t>(u) * n + v]) ++indegree[v];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int u = 0; u < n; ++u)
    if (indegree[u] == 0) ready.push(u);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v = 0; v < n; ++v)
      if (rel[static_cast<std::size_t>(u) * n + v] && --indegree[v] == 0) ready.push(v);
  }
  if (static_cast<int>(order.size()) != n) throw OrderError();
  return order;
}

Poset relabel_closed(int n, const std::vector<std::uint8_t>& rel,
                     const std::vector<int>& labels) {
  const auto order = topological_order(n, rel);
  std::vector<int> new_id(n);
  for (int i = 0; i < n; ++i) new_id[order[i]] = i;
  std::vector<std::uint8_t> less(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> new_labels(n);
  for (int u = 0; u < n; ++u) {
    new_labels[new_id[u]] = labels[u];
    for (int v = 0; v < n; ++v)
      if (rel[static_cast<std::size_t>(u) * n + v])
        less[static_cast<std::size_t>(new_id[u]) * n + new_id[v]] = 1;
  }
  return Poset(n, std::move(less), std::move(new_labels));
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("bad " + std::string(what) + ": '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Poset make_poset(int n, std::span<const std::pair<int, int>> relations) {
  if (n < 0) throw ParseError("negative element count");
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : relations) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("relation id out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw OrderError();
    rel[static_cast<std::size_t>(u) * n + v] = 1;
  }
  kernels::transitive_closure_parallel(n, rel);
  for (int u = 0; u < n; ++u)
    if (rel[static_cast<std::size_t>(u) * n + u]) throw OrderError();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return relabel_closed(n, rel, labels);
}

Poset load_poset(std::string_view text) {
  int n = -1;
  std::vector<std::pair<int, int>> relations;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto w = words(line);
    if (w.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (w[0] == "poset") {
      if (n >= 0) throw ParseError(where + "duplicate header");
      if (w.size() != 2) throw ParseError(where + "expected 'poset <n>'");
      n = parse_int(w[1], "element count");
      if (n < 0) throw ParseError(where + "negative element count");
    } else if (w[0] == "rel") {
      if (n < 0) throw ParseError(where + "'rel' before header");
      if (w.size() != 3) throw ParseError(where + "expected 'rel <u> <v>'");
      const int u = parse_int(w[1], "element id");
      const int v = parse_int(w[2], "element id");
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where + "element id out of range");
      if (!seen.insert({u, v}).second) throw ParseError(where + "duplicate relation");
      relations.emplace_back(u, v);
    } else {
      throw ParseError(where + "unknown directive '" + std::string(w[0]) + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'poset <n>' header");
  return make_poset(n, relations);
}

Poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_poset(buf.str());
}

std::string write_poset(const Poset& p) {
  const int n = p.size();
  std::ostringstream out;
  out << "poset " << n << '\n';
  // Labels are a permutation of 0..n-1 for every poset built here.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!p.less(u, v)) continue;
      bool cover = true;
      for (int w = u + 1; w < v && cover; ++w)
        if (p.less(u, w) && p.less(w, v)) cover = false;
      if (cover) out << "rel " << p.label(u) << ' ' << p.label(v) << '\n';
    }
  return out.str();
}

Poset topological_relabel(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) rel[static_cast<std::size_t>(u) * n + v] = p.less(u, v);
  return relabel_closed(n, rel, p.labels());
}

Poset chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return make_poset(n, rel);
}

Poset antichain(int n) { return make_poset(n, {}); }

Poset v_poset() {
  const std::pair<int, int> rel[] = {{0, 2}, {1, 2}};
  return make_poset(3, rel);
}

Poset random_poset(int n, double density, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0) throw ParseError("density must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(i, j);
  return make_poset(n, rel);
}

namespace {

int uno_layer_width(int ell, int i) {
  // ceil(1 + ell / i)
  return 1 + (ell + i - 1) / i;
}

}  // namespace

int uno_size(int ell) {
  int n = 0;
  for (int i = 1; i <= ell; ++i) n += 2 * uno_layer_width(ell, i);
  return n;
}

Poset uno(int ell) {
  if (ell < 1) throw ParseError("uno needs ell >= 1");
  // Layers A_1..A_{2ell}; |A_{ell+1-i}| = |A_{ell+i}| = ceil(1 + ell/i).
  // Ids are assigned layer by layer with the chain element first, so the
  // layout is already topological.
  const int layers = 2 * ell;
  std::vector<std::vector<int>> layer(layers + 1);
  int next = 0;
  for (int a = 1; a <= layers; ++a) {
    const int i = a <= ell ? ell + 1 - a : a - ell;
    const int width = uno_layer_width(ell, i);
    for (int w = 0; w < width; ++w) layer[a].push_back(next++);
  }
  auto chain_of = [&](int a) { return layer[a].front(); };
  std::vector<std::pair<int, int>> rel;
  for (int a = 1; a < layers; ++a) rel.emplace_back(chain_of(a), chain_of(a + 1));
  for (int a = 2; a <= ell; ++a)
    for (std::size_t x = 1; x < layer[a].size(); ++x)
      for (int b : layer[a - 1]) rel.emplace_back(b, layer[a][x]);
  for (int a : layer[ell]) rel.emplace_back(a, chain_of(ell + 1));
  for (int a = ell + 1; a < layers; ++a)
    for (std::size_t x = 1; x < layer[a].size(); ++x)
      for (int b : layer[a + 1]) rel.emplace_back(layer[a][x], b);
  for (int a : layer[ell + 1]) rel.emplace_back(chain_of(ell), a);
  // A_ell's chain element and c_ell -> A_{ell+1} chain element appear twice.
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  return make_poset(next, rel);
}

Poset generate(std::string_view spec, std::uint64_t default_seed) {
  const auto parts = split(spec, ':');
  const auto kind = parts[0];
  auto arg = [&](std::size_t i, std::string_view what) {
    if (i >= parts.size()) throw ParseError("generator '" + std::string(kind) + "' needs " + std::string(what));
    return parts[i];
  };
  if (kind == "chain" && parts.size() == 2) return chain(parse_int(arg(1, "n"), "n"));
  if (kind == "antichain" && parts.size() == 2) return antichain(parse_int(arg(1, "n"), "n"));
  if (kind == "v" && parts.size() == 1) return v_poset();
  if (kind == "uno" && parts.size() == 2) return uno(parse_int(arg(1, "ell"), "ell"));
  if (kind == "random" && (parts.size() == 3 || parts.size() == 4)) {
    const int n = parse_int(parts[1], "n");
    double density = 0.0;
    try {
      std::size_t used = 0;
      const std::string d(parts[2]);
      density = std::stod(d, &used);
      if (used != d.size()) throw ParseError("bad density");
    } catch (const std::logic_error&) {
      throw ParseError("bad density '" + std::string(parts[2]) + "'");
    }
    std::uint64_t seed = default_seed;
    if (parts.size() == 4) seed = static_cast<std::uint64_t>(parse_int(parts[3], "seed"));
    return random_poset(n, density, seed);
  }
  throw ParseError("unknown generator spec '" + std::string(spec) + "'");
}

PosetStats compute_stats(const Poset& p, std::span<const Element> elements) {
  return kernels::pair_triple_counts_parallel(p, elements);
}

PosetStats compute_stats(const Poset& p) {
  const auto ids = all_elements(p);
  return compute_stats(p, ids);
}

}  // namespace posetenum
