#include "labelflow/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "labelflow/errors.hpp"

namespace labelflow {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<ExternalId> external_ids, BuildStats* stats) {
  if (!external_ids.empty()) {
    if (external_ids.size() != node_count) {
      throw std::invalid_argument("external id table does not match node count");
    }
    if (!std::is_sorted(external_ids.begin(), external_ids.end()) ||
        std::adjacent_find(external_ids.begin(), external_ids.end()) != external_ids.end()) {
      throw std::invalid_argument("external ids must be strictly increasing");
    }
  } else {
    external_ids.resize(node_count);
    for (std::size_t i = 0; i < node_count; ++i) external_ids[i] = i;
  }

  BuildStats local;
  std::vector<std::pair<NodeId, NodeId>> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (e.u == e.v) {
      ++local.self_loops;
      continue;
    }
    normalized.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(normalized.begin(), normalized.end());
  auto last = std::unique(normalized.begin(), normalized.end());
  local.duplicate_edges = static_cast<std::size_t>(std::distance(last, normalized.end()));
  normalized.erase(last, normalized.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& [u, v] : normalized) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.adjacency_.resize(2 * normalized.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted edge order fills each row in ascending neighbor order for the
  // lower endpoint; the upper endpoint's row needs a sort afterwards.
  for (const auto& [u, v] : normalized) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  g.external_ids_ = std::move(external_ids);

  if (stats != nullptr) *stats = local;
  return g;
}

std::size_t Graph::degree(NodeId v) const {
  if (v >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  }
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) {
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  }
  return best;
}

std::optional<NodeId> Graph::internal_id(ExternalId id) const {
  auto it = std::lower_bound(external_ids_.begin(), external_ids_.end(), id);
  if (it == external_ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeId>(std::distance(external_ids_.begin(), it));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line, std::optional<char> delimiter) {
  std::vector<std::string_view> tokens;
  if (delimiter) {
    std::size_t start = 0;
    while (true) {
      auto pos = line.find(*delimiter, start);
      tokens.push_back(trim(line.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return tokens;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

ExternalId parse_id(std::string_view token, std::size_t line_no, IdBase base) {
  ExternalId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line_no, "expected a non-negative integer id, got '" + std::string(token) + "'");
  }
  if (base == IdBase::one) {
    if (value == 0) fail(line_no, "id 0 in a one-based edge list");
    --value;
  }
  return value;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options) {
  LoadStats stats;
  std::vector<std::pair<ExternalId, ExternalId>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (!options.comment_prefix.empty() && view.starts_with(options.comment_prefix)) continue;
    auto tokens = split(view, options.delimiter);
    if (tokens.size() != 2) {
      fail(line_no, "expected two ids, found " + std::to_string(tokens.size()) + " fields");
    }
    raw.emplace_back(parse_id(tokens[0], line_no, options.id_base),
                     parse_id(tokens[1], line_no, options.id_base));
  }
  stats.lines = line_no;
  stats.edges_read = raw.size();
  if (raw.empty() && !(options.node_count && *options.node_count > 0)) {
    throw ParseError("empty graph");
  }

  std::vector<ExternalId> ids;
  if (options.node_count) {
    for (const auto& [a, b] : raw) {
      if (a >= *options.node_count || b >= *options.node_count) {
        throw ParseError("id " + std::to_string(std::max(a, b)) +
                         " exceeds declared node count " + std::to_string(*options.node_count));
      }
    }
    ids.resize(*options.node_count);
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  } else {
    ids.reserve(2 * raw.size());
    for (const auto& [a, b] : raw) {
      ids.push_back(a);
      ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }

  auto to_internal = [&](ExternalId id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) edges.push_back({to_internal(a), to_internal(b)});

  BuildStats build;
  const std::size_t n = ids.size();
  Graph g = Graph::from_edges(n, edges, std::move(ids), &build);
  stats.duplicate_edges = build.duplicate_edges;
  stats.self_loops = build.self_loops;
  if (g.edge_count() == 0 && !options.node_count) throw ParseError("empty graph");
  return {std::move(g), stats};
}

LoadedGraph load_edge_list_file(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) {
    out << g.external_id(e.u) << ' ' << g.external_id(e.v) << '\n';
  }
}

void write_remap_csv(std::ostream& out, const Graph& g) {
  out << "external_id,internal_id\n";
  for (NodeId v = 0; v < g.node_count(); ++v) out << g.external_id(v) << ',' << v << '\n';
}

}  // namespace labelflow
