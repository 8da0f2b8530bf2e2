#include "dexter/poset.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace dexter {

std::string_view color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::red:
      return "red";
    case EdgeColor::blue:
      return "blue";
    default:
      return "none";
  }
}

void BitMatrix::or_row(int dst, int src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (int k = 0; k < row_words(n_); ++k) d[k] |= s[k];
}

int BitMatrix::row_count(int i) const {
  const std::uint64_t* r = row(i);
  int total = 0;
  for (int k = 0; k < row_words(n_); ++k) total += std::popcount(r[k]);
  return total;
}

Poset::Poset(std::vector<std::string> labels, std::vector<CoverEdge> covers)
    : labels_(std::move(labels)), edges_(std::move(covers)) {
  build_adjacency();
}

Poset::Poset(const Poset& other)
    : labels_(other.labels_), edges_(other.edges_) {
  build_adjacency();
  std::scoped_lock guard(other.cache_lock_);
  if (other.reach_) reach_ = std::make_unique<BitMatrix>(*other.reach_);
}

Poset::Poset(Poset&& other) noexcept
    : labels_(std::move(other.labels_)),
      edges_(std::move(other.edges_)),
      up_(std::move(other.up_)),
      down_(std::move(other.down_)),
      index_(std::move(other.index_)),
      reach_(std::move(other.reach_)) {}

Poset& Poset::operator=(Poset other) {
  labels_ = std::move(other.labels_);
  edges_ = std::move(other.edges_);
  up_ = std::move(other.up_);
  down_ = std::move(other.down_);
  index_ = std::move(other.index_);
  reach_ = std::move(other.reach_);
  return *this;
}

void Poset::build_adjacency() {
  up_.assign(labels_.size(), {});
  down_.assign(labels_.size(), {});
  for (const CoverEdge& e : edges_) {
    up_[static_cast<size_t>(e.src)].push_back(e.dst);
    down_[static_cast<size_t>(e.dst)].push_back(e.src);
  }
}

int Poset::index_of(std::string_view label) const {
  auto found = find(label);
  if (!found)
    throw element_not_in_poset("no element labelled " + std::string(label));
  return *found;
}

std::optional<int> Poset::find(std::string_view label) const {
  std::scoped_lock guard(cache_lock_);
  if (index_.empty() && !labels_.empty()) {
    index_.reserve(labels_.size());
    for (size_t i = 0; i < labels_.size(); ++i)
      index_.emplace(labels_[i], static_cast<int>(i));
  }
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Poset::topo_order() const {
  std::vector<int> indeg(labels_.size(), 0);
  for (const CoverEdge& e : edges_) ++indeg[static_cast<size_t>(e.dst)];
  std::vector<int> queue, order;
  for (int u = 0; u < size(); ++u)
    if (indeg[static_cast<size_t>(u)] == 0) queue.push_back(u);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    order.push_back(u);
    for (int v : up_[static_cast<size_t>(u)])
      if (--indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
  }
  if (order.size() != labels_.size())
    throw error("cover graph has a directed cycle");
  return order;
}

const BitMatrix& Poset::reach() const {
  std::scoped_lock guard(cache_lock_);
  if (!reach_) {
    auto m = std::make_unique<BitMatrix>(size());
    std::vector<int> order = topo_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int u = *it;
      m->set(u, u);
      for (int v : up_[static_cast<size_t>(u)]) m->or_row(u, v);
    }
    reach_ = std::move(m);
  }
  return *reach_;
}

bool Poset::leq(int u, int v) const {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw element_not_in_poset("index out of range");
  return reach().get(u, v);
}

std::vector<int> Poset::up_set(int u) const {
  std::vector<int> out;
  const BitMatrix& m = reach();
  for (int v = 0; v < size(); ++v)
    if (m.get(u, v)) out.push_back(v);
  return out;
}

std::vector<int> Poset::down_set(int u) const {
  std::vector<int> out;
  const BitMatrix& m = reach();
  for (int v = 0; v < size(); ++v)
    if (m.get(v, u)) out.push_back(v);
  return out;
}

Poset Poset::restrict_convex(const std::vector<int>& elements) const {
  std::vector<int> where(labels_.size(), -1);
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (size_t i = 0; i < elements.size(); ++i) {
    where[static_cast<size_t>(elements[i])] = static_cast<int>(i);
    labels.push_back(labels_[static_cast<size_t>(elements[i])]);
  }
  std::vector<CoverEdge> covers;
  for (const CoverEdge& e : edges_) {
    int s = where[static_cast<size_t>(e.src)];
    int d = where[static_cast<size_t>(e.dst)];
    if (s >= 0 && d >= 0) covers.push_back(CoverEdge{s, d, e.color});
  }
  return Poset(std::move(labels), std::move(covers));
}

Poset Poset::induced(const std::vector<int>& elements) const {
  int m = static_cast<int>(elements.size());
  BitMatrix rel(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && leq(elements[static_cast<size_t>(i)],
                        elements[static_cast<size_t>(j)]))
        rel.set(i, j);
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (int e : elements) labels.push_back(labels_[static_cast<size_t>(e)]);
  std::vector<CoverEdge> covers;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!rel.get(i, j)) continue;
      bool direct = true;
      for (int k = 0; direct && k < m; ++k)
        if (rel.get(i, k) && rel.get(k, j)) direct = false;
      if (direct) covers.push_back(CoverEdge{i, j, EdgeColor::none});
    }
  }
  return Poset(std::move(labels), std::move(covers));
}

bool Poset::is_transitively_reduced() const {
  const BitMatrix& m = reach();
  for (const CoverEdge& e : edges_) {
    for (int mid : up_[static_cast<size_t>(e.src)]) {
      if (mid != e.dst && m.get(mid, e.dst)) return false;
    }
  }
  return true;
}

std::string Poset::dot(std::string_view graph_name) const {
  std::string out = "digraph \"" + std::string(graph_name) + "\" {\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (int u = 0; u < size(); ++u)
    out += "  n" + std::to_string(u) + " [label=\"" +
           labels_[static_cast<size_t>(u)] + "\"];\n";
  for (const CoverEdge& e : edges_) {
    out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst);
    if (e.color == EdgeColor::red)
      out += " [color=red]";
    else if (e.color == EdgeColor::blue)
      out += " [color=blue, style=dashed]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string Poset::json(std::string_view order_name) const {
  nlohmann::json j;
  if (!order_name.empty()) j["order"] = std::string(order_name);
  j["elements"] = labels_;
  auto& covers = j["covers"] = nlohmann::json::array();
  for (const CoverEdge& e : edges_)
    covers.push_back({e.src, e.dst, std::string(color_name(e.color))});
  return j.dump();
}

Poset Poset::from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> labels = j.at("elements");
  std::vector<CoverEdge> covers;
  for (const auto& e : j.at("covers")) {
    EdgeColor color = EdgeColor::none;
    if (e.size() > 2) {
      std::string name = e[2];
      if (name == "red") color = EdgeColor::red;
      if (name == "blue") color = EdgeColor::blue;
    }
    covers.push_back(CoverEdge{e[0], e[1], color});
  }
  return Poset(std::move(labels), std::move(covers));
}

Poset cartesian_product(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(p.size()) * static_cast<size_t>(q.size()));
  auto id = [&](int a, int b) { return a * q.size() + b; };
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      labels.push_back("(" + p.label(a) + "|" + q.label(b) + ")");
  std::vector<CoverEdge> covers;
  for (const CoverEdge& e : p.cover_edges())
    for (int b = 0; b < q.size(); ++b)
      covers.push_back(CoverEdge{id(e.src, b), id(e.dst, b), EdgeColor::none});
  for (int a = 0; a < p.size(); ++a)
    for (const CoverEdge& e : q.cover_edges())
      covers.push_back(CoverEdge{id(a, e.src), id(a, e.dst), EdgeColor::none});
  return Poset(std::move(labels), std::move(covers));
}

}  // namespace dexter
