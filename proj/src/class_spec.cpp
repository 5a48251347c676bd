#include "crossing/class_spec.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <queue>

#include "crossing/enumerate.hpp"

namespace crossing {

ClassSpec ClassSpec::l_colorable(int colors) {
  if (colors < 2) throw std::invalid_argument("LColorable needs at least 2 colors");
  return ClassSpec(Kind::LColorable, colors, {});
}

ClassSpec ClassSpec::kt_free(int clique_size) {
  if (clique_size < 3) throw std::invalid_argument("KtFree needs t >= 3");
  return ClassSpec(Kind::KtFree, clique_size, {});
}

ClassSpec ClassSpec::odd_girth_at_least(int g) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("OddGirthAtLeast needs an odd g >= 3");
  return ClassSpec(Kind::OddGirthAtLeast, g, {});
}

ClassSpec ClassSpec::intersection(std::vector<ClassSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("Intersection of an empty list");
  return ClassSpec(Kind::Intersection, 0, std::move(parts));
}

bool ClassSpec::implies_bipartite() const {
  switch (kind_) {
    case Kind::Bipartite:
      return true;
    case Kind::LColorable:
      return parameter_ == 2;
    case Kind::OddGirthAtLeast:
      return parameter_ == kNoOddCycles;
    case Kind::Intersection:
      return std::any_of(parts_.begin(), parts_.end(), [](const ClassSpec& p) { return p.implies_bipartite(); });
    default:
      return false;
  }
}

std::string ClassSpec::to_string() const {
  switch (kind_) {
    case Kind::All:
      return "All";
    case Kind::Bipartite:
      return "Bipartite";
    case Kind::LColorable:
      return "LColorable(" + std::to_string(parameter_) + ")";
    case Kind::KtFree:
      return "KtFree(" + std::to_string(parameter_) + ")";
    case Kind::OddGirthAtLeast:
      return parameter_ == kNoOddCycles ? "OddGirthAtLeast(inf)"
                                        : "OddGirthAtLeast(" + std::to_string(parameter_) + ")";
    case Kind::Intersection: {
      std::string out = "Intersection(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += parts_[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  ClassSpec parse_all() {
    ClassSpec spec = parse_one();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  ClassSpec parse_one() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "All") return ClassSpec::all();
    if (name == "Bipartite") return ClassSpec::bipartite();
    expect('(');
    if (name == "Intersection") {
      std::vector<ClassSpec> parts{parse_one()};
      skip_space();
      while (peek() == ',') {
        ++pos_;
        parts.push_back(parse_one());
        skip_space();
      }
      expect(')');
      return ClassSpec::intersection(std::move(parts));
    }
    skip_space();
    int value = 0;
    if (text_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      value = ClassSpec::kNoOddCycles;
    } else {
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) fail("expected an integer parameter");
      value = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
    }
    expect(')');
    if (name == "LColorable") return ClassSpec::l_colorable(value);
    if (name == "KtFree") return ClassSpec::kt_free(value);
    if (name == "OddGirthAtLeast") return ClassSpec::odd_girth_at_least(value);
    fail("unknown class '" + name + "'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("class spec \"" + std::string(text_) + "\": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t turan_edges(int n, int parts) {
  if (parts >= n) return static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  for (int i = 0; i < parts; ++i) {
    std::int64_t size = n / parts + (i < n % parts ? 1 : 0);
    total -= size * (size - 1) / 2;
  }
  return total;
}

bool color_recursive(const Graph& g, const std::vector<int>& order, std::size_t at, int colors,
                     std::vector<int>& color) {
  if (at == order.size()) return true;
  const Vertex v = order[at];
  int used_max = -1;
  for (std::size_t i = 0; i < at; ++i) used_max = std::max(used_max, color[order[i]]);
  // Colors above used_max+1 are symmetric to used_max+1.
  const int limit = std::min(colors - 1, used_max + 1);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (Vertex w : g.neighbors(v)) {
      if (color[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (color_recursive(g, order, at + 1, colors, color)) return true;
    color[v] = -1;
  }
  return false;
}

bool clique_recursive(const Graph& g, std::vector<Vertex>& candidates, int needed) {
  if (needed == 0) return true;
  if (static_cast<int>(candidates.size()) < needed) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vertex v = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    if (clique_recursive(g, next, needed - 1)) return true;
  }
  return false;
}

}  // namespace

ClassSpec ClassSpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (int y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_colorable(const Graph& g, int colors) {
  if (g.order() == 0) return true;
  if (colors <= 0) return false;
  if (colors == 1) return g.size() == 0;
  if (colors == 2) return is_bipartite(g);
  if (colors >= g.order()) return true;
  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.order(), -1);
  return color_recursive(g, order, 0, colors, color);
}

bool has_clique(const Graph& g, int size) {
  if (size <= 0) return true;
  if (size == 1) return g.order() > 0;
  if (size == 2) return g.size() > 0;
  std::vector<Vertex> all;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= size - 1) all.push_back(v);
  return clique_recursive(g, all, size);
}

std::optional<int> shortest_odd_cycle(const Graph& g) {
  std::optional<int> best;
  std::vector<int> dist(g.order());
  for (int root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        } else if (dist[y] == dist[x]) {
          // Odd closed walk of length 2*dist+1 through the root.
          const int length = 2 * dist[x] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

bool contains(const ClassSpec& spec, const Graph& g) {
  switch (spec.kind()) {
    case ClassSpec::Kind::All:
      return true;
    case ClassSpec::Kind::Bipartite:
      return is_bipartite(g);
    case ClassSpec::Kind::LColorable:
      return is_colorable(g, spec.parameter());
    case ClassSpec::Kind::KtFree:
      return !has_clique(g, spec.parameter());
    case ClassSpec::Kind::OddGirthAtLeast: {
      const auto odd = shortest_odd_cycle(g);
      return !odd || *odd >= spec.parameter();
    }
    case ClassSpec::Kind::Intersection:
      return std::all_of(spec.parts().begin(), spec.parts().end(),
                         [&](const ClassSpec& part) { return contains(part, g); });
  }
  return false;
}

std::optional<int> max_edges(const ClassSpec& spec, int n, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("max_edges needs n >= 1");
  switch (spec.kind()) {
    case ClassSpec::Kind::All:
      return n * (n - 1) / 2;
    case ClassSpec::Kind::Bipartite:
      return n * n / 4;
    case ClassSpec::Kind::LColorable:
      return static_cast<int>(turan_edges(n, spec.parameter()));
    case ClassSpec::Kind::KtFree:
      return static_cast<int>(turan_edges(n, spec.parameter() - 1));
    default:
      break;
  }
  if (spec.implies_bipartite() && spec.kind() == ClassSpec::Kind::OddGirthAtLeast) return n * n / 4;
  if (n > limits.ceiling_for(spec) || n > EnumerationLimits::kMaxSupported) return std::nullopt;
  return exhaustive_max_edges(spec, n, limits);
}

}  // namespace crossing
