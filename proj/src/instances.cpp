#include "minpower/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <vector>

namespace minpower {

namespace {

struct Point {
  double x;
  double y;
};

double squared_distance(Point a, Point b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

std::vector<Edge> complete_edges(int n, auto&& cost) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, cost(i, j)});
  return edges;
}

// Line family distances: point i sits after (i+1)/2 unit gaps and i/2 eps gaps.
double line_cost(Vertex i, Vertex j, double epsilon) {
  if (i > j) std::swap(i, j);
  int units = (j + 1) / 2 - (i + 1) / 2;
  int small = j / 2 - i / 2;
  double d = units + small * epsilon;
  return d * d;
}

std::string shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string exact_digits(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(number, line);
  }
  return lines;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  bool has_n = false;
  bool has_family = false;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("generator spec item '" + std::string(item) + "' is not key=value");
    std::string_view key = trim(item.substr(0, eq));
    std::string_view value = trim(item.substr(eq + 1));
    auto bad = [&] {
      return std::invalid_argument("bad value '" + std::string(value) + "' for " + std::string(key));
    };
    if (key == "family") {
      has_family = true;
      if (value == "line") spec.family = Family::line;
      else if (value == "polygon") spec.family = Family::polygon;
      else if (value == "random-geometric" || value == "random") spec.family = Family::random_geometric;
      else throw bad();
    } else if (key == "n") {
      if (!parse_number(value, spec.n)) throw bad();
      has_n = true;
    } else if (key == "eps" || key == "epsilon") {
      if (!parse_number(value, spec.epsilon)) throw bad();
    } else if (key == "kappa") {
      if (!parse_number(value, spec.kappa)) throw bad();
    } else if (key == "seed") {
      if (!parse_number(value, spec.seed)) throw bad();
    } else if (key == "knn") {
      if (!parse_number(value, spec.k_nearest) || spec.k_nearest < 0) throw bad();
    } else {
      throw std::invalid_argument("unknown generator spec key '" + std::string(key) + "'");
    }
  }
  if (!has_family) throw std::invalid_argument("generator spec needs family=");
  if (!has_n) throw std::invalid_argument("generator spec needs n=");
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::line:
      return "family=line,n=" + std::to_string(spec.n) + ",eps=" + shortest(spec.epsilon);
    case Family::polygon:
      return "family=polygon,n=" + std::to_string(spec.n);
    case Family::random_geometric: {
      std::string s = "family=random-geometric,n=" + std::to_string(spec.n) +
                      ",kappa=" + shortest(spec.kappa) + ",seed=" + std::to_string(spec.seed);
      if (spec.k_nearest > 0) s += ",knn=" + std::to_string(spec.k_nearest);
      return s;
    }
  }
  return {};
}

Instance gen_line(int n, double epsilon) {
  if (n < 1) throw std::invalid_argument("line family needs n >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("line family needs 0 < eps < 1");
  return Instance(2 * n, complete_edges(2 * n, [&](Vertex i, Vertex j) {
                    return line_cost(i, j, epsilon);
                  }));
}

Tree line_alternative_tree(int n, double epsilon) {
  if (n < 1) throw std::invalid_argument("line family needs n >= 1");
  std::vector<Edge> edges;
  auto join = [&](Vertex a, Vertex b) { edges.push_back({a, b, line_cost(a, b, epsilon)}); };
  for (Vertex k = 0; k + 1 < n; ++k) join(2 * k, 2 * k + 2);
  for (Vertex k = 1; k < n; ++k) join(2 * k - 1, 2 * k);
  join(2 * n - 2, 2 * n - 1);
  return Tree(2 * n, std::move(edges));
}

double line_alternative_power(int n, double epsilon) {
  return n * (1.0 + epsilon) * (1.0 + epsilon) + (n - 1) * epsilon * epsilon + 1.0;
}

PolygonInstance gen_polygon(int n) {
  if (n < 2) throw std::invalid_argument("polygon family needs n >= 2");
  const int corners = 2 * n;
  const double radius = 0.5 / std::sin(std::numbers::pi / corners);
  std::vector<Point> corner(corners);
  for (int j = 0; j < corners; ++j) {
    double angle = std::numbers::pi / 2 - 2.0 * std::numbers::pi * j / corners;
    corner[j] = {radius * std::cos(angle), radius * std::sin(angle)};
  }

  // Group g: terminal 2g, its n-1 interior points, terminal 2g+1.
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int g = 0; g < n; ++g) {
    Point a = corner[2 * g];
    Point b = corner[2 * g + 1];
    for (int k = 0; k <= n; ++k) {
      double t = static_cast<double>(k) / n;
      points.push_back(k == n ? b : Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  const int total = static_cast<int>(points.size());
  Instance inst(total, complete_edges(total, [&](Vertex i, Vertex j) {
                  return squared_distance(points[i], points[j]);
                }));

  PowerAssignment witness(total);
  for (Vertex v = 0; v < total; ++v) witness[v] = *inst.cost(v, (v + 1) % total);
  return {std::move(inst), std::move(witness)};
}

double polygon_symmetric_reference(int n) {
  return 2.0 * n - 1.0 - 1.0 / n + 2.0 / (static_cast<double>(n) * n);
}

Instance gen_random_geometric(int n, double kappa, std::uint64_t seed, int k_nearest) {
  if (n < 2) throw std::invalid_argument("random family needs n >= 2");
  if (!(kappa > 0.0)) throw std::invalid_argument("random family needs kappa > 0");
  std::mt19937_64 engine(seed);
  auto unit = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  std::vector<Point> points(n);
  for (auto& p : points) {
    p.x = unit();
    p.y = unit();
  }
  auto cost = [&](Vertex i, Vertex j) {
    double d2 = squared_distance(points[i], points[j]);
    if (kappa == 2.0) return d2;
    if (kappa == 1.0) return std::sqrt(d2);
    return std::pow(d2, kappa / 2.0);
  };
  if (k_nearest <= 0 || k_nearest >= n - 1) return Instance(n, complete_edges(n, cost));

  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    std::vector<std::pair<double, Vertex>> others;
    for (Vertex j = 0; j < n; ++j)
      if (j != i) others.emplace_back(squared_distance(points[i], points[j]), j);
    std::partial_sort(others.begin(), others.begin() + k_nearest, others.end());
    for (int r = 0; r < k_nearest; ++r)
      pairs.emplace(std::min(i, others[r].second), std::max(i, others[r].second));
  }
  // Euclidean spanning tree keeps the sparsified graph connected.
  std::vector<double> key(n, INFINITY);
  std::vector<Vertex> link(n, -1);
  std::vector<char> done(n, 0);
  key[0] = 0.0;
  for (int step = 0; step < n; ++step) {
    Vertex u = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (u < 0 || key[v] < key[u])) u = v;
    done[u] = 1;
    if (link[u] >= 0) pairs.emplace(std::min(u, link[u]), std::max(u, link[u]));
    for (Vertex v = 0; v < n; ++v) {
      double d = squared_distance(points[u], points[v]);
      if (!done[v] && d < key[v]) {
        key[v] = d;
        link[v] = u;
      }
    }
  }
  std::vector<Edge> edges;
  for (auto [i, j] : pairs) edges.push_back({i, j, cost(i, j)});
  return Instance(n, std::move(edges));
}

Generated generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::line:
      return {gen_line(spec.n, spec.epsilon), std::nullopt};
    case Family::polygon: {
      auto poly = gen_polygon(spec.n);
      return {std::move(poly.instance), std::move(poly.witness)};
    }
    case Family::random_geometric:
      return {gen_random_geometric(spec.n, spec.kappa, spec.seed, spec.k_nearest), std::nullopt};
  }
  throw std::invalid_argument("unknown family");
}

Instance parse_instance(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line 'n m'");
  auto header = split_fields(lines[0].second);
  int n = 0;
  long long m = 0;
  if (header.size() != 2 || !parse_number(header[0], n) || !parse_number(header[1], m) || n < 1 ||
      m < 0)
    throw ParseError(lines[0].first, "expected header 'n m' with n >= 1 and m >= 0");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(lines.back().first, "header declares " + std::to_string(m) + " edges, found " +
                                             std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [number, line] = lines[i];
    auto fields = split_fields(line);
    Edge e;
    if (fields.size() != 3 || !parse_number(fields[0], e.u) || !parse_number(fields[1], e.v) ||
        !parse_number(fields[2], e.cost))
      throw ParseError(number, "expected 'u v cost'");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ParseError(number, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (e.u == e.v) throw ParseError(number, "self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.cost) || e.cost < 0.0) throw ParseError(number, "cost must be finite and >= 0");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
      throw ParseError(number, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
  }
  try {
    return Instance(n, std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw ParseError(0, err.what());
  }
}

std::string format_instance(const Instance& inst, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + "\n";
  out += std::to_string(inst.num_vertices()) + " " + std::to_string(inst.edges().size()) + "\n";
  for (const Edge& e : inst.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + exact_digits(e.cost) + "\n";
  return out;
}

Instance read_instance(const std::filesystem::path& path) { return parse_instance(slurp(path)); }

void write_instance(const Instance& inst, const std::filesystem::path& path,
                    std::string_view comment) {
  spill(path, format_instance(inst, comment));
}

std::string read_instance_comment(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() != '#') return {};
    return std::string(trim(t.substr(1)));
  }
  return {};
}

PowerAssignment parse_assignment(std::string_view text, int num_vertices) {
  PowerAssignment p(num_vertices);
  std::vector<char> given(num_vertices, 0);
  for (auto [number, line] : content_lines(text)) {
    auto fields = split_fields(line);
    Vertex v = 0;
    double power = 0.0;
    if (fields.size() != 2 || !parse_number(fields[0], v) || !parse_number(fields[1], power))
      throw ParseError(number, "expected 'v power'");
    if (v < 0 || v >= num_vertices) throw ParseError(number, "vertex id out of range");
    if (!std::isfinite(power) || power < 0.0) throw ParseError(number, "power must be finite and >= 0");
    if (given[v]) throw ParseError(number, "vertex " + std::to_string(v) + " assigned twice");
    given[v] = 1;
    p[v] = power;
  }
  for (Vertex v = 0; v < num_vertices; ++v)
    if (!given[v]) throw ParseError(0, "no power given for vertex " + std::to_string(v));
  return p;
}

std::string format_assignment(const PowerAssignment& p) {
  std::string out;
  for (Vertex v = 0; v < p.num_vertices(); ++v)
    out += std::to_string(v) + " " + exact_digits(p[v]) + "\n";
  return out;
}

PowerAssignment read_assignment(const std::filesystem::path& path, int num_vertices) {
  return parse_assignment(slurp(path), num_vertices);
}

void write_assignment(const PowerAssignment& p, const std::filesystem::path& path) {
  spill(path, format_assignment(p));
}

}  // namespace minpower
