#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minpower/graph.hpp"

namespace minpower {

enum class Family { line, polygon, random_geometric };

struct GeneratorSpec {
  Family family = Family::random_geometric;
  int n = 2;
  double epsilon = 0.0078125;  // 2^-7, exactly representable
  double kappa = 2.0;
  std::uint64_t seed = 1;
  /// 0 emits the complete graph; otherwise the union of each point's k
  /// nearest neighbors and a Euclidean spanning tree.
  int k_nearest = 0;
};

/// Parses "family=line,n=20,eps=0.01" style strings. Keys: family
/// (line|polygon|random-geometric), n, eps, kappa, seed, knn.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

/// 2n collinear points with gaps 1, eps, 1, ..., 1; cost = squared distance.
Instance gen_line(int n, double epsilon);

/// The bidirected alternative tree of the line family: every other point
/// chained, eps-pairs joined, and the last unit gap.
Tree line_alternative_tree(int n, double epsilon);

/// n(1+eps)^2 + (n-1)eps^2 + 1.
double line_alternative_power(int n, double epsilon);

struct PolygonInstance {
  Instance instance;
  /// Clockwise cycle: one terminal per group at the unit side, all other
  /// points at the spacing cost.
  PowerAssignment witness;
};

/// n groups of n+1 points on alternate sides of a regular 2n-gon with unit
/// sides; cost = squared distance.
PolygonInstance gen_polygon(int n);

/// Total power of the best symmetric (bidirected) assignment, 2n - 1 - 1/n + 2/n^2.
/// Reference value only; nothing in this library solves that variant.
double polygon_symmetric_reference(int n);

/// n uniform points in the unit square, cost = distance^kappa. Points come
/// from std::mt19937_64(seed), two draws per point, each mapped to
/// (draw >> 11) * 2^-53.
Instance gen_random_geometric(int n, double kappa, std::uint64_t seed, int k_nearest = 0);

struct Generated {
  Instance instance;
  std::optional<PowerAssignment> witness;
};

Generated generate(const GeneratorSpec& spec);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Text format: '#' comment lines, then "n m", then m lines "u v cost".
Instance parse_instance(std::string_view text);
/// Costs are written with 17 significant digits. `comment`, when non-empty,
/// becomes a leading '#' line.
std::string format_instance(const Instance& inst, std::string_view comment = {});

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path,
                    std::string_view comment = {});

/// First '#' line of an instance file, without the marker; empty if none.
std::string read_instance_comment(const std::filesystem::path& path);

/// Assignment format: one line "v power" per vertex, '#' comments allowed.
PowerAssignment parse_assignment(std::string_view text, int num_vertices);
std::string format_assignment(const PowerAssignment& p);

PowerAssignment read_assignment(const std::filesystem::path& path, int num_vertices);
void write_assignment(const PowerAssignment& p, const std::filesystem::path& path);

}  // namespace minpower
