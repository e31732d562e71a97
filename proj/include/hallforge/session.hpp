#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hallforge/derived.hpp"
#include "hallforge/errors.hpp"

namespace hallforge {

struct SessionConfig {
  Quiver quiver;
  int q = 2;
  Caps caps;
  std::optional<std::filesystem::path> cache_dir;
  AntipodeOrder antipode_order = AntipodeOrder::ascending;
  LegPairing legs = LegPairing::standard;
  int verbosity = 0;
};

// Throws ConfigError on anything malformed.
SessionConfig parse_config(const Json& j);
SessionConfig load_config(const std::filesystem::path& path);

// Category, Hall algebra and double for one quiver.
struct Stack {
  Stack(const Quiver& quiver, int q, const Caps& caps, const std::optional<std::filesystem::path>& cache_dir,
        AntipodeOrder order, LegPairing legs);
  Category category;
  HallAlgebra hall;
  DoubleAlgebra dbl;
};

// BGP reflection at one vertex with both directions of the induced map.
struct Reflection {
  Reflection(const SessionConfig& config, int alpha, const Caps& caps, int grading_total);
  int alpha;
  Stack source;
  Stack target;
  FStar forward;   // F*
  FStar backward;  // G*
};

using Value = std::variant<Scalar, HallElement, TensorElement, TripleElement, DoubleElement>;
Json to_json(const Value& v);

class Session {
 public:
  explicit Session(SessionConfig config);

  const SessionConfig& config() const { return config_; }
  Stack& stack() { return *stack_; }
  Category& category() { return stack_->category; }
  HallAlgebra& hall() { return stack_->hall; }
  DoubleAlgebra& dbl() { return stack_->dbl; }

  // Reflection at alpha, built once per (alpha, range).
  Reflection& reflection(int alpha, int max_total);

  // Prefix expression such as (dmul (inj1 (cls 1 0)) (inj2 (cls 0 1))).
  Value evaluate(const std::string& expression, std::optional<int> reflect_vertex = std::nullopt);

  Json objects(const K0Element& dim);

  // Named suite over classes of total dimension <= max_total.
  std::vector<Report> verify(const std::string& suite, int max_total, std::optional<int> reflect_vertex,
                             int jobs);

 private:
  SessionConfig config_;
  std::unique_ptr<Stack> stack_;
  std::map<std::pair<int, int>, std::unique_ptr<Reflection>> reflections_;
};

const std::vector<std::string>& suite_names();

// Runs the tasks on `jobs` threads; results come back in task order. The
// first exception in task order is rethrown.
std::vector<Report> run_tasks(const std::vector<std::function<std::vector<Report>()>>& tasks, int jobs);

}  // namespace hallforge
