#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hallforge/session.hpp"

using namespace hallforge;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kFailed = 3 };

K0Element parse_dim(const std::string& text) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError("--dim must be a comma-separated list of integers");
    }
  }
  if (coords.empty()) throw ConfigError("--dim must not be empty");
  return K0Element(coords);
}

// Sum of every "dim" entry inside an instance; used to pick the smallest failure.
long instance_size(const Json& j) {
  long total = 0;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key == "dim" && value.is_array()) {
        for (const Json& x : value)
          if (x.is_number_integer()) total += x.get<long>();
      } else {
        total += instance_size(value);
      }
    }
  } else if (j.is_array()) {
    for (const Json& x : j) total += instance_size(x);
  }
  return total;
}

struct Options {
  std::string config;
  std::string dim;
  std::string suite;
  std::optional<int> reflect_vertex;
  std::string cache_dir;
  int jobs = 1;
  int max_total = 3;
  std::string expression;
};

int run(const std::string& command, const Options& opt) {
  SessionConfig config = load_config(opt.config);
  if (!opt.cache_dir.empty()) config.cache_dir = opt.cache_dir;
  if (opt.max_total < 0) throw ConfigError("--max-total must be nonnegative");
  Session session(std::move(config));

  if (command == "objects") {
    if (opt.dim.empty()) throw ConfigError("objects needs --dim");
    std::cout << session.objects(parse_dim(opt.dim)).dump() << '\n';
    return kOk;
  }
  if (command == "compute") {
    if (opt.expression.empty()) throw ParseError("compute needs an expression");
    std::cout << to_json(session.evaluate(opt.expression, opt.reflect_vertex)).dump() << '\n';
    return kOk;
  }
  if (command == "grading") {
    if (!opt.reflect_vertex) throw ConfigError("grading needs --reflect-vertex");
    Reflection& r = session.reflection(*opt.reflect_vertex, opt.max_total);
    std::cout << r.forward.grading().to_json().dump() << '\n';
    return kOk;
  }
  // verify
  if (opt.suite.empty()) throw ConfigError("verify needs --suite");
  const std::vector<Report> reports = session.verify(opt.suite, opt.max_total, opt.reflect_vertex, opt.jobs);
  std::size_t failed = 0;
  const Report* smallest = nullptr;
  for (const Report& r : reports) {
    std::cout << r.to_json().dump() << '\n';
    if (!r.pass) {
      ++failed;
      if (!smallest || instance_size(r.instance) < instance_size(smallest->instance)) smallest = &r;
    }
  }
  Json summary{{"suite", opt.suite}, {"instances", reports.size()}, {"failed", failed}};
  summary["smallest_failure"] = smallest ? smallest->to_json() : Json(nullptr);
  std::cout << Json{{"summary", std::move(summary)}}.dump() << '\n';
  std::cerr << opt.suite << ": " << reports.size() - failed << "/" << reports.size() << " instances pass\n";
  return failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hall algebra engine for quiver representations over finite fields"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "JSON session config")->required();
    sub->add_option("--cache-dir", opt.cache_dir, "on-disk registry cache (overrides the config)");
    sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--reflect-vertex", opt.reflect_vertex, "vertex of the BGP reflection");
    sub->add_option("--max-total", opt.max_total, "largest total dimension enumerated by suites");
  };
  CLI::App* objects = app.add_subcommand("objects", "list isomorphism classes of one dimension vector");
  add_common(objects);
  objects->add_option("--dim", opt.dim, "dimension vector a,b,...");
  CLI::App* compute = app.add_subcommand("compute", "evaluate a prefix expression");
  add_common(compute);
  compute->add_option("expression", opt.expression, "e.g. (hmul (cls S2) (cls S1))");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", opt.suite, "one of hopf, pairing, double, lemma3, prop3, fstar, k0")
      ->check(CLI::IsMember(suite_names()));
  CLI::App* grading = app.add_subcommand("grading", "export the shift grading of a reflection");
  add_common(grading);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kFailed;
  } catch (const MixedShift& e) {
    std::cerr << "mixed shift: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
