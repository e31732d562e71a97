#include "hallforge/session.hpp"

#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

namespace hallforge {

namespace {

int positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0 || j.get<long long>() > (1LL << 30))
    throw ConfigError(std::string(what) + " must be a positive integer");
  return static_cast<int>(j.get<long long>());
}

}  // namespace

SessionConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SessionConfig c;
  if (!j.contains("vertices")) throw ConfigError("config needs \"vertices\"");
  const int n = positive_int(j["vertices"], "vertices");
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ConfigError("arrows must be a list of [source, target] pairs");
    for (const Json& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
        throw ConfigError("arrows must be a list of [source, target] pairs");
      arrows.push_back({a[0].get<int>(), a[1].get<int>()});
    }
  }
  c.quiver = Quiver(n, std::move(arrows));
  if (!j.contains("q") || !j["q"].is_number_integer()) throw ConfigError("config needs an integer \"q\"");
  c.q = j["q"].get<int>();
  if (!is_prime(c.q) || c.q >= 256) throw ConfigError("q must be a prime below 256");
  if (j.contains("caps")) {
    const Json& caps = j["caps"];
    if (!caps.is_object()) throw ConfigError("caps must be an object");
    if (caps.contains("vertex")) c.caps.vertex = positive_int(caps["vertex"], "caps.vertex");
    if (caps.contains("total")) c.caps.total = positive_int(caps["total"], "caps.total");
    if (caps.contains("hom_budget")) c.caps.hom_budget = static_cast<std::uint64_t>(positive_int(caps["hom_budget"], "caps.hom_budget"));
    if (caps.contains("rep_space_budget"))
      c.caps.rep_space_budget = static_cast<std::uint64_t>(positive_int(caps["rep_space_budget"], "caps.rep_space_budget"));
  }
  if (j.contains("cache_dir")) {
    if (!j["cache_dir"].is_string()) throw ConfigError("cache_dir must be a string");
    c.cache_dir = j["cache_dir"].get<std::string>();
  }
  if (j.contains("antipode_order")) {
    const Json& o = j["antipode_order"];
    if (o == "ascending") c.antipode_order = AntipodeOrder::ascending;
    else if (o == "descending") c.antipode_order = AntipodeOrder::descending;
    else throw ConfigError("antipode_order must be \"ascending\" or \"descending\"");
  }
  if (j.contains("leg_pairing")) {
    const Json& o = j["leg_pairing"];
    if (o == "standard") c.legs = LegPairing::standard;
    else if (o == "swapped") c.legs = LegPairing::swapped;
    else throw ConfigError("leg_pairing must be \"standard\" or \"swapped\"");
  }
  if (j.contains("verbosity")) {
    if (!j["verbosity"].is_number_integer()) throw ConfigError("verbosity must be an integer");
    c.verbosity = j["verbosity"].get<int>();
  }
  return c;
}

SessionConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(j);
}

Stack::Stack(const Quiver& quiver, int q, const Caps& caps, const std::optional<std::filesystem::path>& cache_dir,
             AntipodeOrder order, LegPairing legs)
    : category(quiver, q, caps, cache_dir), hall(category, order), dbl(hall, legs) {}

namespace {

DerivedGrading grading_or_throw(Category& source, Category& target, int alpha, int max_total) {
  const Quiver& quiver = source.quiver();
  if (alpha < 0 || alpha >= quiver.vertex_count()) throw ConfigError("reflection vertex out of range");
  if (!quiver.is_source(alpha) && !quiver.is_sink(alpha))
    throw NotASource("vertex " + std::to_string(alpha) + " is neither a source nor a sink");
  return build_grading(source, target, alpha, max_total);
}

}  // namespace

Reflection::Reflection(const SessionConfig& config, int alpha_, const Caps& caps, int grading_total)
    : alpha(alpha_),
      source(config.quiver, config.q, caps, config.cache_dir, config.antipode_order, config.legs),
      target(config.quiver.reflected_at(alpha_), config.q, caps, config.cache_dir, config.antipode_order,
             config.legs),
      forward(source.dbl, target.dbl, grading_or_throw(source.category, target.category, alpha_, grading_total)),
      backward(target.dbl, source.dbl, grading_or_throw(target.category, source.category, alpha_, grading_total)) {}

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return hallforge::to_json(x); }, v);
}

Session::Session(SessionConfig config)
    : config_(std::move(config)),
      stack_(std::make_unique<Stack>(config_.quiver, config_.q, config_.caps, config_.cache_dir,
                                     config_.antipode_order, config_.legs)) {}

Reflection& Session::reflection(int alpha, int max_total) {
  auto& slot = reflections_[{alpha, max_total}];
  if (!slot) {
    // Images of F* can be twice as large as their sources, and products of
    // two images mix both legs, so the pair lives under wider caps.
    Caps caps = config_.caps;
    caps.vertex = std::max(caps.vertex, 2 * max_total);
    caps.total = std::max(caps.total, 3 * max_total);
    slot = std::make_unique<Reflection>(config_, alpha, caps, 2 * max_total);
  }
  return *slot;
}

// --- expressions ---------------------------------------------------------

namespace {

struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
};

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) tokens_.push_back(cur);
      cur.clear();
    };
    for (char ch : text) {
      if (ch == '(' || ch == ')') {
        flush();
        tokens_.emplace_back(1, ch);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        cur += ch;
      }
    }
    flush();
  }

  Node parse() {
    if (tokens_.empty()) throw ParseError("empty expression");
    Node n = node();
    if (pos_ != tokens_.size()) throw ParseError("trailing input after expression");
    return n;
  }

 private:
  Node node() {
    if (pos_ >= tokens_.size()) throw ParseError("unexpected end of expression");
    const std::string& t = tokens_[pos_++];
    if (t == ")") throw ParseError("unexpected ')'");
    if (t != "(") return Node{false, t, {}};
    Node list{true, "", {}};
    while (true) {
      if (pos_ >= tokens_.size()) throw ParseError("missing ')'");
      if (tokens_[pos_] == ")") {
        ++pos_;
        break;
      }
      list.items.push_back(node());
    }
    if (list.items.empty()) throw ParseError("empty list");
    return list;
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

bool is_integer(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

int to_int(const Node& n) {
  if (n.is_list || !is_integer(n.atom) || n.atom.size() > 9) throw ParseError("expected an integer, got " + n.atom);
  return std::stoi(n.atom);
}

const char* type_name(const Value& v) {
  static const char* names[] = {"scalar", "hall element", "tensor", "triple tensor", "double element"};
  return names[v.index()];
}

class Evaluator {
 public:
  Evaluator(Session& s, std::optional<int> reflect) : s_(s), reflect_(reflect) {}

  Value eval(const Node& n) {
    if (!n.is_list) return atom(n.atom);
    if (n.items[0].is_list) throw ParseError("operator must be a name");
    const std::string& op = n.items[0].atom;
    const std::vector<Node> args(n.items.begin() + 1, n.items.end());
    HallAlgebra& h = s_.hall();
    DoubleAlgebra& d = s_.dbl();
    if (op == "cls") return h.cls(class_arg(args));
    if (op == "k") return h.k(k0_arg(args));
    if (op == "v") {
      arity(op, args, 1);
      return Scalar::v_power(s_.config().q, to_int(args[0]));
    }
    if (op == "add" || op == "sub") {
      if (args.empty()) throw ParseError(op + " needs arguments");
      Value acc = eval(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) acc = add(acc, eval(args[i]), op == "sub" ? -1 : 1);
      return acc;
    }
    if (op == "neg") {
      arity(op, args, 1);
      return scale(Scalar(-1), eval(args[0]));
    }
    if (op == "hmul" || op == "dmul" || op == "scale") {
      if (args.empty()) throw ParseError(op + " needs arguments");
      Value acc = eval(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) acc = multiply(op, acc, eval(args[i]));
      return acc;
    }
    if (op == "tensor") {
      arity(op, args, 2);
      return HallAlgebra::tensor(hall_arg(op, args[0]), hall_arg(op, args[1]));
    }
    if (op == "coproduct" || op == "delta") {
      arity(op, args, 1);
      return h.coproduct(hall_arg(op, args[0]));
    }
    if (op == "delta2") {
      arity(op, args, 1);
      return d.delta2(hall_arg(op, args[0]));
    }
    if (op == "counit") {
      arity(op, args, 1);
      return h.counit(hall_arg(op, args[0]));
    }
    if (op == "antipode") {
      arity(op, args, 1);
      return h.antipode(hall_arg(op, args[0]));
    }
    if (op == "antipode-inv" || op == "inverse-antipode") {
      arity(op, args, 1);
      return h.inverse_antipode(hall_arg(op, args[0]));
    }
    if (op == "pair") {
      arity(op, args, 2);
      const Value x = eval(args[0]);
      const Value y = eval(args[1]);
      if (x.index() == 1 && y.index() == 1) return h.pairing(std::get<1>(x), std::get<1>(y));
      if (x.index() == 2 && y.index() == 2) return h.pairing(std::get<2>(x), std::get<2>(y));
      throw ParseError("pair needs two hall elements or two tensors");
    }
    if (op == "inj1") {
      arity(op, args, 1);
      return d.inject_left(hall_arg(op, args[0]));
    }
    if (op == "inj2") {
      arity(op, args, 1);
      return d.inject_right(hall_arg(op, args[0]));
    }
    if (op == "straighten") {
      arity(op, args, 2);
      return d.straighten(hall_arg(op, args[0]), hall_arg(op, args[1]));
    }
    if (op == "fstar") {
      if (args.size() != 1 && args.size() != 2) throw ParseError("fstar takes [vertex] element");
      int alpha = 0;
      if (args.size() == 2) {
        alpha = to_int(args[0]);
      } else if (reflect_) {
        alpha = *reflect_;
      } else {
        throw ParseError("fstar needs a vertex: (fstar v x) or --reflect-vertex");
      }
      const Value x = eval(args.back());
      if (x.index() != 4) throw ParseError("fstar needs a double element");
      int range = 1;
      for (const auto& [key, c] : std::get<4>(x)) range = std::max(range, key.left.dim.total() + key.right.dim.total());
      Reflection& r = s_.reflection(alpha, range);
      // Class ids are canonical, so they carry over to the reflection's registry.
      return r.forward.apply(std::get<4>(x));
    }
    throw ParseError("unknown operator " + op);
  }

 private:
  Value atom(const std::string& a) {
    if (a == "v") return Scalar::v(s_.config().q);
    if (a == "one" || a == "unit") return s_.hall().unit();
    if (is_integer(a)) return Scalar(static_cast<long>(to_int(Node{false, a, {}})));
    if (a.find('/') != std::string::npos) {
      try {
        return Scalar(parse_rational(a));
      } catch (const std::exception&) {
        throw ParseError("bad rational " + a);
      }
    }
    throw ParseError("unknown atom " + a);
  }

  static void arity(const std::string& op, const std::vector<Node>& args, std::size_t n) {
    if (args.size() != n) throw ParseError(op + " takes " + std::to_string(n) + " argument(s)");
  }

  HallElement hall_arg(const std::string& op, const Node& n) {
    Value v = eval(n);
    if (v.index() == 0) return std::get<0>(v) * s_.hall().unit();
    if (v.index() != 1) throw ParseError(op + " expects a hall element, got " + type_name(v));
    return std::get<1>(v);
  }

  std::vector<int> ints(const std::vector<Node>& args) {
    if (args.size() == 1 && args[0].is_list) return ints(args[0].items);
    std::vector<int> out;
    for (const Node& n : args) out.push_back(to_int(n));
    return out;
  }

  K0Element k0_arg(const std::vector<Node>& args) {
    const std::vector<int> v = ints(args);
    if (v.size() != s_.category().rank()) throw ParseError("k needs one entry per vertex");
    return K0Element(v);
  }

  ClassId class_arg(const std::vector<Node>& args) {
    Category& cat = s_.category();
    const std::size_t n = cat.rank();
    if (args.size() == 1 && !args[0].is_list && !is_integer(args[0].atom)) {
      const std::string& name = args[0].atom;
      if (name == "S" && n == 1) return cat.simple(0);
      if (name.size() > 1 && name[0] == 'S' && is_integer(name.substr(1))) {
        const int i = std::stoi(name.substr(1));
        if (i < 1 || static_cast<std::size_t>(i) > n) throw ParseError("no simple named " + name);
        return cat.simple(i - 1);
      }
      throw ParseError("unknown class name " + name);
    }
    std::vector<int> v;
    std::optional<int> index;
    if (!args.empty() && args[0].is_list) {
      v = ints(args[0].items);
      if (args.size() == 2) index = to_int(args[1]);
      else if (args.size() != 1) throw ParseError("cls takes (dims) [index]");
    } else {
      v = ints(args);
      if (v.size() == n + 1) {
        index = v.back();
        v.pop_back();
      }
    }
    if (v.size() != n) throw ParseError("cls needs one entry per vertex, plus an optional index");
    const K0Element dim(v);
    if (!dim.is_nonnegative()) throw ParseError("dimension vectors are nonnegative");
    const std::vector<ClassId> classes = cat.enumerate_classes(dim);
    if (!index) {
      if (classes.size() != 1)
        throw ParseError("dimension vector has " + std::to_string(classes.size()) + " classes; give an index");
      return classes.front();
    }
    if (*index < 0 || static_cast<std::size_t>(*index) >= classes.size())
      throw ParseError("class index out of range");
    return classes[static_cast<std::size_t>(*index)];
  }

  static Value scale(const Scalar& c, Value v) {
    return std::visit(
        [&](auto x) -> Value {
          x *= c;
          return x;
        },
        std::move(v));
  }

  static Value add(const Value& x, const Value& y, int sign) {
    if (x.index() != y.index()) throw ParseError(std::string("cannot add ") + type_name(x) + " and " + type_name(y));
    return std::visit(
        [&](const auto& a) -> Value {
          using T = std::decay_t<decltype(a)>;
          const T& b = std::get<T>(y);
          if constexpr (std::is_same_v<T, Scalar>) {
            return sign > 0 ? a + b : a - b;
          } else {
            T out = a;
            out.add(b, Scalar(sign));
            return out;
          }
        },
        x);
  }

  Value multiply(const std::string& op, const Value& x, const Value& y) {
    if (x.index() == 0) return scale(std::get<0>(x), y);
    if (y.index() == 0) return scale(std::get<0>(y), x);
    if (op == "hmul" && x.index() == 1 && y.index() == 1) return s_.hall().mul(std::get<1>(x), std::get<1>(y));
    if (op == "hmul" && x.index() == 2 && y.index() == 2) return s_.hall().tensor_mul(std::get<2>(x), std::get<2>(y));
    if (op == "dmul" && x.index() == 4 && y.index() == 4) return s_.dbl().mul(std::get<4>(x), std::get<4>(y));
    throw ParseError(op + " cannot multiply " + type_name(x) + " by " + type_name(y));
  }

  Session& s_;
  std::optional<int> reflect_;
};

}  // namespace

Value Session::evaluate(const std::string& expression, std::optional<int> reflect_vertex) {
  const Node root = Parser(expression).parse();
  return Evaluator(*this, reflect_vertex).eval(root);
}

// --- objects -------------------------------------------------------------

namespace {

Json matrix_json(const FqMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

Json Session::objects(const K0Element& dim) {
  Category& cat = category();
  if (dim.size() != cat.rank()) throw ConfigError("--dim needs one entry per vertex");
  if (!dim.is_nonnegative()) throw ConfigError("--dim entries must be nonnegative");
  Json classes = Json::array();
  for (const ClassId& c : cat.enumerate_classes(dim)) {
    const ClassInfo& info = cat.info(c);
    Json decomposition = Json::array();
    for (const ClassId& d : info.decomposition) decomposition.push_back(to_json(d));
    Json maps = Json::array();
    for (const FqMatrix& m : info.rep.maps) maps.push_back(matrix_json(m));
    classes.push_back(Json{{"class", to_json(c)},
                           {"aut", info.aut.get_str()},
                           {"indecomposable", info.indecomposable},
                           {"decomposition", std::move(decomposition)},
                           {"maps", std::move(maps)}});
  }
  return Json{{"q", config_.q}, {"dim", to_json(dim)}, {"count", classes.size()}, {"classes", std::move(classes)}};
}

// --- suites --------------------------------------------------------------

std::vector<Report> run_tasks(const std::vector<std::function<std::vector<Report>()>>& tasks, int jobs) {
  const std::size_t n = tasks.size();
  std::vector<std::vector<Report>> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<Report> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (Report& r : results[i]) out.push_back(std::move(r));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf", "pairing", "double", "lemma3", "prop3", "fstar", "k0"};
  return names;
}

namespace {

using Task = std::function<std::vector<Report>()>;

template <class F>
Task one(F f) {
  return [f] { return std::vector<Report>{f()}; };
}

std::vector<ClassId> nonzero_classes(Category& cat, int max_total) {
  std::vector<ClassId> out;
  for (const ClassId& c : cat.classes_up_to(max_total))
    if (!c.is_zero()) out.push_back(c);
  return out;
}

// k_0 and k_{+-e_i}.
std::vector<K0Element> small_k(std::size_t rank) {
  std::vector<K0Element> out{K0Element(rank)};
  for (std::size_t i = 0; i < rank; ++i) {
    out.push_back(K0Element::unit(rank, i));
    out.push_back(-K0Element::unit(rank, i));
  }
  return out;
}

Json basis_json(const Basis& b) { return instance_json(b); }

Json key_json(const DoubleKey& x) {
  return Json{{"k", to_json(x.k)}, {"left", to_json(x.left)}, {"right", to_json(x.right)}};
}

HallElement counit_left(const TensorElement& t) {
  HallElement out;
  for (const auto& [key, c] : t)
    if (key.left.cls.is_zero()) out.add(Basis{key.right.k, key.right.cls}, c);
  return out;
}

HallElement counit_right(const TensorElement& t) {
  HallElement out;
  for (const auto& [key, c] : t)
    if (key.right.cls.is_zero()) out.add(Basis{key.left.k, key.left.cls}, c);
  return out;
}

void hopf_tasks(Session& s, int r, std::vector<Task>& tasks) {
  HallAlgebra& h = s.hall();
  Category& cat = s.category();
  for (const ClassId& c : cat.classes_up_to(r)) {
    const Json inst{{"class", to_json(c)}};
    tasks.push_back([&h, c, inst] {
      const HallElement x = h.cls(c);
      const TensorElement d = h.coproduct(x);
      std::vector<Report> out;
      out.push_back(make_report("coassociativity", inst, h.coproduct_left(d), h.coproduct_right(d)));
      out.push_back(make_report("counit-left", inst, counit_left(d), x));
      out.push_back(make_report("counit-right", inst, counit_right(d), x));
      HallElement sl, sr;
      for (const auto& [t, cf] : d) {
        sl.add(h.mul(h.antipode(t.left), HallElement(t.right)), cf);
        sr.add(h.mul(HallElement(t.left), h.antipode(t.right)), cf);
      }
      const HallElement eps = h.counit(x) * h.unit();
      out.push_back(make_report("antipode-left", inst, sl, eps));
      out.push_back(make_report("antipode-right", inst, sr, eps));
      out.push_back(make_report("inverse-antipode", inst, h.inverse_antipode(h.antipode(x)), x));
      out.push_back(make_report("antipode-inverse", inst, h.antipode(h.inverse_antipode(x)), x));
      return out;
    });
  }
  const std::vector<ClassId> nz = nonzero_classes(cat, r);
  for (const ClassId& a : nz)
    for (const ClassId& b : nz)
      for (const ClassId& c : nz) {
        if (a.dim.total() + b.dim.total() + c.dim.total() > r) continue;
        tasks.push_back(one([&h, a, b, c] {
          const HallElement x = h.cls(a), y = h.cls(b), z = h.cls(c);
          return make_report("associativity", Json{{"A", to_json(a)}, {"B", to_json(b)}, {"C", to_json(c)}},
                             h.mul(h.mul(x, y), z), h.mul(x, h.mul(y, z)));
        }));
      }
  if (r < 3) return;
  const Quiver& quiver = cat.quiver();
  for (int i = 0; i < quiver.vertex_count(); ++i)
    for (int j = 0; j < quiver.vertex_count(); ++j) {
      if (i == j) continue;
      int edges = 0;
      for (const Arrow& a : quiver.arrows())
        if ((a.source == i && a.target == j) || (a.source == j && a.target == i)) ++edges;
      if (edges != 1) continue;
      tasks.push_back(one([&h, &cat, i, j] {
        const HallElement si = h.cls(cat.simple(i)), sj = h.cls(cat.simple(j));
        const Scalar vq = Scalar::v(h.q());
        HallElement lhs = h.mul(h.mul(si, si), sj);
        lhs.add(h.mul(h.mul(si, sj), si), -(vq + vq.inverse()));
        lhs.add(h.mul(h.mul(sj, si), si));
        return make_report("quantum-serre", Json{{"i", i}, {"j", j}}, lhs, HallElement());
      }));
    }
}

void pairing_tasks(Session& s, int r, std::vector<Task>& tasks) {
  HallAlgebra& h = s.hall();
  Category& cat = s.category();
  std::vector<Basis> basis;
  for (const ClassId& c : cat.classes_up_to(r))
    for (const K0Element& k : small_k(cat.rank())) basis.push_back(Basis{k, c});
  for (const Basis& a : basis) {
    tasks.push_back([&h, a] {
      const HallElement x(a);
      const Json inst{{"a", basis_json(a)}};
      return std::vector<Report>{make_report("h1-left", inst, Scalar(h.pairing(h.unit(), x)), h.counit(x)),
                                 make_report("h1-right", inst, Scalar(h.pairing(x, h.unit())), h.counit(x))};
    });
  }
  // Both sides vanish unless the dimension vectors add up, so only graded
  // triples are enumerated.
  for (const Basis& a : basis)
    for (const Basis& b : basis)
      for (const Basis& c : basis) {
        if (b.cls.dim + c.cls.dim != a.cls.dim) continue;
        tasks.push_back([&h, a, b, c] {
          const HallElement x(a), y(b), z(c);
          std::vector<Report> out;
          out.push_back(make_report("h2", Json{{"a", basis_json(a)}, {"b", basis_json(b)}, {"b2", basis_json(c)}},
                                    h.pairing(x, h.mul(y, z)),
                                    h.pairing(h.coproduct(x), HallAlgebra::tensor(y, z))));
          out.push_back(make_report("h33", Json{{"a", basis_json(b)}, {"a2", basis_json(c)}, {"b", basis_json(a)}},
                                    h.pairing(h.mul(y, z), x),
                                    h.pairing(HallAlgebra::tensor(y, z), h.coproduct(x))));
          return out;
        });
      }
  for (const Basis& a : basis)
    for (const Basis& b : basis) {
      if (a.cls.dim != b.cls.dim) continue;
      tasks.push_back(one([&h, a, b] {
        return make_report("h44", Json{{"a", basis_json(a)}, {"b", basis_json(b)}},
                           h.pairing(h.antipode(HallElement(a)), HallElement(b)),
                           h.pairing(HallElement(a), h.antipode(HallElement(b))));
      }));
    }
}

std::vector<Basis> generator_basis(Session& s, int r) {
  Category& cat = s.category();
  std::vector<Basis> out;
  const K0Element zero(cat.rank());
  for (const K0Element& k : small_k(cat.rank()))
    if (!k.is_zero()) out.push_back(Basis{k, cat.zero_class()});
  for (const ClassId& c : nonzero_classes(cat, r)) out.push_back(Basis{zero, c});
  return out;
}

void double_tasks(Session& s, int r, std::vector<Task>& tasks) {
  HallAlgebra& h = s.hall();
  DoubleAlgebra& d = s.dbl();
  Category& cat = s.category();
  const std::vector<Basis> gens = generator_basis(s, r);
  for (const Basis& a : gens)
    for (const Basis& b : gens) tasks.push_back(one([&d, a, b] { return d.verify_d5(a, b); }));
  const std::vector<ClassId> nz = nonzero_classes(cat, r);
  for (const ClassId& a : nz)
    for (const ClassId& b : nz) tasks.push_back([&d, a, b] { return d.verify_eq34(a, b); });
  const std::vector<DoubleKey> keys = double_generators(d, r);
  for (const DoubleKey& x : keys)
    for (const DoubleKey& y : keys)
      for (const DoubleKey& z : keys) {
        if (x.left.dim.total() + y.left.dim.total() + z.left.dim.total() > r) continue;
        if (x.right.dim.total() + y.right.dim.total() + z.right.dim.total() > r) continue;
        tasks.push_back(one([&d, x, y, z] {
          const DoubleElement a(x), b(y), c(z);
          return make_report("double-associativity", Json{{"x", key_json(x)}, {"y", key_json(y)}, {"z", key_json(z)}},
                             d.mul(d.mul(a, b), c), d.mul(a, d.mul(b, c)));
        }));
      }
  for (int i = 0; i < static_cast<int>(cat.rank()); ++i) {
    tasks.push_back(one([&h, &d, &cat, i] {
      const ClassId simple = cat.simple(i);
      const HallElement x = h.cls(simple);
      DoubleElement lhs = d.mul(d.inject_left(x), d.inject_right(x));
      lhs -= d.mul(d.inject_right(x), d.inject_left(x));
      // Hand expansion of the straightening rule for a simple with no loop.
      const Scalar c = Scalar(static_cast<long>(h.q())) / Scalar(static_cast<long>(h.q() - 1));
      DoubleElement rhs = d.inject_left(h.k(-simple.dim));
      rhs -= d.inject_left(h.k(simple.dim));
      rhs *= c;
      return make_report("simple-commutator", Json{{"vertex", i}}, lhs, rhs);
    }));
  }
}

void lemma3_tasks(Session& s, int r, std::vector<Task>& tasks) {
  DoubleAlgebra& d = s.dbl();
  Category& cat = s.category();
  const std::vector<ClassId> all = cat.classes_up_to(r);
  for (const ClassId& a : all)
    for (const ClassId& b : all)
      for (const ClassId& n : all) {
        if (!n.dim.fits_in(b.dim)) continue;
        for (const ClassId& l : all) {
          if (!l.dim.fits_in(a.dim) || a.dim - l.dim != b.dim - n.dim) continue;
          tasks.push_back(one([&d, &cat, a, b, n, l] {
            const Integer ext = cat.ext1_count(cat.representative(l), cat.representative(n));
            const Scalar rhs = d.triangle_hall_number(b, a, n, l) / to_scalar(ext);
            return make_report("lemma3", Json{{"A", to_json(a)}, {"B", to_json(b)}, {"N", to_json(n)}, {"L", to_json(l)}},
                               d.lemma3_lhs(b, a, n, l), rhs);
          }));
        }
      }
}

void prop3_tasks(Session& s, int r, std::vector<Task>& tasks) {
  DoubleAlgebra& d = s.dbl();
  Category& cat = s.category();
  const std::vector<ClassId> nz = nonzero_classes(cat, r);
  for (const ClassId& a : nz)
    for (const ClassId& b : nz) {
      if (!cat.within_caps(a.dim + b.dim)) continue;
      tasks.push_back([&d, a, b] { return d.verify_prop3_relations(a, b); });
    }
}

std::optional<int> homogeneous_shift(const DerivedGrading& g, Category& cat, const ClassId& c) {
  try {
    return g.shift_of(cat, c);
  } catch (const UngradedClass&) {
    return std::nullopt;
  }
}

void fstar_tasks(Session& s, int r, int alpha, std::vector<Task>& tasks) {
  Reflection& R = s.reflection(alpha, r);
  FStar& f = R.forward;
  FStar& g = R.backward;
  Category& src = R.source.category;
  HallAlgebra& sh = R.source.hall;
  const DerivedGrading& grading = f.grading();
  tasks.push_back([&src, &grading] { return check_hom_ext_pattern(src, grading); });
  for (const auto& [m, gm] : grading.indecomposables) {
    if (m.dim.total() > r) continue;
    const ClassId mm = m;
    const GradedImage img = gm;
    tasks.push_back(one([&g, mm, img] {
      const auto& back = g.grading().indecomposables;
      auto it = back.find(img.image);
      Json lhs = it == back.end() ? Json(nullptr) : Json{{"shift", img.shift + it->second.shift}, {"class", to_json(it->second.image)}};
      Json rhs{{"shift", 0}, {"class", to_json(mm)}};
      const bool pass = lhs == rhs;
      return Report{"reflection-round-trip", Json{{"M", to_json(mm)}}, pass, std::move(lhs), std::move(rhs)};
    }));
  }
  const std::vector<ClassId> nz = nonzero_classes(src, r);
  for (const ClassId& a : nz)
    for (const ClassId& b : nz) {
      if (a.dim.total() + b.dim.total() > r) continue;
      auto sa = homogeneous_shift(grading, src, a), sb = homogeneous_shift(grading, src, b);
      if (!sa || !sb || *sa >= *sb) continue;
      tasks.push_back(one([&sh, &grading, a, b] { return check_sum_factorization(sh, grading, a, b); }));
    }
  for (const ClassId& a : src.classes_up_to(r)) {
    tasks.push_back(one([&sh, &grading, a] {
      const HallElement x = sh.cls(a);
      return make_report("normal-form", Json{{"class", to_json(a)}}, expand(sh, normal_form(sh, grading, Basis{sh.zero_k(), a})), x);
    }));
  }
  const std::vector<DoubleKey> gens = double_generators(R.source.dbl, r);
  for (const DoubleKey& x : gens) tasks.push_back(one([&f, &g, x] { return check_inverse(f, g, x); }));
  for (const DoubleKey& x : gens)
    for (const DoubleKey& y : gens) {
      if (x.left.dim.total() + y.left.dim.total() > r) continue;
      if (x.right.dim.total() + y.right.dim.total() > r) continue;
      tasks.push_back(one([&f, x, y] { return check_homomorphism(f, x, y); }));
    }
  for (const ClassId& a : nz)
    for (const ClassId& b : nz) {
      if (a.dim.total() + b.dim.total() > r) continue;
      tasks.push_back([&f, a, b] { return check_relations_preserved(f, a, b); });
    }
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

void k0_tasks(Session& s, std::optional<int> reflect, std::vector<Task>& tasks) {
  const SessionConfig& cfg = s.config();
  const Quiver& quiver = cfg.quiver;
  std::vector<int> vertices;
  if (reflect) {
    if (*reflect < 0 || *reflect >= quiver.vertex_count()) throw ConfigError("reflection vertex out of range");
    vertices.push_back(*reflect);
  } else {
    for (int v = 0; v < quiver.vertex_count(); ++v)
      if (quiver.is_source(v) || quiver.is_sink(v)) vertices.push_back(v);
  }
  for (int alpha : vertices) {
    tasks.push_back([cfg, alpha] {
      if (!cfg.quiver.is_source(alpha) && !cfg.quiver.is_sink(alpha))
        throw NotASource("vertex " + std::to_string(alpha) + " is neither a source nor a sink");
      Category src(cfg.quiver, cfg.q, cfg.caps, cfg.cache_dir);
      Category tgt(cfg.quiver.reflected_at(alpha), cfg.q, cfg.caps, cfg.cache_dir);
      const IntMatrix induced = k0_reflection_matrix(src, tgt, alpha);
      const IntMatrix expected = cartan_reflection(cfg.quiver, alpha);
      const std::size_t n = induced.size();
      IntMatrix identity(n, std::vector<int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
      const Json inst{{"vertex", alpha}};
      std::vector<Report> out;
      out.push_back(Report{"k0-reflection", inst, induced == expected, matrix_to_json(induced), matrix_to_json(expected)});
      const IntMatrix square = matrix_product(induced, induced);
      out.push_back(Report{"k0-involution", inst, square == identity, matrix_to_json(square), matrix_to_json(identity)});
      // (s m | s n) on the reflected quiver equals (m | n) on the original.
      Json lhs = Json::array(), rhs = Json::array();
      for (std::size_t i = 0; i < n; ++i) {
        Json lrow = Json::array(), rrow = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
          const K0Element ei = K0Element::unit(n, i), ej = K0Element::unit(n, j);
          lrow.push_back(symmetric_form_additive(tgt.quiver(), apply_matrix(induced, ei), apply_matrix(induced, ej)));
          rrow.push_back(symmetric_form_additive(src.quiver(), ei, ej));
        }
        lhs.push_back(std::move(lrow));
        rhs.push_back(std::move(rrow));
      }
      const bool pass = lhs == rhs;
      out.push_back(Report{"k0-symmetric-form", inst, pass, std::move(lhs), std::move(rhs)});
      return out;
    });
  }
}

}  // namespace

std::vector<Report> Session::verify(const std::string& suite, int max_total, std::optional<int> reflect_vertex,
                                    int jobs) {
  std::vector<Task> tasks;
  if (suite == "hopf") hopf_tasks(*this, max_total, tasks);
  else if (suite == "pairing") pairing_tasks(*this, max_total, tasks);
  else if (suite == "double") double_tasks(*this, max_total, tasks);
  else if (suite == "lemma3") lemma3_tasks(*this, max_total, tasks);
  else if (suite == "prop3") prop3_tasks(*this, max_total, tasks);
  else if (suite == "fstar") {
    if (!reflect_vertex) throw ConfigError("the fstar suite needs --reflect-vertex");
    fstar_tasks(*this, max_total, *reflect_vertex, tasks);
  } else if (suite == "k0") k0_tasks(*this, reflect_vertex, tasks);
  else throw ConfigError("unknown suite " + suite);
  return run_tasks(tasks, jobs);
}

}  // namespace hallforge
