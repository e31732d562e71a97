// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hallforge/session.hpp"

using namespace hallforge;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void add(const Report& r) {
    ++checked;
    if (!r.pass && failed++ == 0) first_failure = r.to_json().dump();
  }
  void add(const std::vector<Report>& rs) {
    for (const Report& r : rs) add(r);
  }
  void add(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

SessionConfig config(Quiver quiver, int q) {
  SessionConfig c;
  c.quiver = std::move(quiver);
  c.q = q;
  return c;
}

std::vector<Report> suite(const SessionConfig& c, const std::string& name, int r,
                          std::optional<int> vertex = std::nullopt) {
  Session s(c);
  return s.verify(name, r, vertex, 1);
}

std::vector<Report> only(const std::vector<Report>& rs, const std::set<std::string>& names) {
  std::vector<Report> out;
  for (const Report& r : rs)
    if (names.count(r.relation)) out.push_back(r);
  return out;
}

std::vector<Report> relations_under_fstar(const std::vector<Report>& rs) {
  std::vector<Report> out;
  for (const Report& r : rs)
    if (r.relation == "fstar-hom" || r.relation == "gstar-fstar" || r.relation.rfind("F*", 0) == 0)
      out.push_back(r);
  return out;
}

void associativity(Tally& t, const Quiver& quiver, int q, int max_total) {
  Category cat(quiver, q);
  HallAlgebra h(cat);
  std::vector<ClassId> cls;
  for (const ClassId& c : cat.classes_up_to(max_total))
    if (!c.is_zero()) cls.push_back(c);
  for (const ClassId& a : cls)
    for (const ClassId& b : cls)
      for (const ClassId& c : cls) {
        if (a.dim.total() + b.dim.total() + c.dim.total() > max_total) continue;
        const HallElement x = h.cls(a), y = h.cls(b), z = h.cls(c);
        t.add(make_report("associativity", Json{{"q", q}, {"A", to_json(a)}, {"B", to_json(b)}, {"C", to_json(c)}},
                          h.mul(h.mul(x, y), z), h.mul(x, h.mul(y, z))));
      }
}

bool pure_k(const DoubleElement& x) {
  for (const auto& [key, c] : x)
    if (!key.left.is_zero() || !key.right.is_zero()) return false;
  return true;
}

int run_criterion(int n, const std::string& title, const std::function<void(Tally&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::string error;
  try {
    body(t);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = error.empty() && t.failed == 0 && t.checked > 0;
  std::printf("%s %2d %s: %zu checks, %zu failed, %.2fs\n", pass ? "PASS" : "FAIL", n, title.c_str(), t.checked,
              t.failed, secs);
  if (!error.empty()) std::printf("     error: %s\n", error.c_str());
  if (!t.first_failure.empty()) std::printf("     first failure: %s\n", t.first_failure.c_str());
  std::fflush(stdout);
  return pass ? 0 : 1;
}

}  // namespace

int main() {
  const Quiver a2 = Quiver::linear_a(2);
  const Quiver a2r = a2.reflected_at(0);
  const Quiver a3 = Quiver::linear_a(3);
  const Quiver kr = Quiver::kronecker();
  const Quiver one = Quiver::single_vertex();
  int failures = 0;

  failures += run_criterion(1, "Hall associativity (A2 total<=4, Kronecker total<=3, q=2,3)", [&](Tally& t) {
    for (int q : {2, 3}) {
      associativity(t, a2, q, 4);
      associativity(t, kr, q, 3);
    }
  });

  failures += run_criterion(2, "quantum Serre on A2 (q=2,3)", [&](Tally& t) {
    for (int q : {2, 3}) t.add(only(suite(config(a2, q), "hopf", 3), {"quantum-serre"}));
  });

  failures += run_criterion(3, "pairing axioms h1, h2, h33 (A2 and one vertex, q=2, total<=3)", [&](Tally& t) {
    for (const Quiver& quiver : {a2, one})
      t.add(only(suite(config(quiver, 2), "pairing", 3), {"h1-left", "h1-right", "h2", "h33"}));
  });

  failures += run_criterion(4, "Hopf coherence on A2 q=2, exactly one antipode order passes", [&](Tally& t) {
    const std::vector<Report> asc = suite(config(a2, 2), "hopf", 3);
    t.add(asc);
    SessionConfig desc = config(a2, 2);
    desc.antipode_order = AntipodeOrder::descending;
    bool desc_fails = false;
    for (const Report& r : suite(desc, "hopf", 3)) desc_fails |= !r.pass;
    t.add(desc_fails, "descending antipode order also satisfies every hopf check");
  });

  failures += run_criterion(5, "double: d5, associativity, one-vertex commutator", [&](Tally& t) {
    t.add(suite(config(a2, 2), "double", 3));
    for (int q : {2, 3}) {
      t.add(suite(config(one, q), "double", 3));
      Session s(config(one, q));
      DoubleAlgebra& d = s.dbl();
      const HallElement x = s.hall().cls(s.category().simple(0));
      DoubleElement c = d.mul(d.inject_left(x), d.inject_right(x));
      c -= d.mul(d.inject_right(x), d.inject_left(x));
      t.add(pure_k(c) && !c.is_zero(), "commutator has a class term at q=" + std::to_string(q));
    }
  });

  failures += run_criterion(6, "filtration sum vs kernel-cokernel count on A2 q=2, total<=3", [&](Tally& t) {
    t.add(suite(config(a2, 2), "lemma3", 3));
  });

  failures += run_criterion(7, "graded structure: hom/ext pattern, sum factorization, normal form", [&](Tally& t) {
    const std::set<std::string> names{"hom-ext-pattern", "sum-factorization", "normal-form"};
    for (int v : {0, 1}) {
      t.add(only(suite(config(a2, 2), "fstar", 3, v), names));
      t.add(only(suite(config(a2r, 2), "fstar", 3, v), names));
    }
    t.add(only(suite(config(a3, 2), "fstar", 3, 0), names));
  });

  failures += run_criterion(8, "F* homomorphism, relations, G*F* = id (A2 both orientations, A3 source)", [&](Tally& t) {
    for (int v : {0, 1}) {
      t.add(relations_under_fstar(suite(config(a2, 2), "fstar", 3, v)));
      t.add(relations_under_fstar(suite(config(a2r, 2), "fstar", 3, v)));
    }
    t.add(relations_under_fstar(suite(config(a3, 2), "fstar", 3, 0)));
  });

  failures += run_criterion(9, "K0 reflection matrices on A2 and A3", [&](Tally& t) {
    t.add(suite(config(a2, 2), "k0", 3));
    t.add(suite(config(a3, 2), "k0", 3));
  });

  failures += run_criterion(10, "Kronecker dim (1,1) has q+2 classes (q=2,3)", [&](Tally& t) {
    for (int q : {2, 3}) {
      Category cat(kr, q);
      const std::size_t n = cat.enumerate_classes(K0Element{1, 1}).size();
      t.add(n == static_cast<std::size_t>(q + 2), "q=" + std::to_string(q) + " count=" + std::to_string(n));
    }
  });

  return failures == 0 ? 0 : 1;
}
