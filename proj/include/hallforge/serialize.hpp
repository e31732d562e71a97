#pragma once

#include <string>

#include "hallforge/hall.hpp"
#include "json.hpp"

namespace hallforge {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const K0Element& k);
Json to_json(const ClassId& c);  // {"dim": [...], "index": n}
Json to_json(const HallElement& x);
Json to_json(const TensorElement& x);
Json to_json(const TripleElement& x);

Scalar scalar_from_json(const Json& j, int q);
ClassId class_from_json(const Json& j);

// One checked instance of a relation; serialized as a JSON line.
struct Report {
  std::string relation;
  Json instance;
  bool pass = false;
  Json lhs;
  Json rhs;

  Json to_json() const;
};

template <class Element>
Report make_report(std::string relation, Json instance, const Element& lhs, const Element& rhs) {
  return Report{std::move(relation), std::move(instance), lhs == rhs, to_json(lhs), to_json(rhs)};
}

}  // namespace hallforge
