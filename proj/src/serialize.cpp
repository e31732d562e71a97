#include "hallforge/serialize.hpp"

namespace hallforge {

Json to_json(const Scalar& s) {
  return Json{{"a", rational_string(s.a())}, {"b", rational_string(s.b())}};
}

Json to_json(const K0Element& k) { return Json(k.coords()); }

Json to_json(const ClassId& c) { return Json{{"dim", c.dim.coords()}, {"index", c.index}}; }

Json to_json(const HallElement& x) {
  Json terms = Json::array();
  for (const auto& [b, c] : x) {
    terms.push_back(Json{{"k", to_json(b.k)}, {"left", to_json(b.cls)}, {"right", nullptr}, {"coeff", to_json(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const TensorElement& x) {
  Json terms = Json::array();
  for (const auto& [t, c] : x) {
    terms.push_back(Json{{"k", to_json(t.left.k)},
                         {"left", to_json(t.left.cls)},
                         {"k2", to_json(t.right.k)},
                         {"right", to_json(t.right.cls)},
                         {"coeff", to_json(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const TripleElement& x) {
  Json terms = Json::array();
  for (const auto& [t, c] : x) {
    Json legs = Json::array();
    for (const Basis* b : {&t.first, &t.second, &t.third})
      legs.push_back(Json{{"k", to_json(b->k)}, {"class", to_json(b->cls)}});
    terms.push_back(Json{{"legs", std::move(legs)}, {"coeff", to_json(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Scalar scalar_from_json(const Json& j, int q) {
  return Scalar(q, parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()));
}

ClassId class_from_json(const Json& j) {
  return ClassId{K0Element(j.at("dim").get<std::vector<int>>()), j.at("index").get<std::uint32_t>()};
}

Json Report::to_json() const {
  return Json{{"relation", relation}, {"instance", instance}, {"pass", pass}, {"lhs", lhs}, {"rhs", rhs}};
}

}  // namespace hallforge
