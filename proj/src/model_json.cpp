#include "sphemb/model_json.hpp"

namespace sphemb {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Json to_json(const Character& chi) {
  Json a = Json::array();
  for (const auto& c : chi.coords()) a.push_back(to_json(c));
  return a;
}

Json to_json(const Covector& f) {
  Json a = Json::array();
  for (const auto& c : f.coords()) a.push_back(to_json(c));
  return a;
}

Json to_json(const Divisor& d) {
  Json o = Json::object();
  for (const auto& [label, k] : d.terms()) o[label.id] = to_json(k);
  return o;
}

Json to_json(const DivisorClass& c) {
  Json free = Json::array();
  for (const auto& x : c.free) free.push_back(to_json(x));
  Json torsion = Json::array();
  for (const auto& x : c.torsion) torsion.push_back(to_json(x));
  return Json{{"free", free}, {"torsion", torsion}};
}

Json to_json(const AbelianGroupPresentation& g) {
  Json factors = Json::array();
  for (const auto& f : g.invariant_factors) factors.push_back(to_json(f));
  return Json{{"free_rank", g.free_rank}, {"invariant_factors", factors}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw UsageError("not an integer: " + j.dump());
    return z;
  }
  throw UsageError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("expected a rational string, got " + j.dump());
}

namespace {

Character character_from_json(const LatticePtr& lattice, const Json& j) {
  IntegerVector c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return Character(lattice, std::move(c));
}

Covector covector_from_json(const LatticePtr& lattice, const Json& j) {
  RationalVector c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Covector(lattice, std::move(c));
}

}  // namespace

Json model_to_json(const SphericalDivisorModel& model) {
  Json doc;
  doc["name"] = model.name;
  doc["lattice"] = Json{{"rank", model.lattice->rank()}, {"labels", model.lattice->labels()}};
  Json basis = Json::array();
  for (const auto& b : model.basis_characters) basis.push_back(to_json(b));
  doc["basis_characters"] = basis;
  Json roots = Json::array();
  for (const auto& r : model.simple_roots.roots())
    roots.push_back(Json{{"label", r.label}, {"root", to_json(r.root)}, {"coroot", to_json(r.coroot)}});
  doc["simple_roots"] = roots;
  Json colors = Json::array();
  for (const auto& c : model.colors)
    colors.push_back(Json{{"id", c.label.id},
                          {"functional", to_json(c.functional)},
                          {"canonical_coefficient", to_json(c.canonical_coefficient)}});
  doc["colors"] = colors;
  Json boundaries = Json::array();
  for (const auto& b : model.boundaries)
    boundaries.push_back(Json{{"id", b.label.id}, {"valuation", to_json(b.valuation)}});
  doc["boundaries"] = boundaries;
  Json aliases = Json::array();
  for (const auto& a : model.aliases) aliases.push_back(Json{{"alias", a.alias}, {"target", a.target}});
  doc["aliases"] = aliases;
  doc["provisional"] = model.provisional;
  return doc;
}

SphericalDivisorModel model_from_json(const Json& doc) {
  try {
    SphericalDivisorModel m;
    m.name = doc.value("name", std::string{});
    const auto& lat = doc.at("lattice");
    auto labels = lat.at("labels").get<std::vector<std::string>>();
    if (lat.at("rank").get<std::size_t>() != labels.size())
      throw UsageError("lattice rank does not match label count");
    m.lattice = make_lattice(std::move(labels));
    for (const auto& b : doc.at("basis_characters")) m.basis_characters.push_back(character_from_json(m.lattice, b));
    std::vector<SimpleRoot> roots;
    for (const auto& r : doc.at("simple_roots"))
      roots.push_back({r.at("label").get<std::string>(), character_from_json(m.lattice, r.at("root")),
                       covector_from_json(m.lattice, r.at("coroot"))});
    m.simple_roots = SimpleRootSet(m.lattice, std::move(roots));
    for (const auto& c : doc.at("colors"))
      m.colors.push_back({color_label(c.at("id").get<std::string>()), covector_from_json(m.lattice, c.at("functional")),
                          integer_from_json(c.at("canonical_coefficient"))});
    for (const auto& b : doc.at("boundaries"))
      m.boundaries.push_back(
          {boundary_label(b.at("id").get<std::string>()), covector_from_json(m.lattice, b.at("valuation"))});
    if (doc.contains("aliases"))
      for (const auto& a : doc.at("aliases"))
        m.aliases.push_back({a.at("alias").get<std::string>(), a.at("target").get<std::string>()});
    m.provisional = doc.value("provisional", false);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed model document: ") + e.what());
  }
}

}  // namespace sphemb
