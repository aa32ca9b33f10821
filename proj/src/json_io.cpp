#include "gral/json_io.hpp"

#include <fstream>
#include <map>

namespace gral::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::invalid_input, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const CoefficientRing& ring) { return ring.name(); }

CoefficientRing ring_from_json(const json& j) {
  if (j.is_number_unsigned()) return CoefficientRing::prime_field(j.get<std::uint64_t>());
  return CoefficientRing::parse(str(j, "ring"));
}

json to_json(const Scalar& s) {
  if (s.ring().is_prime_field()) return s.residue();
  return s.to_string();
}

Scalar scalar_from_json(const CoefficientRing& ring, const json& j) {
  if (j.is_number_integer()) return Scalar::from_int(ring, j.get<long long>());
  if (j.is_string()) return Scalar::parse(ring, j.get<std::string>());
  bad("scalar must be an integer or a string");
}

// ---------------------------------------------------------------------------
// Categories

json to_json(const FiniteCategory& c) {
  json objects = json::array();
  json identity = json::object();
  for (auto o : c.objects()) {
    objects.push_back(c.object_name(o));
    identity[c.object_name(o)] = c.name(c.identity(o));
  }
  json morphisms = json::array();
  for (const auto& m : c.morphism_specs()) morphisms.push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  json compose = json::array();
  for (const auto& e : c.composition_specs()) compose.push_back({e.s, e.t, e.st});
  return {{"objects", objects}, {"morphisms", morphisms}, {"identity", identity}, {"compose", compose}};
}

FiniteCategory category_from_json(const json& j) {
  if (j.is_object() && j.contains("quiver")) {
    const json& q = j.at("quiver");
    Quiver quiver;
    for (const auto& v : field(q, "vertices")) quiver.vertices.push_back(str(v, "vertex"));
    std::size_t k = 0;
    for (const auto& a : field(q, "arrows")) {
      ++k;
      std::string id = a.contains("id") ? str(a.at("id"), "arrow id") : "a" + std::to_string(k);
      quiver.arrows.push_back({id, str(field(a, "from"), "arrow source"), str(field(a, "to"), "arrow target")});
    }
    return categories::path_category(quiver);
  }
  std::vector<std::string> objects;
  for (const auto& o : field(j, "objects")) objects.push_back(str(o, "object"));
  std::vector<FiniteCategory::MorphismSpec> morphisms;
  for (const auto& m : field(j, "morphisms"))
    morphisms.push_back({str(field(m, "id"), "morphism id"), str(field(m, "dom"), "dom"), str(field(m, "cod"), "cod")});
  std::map<std::string, std::string> identity;
  for (const auto& [k, v] : field(j, "identity").items()) identity[k] = str(v, "identity");
  std::vector<FiniteCategory::CompositionSpec> compose;
  for (const auto& e : field(j, "compose")) {
    if (!e.is_array() || e.size() != 3) bad("compose entries are [s, t, st]");
    compose.push_back({str(e[0], "s"), str(e[1], "t"), str(e[2], "st")});
  }
  return FiniteCategory(objects, morphisms, identity, compose);
}

// ---------------------------------------------------------------------------
// Elements and algebras

json element_to_json(const Algebra& a, const Element& e) {
  json out = json::object();
  for (const auto& [i, c] : e.terms()) out[a.basis_name(i)] = to_json(c);
  return out;
}

json vector_to_json(const Algebra& a, const Vector& v) {
  return element_to_json(a, Element::from_dense(a.ring(), v));
}

namespace {

Element element_in(const CoefficientRing& ring, const std::vector<std::string>& basis,
                   const std::map<std::string, std::size_t>& index, const json& j) {
  if (!j.is_object()) bad("elements are objects {basis id: scalar}");
  Element e(ring, basis.size());
  for (const auto& [k, v] : j.items()) {
    auto it = index.find(k);
    if (it == index.end()) bad("unknown basis id '" + k + "'");
    e.set(it->second, e.coeff(it->second) + scalar_from_json(ring, v));
  }
  return e;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& basis) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  return index;
}

json structure_to_json(const Algebra& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.product(i, j).is_zero())
        out.push_back({a.basis_name(i), a.basis_name(j), element_to_json(a, a.product(i, j))});
  return out;
}

}  // namespace

Element element_from_json(const Algebra& a, const json& j) {
  return element_in(a.ring(), a.basis(), index_of(a.basis()), j);
}

json to_json(const Algebra& a) {
  return {{"ring", to_json(a.ring())},
          {"basis", a.basis()},
          {"structure", structure_to_json(a)},
          {"unit", element_to_json(a, a.unit())}};
}

Algebra algebra_from_json(const json& j, const CoefficientRing& fallback) {
  const CoefficientRing ring = j.contains("ring") ? ring_from_json(j.at("ring")) : fallback;
  std::vector<std::string> basis;
  for (const auto& b : field(j, "basis")) basis.push_back(str(b, "basis id"));
  const auto index = index_of(basis);
  if (index.size() != basis.size()) bad("duplicate basis id");
  std::map<std::pair<std::size_t, std::size_t>, Element> table;
  for (const auto& e : field(j, "structure")) {
    if (!e.is_array() || e.size() != 3) bad("structure entries are [i, j, {k: scalar}]");
    const std::string bi = str(e[0], "basis id");
    const std::string bj = str(e[1], "basis id");
    if (!index.contains(bi) || !index.contains(bj)) bad("structure entry names an unknown basis id");
    const auto key = std::make_pair(index.at(bi), index.at(bj));
    if (table.contains(key)) bad("structure entry (" + bi + ", " + bj + ") given twice");
    table.emplace(key, element_in(ring, basis, index, e[2]));
  }
  Element unit = element_in(ring, basis, index, field(j, "unit"));
  return Algebra::from_table(ring, std::move(basis), table, std::move(unit));
}

Algebra algebra_from_json(const json& j) {
  if (!j.contains("ring")) bad("missing field 'ring'");
  return algebra_from_json(j, ring_from_json(j.at("ring")));
}

json to_json(const GradedAlgebra& a) {
  json out = to_json(a.algebra());
  out["category"] = to_json(a.category());
  json degree = json::object();
  for (std::size_t i = 0; i < a.dim(); ++i) degree[a.algebra().basis_name(i)] = a.category().name(a.degree(i));
  out["degree"] = degree;
  return out;
}

GradedAlgebra graded_algebra_from_json(const json& j) {
  Algebra alg = algebra_from_json(j);
  FiniteCategory cat = category_from_json(field(j, "category"));
  const json& deg = field(j, "degree");
  std::vector<MorphismId> degree;
  for (const auto& b : alg.basis()) {
    if (!deg.contains(b)) bad("basis id '" + b + "' has no degree");
    degree.push_back(cat.at(str(deg.at(b), "degree")));
  }
  return GradedAlgebra(std::move(alg), std::move(cat), std::move(degree));
}

// ---------------------------------------------------------------------------
// Crossed systems

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const CoefficientRing& ring, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("matrix has the wrong number of rows");
  Matrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(ring, j[r][c]);
  }
  return m;
}

json to_json(const CrossedSystem& cs) {
  const auto& cat = cs.category;
  json components = json::object();
  for (auto o : cat.objects()) {
    json a = to_json(cs.component(o));
    a.erase("ring");
    components[cat.object_name(o)] = a;
  }
  json sigma = json::object();
  for (auto s : cat.morphisms()) sigma[cat.name(s)] = to_json(cs.sigma_at(s));
  json alpha = json::array();
  for (const auto& [s, t] : cat.composable_pairs()) {
    const Element& a = cs.alpha_at(s, t);
    if (a == cs.target(s).unit()) continue;
    alpha.push_back({cat.name(s), cat.name(t), element_to_json(cs.target(s), a)});
  }
  return {{"ring", to_json(cs.ring)},
          {"category", to_json(cat)},
          {"components", components},
          {"sigma", sigma},
          {"alpha", alpha}};
}

CrossedSystem crossed_system_from_json(const json& j) {
  const CoefficientRing ring = ring_from_json(field(j, "ring"));
  FiniteCategory cat = category_from_json(field(j, "category"));
  const json& comps = field(j, "components");
  std::vector<Algebra> components;
  for (auto o : cat.objects()) {
    const auto& name = cat.object_name(o);
    if (!comps.contains(name)) bad("object '" + name + "' has no component ring");
    components.push_back(algebra_from_json(comps.at(name), ring));
  }
  CrossedSystem cs(cat, std::move(components));
  if (j.contains("sigma"))
    for (const auto& [name, m] : j.at("sigma").items()) {
      const auto s = cs.category.at(name);
      cs.sigma_at(s) = matrix_from_json(ring, m, cs.target(s).dim(), cs.source(s).dim());
    }
  if (j.contains("alpha"))
    for (const auto& e : j.at("alpha")) {
      if (!e.is_array() || e.size() != 3) bad("alpha entries are [s, t, element]");
      const auto s = cs.category.at(str(e[0], "s"));
      const auto t = cs.category.at(str(e[1], "t"));
      cs.alpha_at(s, t) = element_from_json(cs.target(s), e[2]);
    }
  return cs;
}

Subspace subspace_from_json(const Algebra& a, const json& j) {
  std::vector<Vector> gens;
  for (const auto& e : field(j, "basis")) gens.push_back(element_from_json(a, e).dense());
  return Subspace::span(a.ring(), a.dim(), std::move(gens));
}

json subspace_to_json(const Algebra& a, const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_to_json(a, v));
  return {{"basis", basis}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace gral::io
