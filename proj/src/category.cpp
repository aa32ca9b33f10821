#include "gral/category.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gral {

bool ValidationReport::mentions(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary(std::size_t limit) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size() && i < limit; ++i)
    out << (i ? "; " : "") << violations[i].rule << ": " << violations[i].message;
  if (violations.size() > limit) out << "; ... (" << violations.size() << " total)";
  return out.str();
}

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                               std::map<std::string, std::string> identity, std::vector<CompositionSpec> compose)
    : objects_(std::move(objects)), specs_(std::move(morphisms)) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::invalid_category, msg); };
  if (objects_.empty()) fail("a category needs at least one object");
  if (std::set<std::string>(objects_.begin(), objects_.end()).size() != objects_.size()) fail("duplicate object id");

  std::map<std::string, std::uint32_t> object_index;
  for (std::uint32_t i = 0; i < objects_.size(); ++i) object_index[objects_[i]] = i;

  std::map<std::string, std::uint32_t> morphism_index;
  for (const auto& m : specs_) {
    if (morphism_index.contains(m.id)) fail("duplicate morphism id '" + m.id + "'");
    auto d = object_index.find(m.dom);
    auto c = object_index.find(m.cod);
    if (d == object_index.end() || c == object_index.end()) fail("morphism '" + m.id + "' has a dangling endpoint");
    morphism_index[m.id] = static_cast<std::uint32_t>(names_.size());
    names_.push_back(m.id);
    dom_.push_back(ObjectId{d->second});
    cod_.push_back(ObjectId{c->second});
  }

  identity_.resize(objects_.size());
  for (std::uint32_t i = 0; i < objects_.size(); ++i) {
    auto it = identity.find(objects_[i]);
    if (it == identity.end()) fail("object '" + objects_[i] + "' has no identity");
    auto m = morphism_index.find(it->second);
    if (m == morphism_index.end()) fail("identity '" + it->second + "' is not a morphism");
    identity_[i] = MorphismId{m->second};
  }
  for (const auto& [obj, _] : identity)
    if (!object_index.contains(obj)) fail("identity given for unknown object '" + obj + "'");

  const std::size_t n = names_.size();
  table_.assign(n * n, -1);
  for (const auto& entry : compose) {
    auto s = morphism_index.find(entry.s);
    auto t = morphism_index.find(entry.t);
    auto st = morphism_index.find(entry.st);
    if (s == morphism_index.end() || t == morphism_index.end() || st == morphism_index.end())
      fail("composition (" + entry.s + ", " + entry.t + ") -> " + entry.st + " references an unknown morphism");
    auto& slot = table_[s->second * n + t->second];
    if (slot >= 0 && static_cast<std::uint32_t>(slot) != st->second)
      fail("composition (" + entry.s + ", " + entry.t + ") given twice with different results");
    slot = static_cast<std::int32_t>(st->second);
  }
  report_ = compute_report();
}

std::optional<MorphismId> FiniteCategory::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return MorphismId{static_cast<std::uint32_t>(it - names_.begin())};
}

std::optional<ObjectId> FiniteCategory::find_object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return ObjectId{static_cast<std::uint32_t>(it - objects_.begin())};
}

MorphismId FiniteCategory::at(std::string_view name) const {
  if (auto m = find(name)) return *m;
  throw Error(ErrorCode::unknown_morphism, "no morphism named '" + std::string(name) + "'");
}

bool FiniteCategory::is_identity(MorphismId m) const {
  return std::find(identity_.begin(), identity_.end(), m) != identity_.end();
}

std::optional<MorphismId> FiniteCategory::compose(MorphismId s, MorphismId t) const {
  const auto v = table_.at(s.index * names_.size() + t.index);
  if (v < 0) return std::nullopt;
  return MorphismId{static_cast<std::uint32_t>(v)};
}

std::vector<MorphismId> FiniteCategory::morphisms() const {
  std::vector<MorphismId> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(MorphismId{i});
  return out;
}

std::vector<ObjectId> FiniteCategory::objects() const {
  std::vector<ObjectId> out;
  for (std::uint32_t i = 0; i < objects_.size(); ++i) out.push_back(ObjectId{i});
  return out;
}

std::vector<MorphismId> FiniteCategory::identities() const { return identity_; }

std::vector<std::pair<MorphismId, MorphismId>> FiniteCategory::composable_pairs() const {
  std::vector<std::pair<MorphismId, MorphismId>> out;
  for (auto s : morphisms())
    for (auto t : morphisms())
      if (composable(s, t)) out.emplace_back(s, t);
  return out;
}

std::vector<FiniteCategory::CompositionSpec> FiniteCategory::composition_specs() const {
  std::vector<CompositionSpec> out;
  for (auto s : morphisms())
    for (auto t : morphisms())
      if (auto st = compose(s, t)) out.push_back({name(s), name(t), name(*st)});
  return out;
}

void FiniteCategory::require_valid() const {
  if (!report_.ok()) throw Error(ErrorCode::invalid_category, report_.summary());
}

ValidationReport FiniteCategory::compute_report() const {
  ValidationReport r;
  const auto all = morphisms();
  for (auto o : objects()) {
    auto e = identity(o);
    if (dom(e) != o || cod(e) != o)
      r.add("identity", "identity " + name(e) + " is not an endomorphism of " + object_name(o));
  }
  for (auto s : all) {
    for (auto t : all) {
      auto st = compose(s, t);
      if (st && !composable(s, t)) {
        r.add("composability", "(" + name(s) + ", " + name(t) + ") is defined but dom(" + name(s) + ") != cod(" +
                                    name(t) + ")");
        continue;
      }
      if (!st && composable(s, t)) {
        r.add("composability", "(" + name(s) + ", " + name(t) + ") is composable but undefined");
        continue;
      }
      if (st && (dom(*st) != dom(t) || cod(*st) != cod(s)))
        r.add("typing", name(s) + name(t) + " = " + name(*st) + " has the wrong domain or codomain");
    }
  }
  for (auto o : objects()) {
    auto e = identity(o);
    for (auto t : all) {
      if (cod(t) == o) {
        auto et = compose(e, t);
        if (et && *et != t) r.add("identity", name(e) + " is not left neutral on " + name(t));
      }
      if (dom(t) == o) {
        auto te = compose(t, e);
        if (te && *te != t) r.add("identity", name(e) + " is not right neutral on " + name(t));
      }
    }
  }
  for (auto s : all)
    for (auto t : all) {
      auto st = compose(s, t);
      if (!st || !composable(s, t)) continue;
      for (auto u : all) {
        auto tu = compose(t, u);
        if (!tu || !composable(t, u)) continue;
        auto left = compose(*st, u);
        auto right = compose(s, *tu);
        if (left != right)
          r.add("associativity", "(" + name(s) + name(t) + ")" + name(u) + " != " + name(s) + "(" + name(t) +
                                     name(u) + ")");
      }
    }
  return r;
}

ValidationReport validate_category(const FiniteCategory& c) { return c.validation(); }

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
  for (auto o : a.objects())
    if (a.object_name(o) != b.object_name(o) || a.identity(o) != b.identity(o)) return false;
  for (auto m : a.morphisms())
    if (a.name(m) != b.name(m) || a.dom(m) != b.dom(m) || a.cod(m) != b.cod(m)) return false;
  for (auto s : a.morphisms())
    for (auto t : a.morphisms())
      if (a.compose(s, t) != b.compose(s, t)) return false;
  return true;
}

std::optional<MorphismId> inverse(const FiniteCategory& c, MorphismId s) {
  for (auto t : c.morphisms()) {
    if (c.dom(t) != c.cod(s) || c.cod(t) != c.dom(s)) continue;
    if (c.compose(s, t) == c.identity(c.cod(s)) && c.compose(t, s) == c.identity(c.dom(s))) return t;
  }
  return std::nullopt;
}

std::optional<std::vector<MorphismId>> groupoid_inverses(const FiniteCategory& c) {
  c.require_valid();
  std::vector<MorphismId> inv;
  for (auto s : c.morphisms()) {
    auto t = inverse(c, s);
    if (!t) return std::nullopt;
    inv.push_back(*t);
  }
  return inv;
}

bool is_groupoid(const FiniteCategory& c) { return groupoid_inverses(c).has_value(); }

bool is_cancellable(const FiniteCategory& c) {
  c.require_valid();
  const auto all = c.morphisms();
  for (auto s : all)
    for (auto t : all)
      for (auto t2 : all) {
        if (t == t2) continue;
        // mono: st = st' => t = t'
        if (c.composable(s, t) && c.composable(s, t2) && c.compose(s, t) == c.compose(s, t2)) return false;
        // epi: ts = t's => t = t'
        if (c.composable(t, s) && c.composable(t2, s) && c.compose(t, s) == c.compose(t2, s)) return false;
      }
  return true;
}

std::vector<MorphismId> isomorphisms(const FiniteCategory& c) {
  c.require_valid();
  std::vector<MorphismId> out;
  for (auto s : c.morphisms())
    if (inverse(c, s)) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace categories {

FiniteCategory trivial() { return FiniteCategory({"*"}, {{"1", "*", "*"}}, {{"*", "1"}}, {{"1", "1", "1"}}); }

FiniteCategory pair_groupoid(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::bad_params, "pair groupoid needs n >= 1");
  auto obj = [](std::size_t i) { return std::to_string(i); };
  auto arrow = [](std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  std::vector<std::string> objects;
  std::vector<FiniteCategory::MorphismSpec> morphisms;
  std::map<std::string, std::string> identity;
  std::vector<FiniteCategory::CompositionSpec> compose;
  for (std::size_t i = 1; i <= n; ++i) {
    objects.push_back(obj(i));
    identity[obj(i)] = arrow(i, i);
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) morphisms.push_back({arrow(i, j), obj(j), obj(i)});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t l = 1; l <= n; ++l) compose.push_back({arrow(i, j), arrow(j, l), arrow(i, l)});
  return FiniteCategory(objects, morphisms, identity, compose);
}

FiniteCategory cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::bad_params, "cyclic group needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g" + std::to_string(a)));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return monoid(names, table);
}

FiniteCategory monoid(const std::vector<std::string>& elements, const std::vector<std::vector<std::size_t>>& table) {
  if (elements.empty() || table.size() != elements.size())
    throw Error(ErrorCode::invalid_category, "monoid table has the wrong shape");
  std::vector<FiniteCategory::MorphismSpec> morphisms;
  std::vector<FiniteCategory::CompositionSpec> compose;
  for (const auto& e : elements) morphisms.push_back({e, "*", "*"});
  for (std::size_t a = 0; a < elements.size(); ++a) {
    if (table[a].size() != elements.size()) throw Error(ErrorCode::invalid_category, "monoid table has the wrong shape");
    for (std::size_t b = 0; b < elements.size(); ++b)
      compose.push_back({elements[a], elements[b], elements.at(table[a][b])});
  }
  return FiniteCategory({"*"}, morphisms, {{"*", elements[0]}}, compose);
}

FiniteCategory thin_groupoid() {
  return FiniteCategory({"e", "f"},
                        {{"e", "e", "e"}, {"f", "f", "f"}, {"s", "f", "e"}, {"t", "e", "f"}},
                        {{"e", "e"}, {"f", "f"}},
                        {{"e", "e", "e"},
                         {"f", "f", "f"},
                         {"e", "s", "s"},
                         {"t", "e", "t"},
                         {"s", "f", "s"},
                         {"f", "t", "t"},
                         {"s", "t", "e"},
                         {"t", "s", "f"}});
}

FiniteCategory path_category(const Quiver& quiver) {
  std::map<std::string, std::size_t> vertex;
  for (std::size_t i = 0; i < quiver.vertices.size(); ++i) vertex[quiver.vertices[i]] = i;
  if (vertex.size() != quiver.vertices.size() || vertex.empty())
    throw Error(ErrorCode::invalid_category, "quiver vertices must be nonempty and distinct");
  for (const auto& a : quiver.arrows)
    if (!vertex.contains(a.from) || !vertex.contains(a.to))
      throw Error(ErrorCode::invalid_category, "arrow '" + a.id + "' has a dangling endpoint");

  // A path is a list of arrow indices a_k ... a_1 read right to left (a_1 first).
  struct Path {
    std::string from, to;
    std::vector<std::size_t> arrows;  // in traversal order
  };
  std::vector<Path> paths;
  for (const auto& v : quiver.vertices) paths.push_back({v, v, {}});
  std::vector<Path> frontier;
  for (std::size_t a = 0; a < quiver.arrows.size(); ++a)
    frontier.push_back({quiver.arrows[a].from, quiver.arrows[a].to, {a}});
  const std::size_t max_len = quiver.vertices.size();
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      if (p.arrows.size() > max_len) throw Error(ErrorCode::invalid_category, "quiver has a cycle");
      paths.push_back(p);
      for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
        if (quiver.arrows[a].from != p.to) continue;
        Path q = p;
        q.to = quiver.arrows[a].to;
        q.arrows.push_back(a);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }

  auto path_name = [&](const Path& p) {
    if (p.arrows.empty()) return "e_" + p.from;
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      if (!s.empty()) s += "*";
      s += quiver.arrows[*it].id;
    }
    return s;
  };
  std::vector<FiniteCategory::MorphismSpec> morphisms;
  std::map<std::string, std::string> identity;
  std::map<std::pair<std::string, std::vector<std::size_t>>, std::string> by_key;
  for (const auto& p : paths) {
    const std::string n = path_name(p);
    morphisms.push_back({n, p.from, p.to});
    by_key[{p.from, p.arrows}] = n;
    if (p.arrows.empty()) identity[p.from] = n;
  }
  std::vector<FiniteCategory::CompositionSpec> compose;
  for (const auto& s : paths)
    for (const auto& t : paths) {
      if (s.from != t.to) continue;
      std::vector<std::size_t> joined = t.arrows;
      joined.insert(joined.end(), s.arrows.begin(), s.arrows.end());
      compose.push_back({path_name(s), path_name(t), by_key.at({t.from, joined})});
    }
  return FiniteCategory(quiver.vertices, morphisms, identity, compose);
}

FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b) {
  auto pair = [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; };
  std::vector<std::string> objects;
  std::map<std::string, std::string> identity;
  for (auto oa : a.objects())
    for (auto ob : b.objects()) {
      objects.push_back(pair(a.object_name(oa), b.object_name(ob)));
      identity[objects.back()] = pair(a.name(a.identity(oa)), b.name(b.identity(ob)));
    }
  std::vector<FiniteCategory::MorphismSpec> morphisms;
  for (auto ma : a.morphisms())
    for (auto mb : b.morphisms())
      morphisms.push_back({pair(a.name(ma), b.name(mb)), pair(a.object_name(a.dom(ma)), b.object_name(b.dom(mb))),
                           pair(a.object_name(a.cod(ma)), b.object_name(b.cod(mb)))});
  std::vector<FiniteCategory::CompositionSpec> compose;
  for (const auto& [s1, t1] : a.composable_pairs())
    for (const auto& [s2, t2] : b.composable_pairs()) {
      auto st1 = a.compose(s1, t1);
      auto st2 = b.compose(s2, t2);
      if (!st1 || !st2) continue;
      compose.push_back({pair(a.name(s1), b.name(s2)), pair(a.name(t1), b.name(t2)), pair(a.name(*st1), b.name(*st2))});
    }
  return FiniteCategory(objects, morphisms, identity, compose);
}

FiniteCategory disjoint_union(const FiniteCategory& a, const FiniteCategory& b) {
  std::vector<std::string> objects;
  std::vector<FiniteCategory::MorphismSpec> morphisms;
  std::map<std::string, std::string> identity;
  std::vector<FiniteCategory::CompositionSpec> compose;
  auto absorb = [&](const FiniteCategory& c, const std::string& tag) {
    for (auto o : c.objects()) {
      objects.push_back(tag + c.object_name(o));
      identity[tag + c.object_name(o)] = tag + c.name(c.identity(o));
    }
    for (auto m : c.morphisms())
      morphisms.push_back({tag + c.name(m), tag + c.object_name(c.dom(m)), tag + c.object_name(c.cod(m))});
    for (const auto& e : c.composition_specs()) compose.push_back({tag + e.s, tag + e.t, tag + e.st});
  };
  absorb(a, "0:");
  absorb(b, "1:");
  return FiniteCategory(objects, morphisms, identity, compose);
}

}  // namespace categories

}  // namespace gral
