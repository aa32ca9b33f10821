#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gral/error.hpp"

namespace gral {

struct ObjectId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

struct MorphismId {
  std::uint32_t index = 0;
  friend auto operator<=>(const MorphismId&, const MorphismId&) = default;
};

struct Violation {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string rule, std::string message) { violations.push_back({std::move(rule), std::move(message)}); }
  bool mentions(std::string_view rule) const;
  std::string summary(std::size_t limit = 5) const;
};

/// A finite category given by an explicit composition table. Composition
/// st means "s after t": defined when dom(s) = cod(t), with dom(st) = dom(t)
/// and cod(st) = cod(s). Objects are identified with their identity morphisms.
///
/// Construction rejects dangling references (InvalidCategory); the category
/// axioms are checked once and exposed through validate_category().
class FiniteCategory {
 public:
  struct MorphismSpec {
    std::string id;
    std::string dom;
    std::string cod;
  };
  struct CompositionSpec {
    std::string s;
    std::string t;
    std::string st;
  };

  FiniteCategory(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                 std::map<std::string, std::string> identity, std::vector<CompositionSpec> compose);

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return names_.size(); }

  const std::string& object_name(ObjectId o) const { return objects_.at(o.index); }
  const std::string& name(MorphismId m) const { return names_.at(m.index); }
  std::optional<MorphismId> find(std::string_view name) const;
  std::optional<ObjectId> find_object(std::string_view name) const;
  /// Throws UnknownMorphism.
  MorphismId at(std::string_view name) const;

  ObjectId dom(MorphismId m) const { return dom_.at(m.index); }
  ObjectId cod(MorphismId m) const { return cod_.at(m.index); }
  MorphismId identity(ObjectId o) const { return identity_.at(o.index); }
  bool is_identity(MorphismId m) const;
  bool is_endomorphism(MorphismId m) const { return dom(m) == cod(m); }

  bool composable(MorphismId s, MorphismId t) const { return dom(s) == cod(t); }
  /// Table lookup; empty when the table has no entry for (s, t).
  std::optional<MorphismId> compose(MorphismId s, MorphismId t) const;

  std::vector<MorphismId> morphisms() const;
  std::vector<ObjectId> objects() const;
  std::vector<MorphismId> identities() const;
  /// All (s, t) with dom(s) = cod(t).
  std::vector<std::pair<MorphismId, MorphismId>> composable_pairs() const;

  const ValidationReport& validation() const noexcept { return report_; }
  /// Throws InvalidCategory unless validation() is clean.
  void require_valid() const;

  const std::vector<MorphismSpec>& morphism_specs() const noexcept { return specs_; }
  std::vector<CompositionSpec> composition_specs() const;

 private:
  ValidationReport compute_report() const;

  std::vector<std::string> objects_;
  std::vector<std::string> names_;
  std::vector<MorphismSpec> specs_;
  std::vector<ObjectId> dom_;
  std::vector<ObjectId> cod_;
  std::vector<MorphismId> identity_;
  std::vector<std::int32_t> table_;  // num_morphisms^2, -1 where undefined
  ValidationReport report_;
};

ValidationReport validate_category(const FiniteCategory& c);

/// Same names, endpoints, identities and composition table.
bool operator==(const FiniteCategory& a, const FiniteCategory& b);

/// Two-sided inverse of s, if any.
std::optional<MorphismId> inverse(const FiniteCategory& c, MorphismId s);
/// Inverse map s -> s^{-1} when every morphism is invertible.
std::optional<std::vector<MorphismId>> groupoid_inverses(const FiniteCategory& c);
bool is_groupoid(const FiniteCategory& c);
bool is_cancellable(const FiniteCategory& c);
std::vector<MorphismId> isomorphisms(const FiniteCategory& c);

struct Quiver {
  struct Arrow {
    std::string id;
    std::string from;
    std::string to;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

namespace categories {

/// One object, identity only.
FiniteCategory trivial();
/// Objects 1..n, morphisms (i,j) : j -> i, (i,j)(j,l) = (i,l).
FiniteCategory pair_groupoid(std::size_t n);
/// Cyclic group Z_n as a one-object category; g^a g^b = g^{a+b}.
FiniteCategory cyclic_group(std::size_t n);
/// One-object category from a monoid table; element 0 is the identity.
FiniteCategory monoid(const std::vector<std::string>& elements, const std::vector<std::vector<std::size_t>>& table);
/// The connected thin groupoid on two objects: e, f, s : f -> e, t : e -> f.
FiniteCategory thin_groupoid();
/// All paths of an acyclic quiver, trivial paths included. Throws InvalidCategory on cycles.
FiniteCategory path_category(const Quiver& quiver);
/// Product category; morphism names "(a,b)" built from the factors.
FiniteCategory product(const FiniteCategory& a, const FiniteCategory& b);
/// Disjoint union; names are prefixed "0:" and "1:".
FiniteCategory disjoint_union(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace categories

}  // namespace gral
