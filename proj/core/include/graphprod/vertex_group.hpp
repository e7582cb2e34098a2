#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace graphprod {

enum class GroupKind { InfiniteCyclic, FreeAbelian, FiniteCyclic, Free };

/// One of the shipped vertex-group families. `parameter` is the rank for
/// free-abelian and free groups, the order for finite-cyclic groups, and 1 for Z.
struct GroupSpec {
  GroupKind kind = GroupKind::InfiniteCyclic;
  int parameter = 1;

  static GroupSpec infinite_cyclic() { return {GroupKind::InfiniteCyclic, 1}; }
  static GroupSpec free_abelian(int rank);
  static GroupSpec finite_cyclic(int order);
  static GroupSpec free(int rank);

  bool is_finite() const { return kind == GroupKind::FiniteCyclic; }

  /// "Z", "Z^3", "Z5", "F2".
  std::string tag() const;
  static GroupSpec parse(std::string_view tag);

  bool operator==(const GroupSpec&) const = default;
};

struct CyclicValue {
  std::int64_t value = 0;
  auto operator<=>(const CyclicValue&) const = default;
};

struct LatticeVector {
  std::vector<std::int64_t> coords;
  auto operator<=>(const LatticeVector&) const = default;
};

/// Freely reduced word; generator i (0-based) is +(i+1), its inverse -(i+1).
struct FreeWord {
  std::vector<std::int32_t> letters;
  auto operator<=>(const FreeWord&) const = default;
};

/// Canonical element payload: integer for Z, residue in [0, n) for Z/n,
/// integer vector for Z^k, freely reduced word for F_k.
using GroupElement = std::variant<CyclicValue, LatticeVector, FreeWord>;

std::size_t hash_element(const GroupElement& x);

/// Throws InputError when the payload does not belong to `spec` or is not canonical.
void check_element(const GroupSpec& spec, const GroupElement& x);

GroupElement identity(const GroupSpec& spec);
GroupElement multiply(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupSpec& spec, const GroupElement& x);
bool is_identity(const GroupSpec& spec, const GroupElement& x);

/// Brings an arbitrary payload of the right shape into canonical form
/// (reduces residues, freely reduces words).
GroupElement canonicalize(const GroupSpec& spec, GroupElement x);

/// All elements of word length <= radius in the standard generators
/// ({+-1}, {+-e_i}, {+-1 mod n}, {x_i^+-1}), sorted.
std::vector<GroupElement> enumerate_ball(const GroupSpec& spec, int radius);

/// Standard generators and their inverses.
std::vector<GroupElement> standard_generators(const GroupSpec& spec);

/// Untagged payload text as used inside word tokens: "5", "(1,-2)", "[x.y^-1]".
std::string format_payload(const GroupSpec& spec, const GroupElement& x);
GroupElement parse_payload(const GroupSpec& spec, std::string_view text);

/// Tagged element text: "Z:5", "Z5:3", "Z^2:(1,-2)", "F2:x.y^-1".
std::string format_element(const GroupSpec& spec, const GroupElement& x);
std::pair<GroupSpec, GroupElement> parse_element(std::string_view text);

/// Extension point for further effective vertex groups. The four shipped
/// families are served by VertexGroup below; a user type modelling this
/// concept can stand in for it in generic code.
template <typename G>
concept EffectiveGroup = requires(const G& g, const typename G::element_type& x) {
  typename G::element_type;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(x, x) } -> std::convertible_to<typename G::element_type>;
  { g.invert(x) } -> std::convertible_to<typename G::element_type>;
  { g.is_identity(x) } -> std::convertible_to<bool>;
};

class VertexGroup {
 public:
  using element_type = GroupElement;
  explicit VertexGroup(GroupSpec spec) : spec_(spec) {}
  const GroupSpec& spec() const { return spec_; }
  GroupElement identity() const { return graphprod::identity(spec_); }
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const {
    return graphprod::multiply(spec_, x, y);
  }
  GroupElement invert(const GroupElement& x) const { return graphprod::invert(spec_, x); }
  bool is_identity(const GroupElement& x) const { return graphprod::is_identity(spec_, x); }

 private:
  GroupSpec spec_;
};

static_assert(EffectiveGroup<VertexGroup>);

}  // namespace graphprod
