#pragma once

// Finite groups given by multiplication tables.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace galtwist::groups {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Largest group order accepted by any constructor.
inline constexpr std::size_t kMaxGroupOrder = 64;

enum class GroupKind { cyclic, product, semidirect, table };

/// Cyclic normal subgroup Gamma and complement H of a semidirect product.
struct SemidirectData {
  std::size_t gamma_order = 0;
  std::size_t h_order = 0;
  std::uint64_t action_exponent = 1;  // s * t * s^-1 = t^action_exponent
  std::vector<std::size_t> gamma;     // element indices t^a, a = 0..gamma_order-1
  std::vector<std::size_t> h;         // element indices s^b, b = 0..h_order-1
};

/// Immutable finite group. Element 0 is always the identity.
///
/// cyclic(r):           element i is t^i; the generator t is element 1.
/// direct_product(A,B): element (a,b) has index a * |B| + b.
/// semidirect(r,h,e):   element t^a s^b has index a + r*b, with s t s^-1 = t^e.
class FiniteGroup {
 public:
  static GroupPtr cyclic(std::size_t r);
  static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
  static GroupPtr semidirect(std::size_t r, std::size_t h, std::uint64_t action_exponent);
  static GroupPtr dihedral(std::size_t r);
  /// Validated construction from a raw table (identity must be element 0).
  static GroupPtr from_table(std::vector<std::size_t> table, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  std::size_t power(std::size_t a, std::uint64_t e) const;
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  GroupKind kind() const noexcept { return kind_; }

  bool is_abelian() const;
  /// A generator when the group is cyclic: element 1 for cyclic(r), otherwise
  /// the smallest-index element of full order.
  std::optional<std::size_t> cyclic_generator() const;
  const std::optional<SemidirectData>& semidirect_data() const noexcept { return semidirect_; }

 private:
  FiniteGroup() = default;
  void validate() const;
  void compute_inverses();

  std::size_t order_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
  GroupKind kind_ = GroupKind::table;
  std::optional<SemidirectData> semidirect_;
};

/// Bitmask of element indices (group order <= 64).
using ElementMask = std::uint64_t;

/// A subgroup of a finite group, closure checked on construction.
class Subgroup {
 public:
  Subgroup(GroupPtr group, std::vector<std::size_t> elements);
  static Subgroup generated_by(const GroupPtr& group, const std::vector<std::size_t>& generators);
  static Subgroup trivial(const GroupPtr& group);
  static Subgroup whole(const GroupPtr& group);

  const GroupPtr& group() const noexcept { return group_; }
  /// Sorted element indices.
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  ElementMask mask() const noexcept { return mask_; }
  bool contains(std::size_t g) const { return (mask_ >> g) & 1U; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }

 private:
  GroupPtr group_;
  std::vector<std::size_t> elements_;
  ElementMask mask_ = 0;
};

/// Every subgroup of the group, ordered by (order, mask).
std::vector<Subgroup> all_subgroups(const GroupPtr& group);

/// True iff G / k is cyclic (k must be normal; checked).
bool has_cyclic_quotient(const Subgroup& k);

/// Parses `cyclic:<r>`, `product:<r1>x<r2>[x...]`, `dihedral:<r>`,
/// `semidirect:<r>:<h>:<action-exponent>`. Throws ParseError.
GroupPtr parse_group_spec(const std::string& spec);

}  // namespace galtwist::groups
