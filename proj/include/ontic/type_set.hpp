#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ontic {

/// The candidate types annotating one variable occurrence. An empty set is
/// the failed unification (bottom).
class TypeSet {
 public:
  TypeSet() = default;
  TypeSet(std::initializer_list<std::string> types);
  explicit TypeSet(std::vector<std::string> types);

  static TypeSet bottom() { return {}; }

  bool is_bottom() const { return members_.empty(); }
  bool is_singleton() const { return members_.size() == 1; }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::string>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// The single member. Precondition: is_singleton().
  const std::string& only() const;

  bool contains(std::string_view type) const;
  void insert(std::string type);

  /// `human`, `{politicalGroup, socialEvent}` or `_|_`.
  std::string to_string() const;

  friend bool operator==(const TypeSet&, const TypeSet&) = default;
  friend auto operator<=>(const TypeSet&, const TypeSet&) = default;

 private:
  std::vector<std::string> members_;  // sorted, unique
};

}  // namespace ontic
