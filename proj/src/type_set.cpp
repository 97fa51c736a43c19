#include "ontic/type_set.hpp"

#include <algorithm>
#include <cassert>

namespace ontic {

TypeSet::TypeSet(std::initializer_list<std::string> types)
    : TypeSet(std::vector<std::string>(types)) {}

TypeSet::TypeSet(std::vector<std::string> types) : members_(std::move(types)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

const std::string& TypeSet::only() const {
  assert(is_singleton());
  return members_.front();
}

bool TypeSet::contains(std::string_view type) const {
  return std::binary_search(members_.begin(), members_.end(), type);
}

void TypeSet::insert(std::string type) {
  auto it = std::lower_bound(members_.begin(), members_.end(), type);
  if (it == members_.end() || *it != type) members_.insert(it, std::move(type));
}

std::string TypeSet::to_string() const {
  if (members_.empty()) return "_|_";
  if (members_.size() == 1) return members_.front();
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i];
  }
  out += "}";
  return out;
}

}  // namespace ontic
