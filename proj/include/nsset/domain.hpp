#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nsset/errors.hpp"

namespace nsset {

namespace detail {

/// Ordered list of distinct identifiers with O(1) lookup. Order is canonical
/// and preserved through all operations.
class IdList {
 public:
  IdList(std::vector<std::string> ids, const char* kind) : ids_(std::move(ids)) {
    if (ids_.empty()) {
      throw ValidationError(kind, "must contain at least one identifier");
    }
    for (std::size_t k = 0; k < ids_.size(); ++k) {
      if (ids_[k].empty()) {
        throw ValidationError(kind, "identifier " + std::to_string(k) + " is empty");
      }
      if (!index_.emplace(ids_[k], k).second) {
        throw ValidationError(kind, "duplicate identifier '" + ids_[k] + "'");
      }
    }
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& at(std::size_t k) const { return ids_[k]; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const IdList& other) const { return ids_ == other.ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detail

/// Finite ordered universe of alternatives.
class Universe {
 public:
  explicit Universe(std::vector<std::string> elements)
      : ids_(std::move(elements), "universe") {}

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& elements() const { return ids_.ids(); }
  const std::string& at(std::size_t k) const { return ids_.at(k); }
  std::optional<std::size_t> index_of(std::string_view id) const {
    return ids_.index_of(id);
  }
  bool operator==(const Universe& other) const { return ids_ == other.ids_; }

 private:
  detail::IdList ids_;
};

/// Finite ordered set of parameters (criteria).
class ParameterSet {
 public:
  explicit ParameterSet(std::vector<std::string> parameters)
      : ids_(std::move(parameters), "parameters") {}

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& parameters() const { return ids_.ids(); }
  const std::string& at(std::size_t k) const { return ids_.at(k); }
  std::optional<std::size_t> index_of(std::string_view id) const {
    return ids_.index_of(id);
  }
  bool operator==(const ParameterSet& other) const { return ids_ == other.ids_; }

 private:
  detail::IdList ids_;
};

/// Identifier for the ordered pair (e,e') used by the OR/AND products.
/// Formed verbatim; collision-free because parsed identifiers cannot
/// contain the ',' delimiter.
inline std::string pair_id(const std::string& left, const std::string& right) {
  return "(" + left + "," + right + ")";
}

}  // namespace nsset
