#pragma once

#include <memory>
#include <string>
#include <utility>

namespace chctk {

enum class SortKind { Bool, Int, Real, Array };

/// An SMT sort: Bool, Int, Real, or (Array index element). Immutable value
/// type; array element/index sorts are shared, so copies are cheap.
class Sort {
 public:
  Sort() : kind_(SortKind::Bool) {}

  static Sort boolSort() { return Sort(SortKind::Bool); }
  static Sort intSort() { return Sort(SortKind::Int); }
  static Sort realSort() { return Sort(SortKind::Real); }
  static Sort arraySort(Sort index, Sort element);

  SortKind kind() const { return kind_; }
  bool isBool() const { return kind_ == SortKind::Bool; }
  bool isInt() const { return kind_ == SortKind::Int; }
  bool isReal() const { return kind_ == SortKind::Real; }
  bool isArray() const { return kind_ == SortKind::Array; }
  bool isNumeric() const { return isInt() || isReal(); }

  const Sort& index() const;    // Array only
  const Sort& element() const;  // Array only

  bool operator==(const Sort& other) const;
  bool operator!=(const Sort& other) const { return !(*this == other); }

  /// SMT-LIB rendering: "Bool", "Int", "Real", "(Array Int Int)".
  std::string str() const;

 private:
  explicit Sort(SortKind kind) : kind_(kind) {}

  SortKind kind_;
  std::shared_ptr<const std::pair<Sort, Sort>> array_;  // (index, element)
};

}  // namespace chctk
