#include "chctk/sort.hpp"

#include <cassert>

namespace chctk {

Sort Sort::arraySort(Sort index, Sort element) {
  Sort s(SortKind::Array);
  s.array_ = std::make_shared<const std::pair<Sort, Sort>>(std::move(index),
                                                           std::move(element));
  return s;
}

const Sort& Sort::index() const {
  assert(isArray());
  return array_->first;
}

const Sort& Sort::element() const {
  assert(isArray());
  return array_->second;
}

bool Sort::operator==(const Sort& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != SortKind::Array) return true;
  return array_->first == other.array_->first &&
         array_->second == other.array_->second;
}

std::string Sort::str() const {
  switch (kind_) {
    case SortKind::Bool: return "Bool";
    case SortKind::Int: return "Int";
    case SortKind::Real: return "Real";
    case SortKind::Array:
      return "(Array " + index().str() + " " + element().str() + ")";
  }
  return "?";
}

}  // namespace chctk
