#include "reidem/finite_group.hpp"

#include <algorithm>

namespace reidem {

std::string GroupLawViolation::describe() const {
  switch (kind) {
    case BadShape:
      return "multiplication table has the wrong shape";
    case BadEntry:
      return "table entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range";
    case NoIdentity:
      return "table has no two-sided identity";
    case NoInverse:
      return "element " + std::to_string(a) + " has no inverse";
    case NotAssociative:
      return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")";
  }
  return "not a group";
}

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order < 1 || table_.size() != static_cast<std::size_t>(order) * order) {
    throw NotAGroupError({GroupLawViolation::BadShape});
  }
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(order)) {
    throw NotAGroupError({GroupLawViolation::BadShape});
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int p = mul(a, b);
      if (p < 0 || p >= order) throw NotAGroupError({GroupLawViolation::BadEntry, a, b});
    }
  }
  identity_ = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw NotAGroupError({GroupLawViolation::NoIdentity});
  inverse_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw NotAGroupError({GroupLawViolation::NoInverse, a});
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < order; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw NotAGroupError({GroupLawViolation::NotAssociative, a, b, c});
        }
      }
    }
  }
}

std::string FiniteGroup::element_name(int i) const {
  if (!names_.empty()) return names_[i];
  return std::to_string(i);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(g.order(), false);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int h = 0; h < g.order(); ++h) {
      int y = g.conj(h, x);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int c = 0; c < g.order(); ++c) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x) central = g.mul(c, x) == g.mul(x, c);
    if (central) out.push_back(c);
  }
  return out;
}

}  // namespace reidem
