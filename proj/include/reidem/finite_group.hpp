#pragma once

#include <string>
#include <vector>

#include "reidem/errors.hpp"

namespace reidem {

struct GroupLawViolation {
  enum Kind { BadShape, BadEntry, NoIdentity, NoInverse, NotAssociative };
  Kind kind = BadShape;
  int a = -1, b = -1, c = -1;
  std::string describe() const;
};

struct NotAGroupError : InputError {
  GroupLawViolation violation;
  explicit NotAGroupError(GroupLawViolation v)
      : InputError(v.describe()), violation(v) {}
};

// A finite group given by its full multiplication table. The group law
// (identity, inverses, associativity) is checked on construction.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string element_name(int i) const;

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

// Ordinary conjugacy classes, each sorted, ordered by least element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

std::vector<int> center(const FiniteGroup& g);

}  // namespace reidem
