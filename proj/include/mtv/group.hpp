#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace mtv {

// Finite group given by its multiplication table.  Elements are indices
// 0..order-1; the table is validated on construction (identity, inverses,
// associativity).
class FiniteGroup {
 public:
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> names = {});
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  static FiniteGroup from_json(const nlohmann::json& j);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  bool is_abelian() const;
  const std::string& name(int a) const { return names_[a]; }
  int element_by_name(const std::string& n) const;

  nlohmann::json to_json() const;
  bool same_table(const FiniteGroup& o) const {
    return order_ == o.order_ && table_ == o.table_;
  }

 private:
  FiniteGroup() = default;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

// Total function from a finite base-point set into a group; base points are
// indices 0..size-1 of whatever object the function decorates.
class GaugeFunction {
 public:
  GaugeFunction() = default;
  GaugeFunction(const FiniteGroup* group, std::vector<int> values)
      : group_(group), values_(std::move(values)) {}
  static GaugeFunction constant_identity(const FiniteGroup& g, int domain_size);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int y) const { return values_[y]; }
  int& at(int y) { return values_[y]; }
  const FiniteGroup& group() const { return *group_; }

  std::vector<int> support() const;
  bool is_identity() const;

  // Pointwise product (f*g)(y) = f(y) g(y).
  GaugeFunction compose(const GaugeFunction& g) const;
  GaugeFunction inverse() const;

 private:
  const FiniteGroup* group_ = nullptr;
  std::vector<int> values_;
};

}  // namespace mtv
