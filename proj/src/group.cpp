#include "mtv/group.hpp"

#include <algorithm>

#include "mtv/error.hpp"

namespace mtv {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorKind::NotAGroup, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(ErrorKind::NotAGroup, "table is not square", {{"row", i}});
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(ErrorKind::NotAGroup, "entry out of range",
             {{"row", i}, {"col", j}, {"value", table[i][j]}});
  }
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_[i * n + j] = table[i][j];

  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (g.mul(e, x) != x || g.mul(x, e) != x) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) fail(ErrorKind::NotAGroup, "no two-sided identity");
  g.identity_ = id;

  g.inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == id && g.mul(y, x) == id) {
        g.inverse_[x] = y;
        break;
      }
    if (g.inverse_[x] < 0)
      fail(ErrorKind::NotAGroup, "element without inverse", {{"element", x}});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail(ErrorKind::NotAGroup, "associativity fails",
               {{"a", a}, {"b", b}, {"c", c}});

  if (!names.empty() && static_cast<int>(names.size()) != n)
    fail(ErrorKind::SchemaError, "element_names length mismatch");
  if (names.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
  }
  g.names_ = std::move(names);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return from_table(t, std::move(names));
}

FiniteGroup FiniteGroup::symmetric3() {
  // permutations of {0,1,2} in a fixed listing
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                           {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(comp);
    }
  return from_table(t, {"e", "(01)", "(12)", "(02)", "(012)", "(021)"});
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("table"))
    fail(ErrorKind::SchemaError, "group document needs a table");
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) {
    std::vector<int> r;
    for (const auto& x : row) r.push_back(x.get<int>());
    table.push_back(std::move(r));
  }
  if (j.contains("order") &&
      j.at("order").get<int>() != static_cast<int>(table.size()))
    fail(ErrorKind::SchemaError, "declared order does not match table size");
  std::vector<std::string> names;
  if (j.contains("element_names"))
    names = j.at("element_names").get<std::vector<std::string>>();
  return from_table(table, std::move(names));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_by_name(const std::string& n) const {
  for (int i = 0; i < order_; ++i)
    if (names_[i] == n) return i;
  fail(ErrorKind::SchemaError, "unknown element name", {{"name", n}});
}

nlohmann::json FiniteGroup::to_json() const {
  nlohmann::json table = nlohmann::json::array();
  for (int i = 0; i < order_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < order_; ++j) row.push_back(mul(i, j));
    table.push_back(row);
  }
  return {{"order", order_}, {"table", table}, {"element_names", names_}};
}

GaugeFunction GaugeFunction::constant_identity(const FiniteGroup& g,
                                               int domain_size) {
  return GaugeFunction(&g, std::vector<int>(domain_size, g.identity()));
}

std::vector<int> GaugeFunction::support() const {
  std::vector<int> s;
  for (int y = 0; y < size(); ++y)
    if (values_[y] != group_->identity()) s.push_back(y);
  return s;
}

bool GaugeFunction::is_identity() const { return support().empty(); }

GaugeFunction GaugeFunction::compose(const GaugeFunction& g) const {
  if (group_ == nullptr || g.group_ == nullptr ||
      !group_->same_table(*g.group_) || size() != g.size())
    fail(ErrorKind::DomainMismatch, "gauge functions on different domains",
         {{"lhs_size", size()}, {"rhs_size", g.size()}});
  std::vector<int> v(values_.size());
  for (int y = 0; y < size(); ++y) v[y] = group_->mul(values_[y], g.values_[y]);
  return GaugeFunction(group_, std::move(v));
}

GaugeFunction GaugeFunction::inverse() const {
  std::vector<int> v(values_.size());
  for (int y = 0; y < size(); ++y) v[y] = group_->inv(values_[y]);
  return GaugeFunction(group_, std::move(v));
}

}  // namespace mtv
