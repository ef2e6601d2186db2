#include "jslat/builtin.hpp"

namespace jslat {
namespace builtin {

namespace {

ElemSet bits(std::initializer_list<int> xs) {
  ElemSet s;
  for (int x : xs) s.set(x);
  return s;
}

JoinSemilattice family(std::vector<std::string> points,
                       std::vector<ElemSet> sets) {
  SetFamily f;
  f.point_names = std::move(points);
  f.sets = std::move(sets);
  return JoinSemilattice::from_set_family(f);
}

}  // namespace

JoinSemilattice lv() {
  // {xyz, xy, xz, yz, ∅}
  return family({"x", "y", "z"},
                {bits({0, 1, 2}), bits({0, 1}), bits({0, 2}), bits({1, 2}),
                 bits({})});
}

JoinSemilattice p3() {
  // {a, b, c, ab, ac, bc, abc}
  return family({"a", "b", "c"},
                {bits({0}), bits({1}), bits({2}), bits({0, 1}), bits({0, 2}),
                 bits({1, 2}), bits({0, 1, 2})});
}

JoinSemilattice b2() {
  return family({"x", "y"}, {bits({}), bits({0}), bits({1}), bits({0, 1})});
}

JoinSemilattice pabc() {
  return family({"a", "b", "c"},
                {bits({}), bits({0}), bits({1}), bits({2}), bits({0, 1}),
                 bits({0, 2}), bits({1, 2}), bits({0, 1, 2})});
}

JoinSemilattice chain(int k) {
  std::vector<std::string> names;
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i) {
    names.push_back("c" + std::to_string(i));
    for (int j = 0; j < k; ++j)
      table[i][j] = static_cast<Elem>(std::max(i, j));
  }
  return JoinSemilattice::from_join_table(std::move(names), table);
}

JoinSemilattice two() {
  return JoinSemilattice::from_join_table({"0", "1"}, {{0, 1}, {1, 1}});
}

JoinSemilattice chain3() {
  return JoinSemilattice::from_join_table({"0", "a", "1"},
                                          {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
}

JoinSemilattice freejoin() {
  return family({"x", "y"}, {bits({0}), bits({1}), bits({0, 1})});
}

const std::vector<std::pair<std::string, JoinSemilattice>>& corpus() {
  static const std::vector<std::pair<std::string, JoinSemilattice>> all = {
      {"lv", lv()},           {"p3", p3()},
      {"b2", b2()},           {"pabc", pabc()},
      {"two", two()},         {"chain3", chain3()},
      {"chain4", chain(4)},   {"freejoin", freejoin()},
  };
  return all;
}

}  // namespace builtin
}  // namespace jslat
