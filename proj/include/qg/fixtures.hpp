#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/error.hpp"

namespace qg {

struct NamedTable {
  std::string name;
  CayleyTable table;
};

/// The nine reference tables, every one a quasigroup satisfying
/// x*(y*(y*x)) = y. Orders: 3, 5, 7, 8, 11, 4, 7, 9, 11.
inline const std::vector<NamedTable>& fixtures() {
  static const std::vector<NamedTable> tables = [] {
    std::vector<NamedTable> out;
    out.push_back({"star3", CayleyTable(3, {0, 1, 2,
                                            2, 0, 1,
                                            1, 2, 0})});
    out.push_back({"circ5", CayleyTable(5, {0, 2, 4, 1, 3,
                                            2, 1, 3, 4, 0,
                                            4, 3, 2, 0, 1,
                                            1, 4, 0, 3, 2,
                                            3, 0, 1, 2, 4})});
    out.push_back({"star7", CayleyTable(7, {0, 2, 3, 1, 6, 4, 5,
                                            6, 1, 4, 0, 5, 2, 3,
                                            5, 0, 2, 6, 3, 1, 4,
                                            4, 5, 0, 3, 2, 6, 1,
                                            3, 6, 1, 5, 4, 0, 2,
                                            2, 3, 6, 4, 1, 5, 0,
                                            1, 4, 5, 2, 0, 3, 6})});
    out.push_back({"diamond8", CayleyTable(8, {0, 2, 7, 1, 5, 6, 3, 4,
                                               4, 1, 6, 2, 3, 7, 5, 0,
                                               5, 7, 2, 6, 0, 1, 4, 3,
                                               7, 5, 0, 3, 2, 4, 1, 6,
                                               3, 6, 1, 7, 4, 2, 0, 5,
                                               1, 4, 3, 0, 6, 5, 7, 2,
                                               2, 0, 5, 4, 7, 3, 6, 1,
                                               6, 3, 4, 5, 1, 0, 2, 7})});
    out.push_back({"bullet11", CayleyTable(11, {0, 2, 7, 1, 6, 9, 10, 8, 3, 4, 5,
                                                10, 1, 9, 6, 8, 4, 7, 0, 2, 5, 3,
                                                5, 10, 2, 7, 9, 1, 3, 4, 0, 6, 8,
                                                6, 5, 0, 3, 2, 10, 8, 1, 4, 7, 9,
                                                3, 7, 1, 9, 4, 6, 2, 5, 10, 8, 0,
                                                7, 6, 4, 8, 0, 5, 9, 10, 1, 3, 2,
                                                1, 4, 8, 5, 3, 0, 6, 2, 9, 10, 7,
                                                9, 8, 5, 0, 10, 3, 4, 7, 6, 2, 1,
                                                4, 0, 3, 10, 7, 2, 5, 9, 8, 1, 6,
                                                8, 3, 10, 2, 1, 7, 0, 6, 5, 9, 4,
                                                2, 9, 6, 4, 5, 8, 1, 3, 7, 0, 10})});
    out.push_back({"boxtimes4", CayleyTable(4, {0, 2, 3, 1,
                                                1, 3, 2, 0,
                                                2, 0, 1, 3,
                                                3, 1, 0, 2})});
    out.push_back({"boxdot7", CayleyTable(7, {1, 2, 0, 5, 4, 6, 3,
                                              0, 3, 6, 4, 1, 2, 5,
                                              5, 0, 4, 2, 3, 1, 6,
                                              3, 1, 5, 6, 2, 4, 0,
                                              6, 5, 2, 1, 0, 3, 4,
                                              2, 4, 3, 0, 6, 5, 1,
                                              4, 6, 1, 3, 5, 0, 2})});
    out.push_back({"boxplus9", CayleyTable(9, {1, 2, 0, 3, 4, 5, 6, 7, 8,
                                               0, 1, 2, 8, 6, 4, 5, 3, 7,
                                               2, 0, 1, 7, 5, 6, 4, 8, 3,
                                               4, 5, 6, 0, 3, 7, 8, 1, 2,
                                               3, 7, 8, 4, 0, 1, 2, 5, 6,
                                               8, 3, 7, 6, 2, 0, 1, 4, 5,
                                               7, 8, 3, 5, 1, 2, 0, 6, 4,
                                               6, 4, 5, 2, 8, 3, 7, 0, 1,
                                               5, 6, 4, 1, 7, 8, 3, 2, 0})});
    out.push_back({"boxminus11", CayleyTable(11, {0, 2, 4, 1, 5, 3, 7, 9, 6, 10, 8,
                                                  8, 1, 7, 10, 0, 2, 9, 6, 3, 5, 4,
                                                  6, 8, 2, 4, 9, 0, 1, 10, 5, 7, 3,
                                                  10, 6, 0, 3, 1, 9, 8, 4, 7, 2, 5,
                                                  7, 5, 6, 0, 4, 10, 3, 2, 1, 8, 9,
                                                  9, 0, 3, 8, 7, 5, 2, 1, 10, 4, 6,
                                                  4, 10, 9, 5, 8, 1, 6, 3, 2, 0, 7,
                                                  5, 3, 8, 2, 10, 6, 4, 7, 9, 1, 0,
                                                  2, 7, 10, 9, 3, 4, 5, 0, 8, 6, 1,
                                                  3, 4, 1, 7, 6, 8, 10, 5, 0, 9, 2,
                                                  1, 9, 5, 6, 2, 7, 0, 8, 4, 3, 10})});
    return out;
  }();
  return tables;
}

inline const CayleyTable& fixture(std::string_view name) {
  for (const NamedTable& entry : fixtures())
    if (entry.name == name) return entry.table;
  throw UnknownFixture(std::string(name));
}

}  // namespace qg
