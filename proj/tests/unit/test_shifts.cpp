#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doems/errors.hpp"
#include "doems/radical.hpp"
#include "doems/shifts.hpp"

using namespace doems;

namespace {

DataSet ds(const char* text, unsigned p, std::size_t n) {
  return parse_dataset(text, FieldSpec(p), n);
}

// Direct coordinatewise application, independent of the grid/kernel path.
std::set<std::vector<int>> shift_points(const std::set<std::vector<int>>& pts,
                                        const std::vector<int>& a, const std::vector<int>& b,
                                        int p) {
  std::set<std::vector<int>> out;
  for (auto x : pts) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = (a[k] * x[k] + b[k]) % p;
    out.insert(x);
  }
  return out;
}

std::set<std::vector<int>> as_set(const DataSet& d) {
  std::set<std::vector<int>> out;
  for (const Point& x : d.points()) out.insert(std::vector<int>(x.coords().begin(), x.coords().end()));
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Orbit sizes of all m-subsets by union-find over every shift map.
std::multiset<std::size_t> oracle_class_sizes(int p, int n, int m) {
  std::vector<std::vector<int>> grid;
  for (int idx = 0; idx < static_cast<int>(std::pow(p, n)); ++idx) {
    std::vector<int> x(n);
    int v = idx;
    for (int k = n - 1; k >= 0; --k) {
      x[k] = v % p;
      v /= p;
    }
    grid.push_back(x);
  }
  std::map<std::set<std::vector<int>>, std::size_t> id;
  std::vector<int> mask(grid.size(), 0);
  std::fill(mask.end() - m, mask.end(), 1);
  do {
    std::set<std::vector<int>> s;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (mask[i]) s.insert(grid[i]);
    }
    id.emplace(s, id.size());
  } while (std::next_permutation(mask.begin(), mask.end()));
  UnionFind uf(id.size());
  std::vector<int> a(n, 1), b(n, 0);
  // enumerate all (a, b)
  std::vector<std::pair<std::vector<int>, std::vector<int>>> maps;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      maps.emplace_back(a, b);
      return;
    }
    for (int ak = 1; ak < p; ++ak) {
      for (int bk = 0; bk < p; ++bk) {
        a[k] = ak;
        b[k] = bk;
        rec(k + 1);
      }
    }
  };
  rec(0);
  for (const auto& [s, i] : id) {
    for (const auto& [ma, mb] : maps) uf.unite(i, id.at(shift_points(s, ma, mb, p)));
  }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < id.size(); ++i) ++sizes[uf.find(i)];
  std::multiset<std::size_t> out;
  for (const auto& [root, size] : sizes) out.insert(size);
  return out;
}

}  // namespace

TEST_SUITE("shifts") {
  TEST_CASE("apply_shift examples") {
    const DataSet s = ds("01,10", 3, 2);
    const ShiftMap phi{{1, 2}, {0, 2}};
    CHECK(apply_shift(s, phi) == ds("01,12", 3, 2));
    CHECK(apply_shift(ds("00,01", 2, 2), ShiftMap{{1, 1}, {1, 0}}) == ds("10,11", 2, 2));
    CHECK(apply_shift(s, identity_shift(2)) == s);
    CHECK_THROWS_AS(apply_shift(s, identity_shift(3)), InvalidArgument);
    CHECK_THROWS_AS(apply_shift(s, ShiftMap{{0, 1}, {0, 0}}), InvalidArgument);
  }

  TEST_CASE("shift map text round trip") {
    const FieldSpec f(3);
    const ShiftMap phi{{1, 2}, {0, 2}};
    CHECK(to_string(phi) == "1*x1+0,2*x2+2");
    CHECK(parse_shift_map(to_string(phi), f, 2) == phi);
    CHECK_THROWS_AS(parse_shift_map("0*x1+0,1*x2+0", f, 2), ParseError);
  }

  TEST_CASE("group action inverse property") {
    std::mt19937 rng(13);
    for (unsigned p : {2u, 3u, 5u}) {
      const FieldSpec f(p);
      for (int t = 0; t < 200; ++t) {
        std::set<Point> pts;
        const std::size_t m = 1 + rng() % 4;
        while (pts.size() < m) {
          pts.insert(Point({static_cast<Residue>(rng() % p), static_cast<Residue>(rng() % p),
                            static_cast<Residue>(rng() % p)}));
        }
        const DataSet s(f, 3, std::vector<Point>(pts.begin(), pts.end()));
        ShiftMap phi{std::vector<Residue>(3), std::vector<Residue>(3)};
        for (int k = 0; k < 3; ++k) {
          phi.a[k] = static_cast<Residue>(1 + rng() % (p - 1));
          phi.b[k] = static_cast<Residue>(rng() % p);
        }
        REQUIRE(apply_shift(apply_shift(s, phi), inverse(phi, f)) == s);
        REQUIRE(as_set(apply_shift(s, phi)) == shift_points(as_set(s), {phi.a[0], phi.a[1], phi.a[2]},
                                                           {phi.b[0], phi.b[1], phi.b[2]},
                                                           static_cast<int>(p)));
      }
    }
  }

  TEST_CASE("shift_between examples") {
    const auto phi = shift_between(ds("00,01", 2, 2), ds("10,11", 2, 2));
    REQUIRE(phi.has_value());
    CHECK(*phi == ShiftMap{{1, 1}, {1, 0}});
    CHECK_FALSE(shift_between(ds("00,01,02", 3, 2), ds("00,10,20", 3, 2)).has_value());
    const DataSet s = ds("01,10", 3, 2);
    CHECK(*shift_between(s, s) == identity_shift(2));
    CHECK_THROWS_AS(shift_between(s, ds("00", 3, 2)), InvalidArgument);
  }

  TEST_CASE("enumerate_class examples") {
    const auto cls = enumerate_class(ds("01,10", 3, 2));
    const char* listed[] = {"00,11", "00,12", "00,21", "00,22", "01,10", "01,12",
                            "01,20", "01,22", "02,10", "02,11", "02,20", "02,21",
                            "10,21", "10,22", "11,20", "11,22", "12,20", "12,21"};
    std::vector<DataSet> expected;
    for (const char* s : listed) expected.push_back(ds(s, 3, 2));
    CHECK(cls.members == expected);

    const DataSet full = Grid(FieldSpec(3), 2).full();
    CHECK(enumerate_class(full).members.size() == 1);

    const auto two = enumerate_class(ds("00,01", 2, 2));
    CHECK(two.members == std::vector<DataSet>{ds("00,01", 2, 2), ds("10,11", 2, 2)});
  }

  TEST_CASE("partition_all examples") {
    const auto c324 = partition_all(3, 2, 4);
    CHECK(c324.size() == 7);
    std::size_t total = 0;
    for (const auto& c : c324) total += c.members.size();
    CHECK(total == 126);

    const auto c235 = partition_all(2, 3, 5);
    CHECK(c235.size() == 7);
    total = 0;
    for (const auto& c : c235) total += c.members.size();
    CHECK(total == 56);

    const auto c322 = partition_all(3, 2, 2);
    REQUIRE(c322.size() == 3);
    CHECK(c322[0].representative == ds("00,01", 3, 2));
    CHECK(c322[0].members.size() == 9);
    CHECK(c322[1].representative == ds("00,10", 3, 2));
    CHECK(c322[1].members.size() == 9);
    CHECK(c322[2].members.size() == 18);
    CHECK(c322[0].label == "p3n2m2-c1");
    CHECK(c322[2].label == "p3n2m2-c3");

    CHECK_THROWS_AS(partition_all(3, 2, 0), UnsupportedParameters);
    CHECK_THROWS_AS(partition_all(3, 2, 10), UnsupportedParameters);
    CHECK_THROWS_AS(partition_all(2, 7, 3), UnsupportedParameters);
  }

  TEST_CASE("partition_all matches a union-find oracle") {
    struct Case {
      int p, n, m;
    };
    for (const Case c : {Case{2, 2, 2}, Case{2, 3, 3}, Case{2, 3, 4}, Case{3, 2, 3},
                         Case{3, 2, 4}, Case{3, 2, 5}, Case{2, 4, 3}}) {
      std::multiset<std::size_t> got;
      for (const auto& cls : partition_all(c.p, c.n, c.m)) got.insert(cls.members.size());
      CHECK(got == oracle_class_sizes(c.p, c.n, c.m));
    }
  }

  TEST_CASE("is_staircase examples") {
    CHECK(is_staircase(ds("00,01,02", 3, 2)));
    CHECK_FALSE(is_staircase(ds("000,001,010,110", 2, 3)));
    CHECK(is_staircase(ds("000", 2, 3)));
  }

  TEST_CASE("find_representative examples") {
    CHECK(find_representative(enumerate_class(ds("00,01,02", 3, 2))) == ds("00,01,02", 3, 2));
    const DataSet s = ds("000,001,010,110", 2, 3);
    const DataSet t = ds("000,010,011,100", 2, 3);
    const auto cls = enumerate_class(s);
    CHECK(std::binary_search(cls.members.begin(), cls.members.end(), t));
    CHECK(radical_compare(set_distance(s), set_distance(t)) == std::strong_ordering::equal);
    CHECK(find_representative(cls) == s);
    const DataSet full = Grid(FieldSpec(2), 3).full();
    CHECK(find_representative(enumerate_class(full)) == full);
  }

  TEST_CASE("find_representative minimises distance over the class") {
    for (const auto& cls : partition_all(2, 3, 4)) {
      const RadicalSum best = set_distance(cls.representative);
      for (const DataSet& d : cls.members) {
        const auto cmp = radical_compare(set_distance(d), best);
        CHECK(cmp >= 0);
        if (cmp == 0) CHECK(cls.representative <= d);
      }
    }
  }

  TEST_CASE("shift matrix reproduces the printed table") {
    const DataSet s = ds("01,10", 3, 2);
    const ShiftMatrix mat = shift_matrix(s);
    REQUIRE(mat.row_count() == 9);
    REQUIRE(mat.column_count() == 4);
    // rows b = 00,01,...,22; columns a = 11,12,21,22
    const char* table[9][4] = {
        {"01,10", "02,10", "01,20", "02,20"}, {"02,11", "00,11", "02,21", "00,21"},
        {"00,12", "01,12", "00,22", "01,22"}, {"11,20", "12,20", "11,00", "12,00"},
        {"12,21", "10,21", "12,01", "10,01"}, {"10,22", "11,22", "10,02", "11,02"},
        {"21,00", "22,00", "21,10", "22,10"}, {"22,01", "20,01", "22,11", "20,11"},
        {"20,02", "21,02", "20,12", "21,12"}};
    for (std::size_t r = 0; r < 9; ++r) {
      for (std::size_t c = 0; c < 4; ++c) CHECK(mat.entry(r, c) == ds(table[r][c], 3, 2));
    }
    const std::vector<Residue> b{0, 2}, a{1, 2};
    CHECK(mat.entry(b, a) == ds("01,12", 3, 2));
    CHECK(mat.entry(0, 0) == s);
  }

  TEST_CASE("column_stats examples") {
    const auto small = column_stats(shift_matrix(ds("00,01", 2, 2)));
    REQUIRE(small.columns.size() == 1);
    CHECK(small.columns[0].distinct == 2);
    CHECK(small.columns[0].repetition == 2);
    CHECK(small.columns[0].exponent == 1);

    const auto full = column_stats(shift_matrix(Grid(FieldSpec(3), 2).full()));
    for (const auto& c : full.columns) CHECK(c.exponent == 0);

    const auto t1 = column_stats(shift_matrix(ds("01,10", 3, 2)));
    REQUIRE(t1.columns.size() == 4);
    for (const auto& c : t1.columns) {
      CHECK(c.distinct == 9);
      CHECK(c.exponent == 2);
    }
    CHECK(t1.min_exponent == 2);
  }

  TEST_CASE("columns are identical or disjoint") {
    for (const auto& cls : partition_all(3, 2, 3)) {
      const ShiftMatrix mat = shift_matrix(cls.representative);
      for (std::size_t a = 0; a < mat.column_count(); ++a) {
        for (std::size_t b = a + 1; b < mat.column_count(); ++b) {
          CHECK(column_relation(mat, a, b) != ColumnRelation::overlapping);
        }
      }
    }
  }

  TEST_CASE("dataset parsing") {
    const FieldSpec f(2);
    CHECK(to_string(parse_dataset("{110,000}", f, 3)) == "000,110");
    CHECK_THROWS_AS(parse_dataset("000,000", f, 3), ParseError);
    CHECK_THROWS_AS(parse_dataset("", f, 3), ParseError);
    CHECK_THROWS_AS(parse_dataset("002", f, 3), ParseError);
  }
}
