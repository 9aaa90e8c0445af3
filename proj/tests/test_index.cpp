#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "mzv/errors.hpp"
#include "mzv/index.hpp"

using namespace mzv;

namespace {

// Oracle: k^dagger through the encoding word x^{k_1-1}y...x^{k_d-1}y,
// reversed with letters swapped.
Index dual_by_word(const Index& k) {
  std::string w;
  for (int p : k) w += std::string(static_cast<std::size_t>(p - 1), 'x') + "y";
  std::string t(w.rbegin(), w.rend());
  for (char& c : t) c = c == 'x' ? 'y' : 'x';
  std::vector<int> parts;
  int run = 1;
  for (char c : t) {
    if (c == 'x') {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  return Index(parts);
}

// Oracle: write k as "1+1,1" and exchange ',' with '+'.
Index hoffman_dual_by_string(const Index& k) {
  std::string s;
  for (std::size_t i = 0; i < k.depth(); ++i) {
    if (i) s += ',';
    for (int j = 0; j < k[i]; ++j) s += j ? "+1" : "1";
  }
  for (char& c : s) {
    if (c == ',') c = '+';
    else if (c == '+') c = ',';
  }
  std::vector<int> parts{0};
  for (char c : s) {
    if (c == '1') ++parts.back();
    if (c == ',') parts.push_back(0);
  }
  return Index(parts);
}

std::vector<Index> all_indices_up_to(int max_weight) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w) {
    auto v = indices_of_weight(w);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("stats") {
  CHECK(stats(Index{4, 1, 1, 1}) == IndexStats{7, 4, 1, true});
  CHECK(stats(Index{}) == IndexStats{0, 0, 0, false});
  CHECK(stats(Index{1, 2}) == IndexStats{3, 2, 1, false});
}

TEST_CASE("dual examples") {
  CHECK(dual(Index{4, 1, 1, 1}) == Index{5, 1, 1});
  CHECK(dual(Index{2}) == Index{2});
  CHECK(dual(Index{3}) == Index{2, 1});
  CHECK_THROWS_AS(dual(Index{1, 2}), AdmissibilityError);
  CHECK_THROWS_AS(dual(Index{}), AdmissibilityError);
}

TEST_CASE("dual laws, exhaustive to weight 12") {
  int checked = 0;
  for (const Index& k : all_indices_up_to(12)) {
    if (!k.admissible()) continue;
    const Index kd = dual(k);
    REQUIRE(kd == dual_by_word(k));
    REQUIRE(dual(kd) == k);
    REQUIRE(kd.weight() == k.weight());
    REQUIRE(static_cast<int>(kd.depth()) == k.weight() - static_cast<int>(k.depth()));
    REQUIRE(kd.height() == k.height());
    ++checked;
  }
  CHECK(checked == (1 << 11) - 1);  // admissible indices of weight 2..12
}

TEST_CASE("hoffman dual") {
  CHECK(hoffman_dual(Index{3}) == Index{1, 1, 1});
  CHECK(hoffman_dual(Index{2, 1}) == Index{1, 2});
  CHECK(hoffman_dual(Index{1}) == Index{1});
  CHECK_THROWS_AS(hoffman_dual(Index{}), DomainError);
  for (const Index& k : all_indices_up_to(12)) {
    const Index kv = hoffman_dual(k);
    REQUIRE(kv == hoffman_dual_by_string(k));
    REQUIRE(hoffman_dual(kv) == k);
    REQUIRE(kv.weight() == k.weight());
    REQUIRE(static_cast<int>(kv.depth()) == k.weight() - static_cast<int>(k.depth()) + 1);
  }
}

TEST_CASE("refinements") {
  const auto r37 = refinements(Index{3, 7});
  CHECK(std::find(r37.begin(), r37.end(), Index{1, 2, 3, 4}) != r37.end());
  CHECK(refinements(Index{2}) == std::vector<Index>{Index{1, 1}, Index{2}});
  CHECK(refinements(Index{3}) ==
        std::vector<Index>{Index{1, 1, 1}, Index{1, 2}, Index{2, 1}, Index{3}});

  for (const Index& k : all_indices_up_to(10)) {
    const auto refs = refinements(k);
    REQUIRE(refs.size() == std::size_t{1} << (k.weight() - static_cast<int>(k.depth())));
    REQUIRE(std::is_sorted(refs.begin(), refs.end()));
    REQUIRE(std::set<Index>(refs.begin(), refs.end()).size() == refs.size());
    // Coarsening: greedily re-sum blocks of k' against the parts of k.
    for (const Index& kp : refs) {
      std::vector<int> coarse;
      int acc = 0;
      std::size_t target = 0;
      for (int part : kp) {
        acc += part;
        REQUIRE(target < k.depth());
        REQUIRE(acc <= k[target]);
        if (acc == k[target]) {
          coarse.push_back(acc);
          acc = 0;
          ++target;
        }
      }
      REQUIRE(Index(coarse) == k);
    }
  }
}

TEST_CASE("compositions") {
  CHECK(compositions(4, 2) == std::vector<Index>{Index{1, 3}, Index{2, 2}, Index{3, 1}});
  CHECK(compositions(3, 3) == std::vector<Index>{Index{1, 1, 1}});
  CHECK(compositions(2, 3).empty());
  CHECK(compositions(0, 0) == std::vector<Index>{Index{}});
  for (int n = 1; n <= 12; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto c = compositions(n, d);
      REQUIRE(static_cast<long>(c.size()) == binomial(n - 1, d - 1));
      REQUIRE(std::is_sorted(c.begin(), c.end()));
      for (const Index& k : c) REQUIRE(k.weight() == n);
    }
  }
}

TEST_CASE("weak compositions") {
  CHECK(weak_compositions(2, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(weak_compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(weak_compositions(3, 3).size() == 10);
}

TEST_CASE("parse and format") {
  CHECK(parse_index("3,2") == Index{3, 2});
  CHECK(parse_index("( 4 , 1 )") == Index{4, 1});
  CHECK(parse_index("  7 ") == Index{7});
  CHECK(parse_index("()") == Index{});
  CHECK_THROWS_AS(parse_index("3,0"), DomainError);
  CHECK_THROWS_AS(parse_index("3,-1"), DomainError);
  CHECK_THROWS_AS(parse_index("3,,2"), ParseError);
  CHECK_THROWS_AS(parse_index("3.5"), ParseError);
  CHECK_THROWS_AS(parse_index("(3,2"), ParseError);
  CHECK_THROWS_AS(parse_index("a"), ParseError);
  try {
    parse_index("2, x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK(format_index(Index{4, 1, 1, 1}) == "4,1,1,1");
  for (const Index& k : all_indices_up_to(12)) REQUIRE(parse_index(format_index(k)) == k);
}
