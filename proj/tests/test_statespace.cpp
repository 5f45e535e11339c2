#include <doctest.h>

#include <set>

#include "polariton/errors.hpp"
#include "polariton/statespace.hpp"
#include "table1_values.hpp"

using namespace polariton;

TEST_SUITE("statespace") {

TEST_CASE("full-space sizes") {
  CHECK(enumerate_full(10, 3, 1)->size() == 2000);
  CHECK(enumerate_full(2, 1, 0)->size() == 2);
  CHECK(enumerate_full(5, 4, 2)->size() == 1875);
}

TEST_CASE("full-space size is (n_max + 1) m^n, exhaustively") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int nmax = 0; nmax <= 2; ++nmax) {
        std::size_t expected = static_cast<std::size_t>(nmax + 1);
        for (int i = 0; i < n; ++i) expected *= static_cast<std::size_t>(m);
        CHECK(enumerate_full(m, n, nmax)->size() == expected);
      }
    }
  }
}

TEST_CASE("first-excited sizes") {
  CHECK(enumerate_first_excited(2, 1, 3)->size() == 4);
  CHECK(enumerate_first_excited(5, 2, 3)->size() == 44);
  CHECK(enumerate_first_excited(10, 5, 4)->size() == 3125);
}

TEST_CASE("first-excited size matches every no-Pauli table entry") {
  for (const auto& row : paper_table::kRows) {
    CAPTURE(row.m);
    CAPTURE(row.m_g);
    CAPTURE(row.n);
    CHECK(enumerate_first_excited(row.m, row.m_g, row.n)->size() ==
          static_cast<std::size_t>(row.none));
  }
}

TEST_CASE("first-excited content and subset of the one-photon full space") {
  const int m = 5, mg = 2, n = 3;
  const auto fe = enumerate_first_excited(m, mg, n);
  const auto full = enumerate_full(m, n, 1);
  for (std::size_t i = 0; i < fe->size(); ++i) {
    const auto s = fe->state(i);
    int excited = 0;
    for (int level : s.occupation) excited += level >= mg ? 1 : 0;
    if (s.photons == 1) {
      CHECK(excited == 0);
    } else {
      CHECK(s.photons == 0);
      CHECK(excited == 1);
    }
    CHECK(full->find(s).has_value());
  }
}

TEST_CASE("canonical ordering and index bijection") {
  for (const auto& basis : {enumerate_full(3, 3, 2), enumerate_first_excited(4, 2, 3)}) {
    std::set<BasisState> seen;
    for (std::size_t i = 0; i < basis->size(); ++i) {
      const auto s = basis->state(i);
      CHECK(basis->index(s) == i);
      CHECK(seen.insert(s).second);
      if (i > 0) CHECK(basis->state(i - 1) < s);  // photon-major, then lexicographic
    }
  }
  const auto fe = enumerate_first_excited(3, 1, 2);
  CHECK_FALSE(fe->find(BasisState{0, {0, 0}}).has_value());
  CHECK_FALSE(fe->find(BasisState{2, {0, 0}}).has_value());
  CHECK_FALSE(fe->find(BasisState{0, {0, 7}}).has_value());
  CHECK_THROWS_AS(fe->index(BasisState{1, {1, 0}}), std::out_of_range);
}

TEST_CASE("transpositions") {
  const BasisState ge{0, {0, 1}};
  CHECK(apply_transposition(0, 1, ge) == BasisState{0, {1, 0}});
  const BasisState s{1, {0, 1, 2}};
  CHECK(apply_transposition(1, 1, s) == s);
  CHECK(apply_transposition(0, 2, apply_transposition(0, 2, s)) == s);
  CHECK(apply_transposition(0, 2, s).photons == 1);
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(enumerate_full(10, 8, 1), ComputeCapError);
  CHECK_THROWS_AS(enumerate_full(10, 3, 1, 1999), ComputeCapError);
  CHECK_NOTHROW(enumerate_full(10, 3, 1, 2000));
  CHECK_THROWS_AS(enumerate_first_excited(10, 5, 12), ComputeCapError);
  CHECK_THROWS_AS(enumerate_full(1000, 40, 1), ComputeCapError);
  CHECK_THROWS_AS(enumerate_first_excited(4, 4, 2), ValidationError);
  CHECK_THROWS_AS(enumerate_full(1, 2, 1), ValidationError);
}

}
