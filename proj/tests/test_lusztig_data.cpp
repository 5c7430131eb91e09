#include <doctest.h>

#include <set>

#include "mvpoly/errors.hpp"
#include "mvpoly/lusztig_data.hpp"
#include "support/kostant_counter.hpp"
#include "support/samples.hpp"

using namespace mvpoly;
using namespace samples;

TEST_CASE("partition basics") {
  const Partition p({1, 9, 1, 2});
  CHECK(p.parts() == std::vector<Int>{9, 2, 1, 1});
  CHECK(p.size() == 13);
  CHECK(largest_part(p) == 9);
  CHECK(largest_part(Partition()) == 0);
  CHECK(remove_part(p, 9) == Partition({2, 1, 1}));
  CHECK(remove_part(p, 1) == Partition({9, 2, 1}));
  CHECK_THROWS_AS(remove_part(p, 3), PartAbsent);
  CHECK(transpose(Partition({2, 1, 1})) == Partition({3, 1}));
  CHECK(transpose(Partition()) == Partition());
  CHECK_THROWS_AS(Partition({2, 0}), PreconditionViolated);
  CHECK(to_string(p) == "(9,2,1,1)");
}

TEST_CASE("partitions_of") {
  const Int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (Int n = 0; n < 9; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<Int>(ps.size()) == counts[n]);
    std::set<Partition> distinct(ps.begin(), ps.end());
    CHECK(distinct.size() == ps.size());
    for (const auto& p : ps) {
      CHECK(p.size() == n);
      // remove then re-insert restores the multiset
      for (Int part : p.parts()) CHECK(add_part(remove_part(p, part), part) == p);
      CHECK(transpose(transpose(p)) == p);
    }
  }
  CHECK(partitions_of(3).front() == Partition({3}));
}

TEST_CASE("weights") {
  CHECK(weight(datum(S, {{hi(1), 1}, {lo(1), 1}})) == delta(S));
  CHECK(weight(worked_right()) == RootVector{20, 22});
  CHECK(weight(worked_left()) == RootVector{20, 22});
  CHECK(weight(datum(T, {}, {1})) == RootVector{1, 2});
  CHECK(weight(LusztigDatum(T)).is_zero());
}

TEST_CASE("datum construction drops zeros and validates") {
  const LusztigDatum d(S, {{lo(1), 0}, {hi(2), 3}});
  CHECK(d.real().size() == 1);
  CHECK(d.mult(hi(2)) == 3);
  CHECK(d.mult(lo(1)) == 0);
  CHECK_THROWS_AS(LusztigDatum(S, {{lo(1), -1}}), PreconditionViolated);
  CHECK_THROWS_AS(LusztigDatum(S, {{RootLabel{Family::Low, 0}, 1}}),
                  PreconditionViolated);
  CHECK(d.with_mult(hi(2), 0).is_zero());
  CHECK(to_string(worked_right()) ==
        "{low1:2,low2:1,low3:1,high1:1,high3:1,delta:(9,2,1,1)}");
  CHECK(to_string(LusztigDatum(S)) == "{}");
}

TEST_CASE("twist by s_i") {
  CHECK(twist_s(datum(S, {{lo(1), 1}}), 0) == datum(S, {{hi(2), 1}}));
  CHECK(twist_s(datum(T, {{hi(1), 3}}), 1) == datum(T, {{lo(2), 3}}));
  CHECK(twist_s(datum(S, {}, {2, 1}), 0) == datum(S, {}, {2, 1}));
  CHECK_THROWS_AS(twist_s(datum(S, {{hi(1), 1}}), 0), PreconditionViolated);
  CHECK_THROWS_AS(twist_s(datum(T, {{lo(1), 2}}), 1), PreconditionViolated);
}

TEST_CASE("twist properties on all small data") {
  for (auto kind : kAllKinds) {
    for (Int a = 0; a <= 3; ++a) {
      for (Int b = 0; b <= 4; ++b) {
        for (const auto& d : enumerate_data(kind, {a, b})) {
          for (int i = 0; i < 2; ++i) {
            if (d.simple_mult(i) != 0) continue;
            const LusztigDatum t = twist_s(d, i);
            CHECK(weight(t) == simple_reflection(kind, i, weight(d)));
            CHECK(t.simple_mult(i) == 0);
            CHECK(t.delta_part() == d.delta_part());
            CHECK(twist_s(t, i) == d);
          }
          if (kind == S) {
            const LusztigDatum t = twist_tau(d);
            CHECK(twist_tau(t) == d);
            CHECK(weight(t) == RootVector{weight(d).b, weight(d).a});
          }
        }
      }
    }
  }
}

TEST_CASE("twist by tau") {
  CHECK(twist_tau(datum(S, {{hi(1), 2}, {lo(2), 1}})) ==
        datum(S, {{lo(1), 2}, {hi(2), 1}}));
  CHECK(twist_tau(datum(S, {}, {3})) == datum(S, {}, {3}));
  CHECK(twist_tau(LusztigDatum(S)) == LusztigDatum(S));
  CHECK_THROWS_AS(twist_tau(LusztigDatum(T)), UnsupportedKind);
}

TEST_CASE("enumerate_data small cases") {
  const auto one = enumerate_data(S, delta(S));
  CHECK(one.size() == 2);
  CHECK(std::set<LusztigDatum>(one.begin(), one.end()) ==
        std::set<LusztigDatum>{datum(S, {{hi(1), 1}, {lo(1), 1}}),
                               datum(S, {}, {1})});
  CHECK(enumerate_data(S, 2 * delta(S)).size() == 6);
  CHECK(enumerate_data(S, {0, 0}).size() == 1);
  CHECK(enumerate_data(S, {0, 0}).front().is_zero());
  CHECK(enumerate_data(T, {0, 0}).size() == 1);
  CHECK(enumerate_data(S, {2, 1}).size() == 3);
  CHECK(enumerate_data(S, {-1, 0}).empty());
}

TEST_CASE("enumerate_data matches an independent Kostant counter") {
  for (auto kind : kAllKinds) {
    for (Int a = 0; a <= 4; ++a) {
      for (Int b = 0; b <= (kind == S ? 4 : 8); ++b) {
        const auto data = enumerate_data(kind, {a, b});
        CAPTURE(a);
        CAPTURE(b);
        CHECK(static_cast<long>(data.size()) == oracle::kostant_count(kind, a, b));
        std::set<LusztigDatum> distinct(data.begin(), data.end());
        CHECK(distinct.size() == data.size());
        for (const auto& d : data) CHECK(weight(d) == RootVector{a, b});
      }
    }
  }
}

TEST_CASE("enumeration order is deterministic") {
  CHECK(enumerate_data(T, {2, 5}) == enumerate_data(T, {2, 5}));
}

TEST_CASE("hash agrees with equality") {
  const auto data = enumerate_data(S, {3, 3});
  std::set<std::size_t> hashes;
  for (const auto& d : data) {
    CHECK(hash_value(d) == hash_value(LusztigDatum(d.kind(), d.real(), d.delta_part())));
    hashes.insert(hash_value(d));
  }
  CHECK(hashes.size() > data.size() / 2);
}
