#include <doctest.h>

#include "hecke/linalg.hpp"

using namespace hecke;

namespace {
RationalMatrix m22(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {{Rational(a), Rational(b)}, {Rational(c), Rational(d)}};
}
}  // namespace

TEST_CASE("rank") {
  CHECK(mat_rank(mat_identity(4)) == 4);
  CHECK(mat_rank(m22(1, 2, 2, 4)) == 1);
  CHECK(mat_rank(m22(1, 2, 3, 4)) == 2);
  CHECK(mat_rank(mat_zero(3, 5)) == 0);
  RationalMatrix tall = {{Rational(1), Rational(0)},
                         {Rational(0), Rational(1)},
                         {Rational(1), Rational(1)}};
  CHECK(mat_rank(tall) == 2);
}

TEST_CASE("inverse") {
  auto inv = mat_inverse(m22(2, 1, 1, 1));
  REQUIRE(inv.has_value());
  CHECK(mat_mul(*inv, m22(2, 1, 1, 1)) == mat_identity(2));
  CHECK(mat_mul(m22(2, 1, 1, 1), *inv) == mat_identity(2));
  CHECK(!mat_inverse(m22(1, 2, 2, 4)).has_value());
}

TEST_CASE("apply") {
  RationalVector v = {Rational(1), Rational(1, 2)};
  CHECK(mat_apply(m22(2, 0, 0, 4), v) == RationalVector{Rational(2), Rational(2)});
}

TEST_CASE("span basis membership and coordinates") {
  SpanBasis span(3);
  CHECK(span.add({Rational(1), Rational(1), Rational(0)}));
  CHECK(span.add({Rational(0), Rational(1), Rational(1)}));
  CHECK(!span.add({Rational(1), Rational(2), Rational(1)}));  // sum of the first two
  CHECK(span.rank() == 2);

  RationalVector target = {Rational(2), Rational(5), Rational(3)};
  auto coords = span.coordinates(target);
  REQUIRE(coords.has_value());
  // 2*(1,1,0) + 3*(0,1,1) = (2,5,3)
  CHECK((*coords)[0] == Rational(2));
  CHECK((*coords)[1] == Rational(3));
  CHECK(!span.contains({Rational(1), Rational(0), Rational(0)}));
  CHECK(span.contains({Rational(1), Rational(2), Rational(1)}));
  CHECK(!span.coordinates({Rational(0), Rational(0), Rational(1)}).has_value());
}

TEST_CASE("span basis reconstructs vectors exactly") {
  SpanBasis span(4);
  std::vector<RationalVector> rows = {
      {Rational(1, 2), Rational(0), Rational(1), Rational(3)},
      {Rational(0), Rational(2, 3), Rational(1), Rational(0)},
      {Rational(1), Rational(1), Rational(0), Rational(-1)},
  };
  for (const auto& r : rows) CHECK(span.add(r));
  RationalVector combo(4);
  Rational cs[3] = {Rational(2), Rational(-1, 3), Rational(5)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) combo[j] += cs[i] * rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  auto coords = span.coordinates(combo);
  REQUIRE(coords.has_value());
  for (int i = 0; i < 3; ++i) CHECK((*coords)[static_cast<size_t>(i)] == cs[i]);
}
