#include "doctest.h"
#include "mp/gf.hpp"

using namespace mp;

TEST_CASE("prime field GF(2)") {
  auto F = build_field(2, 1);
  CHECK(F.q == 2);
  CHECK(F.add(1, 1) == 0);
  CHECK(F.mul(1, 1) == 1);
  CHECK(F.trace(1) == 1);
}

TEST_CASE("GF(4) with modulus x^2+x+1") {
  auto F = build_field(2, 2, {1, 1, 1});
  // t^2 = t + 1
  Elem t = 2;
  CHECK(F.mul(t, t) == F.add(t, 1));
  // Tr(t) = t + t^2 = 1
  CHECK(F.trace(t) == 1);
  CHECK(F.frobenius(t, 1) == F.add(t, 1));
}

TEST_CASE("field axioms, spot-checked exhaustively for small q") {
  for (auto [p, m] : {std::pair{2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 9}, {3, 5}}) {
    auto F = build_field(p, m);
    // x * inv(x) = 1 and x^q = x
    for (Elem x = 0; x < F.q; ++x) {
      if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
      CHECK(F.pow(x, (long long)F.q) == x);
      CHECK(F.trace(x) < (Elem)p);
      CHECK(F.trace(F.pow(x, p)) == F.trace(x));
      CHECK(F.frobenius(x, m) == x);
    }
    // additivity of trace on a sample grid
    for (Elem x = 0; x < F.q; x += 3)
      for (Elem y = 0; y < F.q; y += 5)
        CHECK((F.trace(x) + F.trace(y)) % p == F.trace(F.add(x, y)));
    // trace kernel has q/p elements
    long long k = 0;
    for (Elem x = 0; x < F.q; ++x)
      if (F.trace(x) == 0) ++k;
    CHECK(k == (long long)F.q / p);
  }
}

TEST_CASE("GF(27): Frobenius fixed-point identity a^27 = a, exhaustively") {
  auto F = build_field(3, 3);
  for (Elem a = 0; a < F.q; ++a) {
    CHECK(F.pow(a, 27) == a);
    CHECK(F.frobenius(F.frobenius(a, 1), 2) == a);
  }
}

TEST_CASE("GF(8): trace kernel has 4 elements; frobenius(x,0) = x") {
  auto F = build_field(2, 3);
  int k = 0;
  for (Elem x = 0; x < 8; ++x) {
    if (F.trace(x) == 0) ++k;
    CHECK(F.frobenius(x, 0) == x);
  }
  CHECK(k == 4);
}

TEST_CASE("deterministic rebuild: same spec, same tables") {
  auto a = build_field(2, 6);
  auto b = build_field(2, 6);
  CHECK(a.spec == b.spec);
  CHECK(a.generator == b.generator);
  for (Elem x = 1; x < a.q; ++x) CHECK(a.mul(x, 3) == b.mul(x, 3));
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(build_field(4, 2), Error);
  CHECK_THROWS_AS(build_field(2, 2, {1, 0, 1}), Error);  // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(build_field(2, 30), Error);            // over the size cap
  try {
    build_field(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NonPrime);
  }
}

TEST_CASE("p-th root and element text round trip") {
  auto F = build_field(3, 3);
  for (Elem x = 0; x < F.q; ++x) {
    CHECK(F.pow(F.p_root(x), 3) == x);
    CHECK(F.parse_element(F.render_element(x)) == x);
  }
}

TEST_CASE("field spec text") {
  auto F = parse_field_spec("2^3");
  CHECK(F.q == 8);
  auto G = parse_field_spec("2^2/1,1,1");
  CHECK(G.q == 4);
  CHECK(G.spec.modulus == std::vector<int>{1, 1, 1});
  auto H = parse_field_spec(render_field_spec(F.spec));
  CHECK(H.spec == F.spec);
}
