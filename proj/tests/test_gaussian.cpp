#include "doctest.h"
#include "nilorbit/gaussian.hpp"

using nilorbit::GaussianRational;

TEST_CASE("field arithmetic is exact") {
  GaussianRational a(1, 3);
  GaussianRational b(1, 6);
  CHECK(a + b == GaussianRational(1, 2));
  CHECK(a * GaussianRational(3) == GaussianRational(1));
  CHECK((a - a).is_zero());

  GaussianRational z = GaussianRational(2) + GaussianRational::i() * GaussianRational(3);
  GaussianRational w = GaussianRational(1) - GaussianRational::i();
  CHECK(z * w / w == z);
  CHECK((z / z) == GaussianRational(1));
}

TEST_CASE("conjugate and norm") {
  GaussianRational z = GaussianRational::from_strings("3/4", "-2/5");
  CHECK(z.conj() == GaussianRational::from_strings("3/4", "2/5"));
  CHECK(z.norm() == mpq_class(9, 16) + mpq_class(4, 25));
  CHECK(z.norm() > 0);
  CHECK(GaussianRational().norm() == 0);
  // |z|^2 = 0 iff z = 0
  CHECK((z * z.conj()).re() == z.norm());
}

TEST_CASE("i * i = -1") {
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
}

TEST_CASE("string round trip") {
  GaussianRational z = GaussianRational::from_strings("-7/2", "5/3");
  CHECK(z.re_str() == "-7/2");
  CHECK(z.im_str() == "5/3");
  CHECK(z.str() == "-7/2+5/3*i");
  CHECK(GaussianRational(4).str() == "4");
  CHECK(GaussianRational::i().str() == "i");
  CHECK((-GaussianRational::i()).str() == "-i");
  CHECK(GaussianRational::from_strings("2/4", "0").re_str() == "1/2");  // canonicalized
  CHECK_THROWS(GaussianRational::from_strings("nope", "0"));
}
