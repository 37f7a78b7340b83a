#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bpr/rng.hpp"

using namespace bpr;

TEST_CASE("derived streams are reproducible and distinct") {
  SplitRng a = derive_stream(42, {stream::kEpisode, 3, 7});
  SplitRng b = derive_stream(42, {stream::kEpisode, 3, 7});
  SplitRng c = derive_stream(42, {stream::kEpisode, 3, 8});
  for (int i = 0; i < 16; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
  }
  bool any_diff = false;
  SplitRng a2 = derive_stream(42, {stream::kEpisode, 3, 7});
  for (int i = 0; i < 16; ++i) any_diff |= (a2.next_u64() != c.next_u64());
  CHECK(any_diff);
}

TEST_CASE("uniform moments") {
  SplitRng rng(123);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sq += u * u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sq / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));
}

TEST_CASE("normal moments") {
  SplitRng rng(9);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal(2.0, 3.0);
    sum += z;
    sq += (z - 2.0) * (z - 2.0);
  }
  CHECK(sum / n == doctest::Approx(2.0).epsilon(0.02));
  CHECK(std::sqrt(sq / n) == doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("uniform_int covers its range") {
  SplitRng rng(7);
  int counts[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 50000; ++i) counts[rng.uniform_int(5)]++;
  for (int c : counts) CHECK(c > 9000);
}
