#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <catch_amalgamated.hpp>

#include "jamsec/channel.hpp"
#include "jamsec/rng.hpp"

using jamsec::ChannelSet;
using jamsec::CounterRng;
using jamsec::RandomStream;

TEST_CASE("gain is the squared magnitude", "[channel]") {
  CHECK(jamsec::gain(std::complex<double>(3.0, 4.0)) == 25.0);
  CHECK(jamsec::gain(std::complex<double>(0.0, 0.0)) == 0.0);
  for (const double phi : {0.0, 0.4, 1.7, 3.1, -2.2}) {
    CHECK(jamsec::gain(std::polar(1.0, phi)) == Catch::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("fixed seed reproduces the channel set bit for bit", "[channel]") {
  CounterRng a = RandomStream(42).draw(0);
  CounterRng b = RandomStream(42).draw(0);
  const ChannelSet<double> x = jamsec::sample_channels<double>(a, 6);
  const ChannelSet<double> y = jamsec::sample_channels<double>(b, 6);
  CHECK(x.h_ab == y.h_ab);
  CHECK(x.h_ae == y.h_ae);
  CHECK(x.h_jb == y.h_jb);
  CHECK(x.h_je == y.h_je);
  CHECK(x.all_finite());
  CHECK(x.k_active() == 6);
}

TEST_CASE("stream draws depend only on key and index", "[channel][rng]") {
  const RandomStream s(7);
  CounterRng late = s.substream(3).draw(1000);
  // Drawing other indices first must not change draw 1000.
  for (int i = 0; i < 10; ++i) {
    CounterRng other = s.substream(3).draw(static_cast<std::uint64_t>(i));
    (void)other();
  }
  CounterRng again = s.substream(3).draw(1000);
  CHECK(late() == again());
  CHECK(s.substream(3).draw(5)() != s.substream(4).draw(5)());
  CHECK(RandomStream(1).draw(0)() != RandomStream(2).draw(0)());
}

TEST_CASE("smaller antenna subsets are prefixes of larger ones", "[channel]") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    CounterRng a = RandomStream(5).draw(i);
    CounterRng b = RandomStream(5).draw(i);
    const ChannelSet<double> four = jamsec::sample_channels<double>(a, 4);
    const ChannelSet<double> six = jamsec::sample_channels<double>(b, 6);
    CHECK(four.h_ab == six.h_ab);
    CHECK(four.h_jb == six.h_jb.head(4));
    CHECK(four.h_je == six.h_je.head(4));
  }
}

TEST_CASE("coefficients are zero-mean unit-variance circular Gaussians", "[channel]") {
  constexpr int n = 100000;
  const RandomStream stream(2024);
  std::complex<double> sum = 0.0;
  double power = 0.0;
  double re2 = 0.0;
  std::vector<double> gains;
  gains.reserve(n);
  for (int i = 0; i < n; ++i) {
    CounterRng rng = stream.draw(static_cast<std::uint64_t>(i));
    const ChannelSet<double> ch = jamsec::sample_channels<double>(rng, 2);
    sum += ch.h_ab;
    power += jamsec::gain(ch.h_ab);
    re2 += ch.h_ab.real() * ch.h_ab.real();
    gains.push_back(jamsec::gain(ch.h_je[1]));
  }
  CHECK(std::abs(sum.real() / n) <= 0.02);
  CHECK(std::abs(sum.imag() / n) <= 0.02);
  CHECK(std::abs(power / n - 1.0) <= 0.02);
  CHECK(std::abs(re2 / n - 0.5) <= 0.01);

  // Kolmogorov-Smirnov against Exponential(1); 1.628 / sqrt(n) is the 1% critical value.
  std::sort(gains.begin(), gains.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cdf = -std::expm1(-gains[static_cast<std::size_t>(i)]);
    d = std::max({d, (i + 1.0) / n - cdf, cdf - static_cast<double>(i) / n});
  }
  CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}
