#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "negmono/error.hpp"
#include "negmono/measures.hpp"
#include "negmono/states.hpp"

using namespace negmono;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
const double kWNeg = (std::sqrt(5.0) - 1.0) / 3.0;

}  // namespace

TEST_CASE("canonical-form states") {
  const PureState zero = acin_state({0, 0, 0, 1});
  CHECK(zero.amplitude(0, 0, 0) == Complex(1.0));
  CHECK(zero.norm() == doctest::Approx(1.0));

  const PureState bell_ac = acin_state({kInvSqrt2, 0, 0, kInvSqrt2});
  CHECK(pure_cut_negativity(bell_ac) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::sqrt(negativity_triple(bell_ac).n_ac_sq) == doctest::Approx(1.0).epsilon(1e-12));

  const NegativityTriple w = negativity_triple(acin_state({kInvSqrt3, kInvSqrt3, 0, kInvSqrt3}));
  CHECK(std::abs(w.n_ac_sq - kWNeg * kWNeg) < 1e-12);
  CHECK(std::abs(w.n_ab_sq - kWNeg * kWNeg) < 1e-12);
  CHECK(std::abs(w.n_abc_sq - 8.0 / 9.0) < 1e-12);

  CHECK_THROWS_AS(acin_state({0.5, 0.5, 0, 0.5}), Error);
  CHECK_THROWS_AS(acin_state({-kInvSqrt2, 0, 0, kInvSqrt2}), Error);
  const auto n = AcinParams::normalized(1, 2, 3, 4, {0.5, 0.5});
  CHECK(n.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("qudit family") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = QuditFamilyParams::normalized(2, u(gen), u(gen), u(gen), u(gen));
    const PureState q = qudit_family_state(p);
    const PureState a = acin_state({p.a, p.b, p.c, p.d});
    CHECK(q == a);
  }
  for (int D = 2; D <= 6; ++D) {
    const auto p = QuditFamilyParams::normalized(D, u(gen), u(gen), u(gen), u(gen));
    CHECK(std::abs(qudit_family_state(p).norm() - 1.0) < 1e-12);
  }
  // A-C GHZ-like, B untouched.
  const auto p = QuditFamilyParams{3, kInvSqrt3, 0, 0, kInvSqrt3};
  const NegativityTriple t = negativity_triple(qudit_family_state(p));
  CHECK(t.n_ab_sq == 0.0);
  CHECK(t.n_ac_sq > 1.0);

  CHECK_THROWS_AS(qudit_family_state({3, 0.5, 0.5, 0.5, 0.5}), Error);
  CHECK_THROWS_AS(qudit_family_state({1, 0, 0, 0, 1}), Error);
}

TEST_CASE("swap-rotated family") {
  const SwapFamilyParams s0{3, 0.8, 0.0};
  const NegativityTriple t0 = negativity_triple(swap_family_state(s0));
  CHECK(t0.n_ac_sq == 0.0);
  CHECK(t0.n_ab_sq > 0.0);

  const NegativityTriple t1 = negativity_triple(swap_family_state({3, 0.8, std::numbers::pi / 2}));
  CHECK(t1.n_ab_sq < 1e-24);
  CHECK(t1.n_ac_sq > 0.0);

  // Matches the real-amplitude family with a = b_s sin(theta), b = b_s cos(theta).
  const SwapFamilyParams s{3, 0.8, std::numbers::pi / 4};
  const double bs = s.b();
  const NegativityTriple ts = negativity_triple(swap_family_state(s));
  const NegativityTriple tq = negativity_triple(qudit_family_state(
      {3, bs * std::sin(s.theta), bs * std::cos(s.theta), 0.0, s.d}));
  CHECK(std::abs(ts.n_ac_sq - tq.n_ac_sq) < 1e-10);
  CHECK(std::abs(ts.n_ab_sq - tq.n_ab_sq) < 1e-10);
  CHECK(std::abs(ts.n_abc_sq - tq.n_abc_sq) < 1e-10);

  CHECK_THROWS_AS(swap_family_state({3, 1.2, 0.0}), Error);
}

TEST_CASE("Haar sampling") {
  const auto a = haar_random_pure({2, 2, 2}, 99);
  const auto b = haar_random_pure({2, 2, 2}, 99);
  CHECK(a == b);
  CHECK(a.norm_deviation() < 1e-12);
  CHECK_FALSE(a == haar_random_pure({2, 2, 2}, 100));

  // E|psi_0|^2 = 1/8 and E|psi_0|^4 = 2/(8*9), so the per-draw variance is 1/36 - 1/64.
  const int n = 100000;
  Rng rng = make_rng(2024);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += std::norm(haar_random_pure({2, 2, 2}, rng).amplitudes()[0]);
  const double mean = sum / n;
  const double sigma = std::sqrt((1.0 / 36.0 - 1.0 / 64.0) / n);
  CHECK(std::abs(mean - 0.125) < 3.0 * sigma);

  Rng urng = make_rng(5);
  for (std::size_t dim : {2u, 3u, 5u}) {
    const ComplexMatrix u = haar_unitary(dim, urng);
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(dim)) < 1e-13);
  }
}

TEST_CASE("named states") {
  CHECK(parse_named_state("GHZ") == NamedState::GHZ);
  CHECK(parse_named_state("w") == NamedState::W);
  CHECK(parse_named_state("Product") == NamedState::Product);
  CHECK_THROWS_WITH_AS(parse_named_state("bell"), doctest::Contains("UnknownName"), Error);

  const ConcurrenceTriple ghz = concurrence_triple(named_state(NamedState::GHZ));
  CHECK(ghz.c_ac_sq == doctest::Approx(0.0));
  CHECK(ghz.c_ab_sq == doctest::Approx(0.0));
  CHECK(ghz.c_abc_sq == doctest::Approx(1.0).epsilon(1e-12));

  const ConcurrenceTriple w = concurrence_triple(named_state(NamedState::W));
  CHECK(std::abs(w.c_ac_sq - 4.0 / 9.0) < 1e-10);
  CHECK(std::abs(w.c_ab_sq - 4.0 / 9.0) < 1e-10);
  CHECK(std::abs(w.c_abc_sq - 8.0 / 9.0) < 1e-10);

  const PureState prod = named_state(NamedState::Product);
  CHECK(concurrence_triple(prod) == ConcurrenceTriple{});
  CHECK(negativity_triple(prod) == NegativityTriple{});
}
