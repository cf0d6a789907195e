#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vecvar/partitions.hpp>

using namespace vecvar;

TEST_CASE("partition parsing and ordering") {
  CHECK(Partition::parse("3,2,1").parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse(" 2 , 1 ").to_string() == "2,1");
  CHECK_THROWS_AS(Partition::parse("1,2"), DomainError);
  CHECK_THROWS_AS(Partition::parse("0"), DomainError);
  CHECK_THROWS_AS(Partition::parse("2,x"), DomainError);

  CHECK(Partition({2}) < Partition({1, 1}));
  CHECK(Partition({1}) < Partition({2}));
  CHECK(Partition() < Partition({1}));
}

TEST_CASE("partitions_up_to enumerates in (size, lex) order") {
  auto only = partitions_up_to(0, 5);
  REQUIRE(only.size() == 1);
  CHECK(only[0].empty());

  auto two = partitions_up_to(2, 2);
  REQUIRE(two.size() == 4);
  CHECK(two[0].to_string() == "");
  CHECK(two[1].to_string() == "1");
  CHECK(two[2].to_string() == "2");
  CHECK(two[3].to_string() == "1,1");

  auto rows = partitions_up_to(4, 1);
  REQUIRE(rows.size() == 5);
  CHECK(rows[4].to_string() == "4");

  auto all = partitions_up_to(6, 6);
  CHECK(all.size() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const Partition& a, const Partition& b) { return a < b; }));
}

TEST_CASE("ssyt oracle small values") {
  CHECK(ssyt_count(Partition({1, 1}), 3) == 3);
  CHECK(ssyt_count(Partition({2}), 2) == 3);
  CHECK(ssyt_count(Partition({2, 1}), 3) == 8);
  CHECK(ssyt_count(Partition(), 4) == 1);
  CHECK(ssyt_count(Partition({1, 1, 1}), 2) == 0);
  CHECK_THROWS_WITH_AS(ssyt_count(Partition({13}), 2), "oracle too large", DomainError);
}

TEST_CASE("schur dimension agrees with the tableau oracle") {
  for (const Partition& lam : partitions_up_to(8, 8))
    for (int n = 0; n <= 5; ++n) CHECK(schur_dimension(lam, n) == ssyt_count(lam, n));
}

TEST_CASE("schur dimension special shapes") {
  // exterior powers: binomial(n, d)
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n)
      CHECK(schur_dimension(Partition(std::vector<int>(d, 1)), n) == binomial(n, d));
  // symmetric powers: binomial(n+d-1, d)
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n)
      CHECK(schur_dimension(Partition({d}), n) == binomial(n + d - 1, d));
  CHECK(schur_dimension(Partition({2, 1}), 3) == 8);
}

TEST_CASE("schur dimension vanishes iff the partition is too long") {
  for (const Partition& lam : partitions_up_to(6, 6))
    for (int n = 0; n <= 6; ++n)
      CHECK((schur_dimension(lam, n) == 0) == (lam.length() > n));
}

TEST_CASE("lr coefficient paper values") {
  Partition lam({3, 1});
  CHECK(lr_coefficient(Partition(), lam, lam) == 1);
  CHECK(lr_coefficient(lam, Partition(), lam) == 1);

  // Pieri: V (x) V = S^2 + Wedge^2
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);

  // the classical multiplicity-2 example
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
}

TEST_CASE("lr coefficient support conditions") {
  // size mismatch
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
  // length violation
  CHECK(lr_coefficient(Partition({1, 1}), Partition(), Partition({2})) == 0);
  // mu not contained in lambda
  CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({2, 2})) == 0);
}

TEST_CASE("lr coefficient symmetry in mu and nu") {
  auto parts = partitions_up_to(6, 6);
  for (const Partition& lam : parts) {
    for (const Partition& mu : parts) {
      if (mu.size() > lam.size()) continue;
      for (const Partition& nu : parts) {
        if (mu.size() + nu.size() != lam.size()) continue;
        CHECK(lr_coefficient(mu, nu, lam) == lr_coefficient(nu, mu, lam));
      }
    }
  }
}

TEST_CASE("lr positivity implies the support conditions") {
  auto parts = partitions_up_to(6, 6);
  for (const Partition& lam : parts)
    for (const Partition& mu : parts)
      for (const Partition& nu : parts) {
        if (lr_coefficient(mu, nu, lam) <= 0) continue;
        CHECK(lam.size() == mu.size() + nu.size());
        CHECK(mu.length() <= lam.length());
        CHECK(nu.length() <= lam.length());
      }
}

TEST_CASE("dimension identity over direct sums") {
  // dim S_lam(K^{a+b}) = sum_{mu,nu} N_{mu nu lam} dim S_mu(K^a) dim S_nu(K^b)
  auto parts = partitions_up_to(6, 6);
  for (const Partition& lam : parts) {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        long rhs = 0;
        for (const Partition& mu : partitions_up_to(lam.size(), lam.length())) {
          if (!lam.contains(mu)) continue;
          for (const Partition& nu :
               partitions_of(lam.size() - mu.size(), lam.length())) {
            long c = lr_coefficient(mu, nu, lam);
            if (c == 0) continue;
            rhs += c * schur_dimension(mu, a) * schur_dimension(nu, b);
          }
        }
        CHECK(schur_dimension(lam, a + b) == rhs);
      }
  }
}
