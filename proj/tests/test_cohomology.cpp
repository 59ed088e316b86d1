#include "polya/cohomology.hpp"

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

using namespace polya;

namespace {

bool squarefree_u64(uint64_t n) {
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

std::vector<mpz_class> ramified_list(const BiquadraticFieldData& f) {
  std::vector<mpz_class> out;
  for (const auto& rp : f.ramified) out.push_back(rp.p);
  return out;
}

const SquarefreeClass& generator(const PolyaResult& r, const std::string& label) {
  for (const auto& g : r.generators)
    if (g.label == label) return g.cls;
  throw std::runtime_error("missing generator " + label);
}

}  // namespace

TEST_CASE("biquadratic_data on the anchor fields") {
  const auto f = biquadratic_data(33, 105);
  CHECK(f.d3 == 385);
  CHECK(ramified_list(f) == std::vector<mpz_class>{3, 5, 7, 11});
  for (const auto& rp : f.ramified) CHECK(rp.e == 2);
  CHECK(f.two_status == TwoStatus::unramified);
  CHECK(f.s() == 4);
  CHECK(f.e_product_log2() == 4);

  const auto g = biquadratic_data(3, 5);
  CHECK(g.d3 == 15);
  CHECK(ramified_list(g) == std::vector<mpz_class>{2, 3, 5});
  CHECK(g.two_status == TwoStatus::partially_ramified);
  for (const auto& rp : g.ramified) CHECK(rp.e == 2);

  const auto h = biquadratic_data(2, 3);
  CHECK(h.d3 == 6);
  CHECK(h.two_status == TwoStatus::totally_ramified);
  CHECK(h.ramified.front().p == 2);
  CHECK(h.ramified.front().e == 4);
  CHECK(h.e_product_log2() == 3);
}

TEST_CASE("biquadratic_data validates input") {
  CHECK_THROWS_AS(biquadratic_data(33, 33), std::invalid_argument);
  CHECK_THROWS_AS(biquadratic_data(12, 5), NotSquarefree);
  CHECK_THROWS_AS(biquadratic_data(1, 5), std::invalid_argument);
}

TEST_CASE("odd ramified primes divide exactly two of the three d_i") {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{33, 105}, {3, 5}, {2, 3},
                                                             {6, 10}, {15, 35}, {7, 11}}) {
    const auto f = biquadratic_data(a, b);
    for (const auto& rp : f.ramified) {
      if (rp.p == 2) continue;
      int divides = 0;
      for (int i = 1; i <= 3; ++i)
        if (mpz_divisible_p(f.d(i).get_mpz_t(), rp.p.get_mpz_t())) ++divides;
      CHECK(divides == 2);
    }
  }
}

TEST_CASE("f2_rank basics") {
  CHECK(f2_rank({}) == 0);
  CHECK(f2_rank({0, 0}) == 0);
  CHECK(f2_rank({5, 5, 5}) == 1);
  CHECK(f2_rank({1, 2, 3}) == 2);
  CHECK(f2_rank({1, 2, 4, 8, 15}) == 4);
}

TEST_CASE("F2Basis rejects support outside the basis") {
  F2Basis basis;
  basis.primes = {3, 5};
  CHECK(basis.vector_of(class_of_primes({3}, true)) == 0b011);
  CHECK(basis.vector_of(class_of_primes({5})) == 0b100);
  CHECK_THROWS_AS(basis.vector_of(class_of_primes({7})), InternalError);
}

TEST_CASE("h1_two_torsion for Q(sqrt 33, sqrt 105)") {
  const auto field = biquadratic_data(33, 105);
  const auto h1 = h1_two_torsion(field);
  CHECK(h1.rank == 4);
  REQUIRE(h1.generators.size() == 6);
  CHECK(h1.generators[0].cls == class_of_primes({3, 11}));
  CHECK(h1.generators[1].cls == class_of_primes({3, 5, 7}));
  CHECK(h1.generators[2].cls == class_of_primes({5, 7, 11}));
  CHECK(h1.generators[3].cls == class_of_primes({3}));     // a1
  CHECK(h1.generators[4].cls == class_of_primes({3, 7}));  // a2
}

TEST_CASE("polya_group anchors") {
  const auto r = polya_group(biquadratic_data(33, 105));
  CHECK(r.order_log2 == 0);
  CHECK(r.order() == 1);
  REQUIRE(r.rank.has_value());
  CHECK(*r.rank == 0);
  CHECK(r.h1_rank == 4);
  CHECK_FALSE(r.h1_index_two);
  CHECK(generator(r, "a1") == class_of_primes({3}));
  CHECK(generator(r, "a2") == class_of_primes({3, 7}));

  // Q(sqrt 2, sqrt 3) needs the index-two correction to come out trivial.
  const auto s = polya_group(biquadratic_data(2, 3));
  CHECK(s.h1_rank == 2);
  CHECK(s.h1_index_two);
  CHECK(s.order() == 1);
  CHECK_FALSE(s.rank.has_value());  // order-only in the e(2) = 4 regime

  const auto t = polya_group(biquadratic_data(3, 5));
  CHECK(t.order() == 1);
  REQUIRE(t.rank.has_value());
  CHECK(*t.rank == 0);
  CHECK(t.h1_rank == 3);
}

TEST_CASE("exact sequence bookkeeping holds on a spread of fields") {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{
           {33, 105}, {2, 3}, {3, 5}, {6, 10}, {15, 35}, {7, 11}, {5, 13}, {21, 33}, {10, 30}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto field = biquadratic_data(a, b);
    const auto comp = polya_compute(field);
    const int h1_log2 = comp.result.h1_rank + (comp.result.h1_index_two ? 1 : 0);
    CHECK(comp.result.order_log2 + h1_log2 == field.e_product_log2());
    CHECK(comp.result.order_log2 >= 0);
    CHECK(comp.result.h1_rank <= std::min(5, field.s()));
    if (comp.result.rank) CHECK(*comp.result.rank == field.s() - comp.result.h1_rank);
    // generator supports stay within the ramified basis
    for (const auto& g : comp.result.generators)
      CHECK_NOTHROW(comp.h1.basis.vector_of(g.cls));
  }
}

TEST_CASE("six or more ramified primes force a nontrivial group") {
  const auto f1 = biquadratic_data(105, 2431);  // {3,5,7} x {11,13,17}, 2 ramified
  CHECK(f1.s() >= 6);
  CHECK(polya_group(f1).order() >= 2);

  const auto f2 = biquadratic_data(15015, 323);  // {3,5,7,11,13} x {17,19}
  CHECK(f2.s() >= 6);
  CHECK(polya_group(f2).order() >= 2);
}

TEST_CASE("hilbert_polya_order anchors") {
  CHECK(hilbert_polya_order(5) == 1);
  CHECK(hilbert_polya_order(15) == 2);
  CHECK(hilbert_polya_order(3) == 1);
  CHECK(hilbert_polya_order(2) == 1);
  CHECK_THROWS_AS(hilbert_polya_order(1), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_polya_order(0), std::invalid_argument);
}

TEST_CASE("hilbert order equals the exact-sequence order, d <= 300") {
  for (uint64_t d = 2; d <= 300; ++d) {
    if (!squarefree_u64(d)) continue;
    CAPTURE(d);
    const auto cc = quadratic_crosscheck(d);
    CHECK(cc.agree);
    CHECK(cc.hilbert_order == cc.sequence_order);
  }
}
