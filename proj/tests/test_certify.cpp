#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "kb/certify.hpp"
#include "kb/json_io.hpp"

using namespace kb;

namespace {
const RepElement kCommutator{RepElement::Kind::CommutatorM, 0, 0};
}

TEST_CASE("halftwist_trivial") {
  CHECK(halftwist_trivial(RootChoice(10, 3), 5));   // q^5 = -1
  CHECK(halftwist_trivial(RootChoice(8, 1), 8));    // q^8 = 1, 8 even
  CHECK(halftwist_trivial(RootChoice(6, 1), 6));
  CHECK_FALSE(halftwist_trivial(RootChoice(6, 1), 5));
  CHECK_FALSE(halftwist_trivial(RootChoice(6, 5), 5));
  CHECK_FALSE(halftwist_trivial(RootChoice(10, 3), 4));
  // exhaustive: no primitive 6th root has q^5 = -1
  for (long t : coprime_residues(24))
    CHECK_FALSE(halftwist_trivial(RootChoice(6, t), 5));
}

TEST_CASE("headline infinite-order certificate at r=10, t=3") {
  RootChoice root(10, 3);
  auto cert =
      infinite_order_certificate(assemble_M(3, 10, root), kCommutator, root);
  REQUIRE(cert.kind == OrderCertificate::Kind::InfiniteOrder);
  CHECK(cert.witness_a == 1);
  CHECK(cert.det.is_one());
  CHECK(cert.sign_witness == 1);
  CHECK(cert.dim == 2);  // l_2(1) = 1 at n = 3
  // excess = -4 sin(3pi/5) sin(6pi/5) = sqrt(5)
  CycloElem excess =
      cert.trace - CycloElem::from_rational(40, Rational(cert.dim));
  auto z = embed_double(excess);
  CHECK(z.real() == doctest::Approx(2.2360679774997896).epsilon(1e-9));
  CHECK(z.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("r=6 is inconclusive for the trace-excess test") {
  for (long t : coprime_residues(24)) {
    RootChoice root(6, t);
    auto cert =
        infinite_order_certificate(assemble_M(3, 6, root), kCommutator, root);
    CHECK(cert.kind == OrderCertificate::Kind::Inconclusive);
  }
}

TEST_CASE("identity matrix certificates") {
  RootChoice root(8, 1);
  auto id = ScalarBlockMatrix::identity({{"x", 5}}, 32);
  auto inf = infinite_order_certificate(id, kCommutator, root);
  CHECK(inf.kind == OrderCertificate::Kind::Inconclusive);
  auto fin = finite_order_check(id, 8, kCommutator, root);
  REQUIRE(fin.kind == OrderCertificate::Kind::FiniteOrder);
  CHECK(fin.order == 1);
  CHECK(fin.scalar.is_one());
}

TEST_CASE("finite orders of the small-level blocks") {
  // r = 6: M(1) has order 3, M(0) and M(2) have order 2
  for (long t : {1L, 5L}) {
    RootChoice root(6, t);
    auto m1 = closed_form_M_block(1, 3, 6, root);
    auto c1 = finite_order_check(m1, 12, kCommutator, root);
    REQUIRE(c1.kind == OrderCertificate::Kind::FiniteOrder);
    CHECK(c1.order == 3);
    CHECK(c1.scalar.is_one());
    for (long a : {0L, 2L}) {
      auto m = closed_form_M_block(a, 4, 6, root);
      auto c = finite_order_check(m, 12, kCommutator, root);
      REQUIRE(c.kind == OrderCertificate::Kind::FiniteOrder);
      CHECK(c.order == 2);
    }
  }
  // r = 4: M(0) has order 2
  RootChoice root4(4, 1);
  auto m0 = closed_form_M_block(0, 4, 4, root4);
  auto c0 = finite_order_check(m0, 12, kCommutator, root4);
  REQUIRE(c0.kind == OrderCertificate::Kind::FiniteOrder);
  CHECK(c0.order == 2);
}

TEST_CASE("no contradiction between the two deciders") {
  for (long r : {5L, 6L, 8L, 10L}) {
    RootChoice root(r, r == 10 ? 3 : 1);
    auto m = assemble_M(3, r, root);
    auto inf = infinite_order_certificate(m, kCommutator, root);
    auto fin = finite_order_check(m, 24, kCommutator, root);
    CHECK_FALSE((inf.kind == OrderCertificate::Kind::InfiniteOrder &&
                 fin.kind == OrderCertificate::Kind::FiniteOrder));
  }
}

TEST_CASE("certify_power_subgroup") {
  auto certs = certify_power_subgroup(6, 5, 12);
  bool found = false;
  for (const auto& c : certs) {
    CHECK(c.kind == OrderCertificate::Kind::InfiniteOrder);
    if (c.r == 10 && c.t == 3 &&
        c.element.kind == RepElement::Kind::CommutatorM)
      found = true;
  }
  CHECK(found);
  CHECK(certify_power_subgroup(6, 6, 24).empty());
  // even m >= 8: certificates exist at r = m, including the f_2 route
  auto certs8 = certify_power_subgroup(8, 8, 12);
  bool via_f2 = false, at_r8 = false;
  for (const auto& c : certs8) {
    if (c.element.kind == RepElement::Kind::Commutator2 && c.r == 8)
      via_f2 = true;
    if (c.r == 8) at_r8 = true;
  }
  CHECK(via_f2);
  CHECK(at_r8);
}

TEST_CASE("certificates run in parallel deterministically") {
  auto serial = certify_power_subgroup(6, 5, 12, 1);
  auto parallel = certify_power_subgroup(6, 5, 12, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].r == parallel[i].r);
    CHECK(serial[i].t == parallel[i].t);
    CHECK(serial[i].trace == parallel[i].trace);
  }
}

TEST_CASE("Lemma 2.6 scan on a desk range") {
  auto report = scan_lemma_26(5, 16);
  REQUIRE(report.size() == 12);
  for (const auto& entry : report) {
    bool expected = (entry.r != 6 && entry.r != 10);
    CHECK(entry.positive == expected);
    if (entry.positive) CHECK(std::gcd(entry.witness_t, 4 * entry.r) == 1);
  }
}

TEST_CASE("Lemmas 3.3 and 3.5: infinite order at every r != 6, both parities") {
  for (long r = 5; r <= 16; ++r) {
    if (r == 6) continue;
    for (long n : {3L, 4L}) {
      bool found = false;
      for (long t : coprime_residues(4 * r)) {
        RootChoice root(r, t);
        auto cert = infinite_order_certificate(assemble_M(n, r, root),
                                               kCommutator, root);
        if (cert.kind == OrderCertificate::Kind::InfiniteOrder) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("JSON round trip and independent re-verification") {
  RootChoice root(10, 3);
  auto cert =
      infinite_order_certificate(assemble_M(3, 10, root), kCommutator, root);
  auto j = certificate_to_json(cert);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(reverify_certificate(j));
  auto back = certificate_from_json(j);
  CHECK(back.trace == cert.trace);
  CHECK(back.dim == cert.dim);
  CHECK(back.r == 10);
  CHECK(back.t == 3);
  // tampering breaks re-verification: claim a bigger block dimension
  auto tampered = j;
  tampered["dim"] = "6";
  CHECK_FALSE(reverify_certificate(tampered));
  // advisory float rendering is close to the exact value
  double shown = j.at("trace_excess_float").at("re").get<double>();
  CHECK(shown == doctest::Approx(2.2360679774997896).epsilon(1e-9));
}
