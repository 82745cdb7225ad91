#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "mobius/quat.hpp"

using namespace mobius;

namespace {

const Quaternion kOne{1, 0, 0, 0};
const Quaternion kI{0, 1, 0, 0};
const Quaternion kJ{0, 0, 1, 0};
const Quaternion kK{0, 0, 0, 1};

std::mt19937_64& rng() {
  static std::mt19937_64 r(2024);
  return r;
}

Quaternion random_quat() {
  std::normal_distribution<double> g;
  return {g(rng()), g(rng()), g(rng()), g(rng())};
}

Quaternion unit(const Quaternion& q) { return (1.0 / q.norm()) * q; }

double dist(const Quaternion& a, const Quaternion& b) {
  return (a - b).norm();
}

OrientedPlane4 random_plane() {
  return make_plane(random_quat(), random_quat());
}

}  // namespace

TEST_CASE("quaternion algebra") {
  CHECK(dist(kI * kJ, kK) == 0.0);
  CHECK(dist(kJ * kI, -1.0 * kK) == 0.0);
  CHECK(dist(kI * kI, -1.0 * kOne) == 0.0);
  for (int t = 0; t < 10; ++t) {
    const Quaternion a = random_quat(), b = random_quat(), c = random_quat();
    CHECK(dist((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-12);
    CHECK(dist((a * b).conjugate(), b.conjugate() * a.conjugate()) < 1e-12);
  }
}

TEST_CASE("left and right normals of coordinate planes") {
  // The complex line span{1, i}: N = i, R = -i.
  const auto [n, r] = normals_of_plane(make_plane(kOne, kI));
  CHECK(dist(n, kI) < 1e-12);
  CHECK(dist(r, -1.0 * kI) < 1e-12);
  // span{j, k} shares the left normal i but has right normal +i.
  const auto [n2, r2] = normals_of_plane(make_plane(kJ, kK));
  CHECK(dist(n2, kI) < 1e-12);
  CHECK(dist(r2, kI) < 1e-12);
  // Orientation reversal negates both normals.
  const auto [n3, r3] = normals_of_plane(make_plane(kI, kOne));
  CHECK(dist(n3, -1.0 * kI) < 1e-12);
  CHECK(dist(r3, kI) < 1e-12);
}

TEST_CASE("normals satisfy the defining relation and closed form") {
  for (int t = 0; t < 20; ++t) {
    const OrientedPlane4 U = random_plane();
    const auto [n, r] = normals_of_plane(U);
    CHECK(std::abs(n.norm() - 1.0) < 1e-10);
    CHECK(std::abs(n.w) < 1e-10);
    for (const Quaternion* x : {&U.a, &U.b})
      CHECK(dist(n * (*x), -1.0 * ((*x) * r)) < 1e-9);
    // Closed form from the basis: N = b conj(a), R = -conj(a) b.
    CHECK(dist(n, U.b * U.a.conjugate()) < 1e-9);
    CHECK(dist(r, -1.0 * (U.a.conjugate() * U.b)) < 1e-9);
  }
}

TEST_CASE("plane reconstruction round trip") {
  for (int t = 0; t < 20; ++t) {
    const OrientedPlane4 U = random_plane();
    const auto [n, r] = normals_of_plane(U);
    const OrientedPlane4 V = plane_from_normals(n, r);
    const auto [n2, r2] = normals_of_plane(V);
    CHECK(dist(n, n2) < 1e-9);
    CHECK(dist(r, r2) < 1e-9);
  }
  CHECK_THROWS_AS(plane_from_normals(kOne, kI), std::invalid_argument);
  CHECK_THROWS_AS(plane_from_normals(2.0 * kI, kI), std::invalid_argument);
}

TEST_CASE("touch classification of coordinate planes") {
  const OrientedPlane4 c1 = make_plane(kOne, kI);
  const OrientedPlane4 c2 = make_plane(kJ, kK);
  const LRTouch lt = lr_touch(c1, c2);
  CHECK(lt.left_touch);
  CHECK_FALSE(lt.right_touch);
  CHECK(lt.right_cotouch);
  // A plane with itself.
  const LRTouch self = lr_touch(c1, c1);
  CHECK(self.left_touch);
  CHECK(self.right_touch);
  // Reversing orientation turns touch into co-touch.
  const OrientedPlane4 c1r = make_plane(kI, kOne);
  const LRTouch rev = lr_touch(c1, c1r);
  CHECK(rev.left_cotouch);
  CHECK(rev.right_cotouch);
}

TEST_CASE("plane invariants detect touching through the embedding") {
  const OrientedPlane4 c1 = make_plane(kOne, kI);
  const OrientedPlane4 c2 = make_plane(kJ, kK);
  // Orthogonal complex lines touch and co-touch: both pairings vanish.
  const auto [th, rh] = plane_invariants(c1, c2);
  CHECK(std::abs(rh) < 1e-12);
  CHECK(std::abs(th) < 1e-12);
  const auto [ths, rhs] = plane_invariants(c1, c1);
  CHECK(std::abs(ths - 1.0) < 1e-12);
  CHECK(std::abs(rhs) < 1e-12);
}

TEST_CASE("signed singular values") {
  const OrientedPlane4 c1 = make_plane(kOne, kI);
  const auto [l1, l2] = signed_singular_values(c1, c1);
  CHECK(l1 == doctest::Approx(1.0));
  CHECK(l2 == doctest::Approx(1.0));
  const auto [m1, m2] = signed_singular_values(c1, make_plane(kI, kOne));
  CHECK(m1 == doctest::Approx(1.0));
  CHECK(m2 == doctest::Approx(-1.0));
}

TEST_CASE("equivariance under rotations of the four-space") {
  // x -> p x q with unit p, q preserves orientation and transforms the
  // normals by N -> p N conj(p), R -> conj(q) R q.
  for (int t = 0; t < 10; ++t) {
    const Quaternion p = unit(random_quat()), q = unit(random_quat());
    const OrientedPlane4 U = random_plane();
    const auto [n, r] = normals_of_plane(U);
    const OrientedPlane4 V = make_plane(p * U.a * q, p * U.b * q);
    const auto [nv, rv] = normals_of_plane(V);
    CHECK(dist(nv, p * n * p.conjugate()) < 1e-9);
    CHECK(dist(rv, q.conjugate() * r * q) < 1e-9);
  }
}

TEST_CASE("reflections swap left and right touching") {
  // Conjugation x -> conj(x) is orientation-reversing on each plane; a
  // left-touching pair maps to a right-touching pair.
  const OrientedPlane4 c1 = make_plane(kOne, kI);
  const OrientedPlane4 c2 = make_plane(kJ, kK);
  REQUIRE(lr_touch(c1, c2).left_touch);
  const OrientedPlane4 r1 = make_plane(c1.a.conjugate(), c1.b.conjugate());
  const OrientedPlane4 r2 = make_plane(c2.a.conjugate(), c2.b.conjugate());
  const LRTouch lt = lr_touch(r1, r2);
  CHECK(lt.right_touch);
  CHECK_FALSE(lt.left_touch);
}

TEST_CASE("the three touch criteria agree on random pairs") {
  const ResidualReport rr =
      equivalence_check(make_plane(kOne, kI), make_plane(kJ, kK), 500, 7);
  CHECK(rr.at("trials") == 501.0);
  CHECK(rr.at("disagreements") == 0.0);
}

TEST_CASE("degenerate spans are rejected") {
  CHECK_THROWS_AS(make_plane(kI, 3.0 * kI), std::invalid_argument);
  CHECK_THROWS_AS(make_plane(Quaternion{}, kI), std::invalid_argument);
}
