#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mobius/lorentz.hpp"
#include "mobius/multivector.hpp"

using namespace mobius;
using mobius::testing::random_cvec;
using mobius::testing::random_rvec;

TEST_CASE("minkowski signature and bilinearity") {
  RVec e0{1, 0, 0, 0, 0}, e1{0, 1, 0, 0, 0};
  CHECK(minkowski(e0, e0) == -1.0);
  CHECK(minkowski(e1, e1) == 1.0);
  CHECK(minkowski(e0, e1) == 0.0);
  // Bilinear (not Hermitian) on the complexification: <ia, ia> = -<a,a>.
  CVec a{Complex(0, 1), Complex(0, 0), Complex(0, 0), Complex(0, 0),
         Complex(0, 0)};
  CHECK(minkowski(a, a) == Complex(1.0));
  CHECK(minkowski_herm(a, a) == Complex(-1.0));
  CHECK_THROWS_AS(minkowski(e0, RVec{1, 0}), std::invalid_argument);
}

TEST_CASE("wedge inner product matches the Gram determinant") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const int dim = 6;
    const CVec a = random_cvec(rng, dim), b = random_cvec(rng, dim);
    const CVec c = random_cvec(rng, dim), d = random_cvec(rng, dim);
    const Complex lhs = wedge_inner({a, b}, {c, d});
    const Complex det = minkowski(a, c) * minkowski(b, d) -
                        minkowski(a, d) * minkowski(b, c);
    CHECK(std::abs(lhs - det) < 1e-12 * (1.0 + std::abs(det)));
    // Antisymmetry in each factor pair.
    CHECK(std::abs(wedge_inner({b, a}, {c, d}) + lhs) < 1e-12);
  }
}

TEST_CASE("random lorentz matrices preserve the form") {
  for (unsigned long seed : {1ul, 7ul, 42ul, 1234ul}) {
    const Eigen::MatrixXd T = random_lorentz(seed, 4);
    Eigen::MatrixXd eta = Eigen::MatrixXd::Identity(6, 6);
    eta(0, 0) = -1.0;
    CHECK((T.transpose() * eta * T - eta).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(T.determinant() == doctest::Approx(1.0).epsilon(1e-10));
    // Orthochronous: the forward light cone is preserved.
    Eigen::VectorXd tvec = Eigen::VectorXd::Zero(6);
    tvec(0) = 1.0;
    CHECK((T * tvec)(0) > 0.0);
  }
  CHECK(random_lorentz(0, 3).isIdentity(1e-15));
}

TEST_CASE("dual frame projector splits against the frame") {
  const SurfaceChart ch = catalog("veronese");
  const FramePoint fp = frame_at_point(ch, 0.6, 1.1, 5);
  std::mt19937_64 rng(3);
  const CVec xv = random_cvec(rng, static_cast<int>(fp.Y.size()));
  JetVec X;
  for (const auto& c : xv) X.push_back(Jet2::constant(c, fp.Y[0].order()));
  const SplitResult sp = dual_frame_projector(fp.frame(), X);
  // The pieces re-assemble X.
  for (size_t i = 0; i < X.size(); ++i)
    CHECK(std::abs(sp.tangential[i].value() + sp.normal[i].value() -
                   X[i].value()) < 1e-10);
  // The normal part is orthogonal to the whole frame.
  for (const JetVec* f : {&fp.Y, &fp.Yz, &fp.Yzb, &fp.N})
    CHECK(std::abs(minkowski(jv_value(sp.normal), jv_value(*f))) < 1e-10);
}

TEST_CASE("frame gram residual vanishes on a genuine frame") {
  const FramePoint fp = frame_at_point(catalog("clifford"), 0.4, 0.9, 5);
  CHECK(frame_gram_residual(fp.frame()) < 1e-12);
}

TEST_CASE("multivector wedge pairing matches Gram determinants") {
  std::mt19937_64 rng(5);
  const int dim = 6;
  SUBCASE("grade 2") {
    for (int t = 0; t < 10; ++t) {
      const CVec a = random_cvec(rng, dim), b = random_cvec(rng, dim);
      const CVec c = random_cvec(rng, dim), d = random_cvec(rng, dim);
      const MultiVector A = MultiVector::from_wedge({a, b});
      const MultiVector B = MultiVector::from_wedge({c, d});
      const Complex ref = wedge_inner({a, b}, {c, d});
      CHECK(std::abs(mv_inner(A, B) - ref) < 1e-10 * (1.0 + std::abs(ref)));
    }
  }
  SUBCASE("grade 4") {
    for (int t = 0; t < 10; ++t) {
      std::vector<CVec> x, y;
      for (int i = 0; i < 4; ++i) {
        x.push_back(random_cvec(rng, dim));
        y.push_back(random_cvec(rng, dim));
      }
      Eigen::Matrix4cd G;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = minkowski(x[i], y[j]);
      const Complex ref = G.determinant();
      const Complex got =
          mv_inner(MultiVector::from_wedge(x), MultiVector::from_wedge(y));
      CHECK(std::abs(got - ref) < 1e-9 * (1.0 + std::abs(ref)));
    }
  }
}

TEST_CASE("wedge of dependent vectors vanishes") {
  std::mt19937_64 rng(9);
  const CVec a = random_cvec(rng, 6);
  CVec b = a;
  for (auto& bi : b) bi *= Complex(2.5, -1.0);
  CHECK(MultiVector::from_wedge({a, b}).euclidean_norm() < 1e-12);
  // Swapping factors negates.
  const CVec c = random_cvec(rng, 6);
  MultiVector ab = MultiVector::from_wedge({a, c});
  MultiVector ba = MultiVector::from_wedge({c, a});
  ab += ba;
  CHECK(ab.euclidean_norm() < 1e-12);
}
