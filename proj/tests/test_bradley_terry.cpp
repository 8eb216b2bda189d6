#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "linnet/bradley_terry.hpp"
#include "linnet/logistic.hpp"
#include "linnet/rng.hpp"

using namespace linnet;

namespace {

Eigen::VectorXd rand_vec(std::mt19937_64& rng, int d, double scale = 1.0) {
  Eigen::VectorXd v(d);
  for (int k = 0; k < d; ++k) {
    v[k] = scale * (static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0);
  }
  return v;
}

}  // namespace

TEST_CASE("predict: analytic values") {
  BTModel m{Eigen::VectorXd::Ones(3), 1.0};
  std::mt19937_64 rng(1);
  Eigen::VectorXd x = rand_vec(rng, 3);
  CHECK(predict(m, x, x) == doctest::Approx(0.5));

  // coefficients . (xi - xj) = ln 2  ->  2/3
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(3), xj = Eigen::VectorXd::Zero(3);
  xi[0] = std::log(2.0);
  CHECK(predict(m, xi, xj) == doctest::Approx(2.0 / 3.0));

  Eigen::VectorXd bad(2);
  CHECK_THROWS(predict(m, bad, xj));
}

TEST_CASE("antisymmetry holds to floating rounding") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    BTModel m{rand_vec(rng, 6, 2.0), 0.5};
    Eigen::VectorXd xi = rand_vec(rng, 6), xj = rand_vec(rng, 6);
    CHECK(std::abs(predict(m, xi, xj) + predict(m, xj, xi) - 1.0) <= 1e-12);
  }
}

TEST_CASE("fit: zero features give zero coefficients and 0.5 everywhere") {
  std::vector<BTSample> train;
  for (int i = 0; i < 10; ++i) {
    train.push_back({Eigen::VectorXd::Zero(4), Eigen::VectorXd::Zero(4), i % 2 == 0});
  }
  BTModel m = fit_bt(train, 1.0);
  CHECK(m.coefficients.lpNorm<Eigen::Infinity>() <= 1e-9);
  CHECK(predict(m, Eigen::VectorXd::Zero(4), Eigen::VectorXd::Zero(4)) == doctest::Approx(0.5));
}

TEST_CASE("fit matches a 1-d grid-search oracle") {
  // 50 pairs with diff +1 / label 1 and 50 with diff -1 / label 0, l2 = 1
  std::vector<BTSample> train;
  Eigen::VectorXd one = Eigen::VectorXd::Ones(1), zero = Eigen::VectorXd::Zero(1);
  for (int i = 0; i < 50; ++i) {
    train.push_back({one, zero, true});
    train.push_back({zero, one, false});
  }
  BTModel m = fit_bt(train, 1.0);

  // brute-force the penalized objective on a fine grid
  auto objective = [](double b) {
    double loglik = 100.0 * std::log(1.0 / (1.0 + std::exp(-b)));
    return -loglik + 0.5 * b * b;
  };
  double best = 0.0, best_obj = objective(0.0);
  for (double b = -5.0; b <= 5.0; b += 1e-5) {
    double o = objective(b);
    if (o < best_obj) {
      best_obj = o;
      best = b;
    }
  }
  CHECK(m.coefficients[0] > 0.0);
  CHECK(m.coefficients[0] == doctest::Approx(best).epsilon(1e-4));
}

TEST_CASE("duplicating pairs leaves the unpenalized optimum unchanged") {
  std::mt19937_64 rng(11);
  std::vector<BTSample> train;
  for (int i = 0; i < 100; ++i) {
    Eigen::VectorXd xi = rand_vec(rng, 3), xj = rand_vec(rng, 3);
    // noisy labels so the unpenalized maximum-likelihood optimum is finite
    double logit = 0.5 * (xi - xj).sum();
    bool label = uniform01(rng) < 1.0 / (1.0 + std::exp(-logit));
    train.push_back({xi, xj, label});
  }
  BTModel m1 = fit_bt(train, 0.0);
  std::vector<BTSample> doubled = train;
  doubled.insert(doubled.end(), train.begin(), train.end());
  BTModel m2 = fit_bt(doubled, 0.0);
  CHECK((m1.coefficients - m2.coefficients).lpNorm<Eigen::Infinity>() <= 1e-5);
}

TEST_CASE("fit gradient at the optimum is below tolerance") {
  std::mt19937_64 rng(13);
  std::vector<BTSample> train;
  Eigen::MatrixXd X(40, 4);
  Eigen::VectorXd y(40);
  for (int i = 0; i < 40; ++i) {
    Eigen::VectorXd xi = rand_vec(rng, 4), xj = rand_vec(rng, 4);
    bool label = (rng() & 1) != 0;
    train.push_back({xi, xj, label});
    X.row(i) = (xi - xj).transpose();
    y[i] = label;
  }
  BTModel m = fit_bt(train, 1.0);
  Eigen::VectorXd grad;
  detail::logistic_objective(X, y, 1.0, m.coefficients, &grad);
  CHECK(grad.lpNorm<Eigen::Infinity>() <= 1e-6);
}

TEST_CASE("penalized log-likelihood gradient matches finite differences") {
  std::mt19937_64 rng(17);
  Eigen::MatrixXd X(12, 3);
  Eigen::VectorXd y(12);
  for (int i = 0; i < 12; ++i) {
    X.row(i) = rand_vec(rng, 3).transpose();
    y[i] = (rng() & 1) ? 1.0 : 0.0;
  }
  Eigen::VectorXd b = rand_vec(rng, 3);
  Eigen::VectorXd grad;
  detail::logistic_objective(X, y, 0.7, b, &grad);
  const double h = 1e-6;
  for (int k = 0; k < 3; ++k) {
    Eigen::VectorXd up = b, down = b;
    up[k] += h;
    down[k] -= h;
    double fd = (detail::logistic_objective(X, y, 0.7, up) -
                 detail::logistic_objective(X, y, 0.7, down)) /
                (2 * h);
    CHECK(std::abs(fd - grad[k]) <= 1e-4 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("impute_unseen follows the overlap-weighted average") {
  Embedding emb;
  emb.d = 2;
  emb.vectors[1] = {1.0, 0.0};   // overlap 4 with fresh
  emb.vectors[2] = {0.0, 1.0};   // overlap 2 with fresh
  Lineup l1{1, {"a", "b", "c", "d", "x"}};
  Lineup l2{2, {"a", "b", "y", "z", "w"}};
  Lineup fresh{9, {"a", "b", "c", "d", "e"}};

  Eigen::VectorXd v = impute_unseen(emb, {l1, l2}, fresh);
  CHECK(v[0] == doctest::Approx(4.0 / 6.0));
  CHECK(v[1] == doctest::Approx(2.0 / 6.0));

  // single candidate with positive overlap: exactly that vector
  Eigen::VectorXd single = impute_unseen(emb, {l1}, fresh);
  CHECK(single[0] == doctest::Approx(1.0));
  CHECK(single[1] == doctest::Approx(0.0));

  // zero overlap everywhere: unweighted team mean
  Lineup stranger{9, {"q1", "q2", "q3", "q4", "q5"}};
  Eigen::VectorXd mean = impute_unseen(emb, {l1, l2}, stranger);
  CHECK(mean[0] == doctest::Approx(0.5));
  CHECK(mean[1] == doctest::Approx(0.5));

  // empty team: zero vector
  Eigen::VectorXd zero = impute_unseen(emb, {}, fresh);
  CHECK(zero.norm() == doctest::Approx(0.0));
}

TEST_CASE("imputed vectors stay in the convex hull") {
  std::mt19937_64 rng(23);
  Embedding emb;
  emb.d = 1;
  emb.vectors[1] = {0.2};
  emb.vectors[2] = {0.9};
  emb.vectors[3] = {0.4};
  Lineup l1{1, {"a", "b", "c", "d", "e"}};
  Lineup l2{2, {"c", "d", "e", "f", "g"}};
  Lineup l3{3, {"e", "f", "g", "h", "i"}};
  Lineup fresh{9, {"b", "c", "d", "e", "f"}};
  Eigen::VectorXd v = impute_unseen(emb, {l1, l2, l3}, fresh);
  CHECK(v[0] >= 0.2);
  CHECK(v[0] <= 0.9);
}

TEST_CASE("model text round-trip") {
  std::mt19937_64 rng(29);
  BTModel m{rand_vec(rng, 7), 1.5};
  std::ostringstream os;
  save_bt_model(m, os);
  std::istringstream is(os.str());
  BTModel loaded = load_bt_model(is);
  CHECK(loaded.l2_penalty == doctest::Approx(1.5));
  CHECK((loaded.coefficients - m.coefficients).norm() <= 1e-15);
}
