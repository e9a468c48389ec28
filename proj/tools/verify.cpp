#include <cmath>
#include <functional>

#include "cli.hpp"
#include "symcone/reference.hpp"
#include "symcone/symcone.hpp"

namespace symcone::cli {

namespace {

using Suite = std::function<SuiteResult(Rng&)>;

const std::vector<Algebra>& sample_algebras() {
  static const std::vector<Algebra> algebras = {
      Algebra::vector(3), Algebra::sym(3), Algebra::spin(3),
      Algebra::direct_sum({Algebra::sym(2), Algebra::spin(3)})};
  return algebras;
}

SuiteResult finish(std::string name, int samples, double err, double tol) {
  return {std::move(name), err <= tol, samples, err, tol};
}

SuiteResult oracle(Rng& rng) {
  double err = 0.0;
  int n = 0;
  for (const auto& alg : sample_algebras()) {
    for (int k = 0; k < 25; ++k, ++n) {
      const Element a = random_interior(alg, rng), b = random_interior(alg, rng);
      err = std::max(err, std::abs(thompson_distance(a, b) - reference::thompson(a, b)));
      err = std::max(err, std::abs(hilbert_distance(a, b) - reference::hilbert(a, b)));
    }
  }
  return finish("oracle", n, err, 1e-8);
}

SuiteResult invariance(Rng& rng) {
  double err = 0.0;
  int n = 0;
  for (const auto& alg : sample_algebras()) {
    const JordanIsoRep iso = random_jordan_iso(alg, rng);
    for (int k = 0; k < 10; ++k, ++n) {
      const Element a = random_interior(alg, rng), b = random_interior(alg, rng), c = random_interior(alg, rng);
      const double dt = thompson_distance(a, b), dh = hilbert_distance(a, b);
      for (const auto& [x, y] : {std::pair{quadratic_rep(c, a), quadratic_rep(c, b)},
                                 std::pair{inverse(a), inverse(b)},
                                 std::pair{apply_jordan_iso(iso, a), apply_jordan_iso(iso, b)}}) {
        err = std::max({err, std::abs(thompson_distance(x, y) - dt), std::abs(hilbert_distance(x, y) - dh)});
      }
    }
  }
  return finish("isometry_invariance", n, err, 1e-8);
}

SuiteResult geodesic(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double err = 0.0;
  int n = 0;
  for (const auto& alg : sample_algebras()) {
    for (int k = 0; k < 10; ++k, ++n) {
      const Element a = random_interior(alg, rng), b = random_interior(alg, rng);
      const double s = unit(rng), t = unit(rng);
      const Element gs = geodesic_point(a, b, s), gt = geodesic_point(a, b, t);
      err = std::max(err, std::abs(thompson_distance(gs, gt) - std::abs(s - t) * thompson_distance(a, b)));
      err = std::max(err, std::abs(hilbert_distance(gs, gt) - std::abs(s - t) * hilbert_distance(a, b)));
    }
  }
  return finish("geodesic", n, err, 1e-8);
}

SuiteResult mean(Rng& rng) {
  double err = 0.0;
  int n = 0;
  for (const auto& alg : sample_algebras()) {
    for (int k = 0; k < 10; ++k, ++n) {
      const Element a = random_interior(alg, rng), b = random_interior(alg, rng);
      const Element m = geometric_mean(a, b);
      err = std::max(err, thompson_distance(m, geometric_mean(b, a)));
      err = std::max(err, thompson_distance(quadratic_rep(m, inverse(a)), b));
    }
  }
  return finish("mean", n, err, 1e-7);
}

SuiteResult convergence(Rng& rng) {
  double err = 0.0;
  int n = 0;
  for (int k = 0; k < 10; ++k, ++n) {
    const Algebra alg = Algebra::vector(3 + k % 3);
    const Element a = random_element(alg, rng, 3.0), b = random_element(alg, rng, 3.0);
    for (int m = 1; m <= 1024; m *= 2) {
      err = std::max(err, std::abs(scaled_distance(a, b, m, Metric::Thompson) - order_unit_norm(a - b)));
      err = std::max(err, std::abs(scaled_distance(a, b, m, Metric::Hilbert) - variation_norm(a - b)));
    }
  }
  return finish("convergence", n, err, 1e-12);
}

SuiteResult thompson_factorization(Rng& rng) {
  double err = 0.0;
  int n = 0;
  for (const auto& alg : sample_algebras()) {
    for (int k = 0; k < 3; ++k, ++n) {
      const IsometryDescriptor d = random_descriptor(alg, Metric::Thompson, rng);
      try {
        const Factorization fac = factor_thompson_isometry(alg, build_thompson_isometry(d));
        err = std::max({err, fac.roundtrip_residual, order_unit_norm(fac.descriptor.b - d.b),
                        order_unit_norm(*fac.descriptor.p - *d.p)});
      } catch (const Error&) {
        err = std::numeric_limits<double>::infinity();
      }
    }
  }
  return finish("thompson_factorization", n, err, 1e-6);
}

SuiteResult hilbert_factorization(Rng& rng) {
  const std::vector<Algebra> algebras = {Algebra::sym(3), Algebra::vector(4),
                                         Algebra::direct_sum({Algebra::sym(2), Algebra::sym(2)})};
  double err = 0.0;
  int n = 0;
  for (const auto& alg : algebras) {
    for (int k = 0; k < 4; ++k, ++n) {
      const IsometryDescriptor d = random_descriptor(alg, Metric::Hilbert, rng);
      try {
        const Factorization fac = factor_hilbert_isometry(alg, build_hilbert_isometry(d));
        if (fac.descriptor.epsilon != d.epsilon) err = std::numeric_limits<double>::infinity();
        err = std::max({err, fac.roundtrip_residual, order_unit_norm(fac.descriptor.b - d.b)});
      } catch (const Error&) {
        err = std::numeric_limits<double>::infinity();
      }
    }
  }
  return finish("hilbert_factorization", n, err, 1e-6);
}

SuiteResult chains(Rng& rng) {
  int n = 0, bad = 0;
  for (int k = 0; k < 15; ++k, ++n) {
    const int dim = 3 + k % 3;
    const Eigen::VectorXd v = random_orthogonal(dim, rng).col(0), w = random_orthogonal(dim, rng).col(0);
    const ProjectionChain chain =
        orthogonality_chain(Element::from_matrix(v * v.transpose()), Element::from_matrix(w * w.transpose()));
    if (chain.steps.size() > 3 || !chain_violation(chain, 1e-9).empty()) ++bad;
  }
  return finish("chains", n, bad, 0.0);
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"oracle", oracle},
      {"isometry_invariance", invariance},
      {"geodesic", geodesic},
      {"mean", mean},
      {"convergence", convergence},
      {"thompson_factorization", thompson_factorization},
      {"hilbert_factorization", hilbert_factorization},
      {"chains", chains},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, suite] : registry()) out.push_back(name);
  return out;
}

std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::string& only) {
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < registry().size(); ++i) {
    const auto& [name, suite] = registry()[i];
    if (!only.empty() && only != name) continue;
    // Each suite gets its own stream so selecting one does not shift the others.
    Rng rng(seed + 0x9E3779B97F4A7C15ULL * (i + 1));
    out.push_back(suite(rng));
  }
  if (out.empty()) throw InvalidInput("unknown suite \"" + only + "\"");
  return out;
}

Json to_json(const SuiteResult& r) {
  return {{"suite", r.name},
          {"passed", r.passed},
          {"samples", r.samples},
          {"max_error", std::isfinite(r.max_error) ? Json(r.max_error) : Json(nullptr)},
          {"tolerance", r.tolerance}};
}

}  // namespace symcone::cli
