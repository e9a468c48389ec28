#include "symcone/morphisms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symcone/error.hpp"
#include "symcone/random.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

namespace {

bool is_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int k : perm) {
    if (k < 0 || k >= n || seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

bool is_orthogonal(const Eigen::MatrixXd& u, double tol = 1e-10) {
  if (u.rows() != u.cols()) return false;
  return (u.transpose() * u - Eigen::MatrixXd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

Eigen::MatrixXd nearest_orthogonal(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

// Offsets of component blocks in canonical coordinates.
std::vector<int> coordinate_offsets(const Algebra& alg) {
  std::vector<int> offsets{0};
  for (const auto& part : alg.parts()) offsets.push_back(offsets.back() + part.dimension());
  return offsets;
}

double max_entry(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

bool is_identity_map(const LinearMap& m, double tol) {
  return max_entry(m - LinearMap::Identity(m.rows(), m.cols())) <= tol;
}

std::vector<Element> probe_points(const Algebra& alg, const ProbeOptions& opts, std::uint64_t salt) {
  Rng rng(opts.seed ^ salt);
  std::vector<Element> out;
  for (int i = 0; i < opts.random_probes; ++i) out.push_back(random_element(alg, rng));
  return out;
}

JordanIsoRep match_sym(const Algebra& alg, const LinearMap& map) {
  const int n = alg.size();
  std::vector<Eigen::VectorXd> cols(n);
  auto image_matrix = [&](const Element& x) { return apply(map, x).matrix(); };
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd eii = Eigen::MatrixXd::Zero(n, n);
    eii(i, i) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(image_matrix(Element::from_matrix(eii)));
    cols[i] = solver.eigenvectors().col(n - 1);
  }
  for (int j = 1; j < n; ++j) {
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
    sym(0, j) = sym(j, 0) = 1.0;
    const double sign = cols[0].dot(image_matrix(Element::from_matrix(sym)) * cols[j]);
    if (sign < 0.0) cols[j] = -cols[j];
  }
  Eigen::MatrixXd u(n, n);
  for (int i = 0; i < n; ++i) u.col(i) = cols[i];
  return JordanIsoRep::conjugation(nearest_orthogonal(u));
}

JordanIsoRep match_recursive(const Algebra& alg, const LinearMap& map) {
  switch (alg.kind()) {
    case AlgebraKind::Vector: {
      std::vector<int> perm(alg.size());
      for (int j = 0; j < alg.size(); ++j) map.col(j).maxCoeff(&perm[j]);
      if (!is_permutation(perm, alg.size())) throw NumericalFailure("map does not permute coordinates");
      return JordanIsoRep::sum(std::move(perm));
    }
    case AlgebraKind::Sym:
      return match_sym(alg, map);
    case AlgebraKind::Spin: {
      const int d = alg.size();
      return JordanIsoRep::spin_orthogonal(nearest_orthogonal(map.topLeftCorner(d, d)));
    }
    case AlgebraKind::Sum: {
      const auto offsets = coordinate_offsets(alg);
      const int k = alg.size();
      std::vector<int> perm(k);
      std::vector<JordanIsoRep> parts;
      for (int i = 0; i < k; ++i) {
        const int width = alg.parts()[i].dimension();
        double best = -1.0;
        for (int t = 0; t < k; ++t) {
          if (alg.parts()[t].dimension() != width) continue;
          const double mass = map.block(offsets[t], offsets[i], width, width).norm();
          if (mass > best) {
            best = mass;
            perm[i] = t;
          }
        }
        if (!(alg.parts()[perm[i]] == alg.parts()[i])) {
          throw NumericalFailure("component " + std::to_string(i) + " is mapped onto a non-isomorphic component");
        }
        parts.push_back(match_recursive(alg.parts()[i], map.block(offsets[perm[i]], offsets[i], width, width)));
      }
      if (!is_permutation(perm, k)) throw NumericalFailure("map does not permute components");
      return JordanIsoRep::sum(std::move(perm), std::move(parts));
    }
  }
  return {};
}

// Rewrites trivially-acting representations as Identity.
JordanIsoRep canonicalize(const JordanIsoRep& iso, const Algebra& alg, double tol) {
  if (is_identity_map(jordan_iso_matrix(iso, alg), tol)) return JordanIsoRep::identity();
  if (iso.kind == JordanIsoRep::Kind::Sum && alg.kind() == AlgebraKind::Sum) {
    JordanIsoRep out = iso;
    for (std::size_t i = 0; i < out.parts.size(); ++i) out.parts[i] = canonicalize(out.parts[i], alg.parts()[i], tol);
    return out;
  }
  return iso;
}

double thompson_roundtrip(const ElementMap& f, const ElementMap& g, const std::vector<Element>& probes) {
  double worst = 0.0;
  for (const auto& x : probes) {
    const Element a = exp(x);
    worst = std::max(worst, thompson_distance(f(a), g(a)));
  }
  return worst;
}

double hilbert_roundtrip(const RayMap& f, const RayMap& g, const std::vector<Element>& probes) {
  double worst = 0.0;
  for (const auto& x : probes) {
    const Ray a(exp(x));
    worst = std::max(worst, hilbert_distance(f(a), g(a)));
  }
  return worst;
}

RayMap invert_rays(RayMap g) {
  return [g = std::move(g)](const Ray& a) { return Ray(inverse(g(a).representative())); };
}

}  // namespace

// --- JordanIsoRep ----------------------------------------------------------

JordanIsoRep JordanIsoRep::conjugation(Eigen::MatrixXd u) {
  if (u.rows() != u.cols() || !is_orthogonal(u)) throw InvalidInput("conjugating matrix is not orthogonal");
  JordanIsoRep r;
  r.kind = Kind::OrthogonalConjugation;
  r.u = std::move(u);
  return r;
}

JordanIsoRep JordanIsoRep::spin_orthogonal(Eigen::MatrixXd u) {
  if (u.rows() != u.cols() || !is_orthogonal(u)) throw InvalidInput("spin map matrix is not orthogonal");
  JordanIsoRep r;
  r.kind = Kind::SpinOrthogonal;
  r.u = std::move(u);
  return r;
}

JordanIsoRep JordanIsoRep::sum(std::vector<int> perm, std::vector<JordanIsoRep> parts) {
  if (!is_permutation(perm, static_cast<int>(perm.size()))) throw InvalidInput("sum map needs a permutation");
  JordanIsoRep r;
  r.kind = Kind::Sum;
  r.perm = std::move(perm);
  r.parts = std::move(parts);
  return r;
}

void JordanIsoRep::validate(const Algebra& algebra) const {
  switch (kind) {
    case Kind::Identity:
      return;
    case Kind::OrthogonalConjugation:
      if (algebra.kind() != AlgebraKind::Sym || u.rows() != algebra.size()) {
        throw InvalidInput("orthogonal conjugation needs Sym(n) and an n×n matrix");
      }
      if (!is_orthogonal(u)) throw InvalidInput("conjugating matrix is not orthogonal");
      return;
    case Kind::SpinOrthogonal:
      if (algebra.kind() != AlgebraKind::Spin || u.rows() != algebra.size()) {
        throw InvalidInput("spin orthogonal map needs Spin(d) and a d×d matrix");
      }
      if (!is_orthogonal(u)) throw InvalidInput("spin map matrix is not orthogonal");
      return;
    case Kind::Sum:
      if (algebra.kind() == AlgebraKind::Vector) {
        if (!parts.empty() || !is_permutation(perm, algebra.size())) {
          throw InvalidInput("Vector(n) automorphisms are coordinate permutations");
        }
        return;
      }
      if (algebra.kind() != AlgebraKind::Sum || !is_permutation(perm, algebra.size()) ||
          static_cast<int>(parts.size()) != algebra.size()) {
        throw InvalidInput("sum isomorphism needs a permutation and one part per component");
      }
      for (int i = 0; i < algebra.size(); ++i) {
        if (!(algebra.parts()[perm[i]] == algebra.parts()[i])) {
          throw InvalidInput("sum isomorphism may only permute identical components");
        }
        parts[i].validate(algebra.parts()[i]);
      }
      return;
  }
}

Element apply_jordan_iso(const JordanIsoRep& iso, const Element& a) {
  const Algebra& alg = a.algebra();
  iso.validate(alg);
  switch (iso.kind) {
    case JordanIsoRep::Kind::Identity:
      return a;
    case JordanIsoRep::Kind::OrthogonalConjugation:
      return Element::from_matrix(iso.u * a.matrix() * iso.u.transpose());
    case JordanIsoRep::Kind::SpinOrthogonal:
      return Element::spin(iso.u * a.spin_vector(), a.spin_scalar());
    case JordanIsoRep::Kind::Sum: {
      if (alg.kind() == AlgebraKind::Vector) {
        Eigen::VectorXd out(alg.size());
        for (int i = 0; i < alg.size(); ++i) out[iso.perm[i]] = a.storage()[i];
        return Element(alg, std::move(out));
      }
      std::vector<Element> slots(alg.size(), Element::zero(alg.parts()[0]));
      for (int i = 0; i < alg.size(); ++i) slots[iso.perm[i]] = apply_jordan_iso(iso.parts[i], a.component(i));
      return Element::direct_sum(alg, slots);
    }
  }
  return a;
}

LinearMap jordan_iso_matrix(const JordanIsoRep& iso, const Algebra& algebra) {
  return matrix_of(algebra, [&](const Element& x) { return apply_jordan_iso(iso, x); });
}

JordanIsoRep inverse_iso(const JordanIsoRep& iso, const Algebra& algebra) {
  iso.validate(algebra);
  switch (iso.kind) {
    case JordanIsoRep::Kind::Identity:
      return iso;
    case JordanIsoRep::Kind::OrthogonalConjugation:
      return JordanIsoRep::conjugation(iso.u.transpose());
    case JordanIsoRep::Kind::SpinOrthogonal:
      return JordanIsoRep::spin_orthogonal(iso.u.transpose());
    case JordanIsoRep::Kind::Sum: {
      const int k = static_cast<int>(iso.perm.size());
      std::vector<int> perm(k);
      std::vector<JordanIsoRep> parts(iso.parts.size());
      for (int i = 0; i < k; ++i) {
        perm[iso.perm[i]] = i;
        if (!iso.parts.empty()) parts[iso.perm[i]] = inverse_iso(iso.parts[i], algebra.parts()[i]);
      }
      return JordanIsoRep::sum(std::move(perm), std::move(parts));
    }
  }
  return iso;
}

bool check_jordan_isomorphism(const Algebra& algebra, const LinearMap& map, double tol) {
  const int dim = algebra.dimension();
  if (map.rows() != dim || map.cols() != dim) return false;
  const Element e = Element::unit(algebra);
  if (max_entry(apply(map, e).coordinates() - e.coordinates()) > tol) return false;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(map);
  if (svd.singularValues().minCoeff() <= tol) return false;

  std::vector<Element> basis, images;
  for (int j = 0; j < dim; ++j) {
    basis.push_back(basis_element(algebra, j));
    images.push_back(apply(map, basis.back()));
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const Element lhs = apply(map, jordan_product(basis[i], basis[j]));
      const Element rhs = jordan_product(images[i], images[j]);
      if (max_entry(lhs.coordinates() - rhs.coordinates()) > tol) return false;
    }
  }
  return true;
}

JordanIsoRep match_jordan_iso(const Algebra& algebra, const LinearMap& map, double tol) {
  if (map.rows() != algebra.dimension() || map.cols() != algebra.dimension()) {
    throw InvalidInput("linear map shape does not match " + algebra.to_string());
  }
  if (is_identity_map(map, tol)) return JordanIsoRep::identity();
  JordanIsoRep iso = match_recursive(algebra, map);
  iso.validate(algebra);
  const double residual = max_entry(jordan_iso_matrix(iso, algebra) - map);
  if (residual > tol) {
    throw NumericalFailure("Jordan isomorphism is outside the representable family (fit residual " +
                           std::to_string(residual) + ")");
  }
  return canonicalize(iso, algebra, tol);
}

OrderIsoFactors factor_order_isomorphism(const Algebra& algebra, const LinearMap& map) {
  if (map.rows() != algebra.dimension() || map.cols() != algebra.dimension()) {
    throw InvalidInput("linear map shape does not match " + algebra.to_string());
  }
  const Element te = apply(map, Element::unit(algebra));
  if (!is_interior(te)) throw InvalidInput("not an order isomorphism: Te is not in the cone interior");
  Element b = sqrt(te);
  const Element b_inv = inverse(b);
  const LinearMap j = matrix_of(algebra, [&](const Element& x) { return quadratic_rep(b_inv, x); }) * map;
  if (!check_jordan_isomorphism(algebra, j, 1e-7)) {
    throw InvalidInput("not an order isomorphism: U_{(Te)^{-1/2}} T is not a Jordan isomorphism");
  }
  return {std::move(b), match_jordan_iso(algebra, j)};
}

// --- descriptors -----------------------------------------------------------

void IsometryDescriptor::validate() const {
  require_interior(b, "descriptor b");
  iso.validate(b.algebra());
  if (metric == Metric::Thompson) {
    if (!p) throw InvalidInput("Thompson descriptor needs a central projection p");
    require_same_algebra(*p, b);
    if (!is_projection(*p, 1e-8)) throw InvalidInput("descriptor p is not a projection");
    if (!is_central(*p, 1e-8)) throw InvalidInput("descriptor p is not central");
  } else {
    if (!epsilon || (*epsilon != 1 && *epsilon != -1)) throw InvalidInput("Hilbert descriptor needs epsilon = ±1");
  }
}

ElementMap build_thompson_isometry(const IsometryDescriptor& d) {
  d.validate();
  if (d.metric != Metric::Thompson) throw InvalidInput("descriptor is not a Thompson isometry");
  const Element b = d.b;
  const Element p = *d.p;
  const Element q = Element::unit(p.algebra()) - p;
  const int rank = projection_rank(p);
  const int full = p.algebra().rank();
  const JordanIsoRep iso = d.iso;
  return [=](const Element& a) {
    require_same_algebra(a, b);
    const Element ja = apply_jordan_iso(iso, a);
    Element inner = ja;
    if (rank == 0) {
      inner = inverse(ja);
    } else if (rank < full) {
      inner = jordan_product(p, ja) + jordan_product(q, inverse(ja));
    }
    return quadratic_rep(b, inner);
  };
}

RayMap build_hilbert_isometry(const IsometryDescriptor& d) {
  d.validate();
  if (d.metric != Metric::Hilbert) throw InvalidInput("descriptor is not a Hilbert isometry");
  const Element b = d.b;
  const int eps = *d.epsilon;
  const JordanIsoRep iso = d.iso;
  return [=](const Ray& a) {
    require_same_algebra(a.representative(), b);
    const Element x = eps == 1 ? a.representative() : inverse(a.representative());
    return Ray(quadratic_rep(b, apply_jordan_iso(iso, x)));
  };
}

JordanIsoRep random_jordan_iso(const Algebra& algebra, Rng& rng) {
  switch (algebra.kind()) {
    case AlgebraKind::Sym:
      return JordanIsoRep::conjugation(random_orthogonal(algebra.size(), rng));
    case AlgebraKind::Spin:
      return JordanIsoRep::spin_orthogonal(random_orthogonal(algebra.size(), rng));
    case AlgebraKind::Vector: {
      std::vector<int> perm(algebra.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      return JordanIsoRep::sum(std::move(perm));
    }
    case AlgebraKind::Sum: {
      const auto& parts = algebra.parts();
      const int m = static_cast<int>(parts.size());
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      // Shuffle within each isomorphism class of components.
      for (int i = 0; i < m; ++i) {
        std::vector<int> same;
        for (int k = 0; k < m; ++k)
          if (parts[k] == parts[i]) same.push_back(k);
        if (same.front() != i) continue;
        std::vector<int> shuffled = same;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (std::size_t k = 0; k < same.size(); ++k) perm[same[k]] = shuffled[k];
      }
      std::vector<JordanIsoRep> isos;
      for (int i = 0; i < m; ++i) isos.push_back(random_jordan_iso(parts[i], rng));
      return JordanIsoRep::sum(std::move(perm), std::move(isos));
    }
  }
  return JordanIsoRep::identity();
}

Element random_central_projection(const Algebra& algebra, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  switch (algebra.kind()) {
    case AlgebraKind::Vector: {
      Eigen::VectorXd v(algebra.size());
      for (auto& x : v) x = coin(rng) ? 1.0 : 0.0;
      return Element::from_coordinates(algebra, v);
    }
    case AlgebraKind::Sum: {
      std::vector<Element> parts;
      for (const auto& part : algebra.parts()) parts.push_back(random_central_projection(part, rng));
      return Element::direct_sum(algebra, parts);
    }
    default:
      return coin(rng) ? Element::unit(algebra) : Element::zero(algebra);
  }
}

IsometryDescriptor random_descriptor(const Algebra& algebra, Metric metric, Rng& rng) {
  IsometryDescriptor d{metric, random_interior(algebra, rng), std::nullopt, std::nullopt,
                       random_jordan_iso(algebra, rng)};
  if (metric == Metric::Thompson) {
    d.p = random_central_projection(algebra, rng);
  } else {
    d.b = Ray(d.b).representative();
    d.epsilon = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  }
  return d;
}

// --- linearization ---------------------------------------------------------

LinearizedMap linearize_isometry(const Algebra& algebra, const ElementMap& f, const ProbeOptions& opts) {
  const Element e = Element::unit(algebra);
  if (thompson_distance(f(e), e) > 1e-8) throw InvalidInput("linearization needs an isometry fixing e");
  LinearizedMap out;
  out.metric = Metric::Thompson;
  out.matrix = matrix_of(algebra, [&](const Element& x) { return log(f(exp(x))); });
  for (const auto& x : probe_points(algebra, opts, 0x11)) {
    const Element defect = apply(out.matrix, x) - log(f(exp(x)));
    out.residual = std::max(out.residual, order_unit_norm(defect) / std::max(1.0, order_unit_norm(x)));
  }
  if (out.residual > opts.threshold) {
    throw NumericalFailure("linearization defect " + std::to_string(out.residual) +
                           " exceeds threshold: not a Thompson isometry fixing e");
  }
  return out;
}

LinearizedMap linearize_isometry(const Algebra& algebra, const RayMap& f, const ProbeOptions& opts) {
  const Ray e(Element::unit(algebra));
  if (!f(e).equals(e, 1e-8)) throw InvalidInput("linearization needs an isometry fixing the unit ray");
  auto image = [&](const Element& x) {
    return QuotientClass(log(f(Ray(exp(x))).representative())).representative();
  };
  LinearizedMap out;
  out.metric = Metric::Hilbert;
  out.matrix = matrix_of(algebra, image);
  for (const auto& x : probe_points(algebra, opts, 0x22)) {
    const Element defect = apply(out.matrix, x) - image(x);
    out.residual = std::max(out.residual, variation_norm(defect) / std::max(1.0, variation_norm(x)));
  }
  if (out.residual > opts.threshold) {
    throw NumericalFailure("linearization defect " + std::to_string(out.residual) +
                           " exceeds threshold: not a Hilbert isometry fixing the unit ray");
  }
  return out;
}

ElementMap normalize_isometry(const Algebra& algebra, const ElementMap& f) {
  const Element shift = power(f(Element::unit(algebra)), -0.5);
  return [shift, f](const Element& a) { return quadratic_rep(shift, f(a)); };
}

RayMap normalize_isometry(const Algebra& algebra, const RayMap& f) {
  const Element shift = power(f(Ray(Element::unit(algebra))).representative(), -0.5);
  return [shift, f](const Ray& a) { return Ray(quadratic_rep(shift, f(a).representative())); };
}

// --- factorization ---------------------------------------------------------

Factorization factor_thompson_isometry(const Algebra& algebra, const ElementMap& f, const ProbeOptions& opts) {
  const Element e = Element::unit(algebra);
  const Element b = sqrt(f(e));
  const ElementMap g = normalize_isometry(algebra, f);
  const LinearizedMap lin = linearize_isometry(algebra, g, opts);

  // S = s∘J with s = Se a central symmetry.
  const Element s = apply(lin.matrix, e);
  const Element half = 0.5 * (s + e);
  if (!is_projection(half, 1e-6)) throw NumericalFailure("(Se + e)/2 is not a projection: not a Thompson isometry");
  const Element p = snap_projection(half);
  if (!is_central(p, 1e-8)) throw NumericalFailure("recovered projection is not central");
  const Element symmetry = 2.0 * p - e;
  const LinearMap j = multiplication_operator(symmetry) * lin.matrix;
  if (!check_jordan_isomorphism(algebra, j, 1e-6)) {
    throw NumericalFailure("s∘S is not a Jordan isomorphism: not a Thompson isometry");
  }

  Factorization out{IsometryDescriptor{Metric::Thompson, b, p, std::nullopt, match_jordan_iso(algebra, j)}, 0.0,
                    0.0, {}};
  out.linearity_residual = lin.residual;
  out.roundtrip_residual = thompson_roundtrip(f, build_thompson_isometry(out.descriptor),
                                              probe_points(algebra, opts, 0x33));
  if (out.roundtrip_residual > opts.threshold) {
    throw NumericalFailure("rebuilt Thompson isometry differs from the input by " +
                           std::to_string(out.roundtrip_residual));
  }
  return out;
}

int simplex_orientation(const ProjectionMap& theta, const OrthogonalSimplex& simplex, double tol) {
  const auto& v = simplex.vertices();
  const Element e = Element::unit(v[0].algebra());
  const Element sum = theta(v[0]) + theta(v[1]) + theta(v[2]);
  if (order_unit_norm(sum - e) <= tol) return 1;
  if (order_unit_norm(sum - 2.0 * e) <= tol) return -1;
  throw NumericalFailure("neither simplex orientation holds: not a Hilbert isometry");
}

LinearMap extend_orthoisomorphism_matrix(const Algebra& algebra, const ProjectionMap& theta) {
  const int dim = algebra.dimension();
  LinearMap j(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const SpectralFrame frame = spectral_decomposition(basis_element(algebra, k));
    Element image = Element::zero(algebra);
    for (std::size_t i = 0; i < frame.eigenvalues.size(); ++i) {
      if (std::abs(frame.eigenvalues[i]) <= 1e-12) continue;
      image += frame.eigenvalues[i] * theta(snap_projection(frame.idempotents[i]));
    }
    j.col(k) = image.coordinates();
  }
  return j;
}

JordanIsoRep extend_orthoisomorphism(const Algebra& algebra, const ProjectionMap& theta) {
  const LinearMap j = extend_orthoisomorphism_matrix(algebra, theta);
  if (!check_jordan_isomorphism(algebra, j, 1e-6)) {
    throw NumericalFailure("θ does not extend to a Jordan isomorphism: it is not an orthoisomorphism");
  }
  return match_jordan_iso(algebra, j, 1e-6);
}

Factorization factor_hilbert_isometry(const Algebra& algebra, const RayMap& f, const ProbeOptions& opts) {
  const Element e = Element::unit(algebra);
  const Element b = Ray(sqrt(f(Ray(e)).representative())).representative();
  const RayMap g = [b_inv = inverse(b), f](const Ray& a) {
    return Ray(quadratic_rep(b_inv, f(a).representative()));
  };
  const LinearizedMap lin = linearize_isometry(algebra, g, opts);
  const auto probes = probe_points(algebra, opts, 0x44);

  auto assemble = [&](int eps) {
    const RayMap h = eps == 1 ? g : invert_rays(g);
    const InducedProjectionMap theta(algebra, h);
    Factorization out{IsometryDescriptor{Metric::Hilbert, b, std::nullopt, eps,
                                         extend_orthoisomorphism(algebra, std::cref(theta))},
                      0.0, 0.0, {}};
    out.linearity_residual = lin.residual;
    out.roundtrip_residual = hilbert_roundtrip(f, build_hilbert_isometry(out.descriptor), probes);
    if (out.roundtrip_residual > opts.threshold) {
      throw NumericalFailure("rebuilt Hilbert isometry differs from the input by " +
                             std::to_string(out.roundtrip_residual));
    }
    return out;
  };

  if (algebra.rank() >= 3) {
    const InducedProjectionMap theta(algebra, g);
    Rng rng(opts.seed ^ 0x55);
    std::vector<int> epsilons;
    for (int k = 0; k < 2; ++k) {
      epsilons.push_back(simplex_orientation(std::cref(theta), orthogonal_simplex_from(random_element(algebra, rng))));
    }
    if (epsilons[0] != epsilons[1]) throw NumericalFailure("orthogonal simplices disagree on the orientation ε");
    Factorization out = assemble(epsilons[0]);
    out.simplex_epsilons = std::move(epsilons);
    return out;
  }

  // Rank <= 2: no orthogonal simplex exists and both ε may be valid; prefer +1.
  try {
    return assemble(1);
  } catch (const NumericalFailure&) {
    return assemble(-1);
  }
}

}  // namespace symcone
