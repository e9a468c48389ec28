#include "symcone/projections.hpp"

#include <algorithm>
#include <cmath>

#include "symcone/error.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

namespace {

constexpr double kProjectionTolerance = 1e-8;

void require_projection(const Element& p, const char* what) {
  if (!is_projection(p, kProjectionTolerance)) throw InvalidInput(std::string(what) + " is not a projection");
}

bool near(const Element& a, const Element& b, double tol) { return order_unit_norm(a - b) <= tol; }

bool orthogonal(const Element& p, const Element& q, double tol) {
  return order_unit_norm(jordan_product(p, q)) <= tol;
}

}  // namespace

// --- lattice predicates ----------------------------------------------------

bool is_central(const Element& p, double tol) {
  const Algebra& alg = p.algebra();
  for (int k = 0; k < alg.dimension(); ++k) {
    if (!operator_commute(p, basis_element(alg, k), tol)) return false;
  }
  return true;
}

LatticePredicates lattice_predicates(const Element& p, const Element& q, double tol) {
  require_same_algebra(p, q);
  require_projection(p, "p");
  require_projection(q, "q");
  const Element pq = jordan_product(p, q);
  LatticePredicates out;
  out.orthogonal = order_unit_norm(pq) <= tol;
  out.below = order_unit_norm(pq - p) <= tol;
  out.maximal_p = projection_rank(p) == p.algebra().rank() - 1;
  out.central_p = is_central(p);
  return out;
}

Element primitive_below(const Element& p) {
  require_projection(p, "argument");
  const PrimitiveFrame frame = primitive_frame(p);
  if (frame.eigenvalues.front() < 0.5) throw InvalidInput("the zero projection has no primitive subprojection");
  return frame.idempotents.front();
}

Element support_projection(const Element& a, double tol) {
  const PrimitiveFrame frame = primitive_frame(a);
  const double cut = tol * std::max(1.0, std::abs(frame.eigenvalues.front()));
  Element out = Element::zero(a.algebra());
  for (std::size_t i = 0; i < frame.eigenvalues.size(); ++i) {
    if (frame.eigenvalues[i] > cut) out += frame.idempotents[i];
  }
  return out;
}

// --- induced projection map ------------------------------------------------

InducedProjectionMap::InducedProjectionMap(Algebra algebra, RayMap f)
    : algebra_(std::move(algebra)), f_(std::move(f)) {
  const Ray e(Element::unit(algebra_));
  if (!f_(e).equals(e, 1e-8)) throw InvalidInput("induced projection map needs an isometry fixing the unit ray");
}

Element InducedProjectionMap::class_image(const Element& x) const {
  const Ray image = f_(Ray(exp(x)));
  return QuotientClass(log(image.representative())).representative();
}

Element InducedProjectionMap::operator()(const Element& p) const {
  require_same_algebra(p, Element::zero(algebra_));
  require_projection(p, "θ argument");
  const int r = projection_rank(p);
  if (r == 0) return Element::zero(algebra_);
  if (r == algebra_.rank()) return Element::unit(algebra_);

  const Eigen::VectorXd s = p.storage();
  std::vector<double> key(s.data(), s.data() + s.size());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Element v = class_image(p);
  const auto ev = eigenvalues(v);
  const double range = ev.front() - ev.back();
  if (range <= 1e-9) throw NumericalFailure("induced class of a nontrivial projection collapsed to [0]");
  const Element shifted = (v - ev.back() * Element::unit(algebra_)) / range;
  if (!is_projection(shifted, 1e-6)) {
    throw NumericalFailure("induced class is not the class of a projection; the map is not a Hilbert isometry");
  }
  Element image = snap_projection(shifted);
  cache_.emplace(std::move(key), image);
  return image;
}

// --- extreme points --------------------------------------------------------

bool extreme_point_test(const QuotientClass& c, double tol) {
  const Element& rep = c.representative();
  const auto ev = eigenvalues(rep);
  const double range = ev.front() - ev.back();
  if (range <= 1e-12 * std::max(1.0, std::abs(ev.front()))) throw InvalidInput("zero class has no extreme-point status");
  const Element shifted = (rep - ev.back() * Element::unit(rep.algebra())) / range;
  return is_projection(shifted, tol);
}

// --- orthogonal simplices --------------------------------------------------

OrthogonalSimplex::OrthogonalSimplex(Element p1, Element p2, Element p3, double tol)
    : vertices_{std::move(p1), std::move(p2), std::move(p3)} {
  for (const auto& p : vertices_) {
    require_same_algebra(p, vertices_[0]);
    require_projection(p, "simplex vertex");
    const int r = projection_rank(p);
    if (r == 0 || r == p.algebra().rank()) throw InvalidInput("simplex vertices must be nontrivial projections");
  }
  const Element sum = vertices_[0] + vertices_[1] + vertices_[2];
  if (!near(sum, Element::unit(sum.algebra()), tol)) throw InvalidInput("simplex vertices must sum to the unit");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!orthogonal(vertices_[i], vertices_[j], tol)) throw InvalidInput("simplex vertices must be orthogonal");
}

OrthogonalSimplex orthogonal_simplex_from(const Element& a) {
  if (a.algebra().rank() < 3) throw InvalidInput("orthogonal simplices need an algebra of rank >= 3");
  const PrimitiveFrame frame = primitive_frame(a);
  const Element& p1 = frame.idempotents[0];
  const Element& p2 = frame.idempotents[1];
  Element p3 = Element::unit(a.algebra()) - p1 - p2;
  return OrthogonalSimplex(p1, p2, std::move(p3), 1e-8);
}

SimplexLocation simplex_membership(const OrthogonalSimplex& s, const Element& a, double tol) {
  const auto& v = s.vertices();
  require_same_algebra(a, v[0]);
  Eigen::Matrix3d gram;
  Eigen::Vector3d rhs;
  for (int i = 0; i < 3; ++i) {
    rhs[i] = trace_inner_product(a, v[i]);
    for (int j = 0; j < 3; ++j) gram(i, j) = trace_inner_product(v[i], v[j]);
  }
  const Eigen::Vector3d c = gram.ldlt().solve(rhs);
  const Element residual = a - (c[0] * v[0] + c[1] * v[1] + c[2] * v[2]);
  const double scale = std::max(1.0, order_unit_norm(a));
  if (order_unit_norm(residual) > tol * scale || std::abs(c.sum() - 1.0) > tol * scale) {
    throw InvalidInput("element is not in the affine hull of the simplex");
  }
  SimplexLocation out;
  out.barycentric = {c[0], c[1], c[2]};
  const double lo = c.minCoeff();
  if (lo > tol) {
    out.membership = SimplexMembership::Interior;
  } else if (lo >= -tol) {
    out.membership = SimplexMembership::BoundaryFace;
    out.on_cone_boundary = positivity_classify(a) == Positivity::Boundary;
  } else {
    out.membership = SimplexMembership::Outside;
  }
  return out;
}

// --- chains ----------------------------------------------------------------

std::string chain_violation(const ProjectionChain& chain, double tol) {
  if (chain.steps.empty()) return "empty chain";
  const Algebra& alg = chain.steps.front().algebra();
  const Element e = Element::unit(alg);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const Element& p = chain.steps[i];
    if (!(p.algebra() == alg)) return "mixed algebras";
    if (!is_projection(p, tol)) return "entry " + std::to_string(i) + " is not a projection";
    const int r = projection_rank(p);
    if (r == 0 || r == alg.rank()) return "entry " + std::to_string(i) + " is trivial";
    if (r == alg.rank() - 1) return "entry " + std::to_string(i) + " is maximal";
  }
  for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
    const Element& p = chain.steps[i];
    const Element& q = chain.steps[i + 1];
    if (std::abs(trace_inner_product(p, q)) > tol || !orthogonal(p, q, tol)) {
      return "entries " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not orthogonal";
    }
    const Element rest = e - p - q;
    if (!is_projection(rest, tol) || projection_rank(rest) == 0) {
      return "entries " + std::to_string(i) + " and " + std::to_string(i + 1) + " sum to the unit";
    }
  }
  return {};
}

ProjectionChain orthogonality_chain(const Element& p, const Element& q) {
  require_same_algebra(p, q);
  const Algebra& alg = p.algebra();
  if (alg.rank() < 3) {
    throw InvalidInput("chains need rank >= 3: in " + alg.to_string() + " every nontrivial projection is maximal");
  }
  require_projection(p, "p");
  require_projection(q, "q");
  for (const Element* x : {&p, &q}) {
    const int r = projection_rank(*x);
    if (r == 0 || r >= alg.rank() - 1) throw InvalidInput("chain endpoints must be nontrivial and nonmaximal");
  }
  const Element e = Element::unit(alg);

  ProjectionChain chain;
  if (near(p, q, kProjectionTolerance)) {
    chain.steps = {p};
  } else if (orthogonal(p, q, kProjectionTolerance) && projection_rank(p) + projection_rank(q) < alg.rank()) {
    chain.steps = {p, q};
  } else if (const Element join = support_projection(p + q); projection_rank(join) < alg.rank()) {
    chain.steps = {p, primitive_below(e - join), q};
  } else {
    const Element r1 = primitive_below(e - p);
    const Element r2 = primitive_below(e - support_projection(r1 + q));
    chain.steps = {p, r1, r2, q};
  }
  if (const auto bad = chain_violation(chain, 1e-9); !bad.empty()) {
    throw NumericalFailure("constructed chain is invalid: " + bad);
  }
  return chain;
}

// --- orthoisomorphism check ------------------------------------------------

bool OrthoReport::all_passed() const { return failures() == 0; }

int OrthoReport::failures() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const OrthoPairCheck& c) {
    return !(c.orthogonality && c.complement && c.commutation);
  }));
}

OrthoReport verify_orthoisomorphism(const ProjectionMap& theta,
                                    const std::vector<std::pair<Element, Element>>& pairs, double tol) {
  OrthoReport report;
  for (const auto& [p, q] : pairs) {
    const Element e = Element::unit(p.algebra());
    const Element tp = theta(p), tq = theta(q);
    OrthoPairCheck check;
    check.orthogonality = orthogonal(p, q, tol) == orthogonal(tp, tq, tol);
    check.complement = near(theta(e - p), e - tp, tol) && near(theta(e - q), e - tq, tol);
    check.commutation = operator_commute(p, q, tol) == operator_commute(tp, tq, tol);
    report.pairs.push_back(check);
  }
  return report;
}

std::vector<std::pair<Element, Element>> sample_projection_pairs(const Algebra& algebra, Rng& rng, int count) {
  std::vector<std::pair<Element, Element>> out;
  const int n = algebra.rank();
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(out.size()) < count) {
    const PrimitiveFrame f1 = primitive_frame(random_element(algebra, rng));
    const PrimitiveFrame f2 = primitive_frame(random_element(algebra, rng));
    const int i = pick(rng);
    int j = pick(rng);
    if (n > 1 && j == i) j = (i + 1) % n;
    const Element& a = f1.idempotents[i];
    const Element& b = f1.idempotents[j];
    switch (out.size() % 4) {
      case 0: out.emplace_back(a, b); break;                     // orthogonal (or equal when n == 1)
      case 1: out.emplace_back(a, i == j ? a : a + b); break;    // nested
      case 2: out.emplace_back(a, f2.idempotents[j]); break;     // generic
      default: out.emplace_back(i == j ? a : a + b, f2.idempotents[i]); break;
    }
  }
  return out;
}

}  // namespace symcone
