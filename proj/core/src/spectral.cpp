#include "symcone/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symcone/error.hpp"

namespace symcone {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_sym(const double* data, int n) {
  Eigen::MatrixXd m = Eigen::Map<const RowMatrix>(data, n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigensolver did not converge");
  return solver;
}

// Unit direction of a spin vector; an arbitrary axis when the vector is zero.
Eigen::VectorXd spin_axis(const Eigen::Map<const Eigen::VectorXd>& x, double r) {
  if (r > 0.0) return x / r;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(x.size());
  u[0] = 1.0;
  return u;
}

void eigenvalues_into(const Algebra& alg, const double* data, std::vector<double>& out) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
      out.insert(out.end(), data, data + alg.size());
      break;
    case AlgebraKind::Sym: {
      const auto solver = solve_sym(data, alg.size());
      for (int i = 0; i < alg.size(); ++i) out.push_back(solver.eigenvalues()[i]);
      break;
    }
    case AlgebraKind::Spin: {
      const int d = alg.size();
      const double r = Eigen::Map<const Eigen::VectorXd>(data, d).norm();
      out.push_back(data[d] + r);
      out.push_back(data[d] - r);
      break;
    }
    case AlgebraKind::Sum:
      for (const auto& part : alg.parts()) {
        eigenvalues_into(part, data, out);
        data += part.storage_size();
      }
      break;
  }
}

struct Primitive {
  double eigenvalue;
  Eigen::VectorXd storage;  // full-algebra storage of the idempotent
};

void primitives_into(const Algebra& alg, const double* data, int offset, int total,
                     std::vector<Primitive>& out) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
      for (int i = 0; i < alg.size(); ++i) {
        Eigen::VectorXd s = Eigen::VectorXd::Zero(total);
        s[offset + i] = 1.0;
        out.push_back({data[i], std::move(s)});
      }
      break;
    case AlgebraKind::Sym: {
      const int n = alg.size();
      const auto solver = solve_sym(data, n);
      for (int i = 0; i < n; ++i) {
        const Eigen::VectorXd v = solver.eigenvectors().col(i);
        RowMatrix proj = v * v.transpose();
        Eigen::VectorXd s = Eigen::VectorXd::Zero(total);
        s.segment(offset, n * n) = Eigen::Map<Eigen::VectorXd>(proj.data(), n * n);
        out.push_back({solver.eigenvalues()[i], std::move(s)});
      }
      break;
    }
    case AlgebraKind::Spin: {
      const int d = alg.size();
      Eigen::Map<const Eigen::VectorXd> x(data, d);
      const double r = x.norm();
      const Eigen::VectorXd u = spin_axis(x, r);
      for (int sign : {1, -1}) {
        Eigen::VectorXd s = Eigen::VectorXd::Zero(total);
        s.segment(offset, d) = 0.5 * sign * u;
        s[offset + d] = 0.5;
        out.push_back({data[d] + sign * r, std::move(s)});
      }
      break;
    }
    case AlgebraKind::Sum:
      for (const auto& part : alg.parts()) {
        primitives_into(part, data, offset, total, out);
        data += part.storage_size();
        offset += part.storage_size();
      }
      break;
  }
}

void apply_into(const Algebra& alg, const double* data, const ScalarFunction& f, double* out) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
      for (int i = 0; i < alg.size(); ++i) out[i] = f(data[i]);
      break;
    case AlgebraKind::Sym: {
      const int n = alg.size();
      const auto solver = solve_sym(data, n);
      Eigen::VectorXd fl(n);
      for (int i = 0; i < n; ++i) fl[i] = f(solver.eigenvalues()[i]);
      const Eigen::MatrixXd& v = solver.eigenvectors();
      RowMatrix m = v * fl.asDiagonal() * v.transpose();
      m = 0.5 * (m + m.transpose()).eval();
      std::copy(m.data(), m.data() + n * n, out);
      break;
    }
    case AlgebraKind::Spin: {
      const int d = alg.size();
      Eigen::Map<const Eigen::VectorXd> x(data, d);
      const double r = x.norm();
      const double t = data[d];
      const double hi = f(t + r), lo = f(t - r);
      Eigen::Map<Eigen::VectorXd> o(out, d);
      if (r > 0.0) {
        o = (0.5 * (hi - lo) / r) * x;
      } else {
        o.setZero();
      }
      out[d] = 0.5 * (hi + lo);
      break;
    }
    case AlgebraKind::Sum:
      for (const auto& part : alg.parts()) {
        apply_into(part, data, f, out);
        data += part.storage_size();
        out += part.storage_size();
      }
      break;
  }
}

void require_finite(const Element& a) {
  if (!a.storage().allFinite()) throw NumericalFailure("spectral computation on non-finite element");
}

}  // namespace

Element SpectralFrame::reconstruct() const {
  if (idempotents.empty()) throw InvalidInput("empty spectral frame");
  Element sum = Element::zero(idempotents.front().algebra());
  for (std::size_t i = 0; i < idempotents.size(); ++i) sum += eigenvalues[i] * idempotents[i];
  return sum;
}

std::vector<double> eigenvalues(const Element& a) {
  require_finite(a);
  std::vector<double> out;
  out.reserve(a.algebra().rank());
  eigenvalues_into(a.algebra(), a.storage().data(), out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

PrimitiveFrame primitive_frame(const Element& a) {
  require_finite(a);
  std::vector<Primitive> prims;
  primitives_into(a.algebra(), a.storage().data(), 0, a.algebra().storage_size(), prims);
  std::stable_sort(prims.begin(), prims.end(),
                   [](const Primitive& x, const Primitive& y) { return x.eigenvalue > y.eigenvalue; });
  PrimitiveFrame frame;
  for (auto& p : prims) {
    frame.eigenvalues.push_back(p.eigenvalue);
    frame.idempotents.push_back(make_unchecked(a.algebra(), std::move(p.storage)));
  }
  return frame;
}

std::vector<double> cluster_spectrum(const std::vector<double>& sorted_desc, double cluster_tol) {
  std::vector<double> points;
  if (sorted_desc.empty()) return points;
  const double width = cluster_tol * std::max(1.0, std::abs(sorted_desc.front()));
  double sum = sorted_desc.front();
  int count = 1;
  for (std::size_t i = 1; i < sorted_desc.size(); ++i) {
    if (sorted_desc[i - 1] - sorted_desc[i] <= width) {
      sum += sorted_desc[i];
      ++count;
    } else {
      points.push_back(sum / count);
      sum = sorted_desc[i];
      count = 1;
    }
  }
  points.push_back(sum / count);
  return points;
}

SpectralFrame spectral_decomposition(const Element& a, double cluster_tol) {
  const PrimitiveFrame prim = primitive_frame(a);
  SpectralFrame frame;
  const double width = cluster_tol * std::max(1.0, std::abs(prim.eigenvalues.front()));
  double sum = 0.0;
  for (std::size_t i = 0; i < prim.eigenvalues.size(); ++i) {
    const bool new_point = i == 0 || prim.eigenvalues[i - 1] - prim.eigenvalues[i] > width;
    if (new_point) {
      if (i > 0) frame.eigenvalues.back() = sum / frame.multiplicities.back();
      frame.eigenvalues.push_back(prim.eigenvalues[i]);
      frame.idempotents.push_back(prim.idempotents[i]);
      frame.multiplicities.push_back(1);
      sum = prim.eigenvalues[i];
    } else {
      frame.idempotents.back() += prim.idempotents[i];
      frame.multiplicities.back() += 1;
      sum += prim.eigenvalues[i];
    }
  }
  frame.eigenvalues.back() = sum / frame.multiplicities.back();
  return frame;
}

double ScalarFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::Pow: return std::pow(x, alpha_);
    case Kind::Exp: return std::exp(x);
    case Kind::Log: return std::log(x);
    case Kind::Sqrt: return std::sqrt(x);
    case Kind::Inv: return 1.0 / x;
  }
  return 0.0;
}

bool ScalarFunction::needs_positive_spectrum() const {
  switch (kind_) {
    case Kind::Pow: return alpha_ < 0.0 || alpha_ != std::floor(alpha_);
    case Kind::Exp: return false;
    default: return true;
  }
}

Element apply_scalar_function(const Element& a, ScalarFunction f) {
  require_finite(a);
  if (f.needs_positive_spectrum()) {
    const auto ev = eigenvalues(a);
    if (!(ev.back() > 0.0)) {
      throw InvalidInput("functional calculus needs a strictly positive spectrum (min eigenvalue " +
                         std::to_string(ev.back()) + ")");
    }
  }
  Eigen::VectorXd out(a.storage().size());
  apply_into(a.algebra(), a.storage().data(), f, out.data());
  if (!out.allFinite()) throw NumericalFailure("functional calculus overflowed");
  return make_unchecked(a.algebra(), std::move(out));
}

Element power(const Element& a, double alpha) { return apply_scalar_function(a, ScalarFunction::pow(alpha)); }
Element exp(const Element& a) { return apply_scalar_function(a, ScalarFunction::exp()); }
Element log(const Element& a) { return apply_scalar_function(a, ScalarFunction::log()); }
Element sqrt(const Element& a) { return apply_scalar_function(a, ScalarFunction::sqrt()); }
Element inverse(const Element& a) { return apply_scalar_function(a, ScalarFunction::inv()); }

double order_unit_norm(const Element& a) {
  const auto ev = eigenvalues(a);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

double variation_norm(const Element& a) {
  const auto ev = eigenvalues(a);
  return ev.front() - ev.back();
}

Positivity positivity_classify(const Element& a, double margin) {
  const auto ev = eigenvalues(a);
  const double hi = ev.front(), lo = ev.back();
  if (lo > margin * std::max(1.0, hi)) return Positivity::Interior;
  if (lo < -margin * std::max({1.0, std::abs(hi), std::abs(lo)})) return Positivity::Outside;
  return Positivity::Boundary;
}

bool is_projection(const Element& a, double tol) {
  for (double l : eigenvalues(a)) {
    if (std::abs(l) > tol && std::abs(l - 1.0) > tol) return false;
  }
  return true;
}

int projection_rank(const Element& p, double tol) {
  const auto ev = eigenvalues(p);
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](double l) { return std::abs(l - 1.0) <= tol; }));
}

Element snap_projection(const Element& p) {
  const PrimitiveFrame frame = primitive_frame(p);
  Element out = Element::zero(p.algebra());
  for (std::size_t i = 0; i < frame.eigenvalues.size(); ++i) {
    if (frame.eigenvalues[i] > 0.5) out += frame.idempotents[i];
  }
  return out;
}

PeirceProjections peirce_projections(const Element& p, double tol) {
  if (!is_projection(p, tol)) throw InvalidInput("Peirce decomposition needs a projection");
  const Algebra& alg = p.algebra();
  const Element complement = Element::unit(alg) - p;
  PeirceProjections out;
  out.one = matrix_of(alg, [&](const Element& x) { return quadratic_rep(p, x); });
  out.zero = matrix_of(alg, [&](const Element& x) { return quadratic_rep(complement, x); });
  out.half = LinearMap::Identity(alg.dimension(), alg.dimension()) - out.one - out.zero;
  return out;
}

}  // namespace symcone
