#include "symcone/algebra.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "symcone/error.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;
using VectorMap = Eigen::Map<Eigen::VectorXd>;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void symmetrize(const Algebra& alg, double* data) {
  switch (alg.kind()) {
    case AlgebraKind::Sym: {
      MatrixMap m(data, alg.size(), alg.size());
      RowMatrix sym = 0.5 * (m + m.transpose());
      m = sym;
      break;
    }
    case AlgebraKind::Sum: {
      for (const auto& part : alg.parts()) {
        symmetrize(part, data);
        data += part.storage_size();
      }
      break;
    }
    default:
      break;
  }
}

void product_into(const Algebra& alg, const double* a, const double* b, double* out) {
  switch (alg.kind()) {
    case AlgebraKind::Vector: {
      const int n = alg.size();
      for (int i = 0; i < n; ++i) out[i] = a[i] * b[i];
      break;
    }
    case AlgebraKind::Sym: {
      const int n = alg.size();
      ConstMatrixMap ma(a, n, n), mb(b, n, n);
      MatrixMap mo(out, n, n);
      RowMatrix ab = ma * mb;
      mo = 0.5 * (ab + ab.transpose());
      break;
    }
    case AlgebraKind::Spin: {
      const int d = alg.size();
      ConstVectorMap x(a, d), y(b, d);
      const double s = a[d], t = b[d];
      VectorMap o(out, d);
      const double scalar = x.dot(y) + s * t;
      o = s * y + t * x;
      out[d] = scalar;
      break;
    }
    case AlgebraKind::Sum: {
      for (const auto& part : alg.parts()) {
        product_into(part, a, b, out);
        a += part.storage_size();
        b += part.storage_size();
        out += part.storage_size();
      }
      break;
    }
  }
}

void quadratic_into(const Algebra& alg, const double* a, const double* b, double* out) {
  switch (alg.kind()) {
    case AlgebraKind::Sym: {
      const int n = alg.size();
      ConstMatrixMap ma(a, n, n), mb(b, n, n);
      MatrixMap mo(out, n, n);
      RowMatrix aba = ma * mb * ma;
      mo = 0.5 * (aba + aba.transpose());
      break;
    }
    case AlgebraKind::Sum: {
      for (const auto& part : alg.parts()) {
        quadratic_into(part, a, b, out);
        a += part.storage_size();
        b += part.storage_size();
        out += part.storage_size();
      }
      break;
    }
    default: {
      // U_a b = 2 a∘(a∘b) − a²∘b
      const int m = alg.storage_size();
      std::vector<double> ab(m), aab(m), aa(m), aab2(m);
      product_into(alg, a, b, ab.data());
      product_into(alg, a, ab.data(), aab.data());
      product_into(alg, a, a, aa.data());
      product_into(alg, aa.data(), b, aab2.data());
      for (int i = 0; i < m; ++i) out[i] = 2.0 * aab[i] - aab2[i];
      break;
    }
  }
}

double trace_into(const Algebra& alg, const double* a, const double* b) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
      return ConstVectorMap(a, alg.size()).dot(ConstVectorMap(b, alg.size()));
    case AlgebraKind::Sym:
      return ConstVectorMap(a, alg.storage_size()).dot(ConstVectorMap(b, alg.storage_size()));
    case AlgebraKind::Spin: {
      const int d = alg.size();
      return 2.0 * (ConstVectorMap(a, d).dot(ConstVectorMap(b, d)) + a[d] * b[d]);
    }
    case AlgebraKind::Sum: {
      double total = 0.0;
      for (const auto& part : alg.parts()) {
        total += trace_into(part, a, b);
        a += part.storage_size();
        b += part.storage_size();
      }
      return total;
    }
  }
  return 0.0;
}

void unit_into(const Algebra& alg, double* out) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
      for (int i = 0; i < alg.size(); ++i) out[i] = 1.0;
      break;
    case AlgebraKind::Sym:
      for (int i = 0; i < alg.size(); ++i) out[i * alg.size() + i] = 1.0;
      break;
    case AlgebraKind::Spin:
      out[alg.size()] = 1.0;
      break;
    case AlgebraKind::Sum:
      for (const auto& part : alg.parts()) {
        unit_into(part, out);
        out += part.storage_size();
      }
      break;
  }
}

void coordinates_into(const Algebra& alg, const double* data, double* coords) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
    case AlgebraKind::Spin:
      std::copy(data, data + alg.storage_size(), coords);
      break;
    case AlgebraKind::Sym: {
      const int n = alg.size();
      int k = 0;
      for (int i = 0; i < n; ++i) {
        coords[k++] = data[i * n + i];
        for (int j = i + 1; j < n; ++j) coords[k++] = std::sqrt(2.0) * data[i * n + j];
      }
      break;
    }
    case AlgebraKind::Sum:
      for (const auto& part : alg.parts()) {
        coordinates_into(part, data, coords);
        data += part.storage_size();
        coords += part.dimension();
      }
      break;
  }
}

void storage_from_coordinates(const Algebra& alg, const double* coords, double* data) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
    case AlgebraKind::Spin:
      std::copy(coords, coords + alg.storage_size(), data);
      break;
    case AlgebraKind::Sym: {
      const int n = alg.size();
      int k = 0;
      for (int i = 0; i < n; ++i) {
        data[i * n + i] = coords[k++];
        for (int j = i + 1; j < n; ++j) {
          const double v = kInvSqrt2 * coords[k++];
          data[i * n + j] = v;
          data[j * n + i] = v;
        }
      }
      break;
    }
    case AlgebraKind::Sum:
      for (const auto& part : alg.parts()) {
        storage_from_coordinates(part, coords, data);
        coords += part.dimension();
        data += part.storage_size();
      }
      break;
  }
}

}  // namespace

// --- Algebra ---------------------------------------------------------------

Algebra Algebra::vector(int n) {
  if (n < 1) throw InvalidInput("vector algebra needs n >= 1");
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::Vector;
  node->n = n;
  node->rank = n;
  node->dimension = n;
  node->storage = n;
  return Algebra(std::move(node));
}

Algebra Algebra::sym(int n) {
  if (n < 1) throw InvalidInput("sym algebra needs n >= 1");
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::Sym;
  node->n = n;
  node->rank = n;
  node->dimension = n * (n + 1) / 2;
  node->storage = n * n;
  return Algebra(std::move(node));
}

Algebra Algebra::spin(int d) {
  if (d < 1) throw InvalidInput("spin factor needs d >= 1");
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::Spin;
  node->n = d;
  node->rank = 2;
  node->dimension = d + 1;
  node->storage = d + 1;
  return Algebra(std::move(node));
}

Algebra Algebra::direct_sum(std::vector<Algebra> parts) {
  if (parts.empty()) throw InvalidInput("direct sum needs at least one part");
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::Sum;
  node->n = static_cast<int>(parts.size());
  for (const auto& p : parts) {
    node->rank += p.rank();
    node->dimension += p.dimension();
    node->storage += p.storage_size();
  }
  node->parts = std::move(parts);
  return Algebra(std::move(node));
}

std::string Algebra::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case AlgebraKind::Vector: os << "Vector(" << size() << ")"; break;
    case AlgebraKind::Sym: os << "Sym(" << size() << ")"; break;
    case AlgebraKind::Spin: os << "Spin(" << size() << ")"; break;
    case AlgebraKind::Sum: {
      os << "Sum(";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) os << ", ";
        os << parts()[i].to_string();
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.kind() != AlgebraKind::Sum) return true;
  for (std::size_t i = 0; i < a.parts().size(); ++i) {
    if (!(a.parts()[i] == b.parts()[i])) return false;
  }
  return true;
}

// --- Element ---------------------------------------------------------------

Element::Element(Algebra algebra, Eigen::VectorXd storage)
    : algebra_(std::move(algebra)), storage_(std::move(storage)) {
  if (storage_.size() != algebra_.storage_size()) {
    throw InvalidInput("storage size " + std::to_string(storage_.size()) + " does not match " +
                       algebra_.to_string());
  }
  if (!storage_.allFinite()) throw InvalidInput("element has non-finite coordinates");
  symmetrize(algebra_, storage_.data());
}

Element make_unchecked(Algebra algebra, Eigen::VectorXd storage) {
  return Element(std::move(algebra), std::move(storage), Element::Unchecked{});
}

Element Element::zero(const Algebra& algebra) {
  return make_unchecked(algebra, Eigen::VectorXd::Zero(algebra.storage_size()));
}

Element Element::unit(const Algebra& algebra) {
  Eigen::VectorXd data = Eigen::VectorXd::Zero(algebra.storage_size());
  unit_into(algebra, data.data());
  return make_unchecked(algebra, std::move(data));
}

Element Element::from_coordinates(const Algebra& algebra, const Eigen::VectorXd& coords) {
  if (coords.size() != algebra.dimension()) {
    throw InvalidInput("coordinate vector has wrong dimension for " + algebra.to_string());
  }
  Eigen::VectorXd data(algebra.storage_size());
  storage_from_coordinates(algebra, coords.data(), data.data());
  return make_unchecked(algebra, std::move(data));
}

Element Element::from_matrix(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw InvalidInput("matrix must be square");
  const int n = static_cast<int>(m.rows());
  RowMatrix rm = m;
  return Element(Algebra::sym(n), Eigen::Map<Eigen::VectorXd>(rm.data(), n * n));
}

Element Element::spin(const Eigen::VectorXd& h, double t) {
  Eigen::VectorXd data(h.size() + 1);
  data.head(h.size()) = h;
  data[h.size()] = t;
  return Element(Algebra::spin(static_cast<int>(h.size())), std::move(data));
}

Element Element::direct_sum(const Algebra& algebra, std::span<const Element> parts) {
  if (algebra.kind() != AlgebraKind::Sum || parts.size() != algebra.parts().size()) {
    throw InvalidInput("component count does not match " + algebra.to_string());
  }
  Eigen::VectorXd data(algebra.storage_size());
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].algebra() == algebra.parts()[i])) {
      throw InvalidInput("component " + std::to_string(i) + " does not match " + algebra.to_string());
    }
    data.segment(offset, parts[i].storage().size()) = parts[i].storage();
    offset += static_cast<int>(parts[i].storage().size());
  }
  return make_unchecked(algebra, std::move(data));
}

Eigen::VectorXd Element::coordinates() const {
  Eigen::VectorXd coords(algebra_.dimension());
  coordinates_into(algebra_, storage_.data(), coords.data());
  return coords;
}

Eigen::MatrixXd Element::matrix() const {
  if (algebra_.kind() != AlgebraKind::Sym) throw InvalidInput("matrix() needs a Sym element");
  const int n = algebra_.size();
  return ConstMatrixMap(storage_.data(), n, n);
}

Eigen::VectorXd Element::spin_vector() const {
  if (algebra_.kind() != AlgebraKind::Spin) throw InvalidInput("spin_vector() needs a Spin element");
  return storage_.head(algebra_.size());
}

double Element::spin_scalar() const {
  if (algebra_.kind() != AlgebraKind::Spin) throw InvalidInput("spin_scalar() needs a Spin element");
  return storage_[algebra_.size()];
}

Element Element::component(int i) const {
  if (algebra_.kind() != AlgebraKind::Sum || i < 0 || i >= algebra_.size()) {
    throw InvalidInput("component index out of range");
  }
  int offset = 0;
  for (int k = 0; k < i; ++k) offset += algebra_.parts()[k].storage_size();
  const Algebra& part = algebra_.parts()[i];
  return make_unchecked(part, storage_.segment(offset, part.storage_size()));
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(*this, other);
  storage_ += other.storage_;
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_algebra(*this, other);
  storage_ -= other.storage_;
  return *this;
}

Element& Element::operator*=(double s) {
  storage_ *= s;
  return *this;
}

// --- Operations ------------------------------------------------------------

void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra())) {
    throw InvalidInput("algebra mismatch: " + a.algebra().to_string() + " vs " +
                       b.algebra().to_string());
  }
}

Element basis_element(const Algebra& algebra, int j) {
  if (j < 0 || j >= algebra.dimension()) throw InvalidInput("basis index out of range");
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(algebra.dimension());
  coords[j] = 1.0;
  return Element::from_coordinates(algebra, coords);
}

Element jordan_product(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Eigen::VectorXd out(a.storage().size());
  product_into(a.algebra(), a.storage().data(), b.storage().data(), out.data());
  return make_unchecked(a.algebra(), std::move(out));
}

Element triple_product(const Element& a, const Element& b, const Element& c) {
  require_same_algebra(a, b);
  require_same_algebra(a, c);
  return jordan_product(jordan_product(a, b), c) + jordan_product(jordan_product(c, b), a) -
         jordan_product(jordan_product(a, c), b);
}

Element quadratic_rep(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Eigen::VectorXd out(a.storage().size());
  quadratic_into(a.algebra(), a.storage().data(), b.storage().data(), out.data());
  return make_unchecked(a.algebra(), std::move(out));
}

double trace_inner_product(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return trace_into(a.algebra(), a.storage().data(), b.storage().data());
}

double max_abs(const Element& a) { return a.storage().cwiseAbs().maxCoeff(); }

LinearMap matrix_of(const Algebra& algebra, const std::function<Element(const Element&)>& map) {
  const int dim = algebra.dimension();
  LinearMap m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const Element image = map(basis_element(algebra, j));
    require_same_algebra(image, Element::zero(algebra));
    m.col(j) = image.coordinates();
  }
  return m;
}

Element apply(const LinearMap& map, const Element& a) {
  if (map.cols() != a.algebra().dimension() || map.rows() != map.cols()) {
    throw InvalidInput("linear map shape does not match " + a.algebra().to_string());
  }
  return Element::from_coordinates(a.algebra(), map * a.coordinates());
}

LinearMap multiplication_operator(const Element& a) {
  return matrix_of(a.algebra(), [&](const Element& x) { return jordan_product(a, x); });
}

double commutation_defect(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  double worst = 0.0;
  for (int j = 0; j < a.algebra().dimension(); ++j) {
    const Element c = basis_element(a.algebra(), j);
    const Element defect = jordan_product(a, jordan_product(b, c)) - jordan_product(b, jordan_product(a, c));
    worst = std::max(worst, order_unit_norm(defect));
  }
  return worst;
}

bool operator_commute(const Element& a, const Element& b, double tol) {
  const double scale = order_unit_norm(a) * order_unit_norm(b);
  if (scale == 0.0) return true;
  return commutation_defect(a, b) <= tol * scale;
}

}  // namespace symcone
