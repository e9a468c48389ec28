#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace symcone {

enum class AlgebraKind { Vector, Sym, Spin, Sum };

/// Descriptor of a finite-dimensional Euclidean Jordan algebra.
///
/// Supported shapes are the associative algebra R^n, the real symmetric
/// matrices Sym(n), the spin factor R^d (+) R and ordered direct sums of
/// those. Descriptors are cheap to copy; the node is shared and immutable.
class Algebra {
 public:
  static Algebra vector(int n);
  static Algebra sym(int n);
  static Algebra spin(int d);
  static Algebra direct_sum(std::vector<Algebra> parts);

  AlgebraKind kind() const { return node_->kind; }
  /// n for Vector and Sym, d for Spin, number of parts for Sum.
  int size() const { return node_->n; }
  const std::vector<Algebra>& parts() const { return node_->parts; }

  /// Jordan rank: the number of primitive idempotents in a complete frame.
  int rank() const { return node_->rank; }
  /// Dimension of the canonical coordinate space.
  int dimension() const { return node_->dimension; }
  /// Length of the dense storage vector of an element.
  int storage_size() const { return node_->storage; }

  std::string to_string() const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Node {
    AlgebraKind kind;
    int n = 0;
    std::vector<Algebra> parts;
    int rank = 0;
    int dimension = 0;
    int storage = 0;
  };
  explicit Algebra(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A point of a Euclidean Jordan algebra.
///
/// Storage layout: Vector(n) holds n coordinates; Sym(n) a dense row-major
/// n*n matrix (kept symmetric); Spin(d) the d vector coordinates followed by
/// the scalar; a direct sum concatenates the storage of its parts.
class Element {
 public:
  /// Validates the storage size and finiteness; Sym blocks are symmetrized.
  Element(Algebra algebra, Eigen::VectorXd storage);

  static Element zero(const Algebra& algebra);
  static Element unit(const Algebra& algebra);
  static Element from_coordinates(const Algebra& algebra, const Eigen::VectorXd& coords);
  static Element from_matrix(const Eigen::MatrixXd& m);
  static Element spin(const Eigen::VectorXd& h, double t);
  static Element direct_sum(const Algebra& algebra, std::span<const Element> parts);

  const Algebra& algebra() const { return algebra_; }
  const Eigen::VectorXd& storage() const { return storage_; }

  /// Coordinates in the canonical basis (see basis_element).
  Eigen::VectorXd coordinates() const;

  /// Sym only: the matrix.
  Eigen::MatrixXd matrix() const;
  /// Spin only: the vector part and the scalar part.
  Eigen::VectorXd spin_vector() const;
  double spin_scalar() const;
  /// Sum only: the i-th component.
  Element component(int i) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(double s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(double s, Element a) { return a *= s; }
  friend Element operator*(Element a, double s) { return a *= s; }
  friend Element operator/(Element a, double s) { return a *= 1.0 / s; }
  friend Element operator-(Element a) { return a *= -1.0; }

 private:
  struct Unchecked {};
  Element(Algebra algebra, Eigen::VectorXd storage, Unchecked)
      : algebra_(std::move(algebra)), storage_(std::move(storage)) {}

  friend Element make_unchecked(Algebra algebra, Eigen::VectorXd storage);

  Algebra algebra_;
  Eigen::VectorXd storage_;
};

/// Builds an element from storage already known to be well formed.
Element make_unchecked(Algebra algebra, Eigen::VectorXd storage);

/// Linear maps on an algebra act on canonical coordinates.
using LinearMap = Eigen::MatrixXd;

/// Throws InvalidInput unless both elements live in the same algebra.
void require_same_algebra(const Element& a, const Element& b);

/// The j-th canonical basis element. Vector: unit coordinate vectors.
/// Sym: E_ii, then (E_ij + E_ji)/sqrt(2) for i < j, row by row (orthonormal
/// for the trace form). Spin: (e_i, 0) followed by the unit (0, 1).
Element basis_element(const Algebra& algebra, int j);

Element jordan_product(const Element& a, const Element& b);
/// {a,b,c} = (a∘b)∘c + (c∘b)∘a − (a∘c)∘b.
Element triple_product(const Element& a, const Element& b, const Element& c);
/// U_a b = {a,b,a}.
Element quadratic_rep(const Element& a, const Element& b);
double trace_inner_product(const Element& a, const Element& b);

/// Largest absolute storage entry; a cheap size measure, not the order-unit norm.
double max_abs(const Element& a);

/// Matrix of a linear map given by its action on the canonical basis.
LinearMap matrix_of(const Algebra& algebra, const std::function<Element(const Element&)>& map);
Element apply(const LinearMap& map, const Element& a);

/// Matrix of x ↦ a∘x.
LinearMap multiplication_operator(const Element& a);

/// True iff max_c ‖a∘(b∘c) − b∘(a∘c)‖ over the canonical basis is at most
/// tol·‖a‖·‖b‖ (order-unit norms).
bool operator_commute(const Element& a, const Element& b, double tol = 1e-9);
/// The largest commutation defect over the canonical basis.
double commutation_defect(const Element& a, const Element& b);

}  // namespace symcone
