#pragma once

#include <doctest.h>

#include <initializer_list>

#include "symcone/symcone.hpp"

namespace testing {

using namespace symcone;

inline Element diag(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<int>(values.size()));
  int i = 0;
  for (double x : values) v[i++] = x;
  return Element::from_matrix(v.asDiagonal());
}

inline Element vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<int>(values.size()));
  int i = 0;
  for (double x : values) v[i++] = x;
  return Element(Algebra::vector(static_cast<int>(values.size())), v);
}

inline Element spin(std::initializer_list<double> h, double t) {
  Eigen::VectorXd v(static_cast<int>(h.size()));
  int i = 0;
  for (double x : h) v[i++] = x;
  return Element::spin(v, t);
}

inline Element rank_one(const Eigen::VectorXd& v) {
  const Eigen::VectorXd u = v.normalized();
  return Element::from_matrix(u * u.transpose());
}

inline double gap(const Element& a, const Element& b) { return max_abs(a - b); }

inline Algebra sum_of(std::vector<Algebra> parts) { return Algebra::direct_sum(std::move(parts)); }

}  // namespace testing
