#include "symcone/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "symcone/error.hpp"

namespace symcone {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

int positive_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InvalidInput(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<int>();
}

double number(const Json& v) {
  if (!v.is_number()) throw InvalidInput("expected a number, got " + v.dump());
  return v.get<double>();
}

Eigen::VectorXd vector_from(const Json& v, int expected) {
  if (!v.is_array() || static_cast<int>(v.size()) != expected) {
    throw InvalidInput("expected an array of " + std::to_string(expected) + " numbers");
  }
  Eigen::VectorXd out(expected);
  for (int i = 0; i < expected; ++i) out[i] = number(v[i]);
  return out;
}

Eigen::MatrixXd matrix_from(const Json& v, int rows, int cols) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows) {
    throw InvalidInput("expected a " + std::to_string(rows) + "-row matrix");
  }
  Eigen::MatrixXd out(rows, cols);
  for (int i = 0; i < rows; ++i) out.row(i) = vector_from(v[i], cols).transpose();
  return out;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json data_to_json(const Algebra& alg, const double* data) {
  switch (alg.kind()) {
    case AlgebraKind::Vector:
      return Json(std::vector<double>(data, data + alg.size()));
    case AlgebraKind::Sym: {
      const int n = alg.size();
      return matrix_to_json(Eigen::Map<const RowMatrix>(data, n, n));
    }
    case AlgebraKind::Spin: {
      const int d = alg.size();
      return Json{{"h", std::vector<double>(data, data + d)}, {"t", data[d]}};
    }
    case AlgebraKind::Sum: {
      Json parts = Json::array();
      for (const auto& part : alg.parts()) {
        parts.push_back(data_to_json(part, data));
        data += part.storage_size();
      }
      return parts;
    }
  }
  return {};
}

void data_from_json(const Algebra& alg, const Json& j, double* out) {
  switch (alg.kind()) {
    case AlgebraKind::Vector: {
      const Eigen::VectorXd v = vector_from(j, alg.size());
      std::copy(v.data(), v.data() + v.size(), out);
      break;
    }
    case AlgebraKind::Sym: {
      const int n = alg.size();
      const RowMatrix m = matrix_from(j, n, n);
      std::copy(m.data(), m.data() + n * n, out);
      break;
    }
    case AlgebraKind::Spin: {
      const Eigen::VectorXd h = vector_from(field(j, "h"), alg.size());
      std::copy(h.data(), h.data() + h.size(), out);
      out[alg.size()] = number(field(j, "t"));
      break;
    }
    case AlgebraKind::Sum: {
      if (!j.is_array() || j.size() != alg.parts().size()) {
        throw InvalidInput("direct-sum data needs one entry per component");
      }
      for (std::size_t i = 0; i < alg.parts().size(); ++i) {
        data_from_json(alg.parts()[i], j[i], out);
        out += alg.parts()[i].storage_size();
      }
      break;
    }
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Json to_json(const Algebra& algebra) {
  switch (algebra.kind()) {
    case AlgebraKind::Vector: return {{"kind", "vector"}, {"n", algebra.size()}};
    case AlgebraKind::Sym: return {{"kind", "sym"}, {"n", algebra.size()}};
    case AlgebraKind::Spin: return {{"kind", "spin"}, {"dim", algebra.size()}};
    case AlgebraKind::Sum: {
      Json parts = Json::array();
      for (const auto& p : algebra.parts()) parts.push_back(to_json(p));
      return {{"kind", "sum"}, {"parts", parts}};
    }
  }
  return {};
}

Algebra algebra_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InvalidInput("algebra kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "vector") return Algebra::vector(positive_int(j, "n"));
  if (k == "sym") return Algebra::sym(positive_int(j, "n"));
  if (k == "spin") return Algebra::spin(positive_int(j, "dim"));
  if (k == "sum") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) throw InvalidInput("sum parts must be an array");
    std::vector<Algebra> out;
    for (const auto& p : parts) out.push_back(algebra_from_json(p));
    return Algebra::direct_sum(std::move(out));
  }
  throw InvalidInput("unknown algebra kind \"" + k + "\"");
}

Json to_json(const Element& a) {
  return {{"algebra", to_json(a.algebra())}, {"data", data_to_json(a.algebra(), a.storage().data())}};
}

Element element_from_json(const Json& j) {
  const Algebra alg = algebra_from_json(field(j, "algebra"));
  Eigen::VectorXd storage(alg.storage_size());
  data_from_json(alg, field(j, "data"), storage.data());
  return Element(alg, std::move(storage));
}

Json to_json(const JordanIsoRep& iso) {
  switch (iso.kind) {
    case JordanIsoRep::Kind::Identity:
      return {{"kind", "identity"}};
    case JordanIsoRep::Kind::OrthogonalConjugation:
      return {{"kind", "orthogonal_conjugation"}, {"u", matrix_to_json(iso.u)}};
    case JordanIsoRep::Kind::SpinOrthogonal:
      return {{"kind", "spin_orthogonal"}, {"u", matrix_to_json(iso.u)}};
    case JordanIsoRep::Kind::Sum: {
      Json parts = Json::array();
      for (const auto& p : iso.parts) parts.push_back(to_json(p));
      return {{"kind", "sum"}, {"perm", iso.perm}, {"parts", parts}};
    }
  }
  return {};
}

JordanIsoRep iso_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InvalidInput("iso kind must be a string");
  const std::string k = kind.get<std::string>();
  auto square = [&](const Json& u) {
    if (!u.is_array() || u.empty()) throw InvalidInput("iso matrix must be a non-empty array of rows");
    const int n = static_cast<int>(u.size());
    return matrix_from(u, n, n);
  };
  if (k == "identity") return JordanIsoRep::identity();
  if (k == "orthogonal_conjugation") return JordanIsoRep::conjugation(square(field(j, "u")));
  if (k == "spin_orthogonal") return JordanIsoRep::spin_orthogonal(square(field(j, "u")));
  if (k == "sum") {
    const Json& perm = field(j, "perm");
    if (!perm.is_array()) throw InvalidInput("sum perm must be an array");
    std::vector<int> p;
    for (const auto& v : perm) {
      if (!v.is_number_integer()) throw InvalidInput("sum perm entries must be integers");
      p.push_back(v.get<int>());
    }
    std::vector<JordanIsoRep> parts;
    if (j.contains("parts")) {
      if (!j["parts"].is_array()) throw InvalidInput("sum parts must be an array");
      for (const auto& part : j["parts"]) parts.push_back(iso_from_json(part));
    }
    return JordanIsoRep::sum(std::move(p), std::move(parts));
  }
  throw InvalidInput("unknown iso kind \"" + k + "\"");
}

std::string metric_name(Metric metric) { return metric == Metric::Thompson ? "T" : "H"; }

Metric metric_from_string(const std::string& s) {
  const std::string m = lower(s);
  if (m == "t" || m == "thompson") return Metric::Thompson;
  if (m == "h" || m == "hilbert") return Metric::Hilbert;
  throw InvalidInput("unknown metric \"" + s + "\"");
}

Json to_json(const IsometryDescriptor& d) {
  Json j;
  j["metric"] = metric_name(d.metric);
  j["b"] = to_json(d.b);
  j["p"] = d.p ? to_json(*d.p) : Json(nullptr);
  j["epsilon"] = d.epsilon ? Json(*d.epsilon) : Json(nullptr);
  j["iso"] = to_json(d.iso);
  return j;
}

IsometryDescriptor descriptor_from_json(const Json& j) {
  const Json& metric = field(j, "metric");
  if (!metric.is_string()) throw InvalidInput("descriptor metric must be a string");
  IsometryDescriptor d{metric_from_string(metric.get<std::string>()), element_from_json(field(j, "b")),
                       std::nullopt, std::nullopt,
                       j.contains("iso") ? iso_from_json(j["iso"]) : JordanIsoRep::identity()};
  if (j.contains("p") && !j["p"].is_null()) d.p = element_from_json(j["p"]);
  if (j.contains("epsilon") && !j["epsilon"].is_null()) {
    if (!j["epsilon"].is_number_integer()) throw InvalidInput("epsilon must be 1 or -1");
    d.epsilon = j["epsilon"].get<int>();
  }
  d.validate();
  return d;
}

Json to_json(const ProjectionChain& chain) {
  Json steps = Json::array();
  for (const auto& p : chain.steps) steps.push_back(to_json(p));
  return {{"chain", steps}};
}

Json to_json(const OrthoReport& report) {
  Json pairs = Json::array();
  for (const auto& c : report.pairs) {
    pairs.push_back({{"orthogonality", c.orthogonality}, {"complement", c.complement}, {"commutation", c.commutation}});
  }
  return {{"passed", report.all_passed()}, {"failures", report.failures()}, {"pairs", pairs}};
}

Json to_json(const SpectralFrame& frame) {
  Json idempotents = Json::array();
  for (const auto& q : frame.idempotents) idempotents.push_back(to_json(q));
  return {{"eigenvalues", frame.eigenvalues}, {"multiplicities", frame.multiplicities}, {"idempotents", idempotents}};
}

}  // namespace symcone
