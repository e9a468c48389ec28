#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "symcone/symcone.hpp"

namespace symcone::cli {

namespace {

struct Options {
  std::string metric = "thompson";
  std::optional<double> tol;
  std::uint64_t seed = ProbeOptions{}.seed;
  std::optional<int> n;
  std::optional<double> t;
  std::string output;
  std::string suite;
  std::vector<std::string> inputs;
};

class Inputs {
 public:
  Inputs(const std::vector<std::string>& raw, std::istream& in) : raw_(raw), in_(in) {}

  Json json(std::size_t i) {
    if (i >= raw_.size()) throw InvalidInput("missing input #" + std::to_string(i + 1));
    return Json::parse(text(raw_[i]));
  }

  Element element(std::size_t i) { return element_from_json(json(i)); }

  IsometryDescriptor descriptor(std::size_t i) {
    Json j = json(i);
    // Accept the output of `factorize`, which wraps the descriptor fields.
    if (j.contains("descriptor")) j = j["descriptor"];
    return descriptor_from_json(j);
  }

  void expect(std::size_t count) const {
    if (raw_.size() != count) {
      throw InvalidInput("expected " + std::to_string(count) + " inputs, got " + std::to_string(raw_.size()));
    }
  }

 private:
  std::string text(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    if (arg == "-") {
      if (stdin_used_) throw InvalidInput("standard input can back only one argument");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(arg);
    if (!file) throw InvalidInput("cannot open input file \"" + arg + "\"");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

  const std::vector<std::string>& raw_;
  std::istream& in_;
  bool stdin_used_ = false;
};

void require_common_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra())) {
    throw InvalidInput("inputs live in different algebras: " + a.algebra().to_string() + " vs " +
                       b.algebra().to_string());
  }
}

ProbeOptions probe_options(const Options& o) {
  ProbeOptions p;
  p.seed = o.seed;
  if (o.tol) p.threshold = *o.tol;
  return p;
}

void check_metric_matches(const Options& o, const IsometryDescriptor& d, bool metric_given) {
  if (metric_given && metric_from_string(o.metric) != d.metric) {
    throw InvalidInput("--metric " + o.metric + " does not match the descriptor metric " + metric_name(d.metric));
  }
}

std::string membership_name(SimplexMembership m) {
  switch (m) {
    case SimplexMembership::Interior: return "interior";
    case SimplexMembership::BoundaryFace: return "boundary-face";
    case SimplexMembership::Outside: return "outside";
  }
  return {};
}

using Emit = std::function<void(const Json&)>;
using Handler = std::function<int(const Options&, bool metric_given, Inputs&, const Emit&)>;

int cmd_dist(const Options& o, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element a = in.element(0), b = in.element(1);
  require_common_algebra(a, b);
  emit({{"distance", distance(metric_from_string(o.metric), a, b)}});
  return kSuccess;
}

int cmd_gauge(const Options&, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element a = in.element(0), b = in.element(1);
  require_common_algebra(a, b);
  require_interior(b, "second argument");
  emit({{"gauge", gauge(a, b)}});
  return kSuccess;
}

int cmd_mean(const Options&, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element a = in.element(0), b = in.element(1);
  require_common_algebra(a, b);
  emit({{"mean", to_json(geometric_mean(a, b))}});
  return kSuccess;
}

int cmd_geodesic(const Options& o, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element a = in.element(0), b = in.element(1);
  require_common_algebra(a, b);
  const Metric metric = metric_from_string(o.metric);
  std::vector<double> ts;
  if (o.t) {
    ts.push_back(*o.t);
  } else {
    const int n = o.n.value_or(11);
    if (n < 2) throw InvalidInput("--n must be at least 2 for geodesic sampling");
    for (int i = 0; i < n; ++i) ts.push_back(static_cast<double>(i) / (n - 1));
  }
  for (double t : ts) {
    const Element g = geodesic_point(a, b, t);
    emit({{"t", t}, {"point", to_json(g)}, {"distance", distance(metric, a, g)}});
  }
  return kSuccess;
}

int cmd_classify(const Options& o, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element a = in.element(0), b = in.element(1);
  require_common_algebra(a, b);
  const GeodesicClassification c = classify_geodesic(a, b, metric_from_string(o.metric));
  emit({{"unique", c.unique},
        {"spectrum", c.spectrum_points},
        {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}});
  return kSuccess;
}

int cmd_witness(const Options& o, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element a = in.element(0), b = in.element(1);
  require_common_algebra(a, b);
  const Element w = metric_from_string(o.metric) == Metric::Thompson ? nonunique_midpoint_witness(a, b)
                                                                      : hilbert_midpoint_witness(a, b);
  emit({{"witness", to_json(w)}});
  return kSuccess;
}

int cmd_convergence(const Options& o, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element a = in.element(0), b = in.element(1);
  require_common_algebra(a, b);
  const Metric metric = metric_from_string(o.metric);
  const int k = o.n.value_or(12);
  if (k < 0 || k > 30) throw InvalidInput("--n is the largest exponent k and must lie in [0, 30]");
  const double limit = scaled_distance_limit(a, b, metric);
  for (int j = 0; j <= k; ++j) {
    const int n = 1 << j;
    const double d = scaled_distance(a, b, n, metric);
    emit({{"n", n}, {"d_n", d}, {"limit", limit}, {"error", std::abs(d - limit)}});
  }
  return kSuccess;
}

int cmd_linearize(const Options& o, bool metric_given, Inputs& in, const Emit& emit) {
  in.expect(1);
  const IsometryDescriptor d = in.descriptor(0);
  check_metric_matches(o, d, metric_given);
  const Algebra& alg = d.algebra();
  const LinearizedMap lin =
      d.metric == Metric::Thompson
          ? linearize_isometry(alg, normalize_isometry(alg, build_thompson_isometry(d)), probe_options(o))
          : linearize_isometry(alg, normalize_isometry(alg, build_hilbert_isometry(d)), probe_options(o));
  Json rows = Json::array();
  for (int i = 0; i < lin.matrix.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < lin.matrix.cols(); ++j) row.push_back(lin.matrix(i, j));
    rows.push_back(std::move(row));
  }
  emit({{"metric", metric_name(lin.metric)}, {"algebra", to_json(alg)}, {"matrix", rows}, {"residual", lin.residual}});
  return kSuccess;
}

int cmd_factorize(const Options& o, bool metric_given, Inputs& in, const Emit& emit) {
  in.expect(1);
  const IsometryDescriptor d = in.descriptor(0);
  check_metric_matches(o, d, metric_given);
  const Algebra& alg = d.algebra();
  const Factorization fac = d.metric == Metric::Thompson
                                ? factor_thompson_isometry(alg, build_thompson_isometry(d), probe_options(o))
                                : factor_hilbert_isometry(alg, build_hilbert_isometry(d), probe_options(o));
  Json out = to_json(fac.descriptor);
  out["diagnostics"] = {{"linearity_residual", fac.linearity_residual},
                        {"roundtrip_residual", fac.roundtrip_residual},
                        {"simplex_epsilons", fac.simplex_epsilons}};
  emit(out);
  return kSuccess;
}

int cmd_theta(const Options& o, bool metric_given, Inputs& in, const Emit& emit) {
  in.expect(2);
  const IsometryDescriptor d = in.descriptor(0);
  check_metric_matches(o, d, metric_given);
  if (d.metric != Metric::Hilbert) throw InvalidInput("theta needs a Hilbert descriptor");
  const Element p = in.element(1);
  require_common_algebra(p, d.b);
  const Algebra& alg = d.algebra();
  const RayMap g = normalize_isometry(alg, build_hilbert_isometry(d));
  const RayMap h = *d.epsilon == 1 ? g : RayMap([g](const Ray& x) { return Ray(inverse(g(x).representative())); });
  const InducedProjectionMap theta(alg, h);
  emit({{"projection", to_json(p)}, {"theta", to_json(theta(p))}});
  return kSuccess;
}

int cmd_chain(const Options&, bool, Inputs& in, const Emit& emit) {
  in.expect(2);
  const Element p = in.element(0), q = in.element(1);
  require_common_algebra(p, q);
  emit(to_json(orthogonality_chain(p, q)));
  return kSuccess;
}

int cmd_simplex(const Options& o, bool, Inputs& in, const Emit& emit) {
  in.expect(4);
  const Element p1 = in.element(0), p2 = in.element(1), p3 = in.element(2), a = in.element(3);
  for (const Element* x : {&p2, &p3, &a}) require_common_algebra(p1, *x);
  const double tol = o.tol.value_or(1e-9);
  const SimplexLocation loc = simplex_membership(OrthogonalSimplex(p1, p2, p3, std::max(tol, 1e-9)), a, tol);
  emit({{"membership", membership_name(loc.membership)},
        {"barycentric", loc.barycentric},
        {"on_cone_boundary", loc.on_cone_boundary}});
  return kSuccess;
}

int cmd_verify(const Options& o, bool, Inputs& in, const Emit& emit) {
  in.expect(0);
  const auto results = run_suites(o.seed, o.suite);
  bool all = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    suites.push_back(to_json(r));
  }
  emit({{"seed", o.seed}, {"passed", all}, {"suites", suites}});
  return all ? kSuccess : kNumericalFailure;
}

struct Command {
  const char* name;
  const char* help;
  const char* inputs;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"dist", "Thompson or Hilbert distance", "A B", cmd_dist},
      {"gauge", "gauge M(A/B) = inf{b : A <= bB}", "A B", cmd_gauge},
      {"mean", "geometric mean A # B", "A B", cmd_mean},
      {"geodesic", "sample the geodesic from A to B (JSON lines)", "A B", cmd_geodesic},
      {"classify", "decide whether the geodesic between A and B is unique", "A B", cmd_classify},
      {"witness", "a midpoint of A and B different from A # B", "A B", cmd_witness},
      {"convergence", "d_n(A, B) for n = 2^0 .. 2^k, k = --n (JSON lines)", "A B", cmd_convergence},
      {"linearize", "matrix of a -> log f(exp a) for a normalized descriptor-built isometry", "DESCRIPTOR",
       cmd_linearize},
      {"factorize", "recover canonical parameters of a descriptor-built isometry", "DESCRIPTOR", cmd_factorize},
      {"theta", "induced projection map of a Hilbert isometry at projection P", "DESCRIPTOR P", cmd_theta},
      {"chain", "orthogonality chain from P to Q", "P Q", cmd_chain},
      {"simplex", "locate A relative to the orthogonal simplex (P1, P2, P3)", "P1 P2 P3 A", cmd_simplex},
      {"verify", "run the property suites", "", cmd_verify},
  };
  return list;
}

void report(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert and Thompson metric geometry on symmetric cones"};
  app.name("symcone");
  app.require_subcommand(1, 1);
  Options opts;

  std::vector<std::pair<CLI::App*, const Command*>> subs;
  CLI::Option* metric_opt = nullptr;
  std::vector<CLI::Option*> metric_opts;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (*c.inputs) {
      sub->add_option("inputs", opts.inputs, std::string("inline JSON, file path, or - for stdin: ") + c.inputs);
    }
    metric_opt = sub->add_option("--metric", opts.metric, "thompson|T or hilbert|H")->capture_default_str();
    metric_opts.push_back(metric_opt);
    sub->add_option("--tol", opts.tol, "tolerance override");
    sub->add_option("--seed", opts.seed, "random seed")->capture_default_str();
    sub->add_option("--n", opts.n, "sample count (geodesic) or largest exponent (convergence)");
    sub->add_option("--t", opts.t, "single geodesic parameter");
    sub->add_option("--output", opts.output, "write results to this file instead of standard output");
    if (std::string(c.name) == "verify") {
      sub->add_option("--suite", opts.suite, "run only this suite")
          ->check(CLI::IsMember(suite_names()));
    }
    subs.emplace_back(sub, &c);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report(err, "invalid_input", e.what());
    return kInvalidInput;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto [sub, cmd] = subs[i];
    if (!sub->parsed()) continue;
    const bool metric_given = metric_opts[i]->count() > 0;

    std::ostringstream buffer;
    const Emit emit = [&](const Json& j) { buffer << j.dump() << '\n'; };
    int code = kSuccess;
    try {
      metric_from_string(opts.metric);
      Inputs inputs(opts.inputs, in);
      code = cmd->handler(opts, metric_given, inputs, emit);
    } catch (const InvalidInput& e) {
      report(err, "invalid_input", e.what());
      return kInvalidInput;
    } catch (const Json::exception& e) {
      report(err, "invalid_input", std::string("JSON: ") + e.what());
      return kInvalidInput;
    } catch (const NumericalFailure& e) {
      report(err, "numerical_failure", e.what());
      return kNumericalFailure;
    } catch (const std::exception& e) {
      report(err, "numerical_failure", e.what());
      return kNumericalFailure;
    }

    if (opts.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(opts.output);
      if (!file || !(file << buffer.str())) {
        report(err, "invalid_input", "cannot write output file \"" + opts.output + "\"");
        return kInvalidInput;
      }
    }
    return code;
  }
  report(err, "invalid_input", "no subcommand given");
  return kInvalidInput;
}

}  // namespace symcone::cli
