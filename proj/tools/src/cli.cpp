// Copyright 2026 The twocp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twocp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "twocp/serialization.hpp"

namespace twocp::cli {

namespace {

struct Options {
  double tol = kDefaultTol;
  std::string out_path;
  std::vector<std::string> paths;
  std::string name;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  /// Informational verdicts are reported but do not decide the exit code.
  void add(const std::string& name, const Verdict& v, bool gating = true) {
    double dev = v.deviation;
    bool pass = v.pass;
    if (!std::isfinite(dev)) {
      dev = std::numeric_limits<double>::max();
      pass = false;
    }
    verdicts_.push_back({{"name", name}, {"pass", pass}, {"deviation", std::max(dev, 0.0)}});
    if (gating) passed_ = passed_ && pass;
  }

  void set_artifact(Json a) { artifact_ = std::move(a); }
  void set_error(std::string e) { error_ = std::move(e); }
  bool passed() const noexcept { return passed_; }
  const std::string& error() const noexcept { return error_; }
  const std::optional<Json>& artifact() const noexcept { return artifact_; }

  Json to_json(double elapsed_ms, const std::string& artifact_path) const {
    Json j = {{"command", command_}, {"verdicts", verdicts_}};
    if (artifact_) {
      if (artifact_path.empty()) {
        j["artifact"] = *artifact_;
      } else {
        j["artifact_path"] = artifact_path;
      }
    }
    if (!error_.empty()) j["error"] = error_;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }

 private:
  std::string command_;
  Json verdicts_ = Json::array();
  std::optional<Json> artifact_;
  std::string error_;
  bool passed_ = true;
};

Verdict failed(double deviation) {
  return {false, std::isfinite(deviation) ? std::abs(deviation) : 1.0};
}

void verify_frobenius(const Options& o, Report& r) {
  const FrobeniusAlgebra f = frobenius_from_json(read_json_file(o.paths.at(0)));
  const FrobeniusReport fr = check_frobenius(f, o.tol);
  r.add("associative", fr.associative);
  r.add("unital", fr.unital);
  r.add("frobenius", fr.frobenius);
  r.add("special", fr.special);
  r.add("commutative", fr.commutative, false);
}

Json witness_to_json(const CpWitness& w) {
  Json ops = Json::array();
  for (const auto& k : w.operators) {
    ops.push_back({{"dom_block", k.dom_block}, {"cod_block", k.cod_block}, {"op", to_json(k.op)}});
  }
  return {{"dom", to_json(w.dom)},
          {"cod", to_json(w.cod)},
          {"kraus", std::move(ops)},
          {"dropped", w.dropped},
          {"truncated", w.truncated}};
}

void verify_cp(const Options& o, Report& r) {
  const CPMap f = cpmap_from_json(read_json_file(o.paths.at(0)));
  const CpReport cp = is_completely_positive(f, o.tol);
  r.add("completely_positive", cp.verdict());
  if (!cp) {
    std::ostringstream os;
    os << "Choi block (dom " << cp.worst_dom_block << ", cod " << cp.worst_cod_block
       << ") has eigenvalue " << cp.min_eigenvalue;
    r.set_error(os.str());
    return;
  }
  const CpWitness w = cp_witness(f, o.tol);
  r.add("witness_reconstruction",
        Verdict::within(max_abs_diff(w.reconstruct().map(), f.map()), std::max(o.tol, 1e-8)));
  r.set_artifact(witness_to_json(w));
}

double algebra_distance(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  if (a.dim() != b.dim()) return 1.0;
  return std::max(max_abs_diff(a.mult(), b.mult()), max_abs_diff(a.unit(), b.unit()));
}

void compose(const Options& o, Report& r) {
  const DaggerBimodule m = bimodule_from_json(read_json_file(o.paths.at(0)));
  const DaggerBimodule n = bimodule_from_json(read_json_file(o.paths.at(1)));
  r.add("first_bimodule", check_bimodule(m, o.tol).overall());
  r.add("second_bimodule", check_bimodule(n, o.tol).overall());
  const double middle = algebra_distance(m.right(), n.left());
  r.add("middle_algebra", Verdict::within(middle, o.tol));
  if (middle > o.tol) {
    std::ostringstream os;
    os << "middle algebra mismatch: right algebra of the first bimodule (dim "
       << m.right().dim() << ") differs from left algebra of the second (dim " << n.left().dim()
       << ")";
    r.set_error(os.str());
    return;
  }
  const ComplexMatrix p = composite_idempotent(m, n, o.tol);
  const IdempotentReport ir = dagger_idempotent_report(p, o.tol);
  r.add("dagger_idempotent", ir.verdict);
  if (!ir.verdict.pass) return;
  const Composite c = compose_bimodules(m, n, o.tol);
  r.add("composite_bimodule", check_bimodule(c.bimodule, o.tol).overall());
  r.set_artifact({{"bimodule", to_json(c.bimodule)}, {"isometry", to_json(c.inclusion.matrix())}});
}

void split(const Options& o, Report& r) {
  const ComplexMatrix p = matrix_from_json(read_json_file(o.paths.at(0)));
  const IdempotentReport ir = dagger_idempotent_report(p, o.tol);
  r.add("dagger_idempotent", ir.verdict);
  if (!ir.verdict.pass) return;
  const Isometry i = split_projection(p, o.tol);
  const ComplexMatrix& m = i.matrix();
  r.add("isometry", Verdict::within(
                        max_abs_diff(m.adjoint() * m, identity(i.rank())), o.tol));
  r.add("splits", Verdict::within(max_abs_diff(i.projector(), p), o.tol));
  r.set_artifact(to_json(m));
}

void groupoid_roundtrip(const Options& o, Report& r) {
  const FiniteGroupoid g = groupoid_from_json(read_json_file(o.paths.at(0)));
  const GroupoidReport vr = validate_groupoid(g);
  r.add("valid_groupoid", vr.valid() ? Verdict{} : failed(static_cast<double>(vr.violations.size())));
  if (!vr.valid()) {
    r.set_error(vr.violations.front());
    return;
  }
  const FrobeniusAlgebra f = groupoid_to_algebra(g);
  const FrobeniusReport fr = check_frobenius(f, o.tol);
  r.add("associative", fr.associative);
  r.add("unital", fr.unital);
  r.add("frobenius", fr.frobenius);
  r.add("special", fr.special, false);
  r.add("commutative", fr.commutative, false);
  const CStarAlgebra cn = CStarAlgebra::commutative(f.dim());
  r.add("mult_entrywise_positive",
        entrywise_positive(CPMap(tensor(cn, cn), cn, f.mult()), o.tol));
  r.add("unit_entrywise_positive",
        entrywise_positive(CPMap(CStarAlgebra::trivial(), cn, f.unit()), o.tol));
  const FiniteGroupoid back = algebra_to_groupoid(f, o.tol);
  const auto iso = find_isomorphism(g, back);
  r.add("roundtrip_isomorphic", iso ? Verdict{} : failed(1.0));
  r.set_artifact(to_json(back));
}

void teleportation_command(const Options& o, Report& r, bool security) {
  const TeleportationData t = teleportation_from_json(read_json_file(o.paths.at(0)));
  try {
    certify(t, o.tol);
    r.add("certified", Verdict{});
  } catch (const CertificationError& e) {
    r.add("certified", failed(e.deviation()));
    r.set_error(e.what());
    return;
  }
  if (security) {
    r.add("security", check_security(t, o.tol));
  } else {
    r.add("teleportation", check_teleportation(t, o.tol));
  }
}

std::optional<std::size_t> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
  const std::string digits = name.substr(prefix.size());
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 3) {
    return std::nullopt;
  }
  const auto n = static_cast<std::size_t>(std::stoul(digits));
  if (n == 0) return std::nullopt;
  return n;
}

void builtin(const Options& o, Report& r) {
  const std::string& name = o.name;
  Json a;
  if (name == "teleport-qubit") {
    a = to_json(standard_qubit_teleportation());
  } else if (const auto n = suffix_number(name, "otp-z")) {
    a = to_json(one_time_pad(cyclic_group(*n)));
  } else if (const auto n = suffix_number(name, "classical-")) {
    a = to_json(classical_structure(*n));
  } else if (const auto n = suffix_number(name, "matrix-")) {
    a = to_json(matrix_algebra(*n));
  } else if (const auto n = suffix_number(name, "group-z")) {
    a = to_json(cyclic_group(*n));
  } else if (const auto n = suffix_number(name, "discrete-")) {
    a = to_json(discrete_groupoid(*n));
  } else if (const auto n = suffix_number(name, "identity-bimodule-classical-")) {
    a = to_json(identity_bimodule(classical_structure(*n)));
  } else {
    throw ParseError("unknown builtin \"" + name +
                     "\"; expected teleport-qubit, otp-z<n>, classical-<n>, matrix-<k>, "
                     "group-z<n>, discrete-<n> or identity-bimodule-classical-<n>");
  }
  r.set_artifact(std::move(a));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Verify Frobenius algebras, CP maps, bimodules, groupoids and "
               "teleportation instances.",
               "twocp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out_path, "Write the generated artifact to this path");
  app.add_flag("--json", "Emit the JSON report on stdout (always on)");

  using Handler = std::function<void(const Options&, Report&)>;
  std::map<const CLI::App*, std::pair<std::string, Handler>> handlers;
  auto one_path = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("path", o.paths, "Input JSON file")->required()->expected(1);
    handlers[sub] = {name, std::move(h)};
  };
  one_path("verify-frobenius", "Check the Frobenius algebra laws", verify_frobenius);
  one_path("verify-cp", "Certify complete positivity and emit a Kraus witness", verify_cp);
  one_path("split", "Split a dagger idempotent into an isometry", split);
  one_path("groupoid-roundtrip", "Groupoid -> algebra -> groupoid", groupoid_roundtrip);
  one_path("teleport-check", "Check the teleportation equation",
           [](const Options& opt, Report& rep) { teleportation_command(opt, rep, false); });
  one_path("security-check", "Check the security equation",
           [](const Options& opt, Report& rep) { teleportation_command(opt, rep, true); });
  auto* comp = app.add_subcommand("compose", "Compose two dagger bimodules");
  comp->add_option("paths", o.paths, "First and second bimodule JSON files")
      ->required()
      ->expected(2);
  handlers[comp] = {"compose", compose};
  auto* gen = app.add_subcommand("builtin", "Emit a built-in instance");
  gen->add_option("name", o.name, "Instance name")->required();
  handlers[gen] = {"builtin", builtin};

  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    Report r("");
    r.set_error(e.what());
    err << "twocp: " << e.what() << "\n";
    out << r.to_json(elapsed(), "").dump(2) << "\n";
    return kInputError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const auto& [command, handler] = handlers.at(chosen);
  Report r(command);
  int code = kPass;
  try {
    handler(o, r);
    code = r.passed() ? kPass : kVerificationFailure;
  } catch (const ParseError& e) {
    r.set_error(e.what());
    code = kInputError;
  } catch (const ShapeError& e) {
    r.set_error(e.what());
    code = kInputError;
  } catch (const CertificationError& e) {
    r.add("certification", failed(e.deviation()));
    r.set_error(e.what());
    code = kVerificationFailure;
  } catch (const Error& e) {
    r.set_error(e.what());
    code = kVerificationFailure;
  } catch (const std::exception& e) {
    r.set_error(e.what());
    code = kInputError;
  }

  if (code == kPass && !r.passed()) code = kVerificationFailure;
  std::string artifact_path;
  if (r.artifact() && !o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) {
      r.set_error("cannot write " + o.out_path);
      code = kInputError;
    } else {
      file << r.artifact()->dump(2) << "\n";
      artifact_path = o.out_path;
    }
  }
  if (code != kPass) {
    err << "twocp " << command << ": "
        << (code == kInputError ? "input error" : "verification failed");
    if (!r.error().empty()) err << ": " << r.error();
    err << "\n";
  }
  out << r.to_json(elapsed(), artifact_path).dump(2) << "\n";
  return code;
}

}  // namespace twocp::cli
