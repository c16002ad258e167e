// pmv: principal minors of symmetric matrices, exclusive rank, module
// generation and the finite-field comparison oracles, behind one JSON CLI.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmv/membership.hpp"
#include "pmv/minors.hpp"
#include "pmv/oracle_ff.hpp"
#include "pmv/pullback.hpp"
#include "pmv/repro.hpp"
#include "pmv/rng.hpp"
#include "pmv/schur_gen.hpp"
#include "pmv/tensor_ops.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// sample wraps its payload under "matrix"/"tensor"/"group" next to the
// request echo; accept both wrapped and bare documents everywhere
json unwrap(const json& j) {
  for (const char* key : {"matrix", "tensor", "group"})
    if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

pmv::HomogenizedMatrix read_matrix(const std::string& path,
                                   const std::optional<std::string>& t_override) {
  json j = unwrap(json::parse(slurp(path)));
  pmv::HomogenizedMatrix hm = pmv::HomogenizedMatrix::from_json(j.dump());
  if (t_override) hm.t = pmv::rat_parse(*t_override);
  return hm;
}

// a tensor given directly, or a matrix to push through the minor map
pmv::HyperTensor read_point(const std::string& path, int jobs) {
  json j = unwrap(json::parse(slurp(path)));
  if (j.is_object() && j.contains("entries")) {
    pmv::HomogenizedMatrix hm = pmv::HomogenizedMatrix::from_json(j.dump());
    return pmv::principal_minor_map(hm, pmv::Backend::schur, jobs);
  }
  return pmv::HyperTensor::from_json(j.dump());
}

ordered_json rat_vec(const std::vector<pmv::Rat>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(pmv::rat_str(x));
  return a;
}

void emit(const std::string& payload) { std::cout << payload << "\n"; }

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

struct SampleArgs {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  long height = 20;
};

int run_sample(const SampleArgs& a) {
  pmv::Sampler s(a.seed, a.height);
  ordered_json out;
  out["request"] = {{"subcommand", "sample"},
                    {"kind", a.kind},
                    {"n", a.n},
                    {"seed", a.seed},
                    {"height", a.height}};
  if (a.kind == "erank1") {
    std::vector<pmv::Rat> w, y;
    for (int i = 0; i < a.n; ++i) w.push_back(s.rational());
    for (int i = 0; i < a.n; ++i) y.push_back(s.rational());
    pmv::Rat t = s.nonzero_rational();
    pmv::HomogenizedMatrix hm = pmv::sample_erank_le1(w, y, t);
    out["params"] = {{"w", rat_vec(w)}, {"y", rat_vec(y)}, {"t", pmv::rat_str(t)}};
    out["matrix"] = ordered_json::parse(hm.to_json());
  } else if (a.kind == "segre") {
    out["tensor"] = ordered_json::parse(pmv::sample_segre_point(s, a.n).to_json());
  } else if (a.kind == "tangent") {
    out["tensor"] = ordered_json::parse(pmv::sample_tangent_point(s, a.n).to_json());
  } else if (a.kind == "tensor") {
    out["tensor"] = ordered_json::parse(pmv::sample_tensor(s, a.n).to_json());
  } else if (a.kind == "group") {
    out["group"] = ordered_json::parse(pmv::sample_group_element(s, a.n).to_json());
  } else {
    throw std::invalid_argument("unknown sample kind: " + a.kind);
  }
  emit(out);
  return 0;
}

pmv::ModuleBasis build_module(const std::string& family, int n, int jobs) {
  if (family == "hd") return pmv::hd_module(n, jobs);
  if (family == "cubic") return pmv::cubic_module(n, jobs);
  if (family == "wedge") return pmv::wedge_module(n);
  throw std::invalid_argument("unknown family: " + family);
}

int run_eval(const std::string& poly_path, const std::string& at_path) {
  pmv::SparsePoly f = pmv::SparsePoly::from_json(slurp(poly_path));
  json j = unwrap(json::parse(slurp(at_path)));
  pmv::Rat value;
  if (j.is_object() && j.contains("coords")) {
    pmv::HyperTensor z = pmv::HyperTensor::from_json(j.dump());
    value = pmv::eval_on_tensor(f, z);
  } else if (j.is_object() && j.contains("entries")) {
    pmv::HomogenizedMatrix hm = pmv::HomogenizedMatrix::from_json(j.dump());
    const pmv::VarSet& av = f.vars();
    if (av.kind != pmv::VarSet::Kind::A)
      throw std::invalid_argument("matrix points only evaluate matrix-entry polynomials");
    if (av.n != hm.A.n())
      throw std::invalid_argument("matrix size does not match the polynomial");
    std::vector<pmv::Rat> point;
    int n = hm.A.n();
    for (int i = 1; i <= n; ++i)
      for (int jj = i; jj <= n; ++jj) point.push_back(hm.A.at(i, jj));
    point.push_back(hm.t);
    value = f.eval(point);
  } else if (j.is_object() && j.contains("point")) {
    const pmv::VarSet& vs = f.vars();
    std::vector<pmv::Rat> point(vs.count(), pmv::Rat(0));
    for (const auto& [name, val] : j.at("point").items())
      point[vs.var_from_name(name)] = pmv::rat_parse(val.get<std::string>());
    value = f.eval(point);
  } else {
    throw std::invalid_argument(
        "evaluation point must carry \"coords\", \"entries\" or \"point\"");
  }
  ordered_json out;
  out["value"] = pmv::rat_str(value);
  emit(out);
  return 0;
}

int run_reproduce() {
  auto checks = pmv::paper_suite();
  ordered_json list = ordered_json::array();
  int passed = 0, failed = 0;
  for (auto& c : checks) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    (ok ? passed : failed)++;
    ordered_json row;
    row["name"] = c.name;
    row["status"] = ok ? "PASS" : "FAIL";
    if (!detail.empty()) row["detail"] = detail;
    list.push_back(row);
  }
  ordered_json out;
  out["suite"] = "paper";
  out["checks"] = list;
  out["passed"] = passed;
  out["failed"] = failed;
  emit(out);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact principal-minor maps, exclusive rank and equation modules"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- phi ----------------------------------------------------------------
  auto* phi = app.add_subcommand("phi", "vector of all principal minors of a matrix");
  auto phi_matrix = std::make_shared<std::string>("-");
  auto phi_t = std::make_shared<std::optional<std::string>>();
  auto phi_backend = std::make_shared<std::string>("schur");
  auto phi_jobs = std::make_shared<int>(1);
  phi->add_option("--matrix", *phi_matrix, "matrix JSON file, - for stdin");
  phi->add_option("--t", *phi_t, "override the homogenizing value (default from input, else 1)");
  phi->add_option("--backend", *phi_backend, "minor enumeration backend")
      ->check(CLI::IsMember({"naive", "schur"}));
  phi->add_option("--jobs", *phi_jobs, "worker threads");
  phi->callback([=, &rc] {
    pmv::HomogenizedMatrix hm = read_matrix(*phi_matrix, *phi_t);
    pmv::Backend b = *phi_backend == "naive" ? pmv::Backend::naive : pmv::Backend::schur;
    emit(pmv::principal_minor_map(hm, b, *phi_jobs).to_json());
    rc = 0;
  });

  // ---- minors -------------------------------------------------------------
  auto* minors = app.add_subcommand("minors", "all minors with row/column sets disjoint or equal");
  auto minors_matrix = std::make_shared<std::string>("-");
  auto minors_t = std::make_shared<std::optional<std::string>>();
  minors->add_option("--matrix", *minors_matrix, "matrix JSON file, - for stdin");
  minors->add_option("--t", *minors_t, "override the homogenizing value");
  minors->callback([=, &rc] {
    emit(pmv::all_minors_vector(read_matrix(*minors_matrix, *minors_t)).to_json());
    rc = 0;
  });

  // ---- erank --------------------------------------------------------------
  auto* er = app.add_subcommand("erank", "exclusive rank with a witness minor");
  auto er_matrix = std::make_shared<std::string>("-");
  er->add_option("--matrix", *er_matrix, "matrix JSON file, - for stdin");
  er->callback([=, &rc] {
    pmv::HomogenizedMatrix hm = read_matrix(*er_matrix, {});
    pmv::ERankCertificate cert = pmv::erank(hm.A);
    ordered_json out;
    out["n"] = hm.A.n();
    out["erank"] = cert.erank;
    if (cert.witness) {
      ordered_json w;
      w["rows"] = pmv::mi_to_string(cert.witness->rows, hm.A.n());
      w["cols"] = pmv::mi_to_string(cert.witness->cols, hm.A.n());
      w["value"] = pmv::rat_str(cert.witness->value);
      out["witness"] = w;
    } else {
      out["witness"] = nullptr;
    }
    emit(out);
    rc = 0;
  });

  // ---- sample -------------------------------------------------------------
  auto* sample = app.add_subcommand("sample", "seeded random inputs (reproducible)");
  auto sa = std::make_shared<SampleArgs>();
  sample->add_option("--kind", sa->kind, "erank1 | segre | tangent | tensor | group")
      ->required()
      ->check(CLI::IsMember({"erank1", "segre", "tangent", "tensor", "group"}));
  sample->add_option("--n", sa->n, "number of factors / matrix size")->required();
  sample->add_option("--seed", sa->seed, "RNG seed, echoed in the output")->required();
  sample->add_option("--height", sa->height, "coefficient height bound");
  sample->callback([=, &rc] { rc = run_sample(*sa); });

  // ---- gen-module ---------------------------------------------------------
  auto* gen = app.add_subcommand("gen-module", "generate an equation module basis");
  auto gen_family = std::make_shared<std::string>();
  auto gen_n = std::make_shared<int>(0);
  auto gen_jobs = std::make_shared<int>(1);
  gen->add_option("--family", *gen_family, "hd | cubic | wedge")
      ->required()
      ->check(CLI::IsMember({"hd", "cubic", "wedge"}));
  gen->add_option("--n", *gen_n, "number of factors")->required();
  gen->add_option("--jobs", *gen_jobs, "worker threads");
  gen->callback([=, &rc] {
    emit(build_module(*gen_family, *gen_n, *gen_jobs).to_json());
    rc = 0;
  });

  // ---- pullback -----------------------------------------------------------
  auto* pb = app.add_subcommand("pullback", "substitute principal minors into a tensor polynomial");
  auto pb_poly = std::make_shared<std::string>("-");
  auto pb_n = std::make_shared<std::optional<int>>();
  pb->add_option("--poly", *pb_poly, "polynomial JSON file, - for stdin");
  pb->add_option("--n", *pb_n, "matrix size (defaults to the polynomial's factor count)");
  pb->callback([=, &rc] {
    pmv::SparsePoly f = pmv::SparsePoly::from_json(slurp(*pb_poly));
    int n = *pb_n ? **pb_n : f.vars().n;
    emit(pmv::pullback(f, n).to_json());
    rc = 0;
  });

  // ---- eval ---------------------------------------------------------------
  auto* ev = app.add_subcommand("eval", "evaluate a polynomial at a tensor, matrix or named point");
  auto ev_poly = std::make_shared<std::string>();
  auto ev_at = std::make_shared<std::string>("-");
  ev->add_option("--poly", *ev_poly, "polynomial JSON file")->required();
  ev->add_option("--at", *ev_at, "point JSON file, - for stdin");
  ev->callback([=, &rc] { rc = run_eval(*ev_poly, *ev_at); });

  // ---- member -------------------------------------------------------------
  auto* mem = app.add_subcommand("member", "membership test against the generated equations");
  auto mem_input = std::make_shared<std::string>("-");
  auto mem_variety = std::make_shared<std::string>("tangential");
  auto mem_quadric = std::make_shared<bool>(false);
  auto mem_jobs = std::make_shared<int>(1);
  mem->add_option("--input", *mem_input, "tensor or matrix JSON file, - for stdin");
  mem->add_option("--variety", *mem_variety, "tangential | principal-minors")
      ->check(CLI::IsMember({"tangential", "principal-minors"}));
  mem->add_flag("--with-quadric", *mem_quadric, "append the wedge quadric (n = 4 only)");
  mem->add_option("--jobs", *mem_jobs, "worker threads");
  mem->callback([=, &rc] {
    pmv::HyperTensor z = read_point(*mem_input, *mem_jobs);
    pmv::MembershipReport rep;
    if (*mem_variety == "principal-minors") {
      if (*mem_quadric)
        throw std::invalid_argument("--with-quadric only applies to the tangential test");
      rep = pmv::is_on_principal_minor_variety(z, *mem_jobs);
    } else {
      rep = pmv::is_on_tangential(z, *mem_jobs, *mem_quadric);
    }
    emit(rep.to_json());
    rc = rep.member ? 0 : 1;
  });

  // ---- orbit-test ---------------------------------------------------------
  auto* orbit = app.add_subcommand("orbit-test", "randomized vanishing test over the group orbit");
  auto ob_poly = std::make_shared<std::string>();
  auto ob_input = std::make_shared<std::string>("-");
  auto ob_trials = std::make_shared<int>(64);
  auto ob_seed = std::make_shared<std::uint64_t>(0);
  orbit->add_option("--poly", *ob_poly, "polynomial JSON file")->required();
  orbit->add_option("--input", *ob_input, "tensor JSON file, - for stdin");
  orbit->add_option("--trials", *ob_trials, "group elements to try (first is the identity)");
  orbit->add_option("--seed", *ob_seed, "RNG seed, echoed in the output")->required();
  orbit->callback([=, &rc] {
    pmv::SparsePoly h = pmv::SparsePoly::from_json(slurp(*ob_poly));
    pmv::HyperTensor z = read_point(*ob_input, 1);
    pmv::MembershipReport rep = pmv::randomized_orbit_vanishing(h, z, *ob_trials, *ob_seed);
    ordered_json out;
    out["request"] = {{"subcommand", "orbit-test"},
                      {"trials", *ob_trials},
                      {"seed", *ob_seed}};
    out["report"] = ordered_json::parse(rep.to_json());
    emit(out);
    rc = rep.member ? 0 : 1;
  });

  // ---- oracle -------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "finite-field zero-set comparisons");
  oracle->require_subcommand(1);

  auto* ouvw = oracle->add_subcommand("uvw", "three pulled-back cubics vs {u-w, v-w} over F_p^3");
  auto uvw_p = std::make_shared<long>(0);
  auto uvw_f1 = std::make_shared<bool>(false);
  ouvw->add_option("--p", *uvw_p, "prime modulus (>= 5)")->required();
  ouvw->add_flag("--f1-only", *uvw_f1, "compare only the first cubic");
  ouvw->callback([=, &rc] {
    pmv::ZeroSetReport rep = pmv::compare_zero_sets_uvw(*uvw_p, *uvw_f1);
    emit(rep.to_json());
    rc = rep.verdict == "equal" ? 0 : 1;
  });

  auto* omat = oracle->add_subcommand(
      "matrix", "48 cubic-module pullbacks vs two binomials over all symmetric 4x4 F_p matrices");
  auto mat_p = std::make_shared<long>(0);
  auto mat_jobs = std::make_shared<int>(1);
  auto mat_budget = std::make_shared<std::optional<double>>();
  auto mat_drop = std::make_shared<std::vector<int>>();
  omat->add_option("--p", *mat_p, "prime modulus")->required();
  omat->add_option("--jobs", *mat_jobs, "worker threads");
  omat->add_option("--budget-seconds", *mat_budget, "abort when the scan exceeds this");
  omat->add_option("--drop-ids", *mat_drop, "basis ids to remove from the left system")
      ->delimiter(',');
  omat->callback([=, &rc] {
    pmv::ZeroSetReport rep =
        pmv::compare_zero_sets_matrix(*mat_p, *mat_jobs, *mat_budget, *mat_drop);
    emit(rep.to_json());
    rc = rep.verdict == "equal" ? 0 : 1;
  });

  // ---- reproduce ----------------------------------------------------------
  auto* rep = app.add_subcommand("reproduce", "re-derive the published identities and counts");
  auto rep_suite = std::make_shared<bool>(false);
  rep->add_flag("--paper-suite", *rep_suite, "run the full pinned identity suite");
  rep->callback([=, &rc] {
    if (!*rep_suite) throw std::invalid_argument("choose a suite: --paper-suite");
    rc = run_reproduce();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ordered_json err;
    err["error"] = std::string(e.what());
    std::cout << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = std::string(e.what());
    std::cout << err.dump() << "\n";
    return 2;
  }
  return rc;
}
