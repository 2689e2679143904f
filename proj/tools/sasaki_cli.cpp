#include "CLI11.hpp"
#include "sasaki/catalog.hpp"
#include "sasaki/salamon.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sasaki;

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Json load_json(const std::string& path) { return Json::parse(slurp(path)); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

SymbolBindings parse_bindings(const std::vector<std::string>& binds) {
  SymbolBindings out;
  for (const std::string& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error("--bind expects KEY=VALUE, got \"" + b + "\"");
    out[b.substr(0, eq)] = scalar_from_string(b.substr(eq + 1));
  }
  return out;
}

int run_parse(const std::string& file, const std::vector<std::string>& binds) {
  SalamonExpr e = parse_salamon_forms(slurp(file), parse_bindings(binds));
  std::cout << print_salamon(e) << "\n";
  return 0;
}

int run_check(const std::string& file, bool sasaki, bool acms, bool jacobi) {
  if (!sasaki && !acms && !jacobi) sasaki = true;
  AlgebraFile f = algebra_from_json(load_json(file));
  Json out = Json::object();
  out["schema"] = 1;
  bool all = true;

  if (jacobi) {
    JacobiReport jr = jacobi_check(f.M.algebra());
    out["jacobi"] = jr.ok;
    if (!jr.ok) {
      out["jacobi_failing_triple"] = Json::array({jr.i + 1, jr.j + 1, jr.k + 1});
      out["jacobi_defect"] = vector_to_json(jr.defect);
    }
    all = all && jr.ok;
  }

  if (acms || sasaki) {
    if (!f.xi || !f.phi) throw Error("\"xi\" and \"phi\" are required for contact checks");
    AlmostContactData A{f.M, *f.phi, *f.xi, f.M.flat_form(*f.xi)};
    if (acms) {
      AcmsReport ar = check_acms(A);
      Json a = Json::object();
      a["ok"] = ar.ok;
      if (!ar.ok) a["first_failing"] = ar.first_failing;
      out["acms"] = std::move(a);
      all = all && ar.ok;
    }
    if (sasaki) {
      SasakiReport sr = check_sasaki(A);
      Json s = sasaki_report_to_json(sr);
      s.erase("schema");
      out["sasaki"] = std::move(s);
      all = all && sr.verdict;
    }
  }

  emit(out);
  return all ? 0 : 1;
}

int run_decompose(const std::string& file, const std::vector<int>& ideal,
                  const std::vector<int>& e0) {
  AlgebraFile f = algebra_from_json(load_json(file));
  const int n = f.M.dim();
  auto basis_vec = [n](int i) {
    if (i < 1 || i > n)
      throw IndexOutOfRange("basis index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
    Vector v(n, Scalar(0));
    v[i - 1] = 1;
    return v;
  };
  StandardDecomposition dec;
  for (int i : ideal) dec.nilradical_part.push_back(basis_vec(i));
  for (int i : e0) dec.abelian_part.push_back(basis_vec(i));

  Json out = Json::object();
  out["schema"] = 1;
  bool ok = check_standard(f.M, dec);
  out["standard"] = ok;
  if (ok) {
    out["pseudo_iwasawa"] = check_pseudo_iwasawa(f.M, dec);
    if (dec.rank() == 1) out["tau"] = scalar_to_json(f.M.inner(dec.e0(), dec.e0()));
    if (dec.rank() == 1 && f.xi) {
      try {
        out["z_standard"] = check_z_standard(f.M, dec, *f.xi);
        RankOneSasakiReport rr = check_rank_one_sasaki(f.M, dec, *f.xi);
        Json r = Json::object();
        r["xi_conditions"] = rr.xi_conditions;
        r["d_conditions"] = rr.d_conditions;
        r["eta_wedge_condition"] = rr.eta_wedge_condition;
        r["b_condition"] = rr.b_condition;
        r["metric_condition"] = rr.metric_condition;
        r["ok"] = rr.ok;
        r["b"] = vector_to_json(rr.b);
        out["rank_one_sasaki"] = std::move(r);
        ok = rr.ok;
      } catch (const Error& err) {
        out["rank_one_sasaki"] = Json{{"error", err.what()}};
        ok = false;
      }
    }
  }
  emit(out);
  return ok ? 0 : 1;
}

int run_reduce(const std::string& file) {
  AlgebraFile f = algebra_from_json(load_json(file));
  if (!f.dec) throw Error("\"decomposition\" is required to reduce");
  if (!f.xi) throw Error("\"xi\" is required to reduce");
  ReductionReport rep = extract_reduction(f.M, *f.dec, *f.xi);
  Json out = Json::object();
  out["schema"] = 1;
  out["h"] = scalar_to_json(rep.h);
  out["tau"] = scalar_to_json(rep.tau);
  out["b"] = vector_to_json(rep.b);
  out["xi"] = vector_to_json(rep.xi);
  Json gb = Json::array();
  for (const Vector& v : rep.g_basis) gb.push_back(vector_to_json(v));
  out["g_basis"] = std::move(gb);
  out["seed"] = seed_to_json(rep.seed);
  out["quotient"] = algebra_to_json(rep.sasaki_quotient.M, &rep.sasaki_quotient.xi,
                                    &rep.sasaki_quotient.phi);
  emit(out);
  return 0;
}

int run_construct(const std::string& file) {
  KahlerSeed seed = seed_from_json(load_json(file));
  ConstructResult res = construct_sasaki(seed);
  emit(algebra_to_json(res.M, &res.xi, &res.contact.phi, &res.dec));
  return 0;
}

int run_catalog_list() {
  for (const CatalogEntry& e : catalog())
    std::cout << std::left << std::setw(10) << e.id << " dim " << e.dim() << "  " << e.description
              << "\n";
  return 0;
}

int run_catalog_verify(const std::string& filter, const std::string& lambda_list, bool as_json) {
  std::vector<Scalar> lambdas = default_lambda_samples();
  if (!lambda_list.empty()) {
    lambdas.clear();
    std::stringstream ss(lambda_list);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) lambdas.push_back(scalar_from_string(item));
    if (lambdas.empty()) throw Error("--lambda expects a comma-separated list of rationals");
  }
  auto t0 = std::chrono::steady_clock::now();
  CatalogRun run = verify_all(filter, lambdas);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (as_json)
    emit(catalog_run_to_json(run));
  else
    std::cout << catalog_run_to_text(run, secs);
  return run.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Sasaki and pseudo-Kahler structures on metric Lie algebras"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> binds;
  auto* parse_cmd = app.add_subcommand("parse", "parse bracket notation and reprint canonically");
  parse_cmd->add_option("file", file, "input file, or - for stdin")->required();
  parse_cmd->add_option("--bind", binds, "symbol value, e.g. tau=1 or lambda=1/2");

  bool want_sasaki = false, want_acms = false, want_jacobi = false;
  auto* check_cmd = app.add_subcommand("check", "verify structures on an algebra file");
  check_cmd->add_option("file", file, "algebra JSON file, or - for stdin")->required();
  check_cmd->add_flag("--sasaki", want_sasaki, "full Sasaki verification (default)");
  check_cmd->add_flag("--acms", want_acms, "almost contact metric identities only");
  check_cmd->add_flag("--jacobi", want_jacobi, "Jacobi identity only");

  std::vector<int> ideal_idx, e0_idx;
  auto* dec_cmd = app.add_subcommand("decompose", "test an ideal/complement splitting");
  dec_cmd->add_option("file", file, "algebra JSON file, or - for stdin")->required();
  dec_cmd->add_option("--ideal", ideal_idx, "1-based basis indices spanning the ideal")
      ->required()
      ->delimiter(',');
  dec_cmd->add_option("--e0", e0_idx, "1-based basis indices spanning the complement")
      ->required()
      ->delimiter(',');

  auto* reduce_cmd = app.add_subcommand("reduce", "extract the generating seed of a Sasaki algebra");
  reduce_cmd->add_option("file", file, "algebra JSON file with decomposition and xi")->required();

  auto* con_cmd = app.add_subcommand("construct", "build the Sasaki extension of a seed");
  con_cmd->add_option("file", file, "seed JSON file, or - for stdin")->required();

  auto* cat_cmd = app.add_subcommand("catalog", "built-in verified structures");
  cat_cmd->require_subcommand(1);
  auto* list_cmd = cat_cmd->add_subcommand("list", "print the catalog entries");
  std::string filter = "*", lambda_list;
  bool as_json = false, as_text = false;
  auto* verify_cmd = cat_cmd->add_subcommand("verify", "re-verify the catalog claims");
  verify_cmd->add_option("--filter", filter, "entry id glob, e.g. dim5.*");
  verify_cmd->add_option("--lambda", lambda_list, "comma-separated rational sample values");
  auto* jflag = verify_cmd->add_flag("--json", as_json, "machine-readable report");
  auto* tflag = verify_cmd->add_flag("--text", as_text, "human-readable report (default)");
  jflag->excludes(tflag);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return run_parse(file, binds);
    if (check_cmd->parsed()) return run_check(file, want_sasaki, want_acms, want_jacobi);
    if (dec_cmd->parsed()) return run_decompose(file, ideal_idx, e0_idx);
    if (reduce_cmd->parsed()) return run_reduce(file);
    if (con_cmd->parsed()) return run_construct(file);
    if (list_cmd->parsed()) return run_catalog_list();
    if (verify_cmd->parsed()) return run_catalog_verify(filter, lambda_list, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
