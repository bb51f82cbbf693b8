// fusionkit command-line front end. Talks to the core exclusively through
// the C API in fusionkit/capi.h; reports are JSON on stdout or --out.
//
// Exit codes: 0 = pass / success, 1 = verdict failure (a theorem check
// failed, no isomorphism, not decomposable), 2 = usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusionkit/capi.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
  return kExitPass;
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { fk_string_free(s); }
};

struct RingGuard {
  fk_ring* r = nullptr;
  ~RingGuard() { fk_ring_free(r); }
};

int fail_with_status(fk_status st) {
  std::cerr << "error: " << fk_last_error() << "\n";
  (void)st;
  return kExitUsage; // verdict failures are signaled by flags, not statuses
}

int load_ring(const std::string& path, RingGuard& rg) {
  std::string text;
  try {
    text = slurp(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (auto st = fk_ring_from_json(text.c_str(), &rg.r); st != FK_OK)
    return fail_with_status(st);
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionkit: exact computations with fusion rings and pointed braided data"};
  app.require_subcommand(1);

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build a family ring and write it as .fring.json");
  std::string family, zeta_str = "1", group_str, lhs_path, rhs_path, out_path;
  int opt_m = 0, opt_n = 0;
  construct->add_option("--family", family, "ising | cm | nising | pointed | product")->required();
  construct->add_option("--M", opt_m, "order of the cyclic grading (cm)");
  construct->add_option("--N", opt_n, "family index (nising)");
  construct->add_option("--zeta", zeta_str, "twist label as p/q (nising)");
  construct->add_option("--group", group_str, "comma-separated cyclic orders (pointed)");
  construct->add_option("--lhs", lhs_path, "left ring file (product)");
  construct->add_option("--rhs", rhs_path, "right ring file (product)");
  construct->add_option("--out", out_path, "output file (stdout otherwise)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a named theorem suite");
  std::string theorem, verify_in, verify_zeta = "-1", verify_out;
  int verify_m = 0, verify_n = 0;
  verify->add_option("--theorem", theorem, "fact-cm | nofact | braiding-count | degeneracy | gty")->required();
  verify->add_option("--M", verify_m, "parameter M");
  verify->add_option("--N", verify_n, "parameter N");
  verify->add_option("--zeta", verify_zeta, "twist label (degeneracy)");
  verify->add_option("--in", verify_in, "ring file (gty)");
  verify->add_option("--out", verify_out, "report file");

  // ---- lattice ----
  auto* lattice = app.add_subcommand("lattice", "subring lattice as a DOT graph");
  std::string lattice_in, lattice_out;
  lattice->add_option("file", lattice_in, "ring file")->required();
  lattice->add_option("--out", lattice_out, "output file");

  // ---- braidings ----
  auto* braidings = app.add_subcommand("braidings", "enumerate braidings of the cyclic pointed ring");
  int braidings_m = 0;
  std::string braidings_zeta, braidings_out;
  bool braidings_forms = false;
  braidings->add_option("--M", braidings_m, "cyclic order")->required();
  braidings->add_option("--zeta", braidings_zeta, "restrict to one cocycle label");
  braidings->add_flag("--forms", braidings_forms, "include induced premetric data");
  braidings->add_option("--out", braidings_out, "report file");

  // ---- center ----
  auto* center = app.add_subcommand("center", "Mueger center of an induced braiding");
  int center_n = 0;
  std::string center_xi, center_out;
  center->add_option("--N", center_n, "family index")->required();
  center->add_option("--xi", center_xi, "braiding parameter p/q")->required();
  center->add_option("--out", center_out, "report file");

  // ---- degeneracy-table ----
  auto* degeneracy = app.add_subcommand("degeneracy-table", "degeneracy table over all xi for a twist label");
  int deg_n = 0;
  std::string deg_zeta = "-1", deg_out;
  degeneracy->add_option("--N", deg_n, "family index")->required();
  degeneracy->add_option("--zeta", deg_zeta, "twist label");
  degeneracy->add_option("--out", deg_out, "report file");

  // ---- decompose ----
  auto* decompose = app.add_subcommand("decompose", "factor a braided-admissible ring");
  std::string dec_in, dec_trace;
  bool dec_skip_validate = false;
  decompose->add_option("file", dec_in, "ring file")->required();
  decompose->add_option("--trace", dec_trace, "trace output file");
  decompose->add_flag("--skip-validate", dec_skip_validate, "skip the axiom check on input");

  // ---- isomorphic ----
  auto* isomorphic = app.add_subcommand("isomorphic", "search for a fusion-ring isomorphism");
  std::string iso_a, iso_b, iso_out;
  isomorphic->add_option("lhs", iso_a, "first ring file")->required();
  isomorphic->add_option("rhs", iso_b, "second ring file")->required();
  isomorphic->add_option("--out", iso_out, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*construct) {
      RingGuard rg;
      fk_status st = FK_OK;
      if (family == "ising") {
        st = fk_build_ising(&rg.r);
      } else if (family == "cm") {
        if (opt_m == 0) {
          std::cerr << "error: --M required for cm\n";
          return kExitUsage;
        }
        st = fk_build_cm(opt_m, &rg.r);
      } else if (family == "nising") {
        if (opt_n == 0) {
          std::cerr << "error: --N required for nising\n";
          return kExitUsage;
        }
        st = fk_build_nising(opt_n, zeta_str.c_str(), &rg.r);
      } else if (family == "pointed") {
        std::vector<long> orders;
        std::stringstream ss(group_str);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) orders.push_back(std::stol(tok));
        st = fk_build_pointed(orders.data(), static_cast<int>(orders.size()), &rg.r);
      } else if (family == "product") {
        if (lhs_path.empty() || rhs_path.empty()) {
          std::cerr << "error: --lhs and --rhs required for product\n";
          return kExitUsage;
        }
        RingGuard a, b;
        if (int rc = load_ring(lhs_path, a); rc != kExitPass) return rc;
        if (int rc = load_ring(rhs_path, b); rc != kExitPass) return rc;
        st = fk_deligne_product(a.r, b.r, &rg.r);
      } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kExitUsage;
      }
      if (st != FK_OK) return fail_with_status(st);
      StringGuard json;
      if (fk_ring_to_json(rg.r, &json.s) != FK_OK) return fail_with_status(FK_ERR_INTERNAL);
      return emit(json.s, out_path);
    }

    if (*verify) {
      std::string params;
      if (theorem == "fact-cm" || theorem == "braiding-count") {
        params = "{\"M\": " + std::to_string(verify_m) + "}";
      } else if (theorem == "nofact") {
        params = "{\"N\": " + std::to_string(verify_n) + "}";
      } else if (theorem == "degeneracy") {
        params = "{\"N\": " + std::to_string(verify_n) + ", \"zeta\": \"" +
                 verify_zeta + "\"}";
      } else if (theorem == "gty") {
        if (verify_in.empty()) {
          std::cerr << "error: --in required for gty\n";
          return kExitUsage;
        }
        params = "{\"ring\": " + slurp(verify_in) + "}";
      } else {
        std::cerr << "error: unknown theorem '" << theorem << "'\n";
        return kExitUsage;
      }
      StringGuard report;
      int passed = 0;
      if (auto st = fk_verify(theorem.c_str(), params.c_str(), &report.s, &passed);
          st != FK_OK)
        return fail_with_status(st);
      int rc = emit(report.s, verify_out);
      if (rc != kExitPass) return rc;
      return passed ? kExitPass : kExitVerdictFail;
    }

    if (*lattice) {
      RingGuard rg;
      if (int rc = load_ring(lattice_in, rg); rc != kExitPass) return rc;
      StringGuard dot;
      if (auto st = fk_lattice_dot(rg.r, &dot.s); st != FK_OK)
        return fail_with_status(st);
      return emit(dot.s, lattice_out);
    }

    if (*braidings) {
      StringGuard report;
      if (auto st = fk_enumerate_braidings(
              braidings_m, braidings_zeta.empty() ? nullptr : braidings_zeta.c_str(),
              braidings_forms ? 1 : 0, &report.s);
          st != FK_OK)
        return fail_with_status(st);
      return emit(report.s, braidings_out);
    }

    if (*center) {
      StringGuard report;
      if (auto st = fk_induced_center(center_n, center_xi.c_str(), &report.s);
          st != FK_OK)
        return fail_with_status(st);
      return emit(report.s, center_out);
    }

    if (*degeneracy) {
      StringGuard report;
      if (auto st = fk_degeneracy_table(deg_n, deg_zeta.c_str(), &report.s);
          st != FK_OK)
        return fail_with_status(st);
      return emit(report.s, deg_out);
    }

    if (*decompose) {
      RingGuard rg;
      if (int rc = load_ring(dec_in, rg); rc != kExitPass) return rc;
      if (!dec_skip_validate) {
        StringGuard vreport;
        int valid = 0;
        if (auto st = fk_ring_validate(rg.r, &vreport.s, &valid); st != FK_OK)
          return fail_with_status(st);
        if (!valid) {
          std::cerr << "error: input ring fails validation\n" << vreport.s << "\n";
          return kExitUsage;
        }
      }
      StringGuard trace;
      int decomposable = 0;
      if (auto st = fk_decompose(rg.r, &trace.s, &decomposable); st != FK_OK)
        return fail_with_status(st);
      int rc = emit(trace.s, dec_trace);
      if (rc != kExitPass) return rc;
      return decomposable ? kExitPass : kExitVerdictFail;
    }

    if (*isomorphic) {
      RingGuard a, b;
      if (int rc = load_ring(iso_a, a); rc != kExitPass) return rc;
      if (int rc = load_ring(iso_b, b); rc != kExitPass) return rc;
      StringGuard report;
      int found = 0;
      if (auto st = fk_isomorphic(a.r, b.r, &report.s, &found); st != FK_OK)
        return fail_with_status(st);
      int rc = emit(report.s, iso_out);
      if (rc != kExitPass) return rc;
      return found ? kExitPass : kExitVerdictFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
