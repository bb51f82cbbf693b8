#include "fusionkit/capi.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>

#include <json.hpp>

#include "fusionkit/analysis.hpp"
#include "fusionkit/braided_nising.hpp"
#include "fusionkit/config.hpp"
#include "fusionkit/cyclic_forms.hpp"
#include "fusionkit/decompose.hpp"
#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/grading.hpp"
#include "fusionkit/isomorphism.hpp"
#include "fusionkit/nising.hpp"
#include "fusionkit/premetric.hpp"
#include "fusionkit/product.hpp"
#include "fusionkit/ring_json.hpp"
#include "fusionkit/subring.hpp"

using namespace fusionkit;
using ordered_json = nlohmann::ordered_json;

struct fk_ring {
  FusionRing ring;
};

namespace {

thread_local std::string tl_error;

void set_error(const std::string& msg) { tl_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fk_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const bound_error& e) {
    set_error(e.what());
    return FK_ERR_BOUND;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return FK_ERR_INVALID;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FK_ERR_INTERNAL;
  }
}

fk_status parse_root(const char* text, RootOfUnity* out) {
  try {
    *out = RootOfUnity::parse(text);
    return FK_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FK_ERR_PARSE;
  }
}

ordered_json report_header(const std::string& command, ordered_json inputs) {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

void finish_report(ordered_json& j,
                   std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  j["timing_ms"] = ms;
}

ordered_json verdict(const std::string& name, bool pass) {
  ordered_json v;
  v["name"] = name;
  v["pass"] = pass;
  return v;
}

ordered_json premetric_json_obj(const QuadraticForm& q) {
  return ordered_json::parse(premetric_to_json(q, -1));
}

// --- theorem suites ------------------------------------------------------

ordered_json run_fact_cm(int m, bool* all_pass) {
  auto w = verify_fact_cm(m);
  auto cm = make_cm(m);
  bool ok = verify_iso_witness(cm.ring, w.product, w.map);
  ordered_json j;
  j["M"] = m;
  j["N"] = w.N;
  j["m_odd"] = w.m;
  j["witness"] = w.map;
  j["witness_verified"] = ok;
  *all_pass = ok;
  return j;
}

ordered_json run_nofact(int n, bool* all_pass) {
  auto rep = verify_nofact(n);
  ordered_json j;
  j["N"] = n;
  j["proper_subrings"] = rep.proper_subrings;
  j["all_proper_pointed"] = rep.all_proper_pointed;
  j["all_noninvertibles_faithful"] = rep.all_noninvertibles_faithful;
  *all_pass = rep.pass();
  return j;
}

ordered_json run_braiding_count(int m, bool* all_pass) {
  auto plus = enumerate_braidings(m, RootOfUnity::one());
  auto minus = enumerate_braidings(m, RootOfUnity::minus_one());
  std::int64_t expected_plus = m;
  std::int64_t expected_minus = (m % 2 == 0) ? m : 0;
  std::int64_t d = std::gcd(static_cast<std::int64_t>(m) * m,
                            static_cast<std::int64_t>(2) * m);
  auto forms = enumerate_quadratic_forms(
      m > 1 ? FiniteAbelianGroup({static_cast<std::int64_t>(m)})
            : FiniteAbelianGroup());
  bool ok = static_cast<std::int64_t>(plus.size()) == expected_plus &&
            static_cast<std::int64_t>(minus.size()) == expected_minus &&
            static_cast<std::int64_t>(plus.size() + minus.size()) == d &&
            static_cast<std::int64_t>(forms.size()) == d;
  ordered_json j;
  j["M"] = m;
  j["count_zeta_1"] = plus.size();
  j["count_zeta_-1"] = minus.size();
  j["total"] = plus.size() + minus.size();
  j["gcd_M2_2M"] = d;
  j["quadratic_forms"] = forms.size();
  *all_pass = ok;
  return j;
}

ordered_json degeneracy_json(const DegeneracyTable& table) {
  ordered_json j;
  j["N"] = table.N;
  j["zeta"] = table.zeta.str();
  auto rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json rj;
    rj["xi"] = row.xi.str();
    rj["verdict"] = center_class_name(row.verdict);
    rj["pointed_nondegenerate"] = row.pointed_nondegenerate;
    rj["agree"] = row.agree;
    rows.push_back(rj);
  }
  j["rows"] = rows;
  j["equivalence_holds"] = table.equivalence_holds;
  j["iff_asserted"] = table.iff_asserted;
  return j;
}

ordered_json run_gty(const FusionRing& r, bool* all_pass) {
  auto rep = gty_structure(r);
  ordered_json j;
  j["is_gty"] = rep.is_gty;
  j["n"] = rep.n;
  j["invertible_count"] = rep.invertible_count;
  j["adjoint_rank"] = rep.adjoint_rank;
  j["universal_order"] = rep.universal_order;
  j["counts_match"] = rep.counts_match;
  j["action_transitive"] = rep.action_transitive;
  j["z2_normal"] = rep.z2_normal;
  *all_pass = rep.all_checks();
  return j;
}

} // namespace

extern "C" {

const char* fk_last_error(void) { return tl_error.c_str(); }

void fk_string_free(char* s) { std::free(s); }

void fk_ring_free(fk_ring* r) { delete r; }

fk_status fk_ring_from_json(const char* json, fk_ring** out) {
  if (!json || !out) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  try {
    auto r = ring_from_json(json);
    *out = new fk_ring{std::move(r)};
    return FK_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FK_ERR_PARSE;
  }
}

fk_status fk_ring_to_json(const fk_ring* r, char** out) {
  if (!r || !out) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    *out = dup_string(ring_to_json(r->ring));
    return FK_OK;
  });
}

fk_status fk_ring_rank(const fk_ring* r, long* out) {
  if (!r || !out) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  *out = r->ring.rank();
  return FK_OK;
}

fk_status fk_build_ising(fk_ring** out) {
  if (!out) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    *out = new fk_ring{make_ising()};
    return FK_OK;
  });
}

fk_status fk_build_cm(long m, fk_ring** out) {
  if (!out) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    *out = new fk_ring{make_cm(static_cast<int>(m)).ring};
    return FK_OK;
  });
}

fk_status fk_build_nising(long n, const char* zeta, fk_ring** out) {
  if (!out || !zeta) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  RootOfUnity z;
  if (auto st = parse_root(zeta, &z); st != FK_OK) return st;
  return guarded([&] {
    *out = new fk_ring{make_nising(NisingSpec(static_cast<int>(n), z)).cm.ring};
    return FK_OK;
  });
}

fk_status fk_build_pointed(const long* cyclic_orders, int n_orders, fk_ring** out) {
  if (!out || (n_orders > 0 && !cyclic_orders)) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    std::vector<std::int64_t> orders(cyclic_orders, cyclic_orders + n_orders);
    *out = new fk_ring{pointed_ring(FiniteAbelianGroup::from_cyclic_orders(orders))};
    return FK_OK;
  });
}

fk_status fk_deligne_product(const fk_ring* a, const fk_ring* b, fk_ring** out) {
  if (!a || !b || !out) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    *out = new fk_ring{deligne_product(a->ring, b->ring)};
    return FK_OK;
  });
}

fk_status fk_ring_validate(const fk_ring* r, char** report_json, int* valid) {
  if (!r || !report_json || !valid) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    auto rep = validate_ring(r->ring);
    ordered_json j = report_header("validate", {{"rank", r->ring.rank()}});
    auto issues = ordered_json::array();
    for (const auto& issue : rep.issues) {
      const char* kind = "?";
      switch (issue.kind) {
        case ValidationIssue::Kind::Malformed: kind = "malformed"; break;
        case ValidationIssue::Kind::UnitAxiom: kind = "unit"; break;
        case ValidationIssue::Kind::Rigidity: kind = "rigidity"; break;
        case ValidationIssue::Kind::Associativity: kind = "associativity"; break;
        case ValidationIssue::Kind::DualInvolution: kind = "dual"; break;
      }
      issues.push_back({{"kind", kind}, {"message", issue.message}});
    }
    j["issues"] = issues;
    j["associativity_failures"] = rep.associativity_failures;
    j["valid"] = rep.valid();
    finish_report(j, start);
    *valid = rep.valid() ? 1 : 0;
    *report_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

fk_status fk_lattice_dot(const fk_ring* r, char** dot_out) {
  if (!r || !dot_out) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    auto lat = subring_lattice(r->ring);
    auto dims = fp_dims(r->ring);
    std::string dot = "digraph subrings {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lat.members.size(); ++i) {
      const auto& s = lat.members[i];
      dot += "  n" + std::to_string(i) + " [label=\"rank " +
             std::to_string(s.rank()) + "\\nFPdim " +
             subring_fpdim(s, dims.dims).str() +
             (subring_is_pointed(s) ? "\\npointed" : "\\nnon-pointed") + "\"];\n";
    }
    // cover relations only
    for (std::size_t i = 0; i < lat.members.size(); ++i)
      for (std::size_t j = 0; j < lat.members.size(); ++j) {
        if (i == j || !lat.contains[j][i]) continue;
        bool covered = true;
        for (std::size_t k = 0; k < lat.members.size(); ++k)
          if (k != i && k != j && lat.contains[j][k] && lat.contains[k][i])
            covered = false;
        if (covered)
          dot += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
      }
    dot += "}\n";
    *dot_out = dup_string(dot);
    return FK_OK;
  });
}

fk_status fk_verify(const char* theorem, const char* params_json,
                    char** report_json, int* passed) {
  if (!theorem || !report_json || !passed) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  ordered_json params;
  try {
    params = params_json ? ordered_json::parse(params_json)
                         : ordered_json::object();
  } catch (const std::exception& e) {
    set_error(std::string("params JSON: ") + e.what());
    return FK_ERR_PARSE;
  }
  std::string name = theorem;
  return guarded([&]() -> fk_status {
    auto start = std::chrono::steady_clock::now();
    ordered_json j = report_header("verify --theorem " + name, params);
    bool ok = false;
    ordered_json details;
    if (name == "fact-cm") {
      details = run_fact_cm(params.at("M").get<int>(), &ok);
    } else if (name == "nofact") {
      details = run_nofact(params.at("N").get<int>(), &ok);
    } else if (name == "braiding-count") {
      details = run_braiding_count(params.at("M").get<int>(), &ok);
    } else if (name == "degeneracy") {
      auto zeta = RootOfUnity::parse(params.at("zeta").get<std::string>());
      auto table = degeneracy_criterion(params.at("N").get<int>(), zeta);
      details = degeneracy_json(table);
      ok = table.pass();
    } else if (name == "gty") {
      auto r = ring_from_json(params.at("ring").dump());
      details = run_gty(r, &ok);
    } else {
      set_error("unknown theorem name: " + name);
      return FK_ERR_ARG;
    }
    j["verdicts"] = ordered_json::array({verdict(name, ok)});
    j["details"] = details;
    finish_report(j, start);
    *passed = ok ? 1 : 0;
    *report_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

fk_status fk_enumerate_braidings(long m, const char* zeta, int include_forms,
                                 char** report_json) {
  if (!report_json) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&]() -> fk_status {
    auto start = std::chrono::steady_clock::now();
    ordered_json inputs{{"M", m}};
    if (zeta) inputs["zeta"] = zeta;
    ordered_json j = report_header("braidings", inputs);
    std::vector<RootOfUnity> labels;
    if (zeta) {
      RootOfUnity z;
      if (auto st = parse_root(zeta, &z); st != FK_OK) throw std::invalid_argument(tl_error);
      labels.push_back(z);
    } else {
      labels.push_back(RootOfUnity::one());
      if (m % 2 == 0) labels.push_back(RootOfUnity::minus_one());
    }
    auto arr = ordered_json::array();
    std::size_t total = 0;
    for (const auto& z : labels) {
      auto bs = enumerate_braidings(m, z);
      total += bs.size();
      ordered_json group;
      group["zeta"] = z.str();
      group["count"] = bs.size();
      auto xi_list = ordered_json::array();
      for (const auto& b : bs) {
        if (include_forms) {
          ordered_json entry;
          entry["xi"] = b.xi.str();
          entry["form"] = premetric_json_obj(quadratic_from_xi(b));
          xi_list.push_back(entry);
        } else {
          xi_list.push_back(b.xi.str());
        }
      }
      group["braidings"] = xi_list;
      arr.push_back(group);
    }
    j["by_zeta"] = arr;
    j["total"] = total;
    finish_report(j, start);
    *report_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

fk_status fk_induced_center(long n, const char* xi, char** report_json) {
  if (!xi || !report_json) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  RootOfUnity x;
  if (auto st = parse_root(xi, &x); st != FK_OK) return st;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    InducedBraiding br(static_cast<int>(n), x);
    auto center = induced_center(br);
    ordered_json j = report_header(
        "center", {{"N", n}, {"xi", x.str()}, {"zeta", br.zeta().str()}});
    j["center"] = center.center_labels;
    j["verdict"] = center_class_name(center.verdict.cls);
    if (center.witness_label) j["witness"] = *center.witness_label;
    j["center_form"] = premetric_json_obj(center.center_form);
    j["pointed_form"] = premetric_json_obj(center.pointed_form);
    if (center.a_chain_center_generator)
      j["a_chain_center_generator"] = *center.a_chain_center_generator;
    finish_report(j, start);
    *report_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

fk_status fk_degeneracy_table(long n, const char* zeta, char** report_json) {
  if (!zeta || !report_json) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  RootOfUnity z;
  if (auto st = parse_root(zeta, &z); st != FK_OK) return st;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    auto table = degeneracy_criterion(static_cast<int>(n), z);
    ordered_json j = report_header("degeneracy-table",
                                   {{"N", n}, {"zeta", z.str()}});
    j["table"] = degeneracy_json(table);
    finish_report(j, start);
    *report_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

fk_status fk_decompose(const fk_ring* r, char** trace_json, int* decomposable) {
  if (!r || !trace_json || !decomposable) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    auto res = decompose_gty(r->ring);
    ordered_json j = report_header("decompose", {{"rank", r->ring.rank()}});
    const char* status = res.status == DecomposeStatus::Ok ? "ok"
                         : res.status == DecomposeStatus::NotDecomposable
                             ? "not_decomposable"
                             : "precondition_failed";
    j["status"] = status;
    if (!res.ok()) j["reason"] = res.reason;
    const auto& tr = res.trace;
    ordered_json t;
    t["invariant_factors"] = tr.invariant_factors;
    t["generator_degrees"] = tr.generator_degrees;
    t["noninvertible_positions"] = tr.noninvertible_positions;
    t["invertible_positions"] = tr.invertible_positions;
    auto lbl = [&](int idx) { return r->ring.label(idx); };
    if (tr.z_generator >= 0) t["Z"] = lbl(tr.z_generator);
    auto labels_of = [&](const std::vector<int>& v) {
      auto a = ordered_json::array();
      for (int idx : v) a.push_back(lbl(idx));
      return a;
    };
    t["g"] = labels_of(tr.translators);
    t["b_tilde_generators"] = labels_of(tr.b_tilde_generators);
    t["b_tilde"] = labels_of(tr.b_tilde);
    t["b0"] = labels_of(tr.b0);
    t["transitivity_holds"] = tr.transitivity_holds;
    if (res.ok()) {
      t["N"] = tr.N;
      t["m_odd"] = tr.m;
      t["B_invariant_factors"] = tr.b_factors;
      t["witness"] = tr.witness;
    }
    j["trace"] = t;
    finish_report(j, start);
    *decomposable = res.ok() ? 1 : 0;
    *trace_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

fk_status fk_isomorphic(const fk_ring* a, const fk_ring* b, char** report_json,
                        int* found) {
  if (!a || !b || !report_json || !found) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    auto w = ring_isomorphic(a->ring, b->ring);
    ordered_json j = report_header(
        "isomorphic", {{"rank_lhs", a->ring.rank()}, {"rank_rhs", b->ring.rank()}});
    j["found"] = w.has_value();
    if (w) {
      j["witness"] = *w;
      j["witness_verified"] = verify_iso_witness(a->ring, b->ring, *w);
    }
    finish_report(j, start);
    *found = w.has_value() ? 1 : 0;
    *report_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

fk_status fk_classify_premetric(const char* premetric_json, char** report_json) {
  if (!premetric_json || !report_json) {
    set_error("null argument");
    return FK_ERR_ARG;
  }
  return guarded([&]() -> fk_status {
    auto start = std::chrono::steady_clock::now();
    QuadraticForm q;
    try {
      q = premetric_from_json(premetric_json);
    } catch (const std::exception& e) {
      set_error(e.what());
      return FK_ERR_PARSE;
    }
    ordered_json j = report_header("classify",
                                   {{"invariant_factors", q.group.factors()}});
    if (!is_quadratic(q)) {
      set_error("map is not a quadratic form");
      return FK_ERR_INVALID;
    }
    auto rad = radical(q);
    auto v = classify_center(q);
    j["radical_order"] = rad.elements.size();
    auto rad_elems = ordered_json::array();
    for (std::size_t i = 0; i < rad.elements.size(); ++i)
      rad_elems.push_back({q.group.elem_at(rad.elements[i]), rad.q_values[i].str()});
    j["radical"] = rad_elems;
    j["verdict"] = center_class_name(v.cls);
    if (v.witness) j["witness"] = q.group.elem_at(*v.witness);
    finish_report(j, start);
    *report_json = dup_string(j.dump(2));
    return FK_OK;
  });
}

} // extern "C"
