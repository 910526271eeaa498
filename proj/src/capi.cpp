#include "biham/biham.h"

#include <cstring>
#include <string>

#include "basis.hpp"
#include "jsonio.hpp"
#include "poset.hpp"
#include "verify.hpp"

struct biham_ctx {
  int jobs = 0;
  std::string last_error;
};

namespace {

constexpr const char* kVersion = "biham 1.0.0";

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(biham_ctx* ctx, int status, const std::string& message) {
  if (ctx) ctx->last_error = message;
  return status;
}

template <class Fn>
int guarded(biham_ctx* ctx, char** out, Fn&& fn) {
  if (!ctx || !out) return BIHAM_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    ctx->last_error.clear();
    return fn();
  } catch (const biham::BudgetExceeded& e) {
    return fail(ctx, BIHAM_BUDGET_EXCEEDED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, BIHAM_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, BIHAM_INTERNAL_ERROR, e.what());
  }
}

std::string require(const char* s, const char* what) {
  if (!s) throw std::invalid_argument(std::string(what) + " must not be null");
  return s;
}

}  // namespace

extern "C" {

biham_ctx* biham_ctx_new(void) { return new biham_ctx; }

void biham_ctx_free(biham_ctx* ctx) { delete ctx; }

void biham_ctx_set_jobs(biham_ctx* ctx, int jobs) {
  if (ctx) ctx->jobs = jobs < 0 ? 0 : jobs;
}

const char* biham_ctx_last_error(const biham_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

const char* biham_version(void) { return kVersion; }

void biham_string_free(char* s) { delete[] s; }

int biham_dims(biham_ctx* ctx, const char* operad, int max_n, const char* route,
               const char* format, char** out) {
  return guarded(ctx, out, [&] {
    const auto table = biham::dims_json(biham::parse_operad(require(operad, "operad")),
                                        max_n, require(route, "route"), ctx->jobs);
    const std::string fmt = require(format, "format");
    if (fmt == "json")
      *out = dup_string(table.dump());
    else if (fmt == "text")
      *out = dup_string(biham::dims_text(table));
    else
      throw std::invalid_argument("format must be json|text");
    return BIHAM_OK;
  });
}

int biham_character(biham_ctx* ctx, const char* operad, int n, const int* cycle_type,
                    int cycle_type_len, const char* route, const char* format,
                    char** out) {
  return guarded(ctx, out, [&] {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<biham::Exponents> classes;
    if (cycle_type && cycle_type_len > 0) {
      biham::Exponents rho(cycle_type, cycle_type + cycle_type_len);
      for (int m : rho)
        if (m < 0) throw std::invalid_argument("cycle type multiplicities are >= 0");
      classes.push_back(std::move(rho));
    } else {
      classes = biham::exponent_vectors_of_degree(n);
    }
    const auto table =
        biham::character_table_json(biham::parse_operad(require(operad, "operad")), n,
                                    require(route, "route"), classes, ctx->jobs);
    const std::string fmt = require(format, "format");
    if (fmt == "json")
      *out = dup_string(table.dump());
    else if (fmt == "text")
      *out = dup_string(biham::character_table_text(table));
    else
      throw std::invalid_argument("format must be json|text");
    return BIHAM_OK;
  });
}

int biham_series(biham_ctx* ctx, const char* name, int truncation, char** out) {
  return guarded(ctx, out, [&] {
    if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
    const std::string which = require(name, "series name");
    nlohmann::json j;
    if (which == "lie2")
      j = biham::series_to_json(biham::f_lie2_char(truncation));
    else if (which == "p2")
      j = biham::series_to_json(biham::f_p2_char(truncation));
    else if (which == "com2")
      j = biham::series_to_json(biham::f_com2_char(truncation));
    else if (which == "com")
      j = biham::series_to_json(biham::f_com_char(truncation));
    else if (which == "lie")
      j = biham::series_to_json(biham::f_lie_char(truncation));
    else if (which == "h_ll1")
      j = biham::series_to_json(biham::h_series_ll1(truncation));
    else
      throw std::invalid_argument("unknown series '" + which + "'");
    *out = dup_string(j.dump());
    return BIHAM_OK;
  });
}

int biham_verify(biham_ctx* ctx, const char* suite, int max_n, const char* format,
                 char** out) {
  return guarded(ctx, out, [&] {
    const auto report =
        biham::run_suite(require(suite, "suite"), max_n, ctx->jobs);
    const std::string fmt = require(format, "format");
    if (fmt == "json")
      *out = dup_string(report.to_json().dump());
    else if (fmt == "text")
      *out = dup_string(report.human_summary());
    else
      throw std::invalid_argument("format must be json|text");
    if (!report.pass()) {
      ctx->last_error = "suite '" + report.suite + "' has failing checks";
      return BIHAM_VERIFY_FAILED;
    }
    return BIHAM_OK;
  });
}

int biham_basis(biham_ctx* ctx, int n, int want_p2, int want_list,
                int want_independence, const char* format, char** out) {
  return guarded(ctx, out, [&] {
    const std::string fmt = require(format, "format");
    if (fmt != "json" && fmt != "text")
      throw std::invalid_argument("format must be json|text");
    nlohmann::json j;
    j["n"] = n;
    if (want_p2) {
      j["operad"] = "p2";
      j["count"] = biham::count_p2_basis(n);
      if (want_list) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : biham::enumerate_p2_basis(n)) arr.push_back(m.render());
        j["monomials"] = std::move(arr);
      }
      if (want_independence)
        throw std::invalid_argument(
            "independence verification applies to the lie2 basis");
    } else {
      j["operad"] = "lie2";
      const auto family = biham::enumerate_basis(n);
      j["count"] = family.size();
      if (want_list) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : family) arr.push_back(t.render());
        j["monomials"] = std::move(arr);
      }
      if (want_independence) {
        if (n > 5)
          throw std::invalid_argument("independence verification caps at n = 5");
        const auto report = biham::verify_independence(n, ctx->jobs);
        nlohmann::json ji;
        ji["rank"] = report.rank;
        ji["quotient_dim"] = report.quotient_dim;
        ji["pass"] = report.pass;
        j["independence"] = std::move(ji);
      }
    }
    if (fmt == "json") {
      *out = dup_string(j.dump());
      return BIHAM_OK;
    }
    std::string text = j["operad"].get<std::string>() + " basis, n=" +
                       std::to_string(n) + ": " + j["count"].dump() + " monomials\n";
    if (j.contains("monomials"))
      for (const auto& m : j["monomials"]) text += "  " + m.get<std::string>() + "\n";
    if (j.contains("independence"))
      text += std::string("  independence: rank ") + j["independence"]["rank"].dump() +
              " of " + j["independence"]["quotient_dim"].dump() +
              (j["independence"]["pass"].get<bool>() ? " (pass)\n" : " (FAIL)\n");
    *out = dup_string(text);
    return BIHAM_OK;
  });
}

int biham_poset(biham_ctx* ctx, int n, const char* check, const char* format,
                char** out) {
  return guarded(ctx, out, [&] {
    const std::string which = require(check, "check");
    const std::string fmt = require(format, "format");
    const auto elements = biham::build_poset(n);
    const biham::FinitePoset p = biham::poset_order(elements);
    if (fmt == "edges") {
      *out = dup_string(biham::edges_text(elements, p));
      return BIHAM_OK;
    }
    if (fmt != "json" && fmt != "text")
      throw std::invalid_argument("format must be json|text|edges");
    nlohmann::json j;
    j["n"] = n;
    j["check"] = which;
    std::string text;
    if (which == "homology") {
      const auto h = biham::order_complex_homology(p);
      j["betti"] = h.betti;
      j["chain_counts"] = h.chain_counts;
      j["max_chain_edges"] = h.max_chain_edges;
      text = "Pi_" + std::to_string(n) + " betti numbers:";
      for (long long b : h.betti) text += " " + std::to_string(b);
      text += "\n";
    } else if (which == "cm") {
      const auto cm = biham::is_cohen_macaulay(p);
      j["cohen_macaulay"] = cm.cohen_macaulay;
      j["max_chain_edges"] = cm.max_chain_edges;
      j["betti"] = cm.betti;
      text = "Pi_" + std::to_string(n) + (cm.cohen_macaulay ? " is " : " is NOT ") +
             "Cohen-Macaulay (L=" + std::to_string(cm.max_chain_edges) + ")\n";
    } else if (which == "semimodular") {
      const auto whole = biham::is_upper_semimodular(p);
      const auto segments = biham::segments_upper_semimodular(n);
      j["whole_poset"] = whole.semimodular;
      j["segments_all"] = segments.all_semimodular;
      j["segments_total"] = segments.segments_total;
      j["orbits_checked"] = segments.orbits_checked;
      if (segments.counterexample) {
        j["counterexample"] = {{"bottom", segments.counterexample->first},
                               {"top", segments.counterexample->second}};
      }
      text = "Pi_" + std::to_string(n) +
             " segments upper semimodular: " + (segments.all_semimodular ? "yes" : "NO");
      if (segments.counterexample)
        text += "  (fails in [" + segments.counterexample->first + ", " +
                segments.counterexample->second + "])";
      text += "\n  whole poset (informational): " +
              std::string(whole.semimodular ? "yes" : "no") + "\n";
    } else if (which == "star") {
      const bool ok = biham::check_condition_star(std::min(n, 5));
      j["max_total"] = std::min(n, 5);
      j["injective"] = ok;
      text = "condition (*) up to total arity " + std::to_string(std::min(n, 5)) +
             ": " + (ok ? "injective" : "NOT injective") + "\n";
    } else {
      throw std::invalid_argument("check must be homology|semimodular|cm|star");
    }
    *out = dup_string(fmt == "json" ? j.dump() : text);
    return BIHAM_OK;
  });
}

}  // extern "C"
