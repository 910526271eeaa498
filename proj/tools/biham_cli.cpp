// Command-line surface over the biham C API: dimension tables, character
// tables, the monomial basis, partition-poset checks and the
// cross-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// budget exceeded, 4 internal error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biham/biham.h"

namespace {

struct CtxDeleter {
  void operator()(biham_ctx* ctx) const { biham_ctx_free(ctx); }
};

int report(biham_ctx* ctx, int status, char* out) {
  if (out) {
    std::fputs(out, stdout);
    const std::size_t len = std::char_traits<char>::length(out);
    if (len == 0 || out[len - 1] != '\n') std::fputc('\n', stdout);
    biham_string_free(out);
  }
  if (status != BIHAM_OK && status != BIHAM_VERIFY_FAILED)
    std::cerr << "biham: error: " << biham_ctx_last_error(ctx) << "\n";
  return status;
}

std::vector<int> parse_cycle_type(const std::string& text, bool& ok) {
  std::vector<int> out;
  ok = true;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      ok = false;
      return {};
    }
  }
  if (out.empty()) ok = false;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biham: exact dimensions and SL2 x S_n characters of the operads "
               "Lie2, Com2 and P2"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker thread cap (0 = hardware parallelism)");
  // Accept --jobs after the subcommand as well.
  app.fallthrough();

  // dims
  auto* dims = app.add_subcommand("dims", "dimension tables per arity");
  std::string dims_operad = "lie2", dims_route = "formula", dims_format = "text";
  int dims_max_n = 0;
  dims->add_option("--operad", dims_operad, "lie2|p2|com2");
  dims->add_option("--max-n", dims_max_n, "largest arity (default 7, brute 5)");
  dims->add_option("--route", dims_route, "formula|invert|brute");
  dims->add_option("--format", dims_format, "text|json");

  // character
  auto* character = app.add_subcommand("character", "character values per class");
  std::string ch_operad = "lie2", ch_route = "formula", ch_format = "text", ch_cycle;
  int ch_n = 0;
  character->add_option("--operad", ch_operad, "lie2|p2");
  character->add_option("--n", ch_n, "arity")->required();
  character->add_option("--cycle-type", ch_cycle,
                        "class as multiplicities n1,n2,... (default: all classes)");
  character->add_option("--route", ch_route, "formula|mt|brute");
  character->add_option("--format", ch_format, "text|json");

  // series
  auto* series = app.add_subcommand("series", "character series in the power-sum basis");
  std::string se_name = "lie2";
  int se_trunc = 7;
  series->add_option("--name", se_name, "lie2|p2|com2|com|lie|h_ll1");
  series->add_option("--truncation", se_trunc, "truncation degree");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-verification suites");
  std::string ve_suite = "all", ve_format = "text";
  int ve_max_n = 0;
  verify->add_option("--suite", ve_suite,
                     "characters|dims|multiplicities|basis|poset|residue|all");
  verify->add_option("--max-n", ve_max_n, "clamp the per-suite arity caps");
  verify->add_option("--format", ve_format, "text|json");

  // basis
  auto* basis = app.add_subcommand("basis", "the recursive monomial basis");
  int ba_n = 0;
  bool ba_list = false, ba_p2 = false, ba_indep = false;
  std::string ba_format = "text";
  basis->add_option("--n", ba_n, "number of generators")->required();
  basis->add_flag("--list", ba_list, "list the monomials");
  basis->add_flag("--p2", ba_p2, "the bihamiltonian star-product basis");
  basis->add_flag("--independence", ba_indep, "verify linear independence (n <= 5)");
  basis->add_option("--format", ba_format, "text|json");

  // poset
  auto* poset = app.add_subcommand("poset", "partition poset checks");
  int po_n = 0;
  std::string po_check = "cm", po_format = "text";
  poset->add_option("--n", po_n, "arity (<= 5; homology guaranteed <= 4)")->required();
  poset->add_option("--check", po_check, "homology|semimodular|cm|star");
  poset->add_option("--format", po_format, "text|json|edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::unique_ptr<biham_ctx, CtxDeleter> ctx(biham_ctx_new());
  biham_ctx_set_jobs(ctx.get(), jobs);
  char* out = nullptr;

  if (dims->parsed()) {
    if (dims_max_n == 0) dims_max_n = dims_route == "brute" ? 5 : 7;
    const int status = biham_dims(ctx.get(), dims_operad.c_str(), dims_max_n,
                                  dims_route.c_str(), dims_format.c_str(), &out);
    return report(ctx.get(), status, out);
  }
  if (character->parsed()) {
    std::vector<int> cycle;
    if (!ch_cycle.empty()) {
      bool ok = false;
      cycle = parse_cycle_type(ch_cycle, ok);
      if (!ok) {
        std::cerr << "biham: error: malformed cycle type '" << ch_cycle << "'\n";
        return 2;
      }
    }
    if (ch_route == "brute" && ch_n >= 5)
      std::cerr << "[biham] building the free-algebra quotient for n=" << ch_n
                << " ...\n";
    const int status = biham_character(ctx.get(), ch_operad.c_str(), ch_n,
                                       cycle.empty() ? nullptr : cycle.data(),
                                       static_cast<int>(cycle.size()),
                                       ch_route.c_str(), ch_format.c_str(), &out);
    return report(ctx.get(), status, out);
  }
  if (series->parsed()) {
    const int status = biham_series(ctx.get(), se_name.c_str(), se_trunc, &out);
    return report(ctx.get(), status, out);
  }
  if (verify->parsed()) {
    std::cerr << "[biham] running suite '" << ve_suite << "' ...\n";
    const int status =
        biham_verify(ctx.get(), ve_suite.c_str(), ve_max_n, ve_format.c_str(), &out);
    return report(ctx.get(), status, out);
  }
  if (basis->parsed()) {
    const int status = biham_basis(ctx.get(), ba_n, ba_p2 ? 1 : 0, ba_list ? 1 : 0,
                                   ba_indep ? 1 : 0, ba_format.c_str(), &out);
    return report(ctx.get(), status, out);
  }
  if (poset->parsed()) {
    if (po_n >= 4 && po_check == "homology")
      std::cerr << "[biham] enumerating the order complex for n=" << po_n << " ...\n";
    const int status =
        biham_poset(ctx.get(), po_n, po_check.c_str(), po_format.c_str(), &out);
    return report(ctx.get(), status, out);
  }
  return 2;
}
