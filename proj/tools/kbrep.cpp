// kbrep: command-line front end for the Kauffman-bracket representation
// library.  All output is JSON unless --format ascii is given where
// supported.  Exit codes: 0 success, 1 internal inconsistency, 2 bad
// invocation.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "kb/certify.hpp"
#include "kb/coloring.hpp"
#include "kb/hyperelliptic.hpp"
#include "kb/json_io.hpp"
#include "kb/recoupling.hpp"
#include "kb/rep.hpp"

using nlohmann::json;

namespace {

json matrix_to_json(const kb::ScalarBlockMatrix& m) {
  json groups = json::array();
  for (const auto& g : m.groups())
    groups.push_back({{"name", g.name}, {"size", g.size.str()}});
  json entries = json::array();
  for (long i = 0; i < m.grid_size(); ++i)
    for (long j = 0; j < m.grid_size(); ++j) {
      const auto& e = m.entry(i, j);
      if (e && !e->is_zero())
        entries.push_back(
            {{"row", i}, {"col", j}, {"value", kb::cyclo_to_json(*e)}});
    }
  return json{{"schema_version", kb::kSchemaVersion},
              {"modulus", m.modulus()},
              {"groups", groups},
              {"entries", entries}};
}

json scalar_set_to_json(const kb::TwistScalarSet& set) {
  json scalars = json::object();
  for (const auto& [a, s] : set.scalars)
    scalars[std::to_string(a)] = kb::cyclo_to_json(s);
  return json{{"schema_version", kb::kSchemaVersion},
              {"g", set.g},
              {"h", set.h},
              {"m", set.m},
              {"r", set.r},
              {"t", set.t},
              {"trivial", set.trivial()},
              {"scalars", scalars}};
}

json evidence_to_json(const kb::NklEvidence& ev) {
  json separating = json::array();
  for (const auto& set : ev.separating)
    separating.push_back(scalar_set_to_json(set));
  return json{{"g", ev.g},
              {"k", ev.k},
              {"l", ev.l},
              {"commutator", kb::certificate_to_json(ev.commutator)},
              {"separating", separating}};
}

const char* status_str(kb::CellStatus s) {
  switch (s) {
    case kb::CellStatus::Finite:
      return "finite";
    case kb::CellStatus::Infinite:
      return "infinite";
    case kb::CellStatus::Unknown:
      return "unknown";
  }
  return "?";
}

int run_selfcheck(long jobs) {
  // Desk-scale invariant sweep; each block throws on failure.
  for (long n = 3; n <= 5; ++n)
    for (long r = 4; r <= 10; ++r) {
      auto counts = kb::count_profile(n, r);
      auto basis = kb::enumerate_basis(kb::BasisId::T, n, r);
      if (counts.total != kb::Int(basis.entries.size()))
        throw std::logic_error("selfcheck: DP total != enumeration");
    }
  for (long r = 4; r <= 12; ++r) {
    kb::RootChoice root(r, 1);
    auto a = kb::matrix_A(3, r, root);
    if (!(a * a).is_identity()) throw std::logic_error("selfcheck: A^2 != I");
  }
  for (long r = 5; r <= 12; ++r) {
    kb::RootChoice root(r, 1);
    for (long n : {3L, 4L}) {
      kb::rho_commutator2(2, n, r, root);  // asserts closed == product
      kb::assemble_M(n, r, root);          // asserts closed == product
    }
  }
  for (const auto& entry : kb::scan_lemma_26(5, 12)) {
    bool expected = (entry.r != 6 && entry.r != 10);
    if (entry.positive != expected)
      throw std::logic_error("selfcheck: Lemma 2.6 scan at r=" +
                             std::to_string(entry.r));
  }
  auto report = kb::prop42_verify(8, 5, 8);
  if (report.sufficiency_violations != 0)
    throw std::logic_error("selfcheck: Prop 4.2 sufficiency violated");
  auto certs = kb::certify_power_subgroup(6, 5, 10, jobs);
  bool found = false;
  for (const auto& c : certs) {
    if (!kb::reverify_certificate(kb::certificate_to_json(c)))
      throw std::logic_error("selfcheck: certificate failed re-verification");
    if (c.r == 10 && c.t == 3) found = true;
  }
  if (!found)
    throw std::logic_error("selfcheck: missing (r=10, t=3) certificate");
  std::cout << json{{"selfcheck", "ok"}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman-bracket representations of M(0,2n) at roots of "
               "unity: counts, matrices, order certificates, tables"};
  app.require_subcommand(1);

  long n = 3, r = 5, t = 1, j = 1, s = 2, punctures = 6, power = 5;
  long rmin = 5, rmax = 12, g = 2, h = 1, m = 5, k = 5, l = 5;
  long gmax = 22, mmax = 10, jobs = 1;
  std::string format = "json", element = "commutator-M";

  auto* cmd_counts = app.add_subcommand("counts", "basis cell counts");
  cmd_counts->add_option("--n", n, "half the number of punctures")->required();
  cmd_counts->add_option("--r", r, "order of the root q")->required();
  cmd_counts->add_option("--format", format)
      ->check(CLI::IsMember({"json", "ascii"}));

  auto* cmd_matrix = app.add_subcommand("matrix", "representation matrix");
  cmd_matrix
      ->add_option("--element", element,
                   "half-twist-pow | commutator2 | full-twist | sigma-n | "
                   "commutator-M | separating-twist-pow")
      ->required();
  cmd_matrix->add_option("--n", n)->required();
  cmd_matrix->add_option("--r", r)->required();
  cmd_matrix->add_option("--t", t, "q^{1/4} = zeta_{4r}^t, gcd(t,4r)=1");
  cmd_matrix->add_option("--param1", s, "s, m, j, or h of the element");
  cmd_matrix->add_option("--param2", l, "power for separating-twist-pow");

  auto* cmd_certify =
      app.add_subcommand("certify", "power-subgroup certificates");
  cmd_certify->add_option("--punctures", punctures, "2n")->required();
  cmd_certify->add_option("--power", power, "m")->required();
  cmd_certify->add_option("--rmax", rmax);
  cmd_certify->add_option("--jobs", jobs);

  auto* cmd_scan = app.add_subcommand("scan-f2", "f_2(q) > 2 root scan");
  cmd_scan->add_option("--rmin", rmin);
  cmd_scan->add_option("--rmax", rmax);

  auto* cmd_hyper =
      app.add_subcommand("hyper", "separating-twist scalar sets");
  cmd_hyper->set_help_flag("--help", "print help");  // frees up --h
  cmd_hyper->add_option("--g", g)->required();
  cmd_hyper->add_option("--h", h);
  cmd_hyper->add_option("--m", m);
  cmd_hyper->add_option("--r", r);
  cmd_hyper->add_option("--t", t);
  bool prop42 = false;
  cmd_hyper->add_flag("--prop42", prop42,
                      "emit the closed-vs-direct report instead");
  cmd_hyper->add_option("--rmax", rmax);
  cmd_hyper->add_option("--mmax", mmax);

  auto* cmd_table = app.add_subcommand("table", "g x m classification grid");
  cmd_table->add_option("--gmax", gmax);
  cmd_table->add_option("--mmax", mmax);
  cmd_table->add_option("--jobs", jobs);
  cmd_table->add_option("--format", format)
      ->check(CLI::IsMember({"json", "ascii"}));

  auto* cmd_self = app.add_subcommand("selfcheck", "full invariant suite");
  cmd_self->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_counts->parsed()) {
      auto counts = kb::count_profile(n, r);
      if (format == "ascii") {
        std::cout << "n=" << counts.n << " r=" << counts.r
                  << " k=" << counts.k << " k'=" << counts.k_prime
                  << " dim=" << counts.total << "\n";
      } else {
        std::cout << kb::count_profile_to_json(counts).dump(2) << "\n";
      }
      return 0;
    }
    if (cmd_matrix->parsed()) {
      kb::RootChoice root(r, t);
      kb::RepElement el;
      if (element == "half-twist-pow")
        el = {kb::RepElement::Kind::HalfTwistPow, s, 0};
      else if (element == "commutator2")
        el = {kb::RepElement::Kind::Commutator2, s, 0};
      else if (element == "full-twist")
        el = {kb::RepElement::Kind::FullTwist, s, 0};
      else if (element == "sigma-n")
        el = {kb::RepElement::Kind::SigmaN, s, 0};
      else if (element == "commutator-M")
        el = {kb::RepElement::Kind::CommutatorM, 0, 0};
      else if (element == "separating-twist-pow")
        el = {kb::RepElement::Kind::SeparatingTwistPow, s, l};
      else
        throw CLI::ValidationError("--element", "unknown element " + element);
      json out = matrix_to_json(kb::rho_of(el, n, r, root));
      out["element"] = el.describe();
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (cmd_certify->parsed()) {
      auto certs = kb::certify_power_subgroup(punctures, power, rmax, jobs);
      json out = json::array();
      for (const auto& c : certs) out.push_back(kb::certificate_to_json(c));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (cmd_scan->parsed()) {
      json out = json::array();
      for (const auto& entry : kb::scan_lemma_26(rmin, rmax))
        out.push_back({{"r", entry.r},
                       {"positive", entry.positive},
                       {"witness_t", entry.witness_t}});
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (cmd_hyper->parsed()) {
      if (prop42) {
        auto report = kb::prop42_verify(rmax, g, mmax);
        json mm = json::array();
        for (const auto& x : report.mismatches)
          mm.push_back({{"r", x.r},
                        {"g", x.g},
                        {"h", x.h},
                        {"m", x.m},
                        {"closed", x.closed},
                        {"direct", x.direct}});
        std::cout << json{{"schema_version", kb::kSchemaVersion},
                          {"checked", report.checked},
                          {"mismatches", mm},
                          {"sufficiency_violations",
                           report.sufficiency_violations}}
                         .dump(2)
                  << "\n";
        return 0;
      }
      kb::RootChoice root(r, t);
      std::cout << scalar_set_to_json(kb::delta_scalar_set(g, h, m, root))
                       .dump(2)
                << "\n";
      return 0;
    }
    if (cmd_table->parsed()) {
      auto cells = kb::build_table(gmax, mmax, jobs);
      if (format == "ascii") {
        // legend: full block = finite, shaded = infinite, dot = unknown
        std::cout << "g\\m";
        for (long mm = 1; mm <= mmax; ++mm) std::cout << ' ' << mm % 10;
        std::cout << "\n";
        for (long gg = 1; gg <= gmax; ++gg) {
          std::cout << (gg < 10 ? "  " : " ") << gg;
          for (long mm = 1; mm <= mmax; ++mm) {
            const auto& cell = cells[(gg - 1) * mmax + (mm - 1)];
            const char* glyph = cell.status == kb::CellStatus::Finite ? "█"
                                : cell.status == kb::CellStatus::Infinite
                                    ? "▓"
                                    : "·";
            std::cout << ' ' << glyph;
          }
          std::cout << "\n";
        }
      } else {
        json out = json::array();
        for (const auto& cell : cells) {
          json jc{{"g", cell.g},
                  {"m", cell.m},
                  {"status", status_str(cell.status)},
                  {"provenance",
                   cell.provenance == kb::Provenance::Computed
                       ? "computed-certificate"
                       : "literature"},
                  {"citation", cell.citation}};
          if (!cell.evidence.empty()) {
            json ev = json::array();
            for (const auto& e : cell.evidence)
              ev.push_back(evidence_to_json(e));
            jc["evidence"] = ev;
          }
          out.push_back(jc);
        }
        std::cout << json{{"schema_version", kb::kSchemaVersion},
                          {"cells", out}}
                         .dump(2)
                  << "\n";
      }
      return 0;
    }
    if (cmd_self->parsed()) return run_selfcheck(jobs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
